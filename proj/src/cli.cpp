#include "wobbly/cli.hpp"

#include "wobbly/betti.hpp"
#include "wobbly/bundles.hpp"
#include "wobbly/descriptor_io.hpp"
#include "wobbly/ring_expr.hpp"
#include "wobbly/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace wobbly::cli {

namespace {

using json = nlohmann::ordered_json;

struct Rendered {
    std::string text;
    json data;
};

long long checked_ll(const Int& v) { return v.convert_to<long long>(); }

json poincare_json(const PoincarePolynomial& p) {
    json coeffs = json::array();
    for (const Int& c : p.coefficients()) coeffs.push_back(checked_ll(c));
    return json{{"coefficients", std::move(coeffs)}, {"polynomial", p.pretty()}};
}

std::vector<int> parse_partition_csv(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    size_t at = 0;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace((unsigned char)item[used])) ++used;
            if (used != item.size())
                throw parse_error("malformed integer '" + item + "'", at);
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw parse_error("malformed integer '" + item + "'", at);
        }
        at += item.size() + 1;
    }
    if (parts.empty()) throw parse_error("empty list", 0);
    return parts;
}

Rendered exec_classify(int genus, const std::string& bundle, const std::string& twist) {
    Verdict verdict;
    if (genus == 0) {
        verdict = classify_p1(parse_gzero_bundle(bundle), parse_gzero_twist(twist));
    } else if (genus == 1) {
        verdict = classify_elliptic(parse_elliptic_bundle(bundle), parse_elliptic_twist(twist));
    } else {
        throw domain_error("classification supports genus 0 and 1");
    }
    Rendered r;
    r.text = outcome_name(verdict.outcome) + " [" + verdict.reason + "]";
    r.data = json{{"verdict", outcome_name(verdict.outcome)}, {"reason", verdict.reason}};
    return r;
}

Rendered exec_ring(int n, const std::string& expr_text) {
    RingElement value = eval(parse_ring_expr(expr_text), n);
    Rendered r;
    r.text = value.str();
    r.data = json{{"n", n}, {"expr", expr_text}, {"value", value.str()}};
    return r;
}

Rendered exec_betti_sym(int genus, int n) {
    PoincarePolynomial p = poincare_sym(genus, n);
    return {p.coefficient_list(), poincare_json(p)};
}

Rendered exec_betti_std_sublocus(int h, int s) {
    PoincarePolynomial p = poincare_std_sublocus(h, s);
    return {p.coefficient_list(), poincare_json(p)};
}

Rendered exec_betti_fixed_det(int h, int s) {
    PoincarePolynomial p = poincare_fixed_det(h, s);
    return {p.coefficient_list(), poincare_json(p)};
}

Rendered exec_delta(int h, int s) {
    RingElement cls = delta_class(s, h);
    Rendered r;
    r.text = cls.str();
    r.data = json{{"h", h}, {"s", s}, {"class", cls.str()}};
    return r;
}

Rendered exec_diag(int h, const std::string& n_csv, const std::string& i_csv) {
    DiagonalSpec spec{parse_partition_csv(n_csv), parse_partition_csv(i_csv)};
    if (spec.total() != h)
        throw domain_error("h must equal sum n_l * i_l (" + std::to_string(spec.total()) +
                           ")");
    RingElement cls = diagonal_class(spec);
    Rendered r;
    r.text = cls.str();
    json n_json = json::array(), i_json = json::array();
    for (int v : spec.group_sizes) n_json.push_back(v);
    for (int v : spec.weights) i_json.push_back(v);
    r.data = json{{"h", h}, {"N", n_json}, {"I", i_json}, {"class", cls.str()}};
    return r;
}

Rendered exec_clwk(int g, int k, int lambda) {
    Int value = cl_wk(g, k, lambda);
    Rendered r;
    r.text = value.str();
    r.data = json{{"g", g}, {"k", k}, {"lambda", lambda}, {"value", checked_ll(value)}};
    return r;
}

Rendered exec_strata_contains(int h, const std::string& inner_csv,
                              const std::string& outer_csv) {
    WeightTuple inner(parse_partition_csv(inner_csv));
    WeightTuple outer(parse_partition_csv(outer_csv));
    if (inner.total() != h || outer.total() != h)
        throw domain_error("partitions must have total weight h");
    bool result = contains(inner, outer);
    Rendered r;
    r.text = result ? "true" : "false";
    json inner_json = json::array(), outer_json = json::array();
    for (int v : inner.parts) inner_json.push_back(v);
    for (int v : outer.parts) outer_json.push_back(v);
    r.data = json{{"inner", inner_json}, {"outer", outer_json}, {"contains", result}};
    return r;
}

Rendered exec_strata_enumerate(int h) {
    Rendered r;
    r.data = json::array();
    std::ostringstream text;
    for (const Stratum& s : enumerate_strata(h)) {
        json partition = json::array();
        std::string partition_text;
        for (int v : s.partition.parts) {
            partition.push_back(v);
            if (!partition_text.empty()) partition_text += ",";
            partition_text += std::to_string(v);
        }
        PoincarePolynomial p = stratum_poincare(s.partition);
        json record{{"partition", partition},
                    {"dim", s.dim},
                    {"standard", s.standard},
                    {"class", s.fundamental_class ? json(s.fundamental_class->str())
                                                  : json(nullptr)},
                    {"poincare", poincare_json(p)}};
        r.data.push_back(std::move(record));
        text << "(" << partition_text << ") dim=" << s.dim
             << " standard=" << (s.standard ? "yes" : "no")
             << " class=" << (s.fundamental_class ? s.fundamental_class->str() : "-")
             << " poincare=" << p.coefficient_list() << "\n";
    }
    r.text = text.str();
    if (!r.text.empty() && r.text.back() == '\n') r.text.pop_back();
    return r;
}

// One parsed invocation; batch mode reuses this per line.
Rendered eval_tokens(const std::vector<std::string>& tokens, bool* want_json);

struct BatchOutcome {
    json record;
};

Rendered exec_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open batch file '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    std::vector<BatchOutcome> outcomes(lines.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)lines.size(); ++i) {
        const std::string& text = lines[size_t(i)];
        json record{{"line", i + 1}};
        try {
            auto tokens = tokenize_line(text);
            if (tokens.empty()) {
                record["status"] = "blank";
            } else {
                bool ignored = false;
                Rendered r = eval_tokens(tokens, &ignored);
                record["status"] = "ok";
                record["result"] = std::move(r.data);
            }
        } catch (const parse_error& e) {
            record["status"] = "error";
            record["exit"] = 2;
            record["message"] = e.what();
        } catch (const CLI::ParseError& e) {
            record["status"] = "error";
            record["exit"] = 2;
            record["message"] = e.what();
        } catch (const std::exception& e) {
            record["status"] = "error";
            record["exit"] = 1;
            record["message"] = e.what();
        }
        outcomes[size_t(i)].record = std::move(record);
    }

    Rendered r;
    r.data = json::array();
    for (auto& o : outcomes) r.data.push_back(std::move(o.record));
    r.text = r.data.dump();
    return r;
}

Rendered eval_tokens(const std::vector<std::string>& tokens, bool* want_json) {
    CLI::App app{"exact very-stable/wobbly classification and symmetric-product topology"};
    app.require_subcommand(1);
    // --h is taken as an option name, so help flags must not claim -h
    app.set_help_flag("--help", "print usage");
    auto add_sub = [&app](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print usage");
        return sub;
    };

    int classify_genus = 1;
    std::string classify_bundle, classify_twist;
    bool classify_json = false;
    auto* classify = add_sub("classify", "classify a bundle descriptor");
    classify->add_option("--genus", classify_genus, "curve genus (0 or 1)")->required();
    classify->add_option("--bundle", classify_bundle, "bundle descriptor")->required();
    classify->add_option("--twist", classify_twist, "twist descriptor")->required();
    classify->add_flag("--json", classify_json, "emit JSON");

    int ring_n = 1;
    std::string ring_expr_text;
    auto* ring = add_sub("ring", "evaluate a ring expression in H*(Sym^n X)");
    ring->add_option("--n", ring_n, "ambient symmetric power")->required();
    ring->add_option("--expr", ring_expr_text, "expression")->required();

    int betti_genus = 1;
    std::optional<int> betti_sym;
    std::vector<int> betti_std, betti_fixed;
    auto* betti = add_sub("betti", "Poincare polynomials");
    auto* betti_genus_opt = betti->add_option("--genus", betti_genus, "curve genus");
    betti->add_option("--sym", betti_sym, "n for Sym^n")->needs(betti_genus_opt);
    betti->add_option("--std-sublocus", betti_std, "h s")->expected(2);
    betti->add_option("--fixed-det", betti_fixed, "h s")->expected(2);

    int strata_h = 1;
    std::vector<std::string> strata_contains;
    bool strata_json = false;
    auto* strata = add_sub("strata", "wobbly stratification of Sym^h");
    strata->add_option("--h", strata_h, "total weight")->required();
    strata->add_option("--contains", strata_contains, "inner outer (comma-separated parts)")
        ->expected(2);
    strata->add_flag("--json", strata_json, "emit JSON");

    int delta_h = 2, delta_s = 2;
    auto* delta = add_sub("delta", "closed-form diagonal class delta_s");
    delta->add_option("--h", delta_h, "ambient symmetric power")->required();
    delta->add_option("--s", delta_s, "multiplicity")->required();

    int diag_h = 2;
    std::string diag_n, diag_i;
    auto* diag = add_sub("diag", "diagonal-morphism image class");
    diag->add_option("--h", diag_h, "ambient symmetric power")->required();
    diag->add_option("--N", diag_n, "group sizes, comma-separated")->required();
    diag->add_option("--I", diag_i, "weights, comma-separated")->required();

    int clwk_g = 2, clwk_k = 1, clwk_lambda = 0;
    auto* clwk = add_sub("clwk", "genus >= 2 wobbly-component class");
    clwk->add_option("--g", clwk_g, "genus")->required();
    clwk->add_option("--k", clwk_k, "component index")->required();
    clwk->add_option("--lambda", clwk_lambda, "determinant degree (0 or 1)")->required();

    std::string batch_file;
    auto* batch = add_sub("batch", "evaluate one query per line, JSON array out");
    batch->add_option("--file", batch_file, "query file")->required();

    app.parse(std::vector<std::string>(tokens.rbegin(), tokens.rend()));

    *want_json = false;
    if (classify->parsed()) {
        *want_json = classify_json;
        return exec_classify(classify_genus, classify_bundle, classify_twist);
    }
    if (ring->parsed()) return exec_ring(ring_n, ring_expr_text);
    if (betti->parsed()) {
        int picked = int(betti_sym.has_value()) + int(!betti_std.empty()) +
                     int(!betti_fixed.empty());
        if (picked != 1)
            throw domain_error("betti needs exactly one of --sym, --std-sublocus, --fixed-det");
        if (betti_sym) return exec_betti_sym(betti_genus, *betti_sym);
        if (!betti_std.empty()) return exec_betti_std_sublocus(betti_std[0], betti_std[1]);
        return exec_betti_fixed_det(betti_fixed[0], betti_fixed[1]);
    }
    if (strata->parsed()) {
        *want_json = strata_json;
        if (!strata_contains.empty())
            return exec_strata_contains(strata_h, strata_contains[0], strata_contains[1]);
        return exec_strata_enumerate(strata_h);
    }
    if (delta->parsed()) return exec_delta(delta_h, delta_s);
    if (diag->parsed()) return exec_diag(diag_h, diag_n, diag_i);
    if (clwk->parsed()) return exec_clwk(clwk_g, clwk_k, clwk_lambda);
    return exec_batch(batch_file); // batch is the only remaining subcommand
}

} // namespace

std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    bool in_quotes = false;
    bool have_token = false;
    for (char c : line) {
        if (c == '"') {
            in_quotes = !in_quotes;
            have_token = true;
            continue;
        }
        if (!in_quotes && std::isspace((unsigned char)c)) {
            if (have_token) tokens.push_back(current);
            current.clear();
            have_token = false;
            continue;
        }
        current += c;
        have_token = true;
    }
    if (in_quotes) throw parse_error("unterminated quote", line.size());
    if (have_token) tokens.push_back(current);
    return tokens;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        bool want_json = false;
        Rendered r = eval_tokens(args, &want_json);
        if (want_json) {
            out << r.data.dump() << "\n";
        } else {
            out << r.text << "\n";
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << "usage: wobbly <classify|ring|betti|strata|delta|diag|clwk|batch> [options]\n"
               "subcommands:\n"
               "  classify --genus {0|1} --bundle <descriptor> --twist <descriptor> [--json]\n"
               "  ring --n <n> --expr <expression>\n"
               "  betti --genus <g> --sym <n> | --std-sublocus <h> <s> | --fixed-det <h> <s>\n"
               "  strata --h <h> [--contains <inner> <outer>] [--json]\n"
               "  delta --h <h> --s <s>\n"
               "  diag --h <h> --N <n1,...> --I <i1,...>\n"
               "  clwk --g <g> --k <k> --lambda {0|1}\n"
               "  batch --file <queries>\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace wobbly::cli
