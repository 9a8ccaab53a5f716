#ifndef WOBBLY_CLI_HPP
#define WOBBLY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wobbly::cli {

// Dispatches one invocation.  Exit status: 0 on success, 1 on a domain
// error, 2 on a usage or parse error.  Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// whitespace splitting with double-quote grouping, for batch-mode lines
std::vector<std::string> tokenize_line(const std::string& line);

} // namespace wobbly::cli

#endif
