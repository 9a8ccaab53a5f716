#ifndef WOBBLY_DESCRIPTOR_IO_HPP
#define WOBBLY_DESCRIPTOR_IO_HPP

#include "wobbly/bundles.hpp"

#include <string>

namespace wobbly {

// Descriptor grammar, one descriptor per line, whitespace insensitive:
//   genus 0 bundle:  O(d1)+O(d2)+...          twist: an integer t
//   genus 1 bundle:  ind r d @ x,y
//                    m1*st r d @ x,y + m2*st r' d' @ x',y' + ...
//                    parts joined with '|' form a direct sum
//   genus 1 twist:   L deg @ x,y
// Offsets are exact rationals p/q reduced into [0,1).

GZeroBundle parse_gzero_bundle(const std::string& text);
EllipticBundle parse_elliptic_bundle(const std::string& text);
PicPoint parse_elliptic_twist(const std::string& text);
long long parse_gzero_twist(const std::string& text);

std::string print_fraction(const Frac& f);
std::string print_offset(const PicOffset& o);
std::string print_gzero_bundle(const GZeroBundle& e);
std::string print_elliptic_bundle(const EllipticBundle& e);
std::string print_elliptic_twist(const PicPoint& l);

} // namespace wobbly

#endif
