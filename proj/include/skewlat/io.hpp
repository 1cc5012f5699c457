#ifndef SKEWLAT_IO_HPP_
#define SKEWLAT_IO_HPP_

#include <iosfwd>
#include <string>

#include "skewlat/algebra.hpp"

namespace skewlat {

// Text format, whitespace separated, '#' starts a comment line:
//
//   skewlat 1
//   n 5
//   names 0 a b c 1        (optional)
//   meet
//   <n rows of n ids>
//   join
//   <n rows of n ids>
//
// parse_algebra validates the tables; parse errors and axiom failures both
// surface as AlgebraFileError with a distinguishing flag.
struct AlgebraFileError : std::runtime_error {
  enum class Kind { structural, law };
  Kind kind;
  explicit AlgebraFileError(Kind k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
};

SkewLatticeAlgebra parse_algebra(std::istream& in);
SkewLatticeAlgebra parse_algebra_file(const std::string& path);

// Canonical form: printing then parsing reproduces the same bytes.
std::string print_algebra(const SkewLatticeAlgebra& s);

// Resolves a CLI operand: an existing file path, else a builtin name.
SkewLatticeAlgebra load_algebra_argument(const std::string& arg);

// Element lookup for CLI flags: by display name when the algebra is named,
// by decimal id otherwise.
ElementId resolve_element(const SkewLatticeAlgebra& s, const std::string& token);

}  // namespace skewlat

#endif  // SKEWLAT_IO_HPP_
