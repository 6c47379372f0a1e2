#pragma once

// Sparse multivariate Laurent polynomials over the integers. Negative
// exponents are first-class for every variable, coefficients are
// arbitrary-precision, and the term map is the canonical form: two
// polynomials are equal iff their term maps are equal.

#include <array>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linkpoly/errors.hpp"

namespace linkpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::array<std::string_view, 8> kReservedVars = {
    "A", "B", "d", "t", "z1", "z2", "w", "q"};

// Ordered, append-only set of variable names. Registration is idempotent;
// indices are stable for the lifetime of the registry and fix the canonical
// term order. Safe for concurrent registration and lookup.
class VarRegistry {
public:
  VarRegistry();

  int intern(std::string_view name);
  std::optional<int> find(std::string_view name) const;
  std::string name(int index) const;
  int size() const;

  // Longest registered name that is a prefix of `text`, as (index, length).
  std::optional<std::pair<int, int>> longest_match(std::string_view text) const;

private:
  mutable std::shared_mutex mutex_;
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

using Registry = std::shared_ptr<VarRegistry>;

Registry make_registry();

// Exponent vector indexed by variable; trailing zeros are trimmed so that
// the same monomial has a unique representation no matter how many
// variables were registered later.
using ExpVec = std::vector<int>;

struct ExpVecLexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class MultiPoly {
public:
  using TermMap = std::map<ExpVec, Int, ExpVecLexGreater>;

  explicit MultiPoly(Registry reg);  // zero

  static MultiPoly constant(const Registry& reg, Int value);
  static MultiPoly one(const Registry& reg) { return constant(reg, 1); }
  static MultiPoly variable(const Registry& reg, std::string_view name);
  static MultiPoly monomial(const Registry& reg, ExpVec exponents, Int coeff);

  const Registry& registry() const { return reg_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // +-1 times a single monomial; exactly the invertible elements.
  bool is_unit() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Terms in descending lexicographic exponent order, `*` and `^1` elided,
  // coefficient 1 elided next to variables. The zero polynomial is "0".
  // This is the bit-exact output format of the CLI.
  std::string to_string() const;

private:
  void add_term(const ExpVec& exponents, const Int& coeff);
  void check_registry(const MultiPoly& o) const;

  Registry reg_;
  TermMap terms_;

  friend MultiPoly pow(const MultiPoly& p, long n);
  friend MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);
};

// p^n. For n < 0, p must be a unit.
MultiPoly pow(const MultiPoly& p, long n);

// Exact quotient p / q; throws InternalError if the division leaves a
// remainder (exactness is guaranteed wherever the library divides, so a
// failure indicates a transcription bug, not bad input).
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);

// Simultaneous substitution, fully normalized. A variable occurring with a
// negative exponent must be bound to a unit (or left unbound).
MultiPoly substitute(const MultiPoly& p,
                     const std::map<std::string, MultiPoly>& bindings);

// Exact rational evaluation; every variable occurring in p must be assigned,
// and negative exponents require nonzero values.
Rational evaluate(const MultiPoly& p,
                  const std::map<std::string, Rational>& assignment);

// Inverse of to_string. Also accepts optional '*' between factors; unknown
// identifiers are interned on the fly, and known names win by longest match.
MultiPoly parse_poly(const Registry& reg, std::string_view text);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace linkpoly
