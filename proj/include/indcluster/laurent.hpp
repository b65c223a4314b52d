#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "indcluster/rational.hpp"
#include "indcluster/registry.hpp"

namespace indcluster {

// Product of variable powers; factors are sorted by VarId and exponents are never zero.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, int exponent = 1);

  const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(VarId v) const;
  bool is_polynomial() const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int k) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<VarId, int>> factors_;
};

// Graded reverse-lexicographic: higher total degree first; ties are broken at the largest VarId
// where the exponents differ, the smaller exponent coming first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  static LaurentPoly variable(VarId v, int exponent = 1);
  static LaurentPoly term(const Rational& c, const Monomial& m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  // A single term with nonzero coefficient, i.e. a unit of the Laurent ring.
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  std::set<VarId> variables() const;
  int max_exponent(VarId v) const;
  int min_exponent(VarId v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly pow(int k) const;  // negative k requires a monomial

  // Smallest monomial M (nonpositive exponents inverted) with p*M a polynomial.
  Monomial denominator() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
// Exact quotient a/b; NotDivisible if no Laurent polynomial q has q*b == a.
LaurentPoly lp_div_exact(const LaurentPoly& a, const LaurentPoly& b);

using Substitution = std::unordered_map<VarId, LaurentPoly>;
// Ring map fixing unlisted variables. Negative powers need monomial images, else NotDivisible.
LaurentPoly lp_substitute(const LaurentPoly& p, const Substitution& images);
// Same map applied to numerator and denominator, followed by one exact division.
LaurentPoly lp_substitute_exact(const LaurentPoly& p, const Substitution& images);

using Assignment = std::unordered_map<VarId, Rational>;
// MissingValue for unassigned variables, ZeroToNegativePower for a zero value under a negative power.
Rational lp_eval(const LaurentPoly& p, const Assignment& values);

// Every stored coefficient is strictly positive; vacuously true for 0.
bool lp_is_coefficient_positive(const LaurentPoly& p);

// Optional renaming used by every printer; defaults to the registry name.
using VarNamer = std::function<std::string(VarId)>;

std::string monomial_to_string(const Monomial& m, const VarNamer& namer = {});
// Canonical sum-of-terms form, e.g. "3*d[2,1]^2*d[]^-1 + 1".
std::string lp_to_string(const LaurentPoly& p, const VarNamer& namer = {});
// Numerator over the denominator monomial, e.g. "(d[2]*d[1,1] + d[]*d[2,2]) / d[1]".
std::string lp_to_fraction_string(const LaurentPoly& p, const VarNamer& namer = {});
// Accepts the printed forms plus parentheses, '/' by any exact divisor and integer powers.
LaurentPoly lp_parse(std::string_view text);

nlohmann::json lp_to_json(const LaurentPoly& p);
LaurentPoly lp_from_json(const nlohmann::json& j);

}  // namespace indcluster
