#pragma once

#include <map>
#include <string>

#include "indcluster/partition.hpp"
#include "indcluster/rational.hpp"

namespace indcluster {

// Symmetric function in the power-sum basis: the key mu stands for p_{mu_1} p_{mu_2} ...
// No zero coefficients are stored.
class SymFuncP {
 public:
  SymFuncP() = default;
  static SymFuncP power_sum(const Partition& mu);  // p_mu, p_() = 1
  static SymFuncP constant(const Rational& c);

  const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const Partition& mu) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(const Partition& mu, const Rational& c);

  SymFuncP operator+(const SymFuncP& o) const;
  SymFuncP operator-(const SymFuncP& o) const;
  SymFuncP operator*(const SymFuncP& o) const;
  SymFuncP operator*(const Rational& c) const;
  bool operator==(const SymFuncP&) const = default;

 private:
  std::map<Partition, Rational> coeffs_;
};

// "1/2*p[1,1] + 1/2*p[2]"; "0" for zero.
std::string symfunc_to_string(const SymFuncP& f);

// Partition with the multiset union of both part lists.
Partition partition_union(const Partition& a, const Partition& b);

// prod_i i^{m_i} m_i!
Integer z_mu(const Partition& mu);

// Irreducible character of S_n on cycle type mu by Murnaghan-Nakayama; SizeMismatch if |lambda| != |mu|.
// Memoized in a process-wide, internally synchronized cache.
long character(const Partition& lambda, const Partition& mu);

// sum_{mu |- n} chi^lambda(mu) / z_mu p_mu
SymFuncP schur_in_p(const Partition& lambda);

// Bilinear with <p_lambda, p_mu> = delta z_lambda.
Rational hall_product(const SymFuncP& f, const SymFuncP& g);

}  // namespace indcluster
