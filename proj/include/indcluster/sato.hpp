#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indcluster/grassmann.hpp"
#include "indcluster/schur.hpp"
#include "json.hpp"

namespace indcluster {

// Schur-basis coefficients <tau, s_lambda>; absent partitions have coefficient 0.
struct Tau {
  std::map<Partition, Rational> coeffs;
  void set(const Partition& p, const Rational& c);
};

Rational tau_coeff(const Tau& tau, const Partition& lambda);
// <f, s_lambda> for every lambda with |lambda| in the support of f.
Tau tau_from_symfunc(const SymFuncP& f);
Tau tau_schur(const Partition& lambda);

struct PluckerReport {
  bool passed = true;
  std::size_t relations_checked = 0;
  std::optional<QuadraticRelation> failing;
  Rational residual = 0;
  int m = 0;
  std::vector<int> I, J;
};

// Every relation pluecker_relation(m, I, J) with 1 <= m <= m_bound and increasing I, J in
// [-m, index_bound]; stops at the first nonzero residual.
PluckerReport check_plucker(const Tau& tau, int m_bound, int index_bound);

// <1><(2,2)> - <(2,1)><(1)> + <(1,1)><(2)>
Rational kp_residual(const Tau& tau);

// Point of the Sato Grassmannian with admissible basis
//   w_j = z^{a_j+1} + sum_{a_j < n <= band} w_{n,j} z^{n+1},   a_j = stratum_j - j,  j >= 1.
// Only finitely many columns are perturbed; the leading coefficient is implicit.
struct PointW {
  Partition stratum;
  int band = 0;
  std::map<std::pair<int, int>, Rational> coeffs;  // (n, j) -> w_{n,j}

  static PointW schubert(const Partition& lambda);  // H_lambda
  // Coefficient of z^{n+1} in w_j, including the leading 1.
  Rational coefficient(int n, int j) const;
  int last_perturbed() const;
  // InvalidArgument unless every stored entry has a_j < n <= band and is nonzero.
  void validate() const;
};

// Row space of an m x (m+n) matrix, column c carrying exponent index c - m, followed by the
// unperturbed tail; reduced so every w_j leads with 1 at its lowest exponent. RankDeficient.
PointW point_from_matrix(int rows, int cols, const Matrix& m);

// det(w_{lambda_i - i, j}) truncated at K = max(l(lambda), rank, band, last perturbed) + 2;
// TruncationUnstable if orders K and K+1 disagree.
Rational point_delta(const PointW& w, const Partition& lambda);

// lambda -> point_delta for every |lambda| <= size_bound; zero coefficients are dropped.
Tau tau_from_point(const PointW& w, int size_bound);

struct GiambelliReport {
  Partition lambda;
  Frobenius frobenius;
  Rational lhs, rhs;  // Delta_lambda / Delta_(), det(Delta_(a_i|b_j) / Delta_())
  Rational residual() const { return lhs - rhs; }
  bool passed() const { return lhs == rhs; }
};

// EmptyCoordinateZero if Delta_() vanishes.
GiambelliReport giambelli_check(const PointW& w, const Partition& lambda);

struct PositivityReport {
  int rows = 0, cols = 0;
  std::map<Partition, Rational> values;
  bool all_positive = true;
};

// Evaluates the Laurent expansion of each d_lambda at positive rectangle values (keys: rectangles
// inside the box, including the empty partition). NonPositiveInput, DoesNotFitBox, MissingValue.
PositivityReport positivity_certificate(const std::map<Partition, Rational>& rect_values,
                                        const std::vector<Partition>& lambdas, int rows, int cols);

// {"(2,1)": "3/2", ...}
nlohmann::json tau_to_json(const Tau& tau);
Tau tau_from_json(const nlohmann::json& j);
// {stratum: [..], band: N, coeffs: [[n, j, "num/den"]]}
nlohmann::json point_to_json(const PointW& w);
PointW point_from_json(const nlohmann::json& j);

}  // namespace indcluster
