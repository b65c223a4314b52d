#include "indcluster/sato.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <tuple>

#include "indcluster/error.hpp"
#include "indcluster/parallel.hpp"

namespace indcluster {

void Tau::set(const Partition& p, const Rational& c) {
  if (c == 0) {
    coeffs.erase(p);
  } else {
    coeffs[p] = c;
  }
}

Rational tau_coeff(const Tau& tau, const Partition& lambda) {
  auto it = tau.coeffs.find(lambda);
  return it == tau.coeffs.end() ? Rational(0) : it->second;
}

Tau tau_from_symfunc(const SymFuncP& f) {
  std::set<int> degrees;
  for (const auto& [mu, c] : f.coeffs()) degrees.insert(mu.size());
  Tau tau;
  for (int n : degrees)
    for (const auto& lambda : partitions_of(n)) tau.set(lambda, hall_product(f, schur_in_p(lambda)));
  return tau;
}

Tau tau_schur(const Partition& lambda) {
  Tau tau;
  tau.set(lambda, 1);
  return tau;
}

namespace {

// Increasing k-subsets of [lo, hi].
void for_each_subset(int k, int lo, int hi, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) return fn(cur);
    for (int x = start; x <= hi - (k - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      if (!rec(x + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  rec(lo);
}

}  // namespace

PluckerReport check_plucker(const Tau& tau, int m_bound, int index_bound) {
  if (m_bound < 1 || index_bound < 1) throw Error(ErrorCode::InvalidArgument, "bounds must be at least 1");
  PluckerReport rep;
  auto value = [&](const Partition& p) { return tau_coeff(tau, p); };
  for (int m = 1; m <= m_bound && rep.passed; ++m) {
    for_each_subset(m - 1, -m, index_bound, [&](const std::vector<int>& I) {
      for_each_subset(m + 1, -m, index_bound, [&](const std::vector<int>& J) {
        QuadraticRelation r = pluecker_relation(m, I, J);
        if (r.empty()) return true;
        ++rep.relations_checked;
        Rational res = relation_residual(r, value);
        if (res == 0) return true;
        rep.passed = false;
        rep.failing = r;
        rep.residual = res;
        rep.m = m;
        rep.I = I;
        rep.J = J;
        return false;
      });
      return rep.passed;
    });
  }
  return rep;
}

Rational kp_residual(const Tau& tau) {
  auto c = [&](std::vector<int> parts) { return tau_coeff(tau, Partition(std::move(parts))); };
  return c({}) * c({2, 2}) - c({2, 1}) * c({1}) + c({1, 1}) * c({2});
}

// ---------------------------------------------------------------- points

namespace {
int maya_at(const Partition& p, int j) { return p.part(j - 1) - j; }
}  // namespace

PointW PointW::schubert(const Partition& lambda) {
  PointW w;
  w.stratum = lambda;
  w.band = std::max(0, lambda.width() - 1);
  return w;
}

Rational PointW::coefficient(int n, int j) const {
  if (n == maya_at(stratum, j)) return 1;
  auto it = coeffs.find({n, j});
  return it == coeffs.end() ? Rational(0) : it->second;
}

int PointW::last_perturbed() const {
  int last = 0;
  for (const auto& [key, c] : coeffs) last = std::max(last, key.second);
  return last;
}

void PointW::validate() const {
  if (band < 0) throw Error(ErrorCode::InvalidArgument, "band must be nonnegative");
  for (const auto& [key, c] : coeffs) {
    auto [n, j] = key;
    if (j < 1) throw Error(ErrorCode::InvalidArgument, "basis index must be positive");
    if (c == 0) throw Error(ErrorCode::InvalidArgument, "stored coefficients must be nonzero");
    if (n <= maya_at(stratum, j) || n > band)
      throw Error(ErrorCode::InvalidArgument, "w_{" + std::to_string(n) + "," + std::to_string(j) +
                                                  "} lies outside (a_j, band]");
  }
}

PointW point_from_matrix(int rows, int cols, const Matrix& m) {
  if (rows < 1 || cols < 0 || static_cast<int>(m.size()) != rows)
    throw Error(ErrorCode::InvalidArgument, "matrix must have the stated number of rows");
  const int total = rows + cols;
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != total)
      throw Error(ErrorCode::InvalidArgument, "matrix rows must have m + n entries");
  // Reduced row echelon form, pivots at the lowest columns.
  Matrix a = m;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < total && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational lead = a[r][static_cast<std::size_t>(c)];
    for (auto& x : a[r]) x /= lead;
    for (std::size_t o = 0; o < a.size(); ++o) {
      if (o == r) continue;
      Rational f = a[o][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int k = 0; k < total; ++k) a[o][static_cast<std::size_t>(k)] -= f * a[r][static_cast<std::size_t>(k)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (static_cast<int>(r) != rows) throw Error(ErrorCode::RankDeficient, "matrix has rank " + std::to_string(r));
  // w_1 carries the highest pivot: w_j is echelon row rows - j.
  std::vector<int> parts;
  for (int j = 1; j <= rows; ++j) parts.push_back(pivot_col[static_cast<std::size_t>(rows - j)] - rows + j);
  PointW w;
  w.stratum = Partition(parts);
  w.band = std::max(0, cols - 1);
  for (int j = 1; j <= rows; ++j) {
    const auto& row = a[static_cast<std::size_t>(rows - j)];
    for (int c = pivot_col[static_cast<std::size_t>(rows - j)] + 1; c < total; ++c)
      if (row[static_cast<std::size_t>(c)] != 0) w.coeffs[{c - rows, j}] = row[static_cast<std::size_t>(c)];
  }
  return w;
}

namespace {
Rational truncated_delta(const PointW& w, const Partition& lambda, int order) {
  Matrix a(static_cast<std::size_t>(order), std::vector<Rational>(static_cast<std::size_t>(order)));
  for (int i = 1; i <= order; ++i)
    for (int j = 1; j <= order; ++j)
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = w.coefficient(maya_at(lambda, i), j);
  return determinant(std::move(a));
}
}  // namespace

Rational point_delta(const PointW& w, const Partition& lambda) {
  int rank = partition_to_maya(w.stratum).rank();
  int order = std::max({lambda.length(), rank, w.band, w.last_perturbed()}) + 2;
  Rational value = truncated_delta(w, lambda, order);
  if (truncated_delta(w, lambda, order + 1) != value)
    throw Error(ErrorCode::TruncationUnstable, "orders " + std::to_string(order) + " and " +
                                                   std::to_string(order + 1) + " disagree at " + lambda.to_string());
  return value;
}

Tau tau_from_point(const PointW& w, int size_bound) {
  if (size_bound < 0) throw Error(ErrorCode::InvalidArgument, "size bound must be nonnegative");
  w.validate();
  std::vector<Partition> labels = partitions_up_to(size_bound);
  std::vector<Rational> values(labels.size());
  parallel_for(labels.size(), [&](std::size_t i) { values[i] = point_delta(w, labels[i]); });
  Tau tau;
  for (std::size_t i = 0; i < labels.size(); ++i) tau.set(labels[i], values[i]);
  return tau;
}

GiambelliReport giambelli_check(const PointW& w, const Partition& lambda) {
  Rational empty = point_delta(w, Partition{});
  if (empty == 0) throw Error(ErrorCode::EmptyCoordinateZero, "Delta_() vanishes on this point");
  GiambelliReport rep;
  rep.lambda = lambda;
  rep.frobenius = partition_to_frobenius(lambda);
  rep.lhs = point_delta(w, lambda) / empty;
  const std::size_t d = rep.frobenius.arms.size();
  Matrix hooks(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      hooks[i][j] = point_delta(w, frobenius_to_partition({{rep.frobenius.arms[i]}, {rep.frobenius.legs[j]}})) / empty;
  rep.rhs = determinant(std::move(hooks));
  return rep;
}

// ---------------------------------------------------------------- positivity

namespace {
const LaurentPoly& cached_expansion(const Partition& lambda, int rows, int cols) {
  static std::mutex mutex;
  static std::map<std::tuple<Partition, int, int>, LaurentPoly> memo;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(lambda, rows, cols);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, laurent_expansion(lambda, rows, cols).poly).first;
  return it->second;
}
}  // namespace

PositivityReport positivity_certificate(const std::map<Partition, Rational>& rect_values,
                                        const std::vector<Partition>& lambdas, int rows, int cols) {
  Assignment values;
  for (const auto& [p, v] : rect_values) {
    if (!p.is_rectangle() && !p.empty())
      throw Error(ErrorCode::InvalidArgument, p.to_string() + " is not a rectangle");
    if (v <= 0) throw Error(ErrorCode::NonPositiveInput, "value at " + p.to_string() + " is " + rational_to_string(v));
    values[var(p.label_name())] = v;
  }
  PositivityReport rep;
  rep.rows = rows;
  rep.cols = cols;
  for (const auto& lambda : lambdas) {
    if (!lambda.fits(rows, cols))
      throw Error(ErrorCode::DoesNotFitBox, lambda.to_string() + " does not fit " + std::to_string(rows) + "x" +
                                                std::to_string(cols));
    const LaurentPoly& f = cached_expansion(lambda, rows, cols);
    if (f.is_zero() || !lp_is_coefficient_positive(f)) rep.all_positive = false;
    Rational v = lp_eval(f, values);
    if (v <= 0) rep.all_positive = false;
    rep.values[lambda] = v;
  }
  return rep;
}

// ---------------------------------------------------------------- io

namespace {
Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational, got " + v.dump());
}
}  // namespace

nlohmann::json tau_to_json(const Tau& tau) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [p, c] : tau.coeffs) j[p.to_string()] = rational_to_fraction(c);
  return j;
}

Tau tau_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "tau file must be an object");
  Tau tau;
  for (const auto& [key, v] : j.items()) tau.set(parse_partition(key), json_rational(v));
  return tau;
}

nlohmann::json point_to_json(const PointW& w) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [key, c] : w.coeffs) coeffs.push_back({key.first, key.second, rational_to_fraction(c)});
  return {{"stratum", w.stratum.parts()}, {"band", w.band}, {"coeffs", coeffs}};
}

PointW point_from_json(const nlohmann::json& j) {
  try {
    PointW w;
    w.stratum = Partition(j.at("stratum").get<std::vector<int>>());
    w.band = j.at("band").get<int>();
    for (const auto& e : j.value("coeffs", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::ParseError, "coefficient entries are [n, j, value]");
      Rational c = json_rational(e[2]);
      if (c != 0) w.coeffs[{e[0].get<int>(), e[1].get<int>()}] = c;
    }
    w.validate();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace indcluster
