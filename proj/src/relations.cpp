#include <algorithm>
#include <map>

#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"

namespace indcluster {

QuadraticRelation normalize_relation(std::vector<RelationTerm> terms) {
  std::map<std::pair<Partition, Partition>, int, std::greater<>> combined;
  for (auto& t : terms) {
    if (t.first < t.second) std::swap(t.first, t.second);
    combined[{t.first, t.second}] += t.coeff;
  }
  QuadraticRelation r;
  for (const auto& [key, c] : combined)
    if (c != 0) r.terms.push_back({c, key.first, key.second});
  // Sorted by decreasing first label, so the first term holds the largest label.
  if (!r.terms.empty() && r.terms.front().coeff < 0)
    for (auto& t : r.terms) t.coeff = -t.coeff;
  return r;
}

namespace {

// Sorts an index tuple; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

}  // namespace

QuadraticRelation pluecker_relation(int m, const std::vector<int>& I, const std::vector<int>& J) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  if (static_cast<int>(I.size()) != m - 1 || static_cast<int>(J.size()) != m + 1)
    throw Error(ErrorCode::InvalidArgument, "need |I| = m-1 and |J| = m+1");
  for (int x : I)
    if (x < -m) throw Error(ErrorCode::InvalidArgument, "index below -m");
  for (int x : J)
    if (x < -m) throw Error(ErrorCode::InvalidArgument, "index below -m");
  std::vector<RelationTerm> terms;
  for (std::size_t l = 0; l < J.size(); ++l) {
    std::vector<int> left = I;
    left.push_back(J[l]);
    std::vector<int> right;
    for (std::size_t k = 0; k < J.size(); ++k)
      if (k != l) right.push_back(J[k]);
    int sl = sort_with_sign(left), sr = sort_with_sign(right);
    if (sl == 0 || sr == 0) continue;
    int sign = ((l + 1) % 2 == 0 ? 1 : -1) * sl * sr;
    terms.push_back({sign, partition_from_finite_label(left, m), partition_from_finite_label(right, m)});
  }
  return normalize_relation(std::move(terms));
}

QuadraticRelation hook_relation(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "hook relation needs a, b >= 1");
  auto fr = [](std::vector<int> arms, std::vector<int> legs) { return frobenius_to_partition({arms, legs}); };
  return normalize_relation({
      {1, fr({a}, {b}), fr({a - 1}, {b - 1})},
      {-1, Partition{}, fr({a, a - 1}, {b, b - 1})},
      {-1, fr({a - 1}, {b}), fr({a}, {b - 1})},
  });
}

QuadraticRelation diag_relation(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "diagonal index must be nonnegative");
  if (k == 0) return kp_relation();
  auto rect = Partition::rectangle;
  auto rect_plus_row = [](int rows, int width, int last) {
    std::vector<int> parts(static_cast<std::size_t>(rows), width);
    parts.push_back(last);
    return Partition(parts);
  };
  return normalize_relation({
      {1, rect(k, k), rect_plus_row(k, k + 1, k)},
      {-1, rect(k, k + 1), rect(k + 1, k)},
      {-1, rect_plus_row(k - 1, k, k - 1), rect(k + 1, k + 1)},
  });
}

QuadraticRelation kp_relation() { return hook_relation(1, 1); }

std::string relation_to_string(const QuadraticRelation& r) {
  if (r.terms.empty()) return "0 = 0";
  std::string out;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const auto& t = r.terms[i];
    int mag = std::abs(t.coeff);
    if (i == 0) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += t.first.label_name() + "*" + t.second.label_name();
  }
  return out + " = 0";
}

Rational relation_residual(const QuadraticRelation& r, const std::function<Rational(const Partition&)>& value) {
  Rational total = 0;
  for (const auto& t : r.terms) total += Rational(t.coeff) * value(t.first) * value(t.second);
  return total;
}

nlohmann::json relation_to_json(const QuadraticRelation& r) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : r.terms) terms.push_back({{"coeff", t.coeff}, {"labels", {t.first.to_string(), t.second.to_string()}}});
  return {{"terms", terms}, {"text", relation_to_string(r)}};
}

}  // namespace indcluster
