#include "indcluster/schur.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "indcluster/error.hpp"

namespace indcluster {

SymFuncP SymFuncP::power_sum(const Partition& mu) {
  SymFuncP f;
  f.add(mu, 1);
  return f;
}

SymFuncP SymFuncP::constant(const Rational& c) {
  SymFuncP f;
  f.add(Partition{}, c);
  return f;
}

Rational SymFuncP::coeff(const Partition& mu) const {
  auto it = coeffs_.find(mu);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymFuncP::add(const Partition& mu, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(mu, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

SymFuncP SymFuncP::operator+(const SymFuncP& o) const {
  SymFuncP r = *this;
  for (const auto& [mu, c] : o.coeffs_) r.add(mu, c);
  return r;
}

SymFuncP SymFuncP::operator-(const SymFuncP& o) const {
  SymFuncP r = *this;
  for (const auto& [mu, c] : o.coeffs_) r.add(mu, -c);
  return r;
}

SymFuncP SymFuncP::operator*(const SymFuncP& o) const {
  SymFuncP r;
  for (const auto& [a, ca] : coeffs_)
    for (const auto& [b, cb] : o.coeffs_) r.add(partition_union(a, b), ca * cb);
  return r;
}

SymFuncP SymFuncP::operator*(const Rational& c) const {
  SymFuncP r;
  for (const auto& [mu, v] : coeffs_) r.add(mu, v * c);
  return r;
}

std::string symfunc_to_string(const SymFuncP& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [mu, c] : f.coeffs()) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string p = mu.empty() ? "" : "p[" + mu.to_string().substr(1, mu.to_string().size() - 2) + "]";
    if (p.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += p;
    } else {
      out += rational_to_string(mag) + "*" + p;
    }
  }
  return out;
}

Partition partition_union(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

Integer z_mu(const Partition& mu) {
  Integer z = 1;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    unsigned long mult = j - i;
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), mult);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
    z *= f * pw;
    i = j;
  }
  return z;
}

namespace {

struct CharacterCache {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, long> memo;
};

CharacterCache& cache() {
  static CharacterCache c;
  return c;
}

// Strips border strips of length mu_1 from lambda by moving beads of the beta-set down by mu_1.
long mn_character(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(cache().mutex);
    auto it = cache().memo.find(key);
    if (it != cache().memo.end()) return it->second;
  }
  const int r = mu.parts().front();
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));  // strictly decreasing, >= 0
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);
  long total = 0;
  for (int i = 0; i < len; ++i) {
    int target = beta[static_cast<std::size_t>(i)] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossed = 0;
    for (int b : beta)
      if (b < beta[static_cast<std::size_t>(i)] && b > target) ++crossed;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = target;
    std::sort(moved.rbegin(), moved.rend());
    std::vector<int> parts;
    for (int k = 0; k < len; ++k) parts.push_back(moved[static_cast<std::size_t>(k)] - (len - 1 - k));
    long sign = crossed % 2 == 0 ? 1 : -1;
    total += sign * mn_character(Partition(parts), rest);
  }
  std::unique_lock lock(cache().mutex);
  cache().memo.emplace(key, total);
  return total;
}

}  // namespace

long character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::SizeMismatch, "|" + lambda.to_string() + "| != |" + mu.to_string() + "|");
  return mn_character(lambda, mu);
}

SymFuncP schur_in_p(const Partition& lambda) {
  SymFuncP f;
  for (const auto& mu : partitions_of(lambda.size())) {
    Rational c(Integer(character(lambda, mu)), z_mu(mu));
    c.canonicalize();
    f.add(mu, c);
  }
  return f;
}

Rational hall_product(const SymFuncP& f, const SymFuncP& g) {
  Rational total = 0;
  for (const auto& [mu, c] : f.coeffs()) {
    Rational d = g.coeff(mu);
    if (d != 0) total += c * d * Rational(z_mu(mu));
  }
  return total;
}

}  // namespace indcluster
