#include <algorithm>
#include <functional>

#include "indcluster/error.hpp"
#include "indcluster/seed.hpp"

namespace indcluster {

bool SimilarityWitness::strong() const {
  return std::all_of(phi.begin(), phi.end(), [](const auto& kv) { return kv.first == kv.second; });
}

namespace {

// Per-component sign check for a complete bijection.
std::optional<SimilarityWitness> verify(const Seed& a, const Seed& b, const VarMap& phi) {
  if (a.size() != b.size() || phi.size() != a.size()) return std::nullopt;
  std::set<VarId> image;
  for (const auto& cv : a.vars()) {
    auto it = phi.find(cv.id);
    if (it == phi.end() || !b.contains(it->second)) return std::nullopt;
    if (b.var(it->second).frozen != cv.frozen) return std::nullopt;
    image.insert(it->second);
  }
  if (image.size() != a.size()) return std::nullopt;

  SimilarityWitness w;
  w.phi = phi;
  w.components = exchangeable_components(a).components;
  for (const auto& comp : w.components) {
    int sign = 0;
    for (VarId u : comp.exchangeable) {
      VarId pu = phi.at(u);
      for (const auto& cv : a.vars()) {
        int ea = a.matrix().get(u, cv.id);
        int eb = b.matrix().get(pu, phi.at(cv.id));
        if (ea == 0 && eb == 0) continue;
        if (std::abs(ea) != std::abs(eb)) return std::nullopt;
        int s = (ea > 0) == (eb > 0) ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return std::nullopt;
      }
    }
    w.signs.push_back(sign == 0 ? 1 : sign);
  }
  // Exchangeables of b outside every component image still need empty rows.
  for (const auto& cv : b.vars()) {
    if (cv.frozen) continue;
    for (const auto& [v, val] : b.neighbours(cv.id))
      if (!b.contains(v)) return std::nullopt;
  }
  return w;
}

std::vector<int> magnitude_profile(const Seed& s, VarId v) {
  std::vector<int> out;
  for (const auto& cv : s.vars()) {
    int e = std::abs(s.entry(v, cv.id));
    if (e) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<SimilarityWitness> seeds_similar(const Seed& a, const Seed& b, const std::optional<VarMap>& phi) {
  if (phi) return verify(a, b, *phi);
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > kSimilaritySearchBound)
    throw Error(ErrorCode::SearchTooLarge,
                std::to_string(a.size()) + " variables exceed the search bound of " +
                    std::to_string(kSimilaritySearchBound));

  std::size_t n = a.size();
  std::vector<std::vector<int>> pa(n), pb(n);
  for (std::size_t i = 0; i < n; ++i) {
    pa[i] = magnitude_profile(a, a.at(i).id);
    pb[i] = magnitude_profile(b, b.at(i).id);
  }
  std::vector<int> assign(n, -1);
  std::vector<bool> used(n, false);
  std::optional<SimilarityWitness> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == n) {
      VarMap m;
      for (std::size_t k = 0; k < n; ++k) m[a.at(k).id] = b.at(static_cast<std::size_t>(assign[k])).id;
      found = verify(a, b, m);
      return;
    }
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (used[j] || a.at(i).frozen != b.at(j).frozen || pa[i] != pb[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        std::size_t jk = static_cast<std::size_t>(assign[k]);
        ok = std::abs(a.entry(a.at(i).id, a.at(k).id)) == std::abs(b.entry(b.at(j).id, b.at(jk).id));
      }
      if (!ok) continue;
      used[j] = true;
      assign[i] = static_cast<int>(j);
      rec(i + 1);
      used[j] = false;
      assign[i] = -1;
    }
  };
  rec(0);
  return found;
}

std::optional<SimilarityWitness> seeds_strongly_similar(const Seed& a, const Seed& b) {
  VarMap id;
  for (const auto& cv : a.vars()) id[cv.id] = cv.id;
  return verify(a, b, id);
}

}  // namespace indcluster
