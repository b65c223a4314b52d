#include <map>
#include <set>
#include <tuple>

#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"

namespace indcluster {

// Vertex (a, b; k) sits on diagonal r = a - b at height k, 0 <= k <= m - 1 - |r|, with the larger of
// a, b equal to floor((m + |r| + k) / 2). The top vertex of each diagonal is frozen. The parity of
// m + r + k selects one of the two alternating local configurations.
Seed quad_quiver(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "quad_quiver needs m >= 1");
  using Key = std::tuple<int, int, int>;
  std::map<Key, Partition> vertex;
  std::vector<Key> order;
  std::set<Partition> frozen{Partition{}};
  for (int r = -(m - 1); r <= m - 1; ++r) {
    int ar = std::abs(r);
    for (int k = 0; k <= m - 1 - ar; ++k) {
      int big = (m + ar + k) / 2;
      int a = r >= 0 ? big : big - ar;
      int b = r >= 0 ? big - ar : big;
      Key key{a, b, k};
      vertex[key] = quad_label(a, b, k);
      order.push_back(key);
      if (k == m - 1 - ar) frozen.insert(vertex[key]);
    }
  }
  auto lookup = [&](int a, int b, int k) -> std::optional<Partition> {
    if (k == -1) return Partition{};
    auto it = vertex.find({a, b, k});
    if (it == vertex.end()) return std::nullopt;
    return it->second;
  };

  std::vector<ClusterVar> vars{{var(Partition{}.label_name()), true, Partition{}, nullptr}};
  for (const auto& key : order) {
    const Partition& p = vertex[key];
    vars.push_back({var(p.label_name()), frozen.count(p) != 0, p, nullptr});
  }
  ExchangeMatrix mat;
  auto arrow = [&](const std::optional<Partition>& tail, const std::optional<Partition>& head) {
    if (!tail || !head) return;
    bool tf = frozen.count(*tail) != 0, hf = frozen.count(*head) != 0;
    if (tf && hf) return;
    VarId t = var(tail->label_name()), h = var(head->label_name());
    // Each arrow is generated from both endpoints; record it once.
    if (!tf && mat.get(t, h) > 0) return;
    if (tf && mat.get(h, t) < 0) return;
    if (!tf) mat.add(t, h, 1);
    if (!hf) mat.add(h, t, -1);
  };
  for (const auto& [a, b, k] : order) {
    auto self = lookup(a, b, k);
    if ((m + a - b + k) % 2 != 0) {
      arrow(lookup(a + 1, b + 1, k + 1), self);
      arrow(lookup(a, b, k - 1), self);
      arrow(self, lookup(a + 1, b, k));
      arrow(self, lookup(a, b + 1, k));
    } else {
      arrow(self, lookup(a, b, k + 1));
      arrow(self, lookup(a - 1, b - 1, k - 1));
      arrow(lookup(a, b - 1, k), self);
      arrow(lookup(a - 1, b, k), self);
    }
  }
  return Seed(std::move(vars), std::move(mat));
}

}  // namespace indcluster
