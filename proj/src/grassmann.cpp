#include "indcluster/grassmann.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "indcluster/error.hpp"

namespace indcluster {

namespace {

struct LabelledArrow {
  Partition tail, head;
};

// Frozen–frozen arrows are dropped; vertex order fixes registration order of the names.
Seed build_labelled_seed(const std::vector<Partition>& vertices, const std::set<Partition>& frozen,
                         const std::vector<LabelledArrow>& arrows) {
  std::vector<ClusterVar> vars;
  for (const auto& p : vertices) vars.push_back({var(p.label_name()), frozen.count(p) != 0, p, nullptr});
  ExchangeMatrix b;
  for (const auto& a : arrows) {
    bool tf = frozen.count(a.tail) != 0, hf = frozen.count(a.head) != 0;
    if (tf && hf) continue;
    VarId t = var(a.tail.label_name()), h = var(a.head.label_name());
    if (!tf) b.add(t, h, 1);
    if (!hf) b.add(h, t, -1);
  }
  return Seed(std::move(vars), std::move(b));
}

std::vector<LabelledArrow> rectangle_arrows(int rows, int cols) {
  auto r = [](int i, int j) { return Partition::rectangle(i, j); };
  std::vector<LabelledArrow> arrows{{Partition{}, r(1, 1)}};
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (j + 1 <= cols) arrows.push_back({r(i, j), r(i, j + 1)});
      if (i + 1 <= rows) arrows.push_back({r(i, j), r(i + 1, j)});
      if (i > 1 && j > 1) arrows.push_back({r(i, j), r(i - 1, j - 1)});
    }
  }
  return arrows;
}

std::vector<Partition> rectangle_vertices(int rows, int cols) {
  std::vector<Partition> v{Partition{}};
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) v.push_back(Partition::rectangle(i, j));
  return v;
}

}  // namespace

Seed rect_seed(int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidArgument, "box sides must be positive");
  std::set<Partition> frozen{Partition{}};
  for (int j = 1; j <= cols; ++j) frozen.insert(Partition::rectangle(rows, j));
  for (int i = 1; i <= rows; ++i) frozen.insert(Partition::rectangle(i, cols));
  return build_labelled_seed(rectangle_vertices(rows, cols), frozen, rectangle_arrows(rows, cols));
}

Seed q_infty_window(int max_h, int max_w) {
  if (max_h < 1 || max_w < 1) throw Error(ErrorCode::InvalidArgument, "window sides must be positive");
  Seed s = build_labelled_seed(rectangle_vertices(max_h, max_w), {Partition{}}, rectangle_arrows(max_h, max_w));
  std::set<VarId> locked;
  for (int i = 1; i <= max_h; ++i)
    for (int j = 1; j <= max_w; ++j)
      if (i == max_h || j == max_w) locked.insert(var(Partition::rectangle(i, j).label_name()));
  return s.with_locked(std::move(locked));
}

Partition quad_label(int a, int b, int k) {
  if (k < 0) return {};
  Frobenius f;
  for (int i = 0; i <= k; ++i) {
    f.arms.push_back(a - i);
    f.legs.push_back(b - i);
  }
  return frobenius_to_partition(f);
}

MeltingMorphismSpec r_map(int rows, int cols, int rows2, int cols2) {
  if (rows2 < rows || cols2 < cols)
    throw Error(ErrorCode::BoxShrinks, std::to_string(rows) + "x" + std::to_string(cols) + " does not embed in " +
                                           std::to_string(rows2) + "x" + std::to_string(cols2));
  MeltingMorphismSpec f;
  for (const auto& p : rectangle_vertices(rows, cols)) {
    VarId v = var(p.label_name());
    f.image[v] = v;
  }
  return f;
}

bool weakly_separated(const Partition& a, const Partition& b) {
  int floor = -std::max(a.length(), b.length()) - 1;
  auto ea = maya_elements(a, floor), eb = maya_elements(b, floor);
  std::set<int> sa(ea.begin(), ea.end()), sb(eb.begin(), eb.end());
  // Merge the difference sets in increasing order and count runs of the same side.
  std::vector<std::pair<int, int>> diff;
  for (int x : sa)
    if (!sb.count(x)) diff.emplace_back(x, 0);
  for (int x : sb)
    if (!sa.count(x)) diff.emplace_back(x, 1);
  std::sort(diff.begin(), diff.end());
  int runs = 0;
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (i == 0 || diff[i].second != diff[i - 1].second) ++runs;
  return runs <= 3;
}

namespace {

// Labels of the in- and out-neighbours of v (each with multiplicity 1) or NotQuadrilateral.
Partition predict_square_move(const Partition& x, const std::vector<Partition>& in, const std::vector<Partition>& out) {
  if (in.size() != 2 || out.size() != 2)
    throw Error(ErrorCode::NotQuadrilateral, x.to_string() + " does not have two in- and two out-neighbours");
  int len = x.length();
  for (const auto& p : in) len = std::max(len, p.length());
  for (const auto& p : out) len = std::max(len, p.length());
  int floor = -len - 2;
  auto as_set = [&](const Partition& p) {
    auto e = maya_elements(p, floor);
    return std::set<int>(e.begin(), e.end());
  };
  std::set<int> sx = as_set(x);
  std::vector<std::set<int>> sets{sx};
  for (const auto& p : in) sets.push_back(as_set(p));
  for (const auto& p : out) sets.push_back(as_set(p));
  std::set<int> common = sets[0], all;
  for (const auto& s : sets) {
    std::set<int> keep;
    for (int e : common)
      if (s.count(e)) keep.insert(e);
    common = keep;
    all.insert(s.begin(), s.end());
  }
  std::vector<int> extra;
  for (int e : all)
    if (!common.count(e)) extra.push_back(e);
  if (extra.size() != 4) throw Error(ErrorCode::NotQuadrilateral, "neighbourhood of " + x.to_string() + " spans " +
                                                                      std::to_string(extra.size()) + " indices, not 4");
  auto pair_of = [&](const std::set<int>& s) {
    std::vector<int> out_pair;
    for (int e : extra)
      if (s.count(e)) out_pair.push_back(e);
    return out_pair;
  };
  for (const auto& s : sets)
    if (s.size() != common.size() + 2 || pair_of(s).size() != 2)
      throw Error(ErrorCode::NotQuadrilateral, "neighbour labels are not in three-term position");
  const int a = extra[0], b = extra[1], c = extra[2], d = extra[3];
  auto px = pair_of(sx);
  std::vector<int> nu_pair;
  if (px == std::vector<int>{a, c}) {
    nu_pair = {b, d};
  } else if (px == std::vector<int>{b, d}) {
    nu_pair = {a, c};
  } else {
    throw Error(ErrorCode::NotQuadrilateral, x.to_string() + " is not a diagonal of its quadrilateral");
  }
  using Pair = std::vector<int>;
  auto pairs = [&](const std::vector<Partition>& ps) {
    std::set<Pair> out_pairs;
    for (const auto& p : ps) out_pairs.insert(pair_of(as_set(p)));
    return out_pairs;
  };
  std::set<Pair> opposite1{{a, b}, {c, d}}, opposite2{{b, c}, {a, d}};
  auto pin = pairs(in), pout = pairs(out);
  if (!((pin == opposite1 && pout == opposite2) || (pin == opposite2 && pout == opposite1)))
    throw Error(ErrorCode::NotQuadrilateral, "in- and out-neighbours of " + x.to_string() + " are not opposite sides");
  std::set<int> nu = common;
  nu.insert(nu_pair.begin(), nu_pair.end());
  std::vector<int> dec(nu.rbegin(), nu.rend());
  return partition_from_maya_elements(dec, floor);
}

}  // namespace

Partition square_move_label(const Seed& s, VarId v) {
  const ClusterVar& cv = s.var(v);
  if (cv.frozen) throw Error(ErrorCode::NotExchangeable, s.display_name(v) + " is frozen");
  if (!cv.label) throw Error(ErrorCode::NotQuadrilateral, s.display_name(v) + " carries no Plücker label");
  std::vector<Partition> in, out;
  for (const auto& [u, b] : s.neighbours(v)) {
    const auto& lab = s.var(u).label;
    if (!lab || std::abs(b) != 1)
      throw Error(ErrorCode::NotQuadrilateral, "neighbour " + s.display_name(u) + " of " + s.display_name(v) +
                                                   " is unlabelled or has multiplicity " + std::to_string(std::abs(b)));
    (b > 0 ? out : in).push_back(*lab);
  }
  return predict_square_move(*cv.label, in, out);
}

Seed square_move(const Seed& s, VarId v) {
  if (s.locked().count(v))
    throw Error(ErrorCode::WindowBoundary, "'" + s.display_name(v) + "' lies on the window boundary");
  Partition nu = square_move_label(s, v);
  Seed m = mutate(s, v);
  return m.with_label(m.at(s.index_of(v)).id, nu);
}

Seed mutate_label(const Seed& s, const Partition& label) {
  auto v = s.find_label(label);
  if (!v) throw Error(ErrorCode::InvalidArgument, "no vertex labelled " + label.to_string());
  try {
    return square_move(s, *v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotQuadrilateral) throw;
  }
  return mutate(s, *v);
}

Seed seed_by_labels(const Seed& s) {
  std::vector<ClusterVar> vars;
  std::unordered_map<VarId, VarId> rename;
  for (const auto& cv : s.vars()) {
    VarId id = var(s.display_name(cv.id));
    rename[cv.id] = id;
    vars.push_back({id, cv.frozen, cv.label, nullptr});
  }
  ExchangeMatrix b;
  for (const auto& cv : s.vars()) {
    if (cv.frozen) continue;
    b.ensure_row(rename[cv.id]);
    for (const auto& [u, val] : s.neighbours(cv.id)) b.set(rename[cv.id], rename.at(u), val);
  }
  std::set<VarId> locked;
  for (VarId v : s.locked()) locked.insert(rename.at(v));
  return Seed(std::move(vars), std::move(b)).with_locked(std::move(locked));
}

// ---------------------------------------------------------------- BFS over Plücker clusters

namespace {

// Dense labelled quiver used for cheap breadth-first search; algebra is replayed afterwards.
struct LabelledQuiver {
  std::vector<Partition> labels;
  std::vector<char> mutable_flag;
  std::vector<std::vector<int>> b;

  static LabelledQuiver from_seed(const Seed& s) {
    LabelledQuiver q;
    std::size_t n = s.size();
    q.b.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.at(i).label) throw Error(ErrorCode::InvalidArgument, "square-move search needs labelled seeds");
      q.labels.push_back(*s.at(i).label);
      q.mutable_flag.push_back(s.is_mutable(s.at(i).id) ? 1 : 0);
      for (std::size_t j = 0; j < n; ++j) q.b[i][j] = s.entry(s.at(i).id, s.at(j).id);
    }
    return q;
  }

  std::vector<Partition> key() const {
    auto k = labels;
    std::sort(k.begin(), k.end());
    return k;
  }

  std::optional<LabelledQuiver> square_move(std::size_t v) const {
    if (!mutable_flag[v]) return std::nullopt;
    std::vector<Partition> in, out;
    for (std::size_t u = 0; u < labels.size(); ++u) {
      int e = b[v][u];
      if (e == 0) continue;
      if (std::abs(e) != 1) return std::nullopt;
      (e > 0 ? out : in).push_back(labels[u]);
    }
    Partition nu;
    try {
      nu = predict_square_move(labels[v], in, out);
    } catch (const Error&) {
      return std::nullopt;
    }
    LabelledQuiver q = *this;
    q.labels[v] = nu;
    std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == v || j == v) {
          q.b[i][j] = -b[i][j];
        } else {
          q.b[i][j] = b[i][j] + (std::abs(b[i][v]) * b[v][j] + b[i][v] * std::abs(b[v][j])) / 2;
        }
      }
    }
    return q;
  }
};

struct SearchNode {
  LabelledQuiver quiver;
  std::size_t parent;
  Partition moved;  // label mutated to reach this node
  int depth;
};

}  // namespace

std::vector<std::vector<Partition>> square_move_bfs(const Seed& start, int max_moves) {
  std::vector<SearchNode> nodes{{LabelledQuiver::from_seed(start), 0, {}, 0}};
  std::set<std::vector<Partition>> seen{nodes[0].quiver.key()};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth == max_moves) continue;
    for (std::size_t v = 0; v < nodes[i].quiver.labels.size(); ++v) {
      auto next = nodes[i].quiver.square_move(v);
      if (!next) continue;
      auto key = next->key();
      if (!seen.insert(key).second) continue;
      nodes.push_back({std::move(*next), i, nodes[i].quiver.labels[v], nodes[i].depth + 1});
    }
  }
  std::vector<std::vector<Partition>> out;
  for (const auto& n : nodes) out.push_back(n.quiver.key());
  return out;
}

std::vector<Partition> square_move_path(const Seed& start, const Partition& target, std::size_t max_states) {
  std::vector<SearchNode> nodes{{LabelledQuiver::from_seed(start), 0, {}, 0}};
  std::set<std::vector<Partition>> seen{nodes[0].quiver.key()};
  auto holds = [&](const LabelledQuiver& q) {
    return std::find(q.labels.begin(), q.labels.end(), target) != q.labels.end();
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (holds(nodes[i].quiver)) {
      std::vector<Partition> path;
      for (std::size_t k = i; k != 0; k = nodes[k].parent) path.push_back(nodes[k].moved);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t v = 0; v < nodes[i].quiver.labels.size(); ++v) {
      auto next = nodes[i].quiver.square_move(v);
      if (!next) continue;
      if (!seen.insert(next->key()).second) continue;
      nodes.push_back({std::move(*next), i, nodes[i].quiver.labels[v], nodes[i].depth + 1});
      if (nodes.size() > max_states)
        throw Error(ErrorCode::SearchExhausted, "state bound reached before " + target.to_string() + " appeared");
    }
  }
  throw Error(ErrorCode::SearchExhausted, target.to_string() + " is not reachable by square moves");
}

}  // namespace indcluster
