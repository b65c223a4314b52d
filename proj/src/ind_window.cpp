#include "indcluster/ind_window.hpp"

#include <algorithm>
#include <set>

#include "indcluster/error.hpp"

namespace indcluster {

namespace {

int sign_of(int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

struct LevelWitness {
  bool ok = false;
  bool zero = false;
  VarId xk, yk;
  int entry = 0;
};

std::optional<VarId> unique_exchangeable_preimage(const SystemView& view, VarId x, int k, int bound) {
  auto px = view.preimages(x, k, bound);
  if (px.size() != 1 || !view.seed(k).is_exchangeable(px[0])) return std::nullopt;
  return px[0];
}

LevelWitness witness_at(const SystemView& view, VarId x, VarId y, int k, int bound) {
  LevelWitness w;
  auto xk = unique_exchangeable_preimage(view, x, k, bound);
  if (!xk) return w;
  w.xk = *xk;
  const Seed& s = view.seed(k);
  std::vector<VarId> nonzero;
  for (VarId cand : view.preimages(y, k, bound))
    if (s.entry(*xk, cand) != 0) nonzero.push_back(cand);
  if (nonzero.empty()) {
    w.ok = w.zero = true;
    return w;
  }
  if (nonzero.size() != 1) return w;
  w.ok = true;
  w.yk = nonzero[0];
  w.entry = s.entry(*xk, nonzero[0]);
  return w;
}

bool continues(const SystemView& view, const LevelWitness& lower, const LevelWitness& upper, int k) {
  if (!lower.ok || lower.zero != upper.zero) return false;
  auto same = [&](VarId a, VarId b) {
    auto img = view.image(k, a, k + 1);
    const auto* v = std::get_if<VarId>(&img);
    return v && *v == b;
  };
  if (!same(lower.xk, upper.xk)) return false;
  if (lower.zero) return true;
  return std::abs(lower.entry) == std::abs(upper.entry) && same(lower.yk, upper.yk);
}

// Certificate with witnesses per level; `entries` receives the raw level entries for sign alignment.
AttainmentCertificate certify(const SystemView& view, VarId x, VarId y, int bound, std::vector<int>* entries = nullptr) {
  AttainmentCertificate cert;
  cert.row = x;
  cert.col = y;
  int first = view.system().first_level();
  if (bound <= first) throw Error(ErrorCode::IndexOutOfRange, "probe bound must exceed the first level");
  std::vector<LevelWitness> run{witness_at(view, x, y, bound, bound)};
  if (!run[0].ok) return cert;
  for (int k = bound - 1; k >= first; --k) {
    LevelWitness w = witness_at(view, x, y, k, bound);
    if (!continues(view, w, run.back(), k)) break;
    run.push_back(w);
  }
  if (run.size() < 2) return cert;
  std::reverse(run.begin(), run.end());
  cert.attained_at = bound - static_cast<int>(run.size()) + 1;
  cert.status = run.back().zero ? AttainmentStatus::Zero : AttainmentStatus::Attained;
  cert.magnitude = std::abs(run.back().entry);
  cert.value = run.back().entry;
  for (const auto& w : run) {
    cert.witnesses.emplace_back(w.xk, w.zero ? VarId{} : w.yk);
    if (entries) entries->push_back(w.entry);
  }
  return cert;
}

IndSeedWindow build_window(const SystemView& view, const std::vector<VarId>& classes, int bound) {
  const Seed& top = view.seed(bound);
  std::set<VarId> in_window(classes.begin(), classes.end());
  if (in_window.size() != classes.size()) throw Error(ErrorCode::InvalidArgument, "classes must be distinct");
  for (VarId c : classes)
    if (!top.contains(c))
      throw Error(ErrorCode::InvalidArgument, "class '" + var_name(c) + "' has no representative at the bound");

  IndSeedWindow out;
  out.bound = bound;
  std::map<std::pair<VarId, VarId>, AttainmentCertificate> certs;
  std::map<std::pair<VarId, VarId>, std::vector<int>> level_entries;
  for (VarId x : classes) {
    if (!top.is_exchangeable(x)) continue;
    for (VarId y : classes) {
      if (y == x) continue;
      std::vector<int> entries;
      auto cert = certify(view, x, y, bound, &entries);
      if (cert.status == AttainmentStatus::UnstableUpToBound)
        throw Error(ErrorCode::UnstableWindow, "entry ('" + var_name(x) + "', '" + var_name(y) +
                                                   "') is not attained by level " + std::to_string(bound));
      if (cert.status == AttainmentStatus::Attained) {
        certs[{x, y}] = cert;
        level_entries[{x, y}] = entries;
      }
    }
  }

  // Components of the window through exchangeable classes.
  std::vector<ClusterVar> vars;
  for (VarId c : classes) vars.push_back({c, !top.is_exchangeable(c), top.var(c).label, nullptr});
  ExchangeMatrix magnitudes;
  for (const auto& [key, cert] : certs) magnitudes.set(key.first, key.second, cert.value);
  Seed raw(vars, magnitudes);
  auto comps = exchangeable_components(raw).components;

  ExchangeMatrix signed_matrix;
  for (const auto& comp : comps) {
    std::set<VarId> rows(comp.exchangeable.begin(), comp.exchangeable.end());
    std::optional<std::pair<VarId, VarId>> choice;
    for (const auto& [key, cert] : certs) {
      if (!rows.count(key.first)) continue;
      auto named = std::make_pair(var_name(key.first), var_name(key.second));
      if (!choice || named < std::make_pair(var_name(choice->first), var_name(choice->second))) choice = key;
    }
    if (!choice) continue;  // an exchangeable without neighbours: the sign is vacuous
    out.sign_choices.push_back({comp.exchangeable, choice->first, choice->second});
    const auto& ref = level_entries[*choice];
    int ref_level = certs[*choice].attained_at;
    int ref_sign_top = sign_of(ref.back());
    for (auto& [key, cert] : certs) {
      if (!rows.count(key.first)) continue;
      const auto& mine = level_entries[key];
      int mine_level = cert.attained_at;
      int product_top = sign_of(mine.back()) * ref_sign_top;
      int from = bound;
      for (int k = bound; k >= std::max(mine_level, ref_level); --k) {
        int pm = sign_of(mine[static_cast<std::size_t>(k - mine_level)]) *
                 sign_of(ref[static_cast<std::size_t>(k - ref_level)]);
        if (pm != product_top) break;
        from = k;
      }
      cert.aligned_from = from;
      cert.value = cert.magnitude * product_top;
      signed_matrix.set(key.first, key.second, cert.value);
    }
  }

  // Uniform attainment of the whole window and of each column.
  int first = view.system().first_level();
  auto rows_unique = [&](int k) {
    for (VarId x : classes)
      if (top.is_exchangeable(x) && !unique_exchangeable_preimage(view, x, k, bound)) return false;
    return true;
  };
  auto column_ok = [&](VarId y, int k) {
    std::vector<std::pair<VarId, int>> nbrs;
    for (VarId x : classes) {
      if (!top.is_exchangeable(x)) continue;
      int v = signed_matrix.get(x, y);
      if (v != 0) nbrs.emplace_back(x, std::abs(v));
    }
    if (nbrs.empty()) return true;
    std::vector<VarId> reps;
    for (const auto& [x, mag] : nbrs) {
      auto xk = unique_exchangeable_preimage(view, x, k, bound);
      if (!xk) return false;
      reps.push_back(*xk);
    }
    int matches = 0;
    for (VarId cand : view.preimages(y, k, bound)) {
      bool all = true;
      for (std::size_t i = 0; i < nbrs.size() && all; ++i)
        all = std::abs(view.seed(k).entry(reps[i], cand)) == nbrs[i].second;
      if (all) ++matches;
    }
    return matches == 1;
  };
  int window_level = bound;
  bool window_ok = true;
  for (int k = bound; k >= first; --k) {
    if (!rows_unique(k)) break;
    window_level = k;
  }
  window_ok = rows_unique(bound);
  for (VarId y : classes) {
    int level = bound + 1;
    for (int k = bound; k >= first; --k) {
      if (!column_ok(y, k)) break;
      level = k;
    }
    if (level > bound) {
      window_ok = false;
      continue;
    }
    out.column_uniform_level[y] = level;
    window_level = std::max(window_level, level);
  }
  if (window_ok) out.uniform_level = window_level;

  // Exchangeables with a neighbour outside the window at the bound refuse mutation.
  std::set<VarId> locked;
  for (VarId x : classes) {
    if (!top.is_exchangeable(x)) continue;
    for (const auto& [v, b] : top.neighbours(x))
      if (!in_window.count(v)) locked.insert(x);
  }
  out.window = Seed(vars, signed_matrix).with_locked(std::move(locked));
  for (auto& [key, cert] : certs) out.certificates.push_back(cert);
  return out;
}

// Levels from..bound of a system mutated slot-wise along a lifted sequence.
class MutatedSystem : public DirectedSystem {
 public:
  MutatedSystem(std::string name, int from, int bound, std::map<int, Seed> seeds,
                std::map<int, MeltingMorphismSpec> maps)
      : name_(std::move(name)), from_(from), bound_(bound), seeds_(std::move(seeds)), maps_(std::move(maps)) {}
  std::string name() const override { return name_; }
  int first_level() const override { return from_; }
  int probe_bound() const override { return bound_; }
  Seed seed_at(int n) const override {
    auto it = seeds_.find(n);
    if (it == seeds_.end()) throw Error(ErrorCode::IndexOutOfRange, "mutated system has no level " + std::to_string(n));
    return it->second;
  }
  MeltingMorphismSpec morphism_at(int n) const override {
    auto it = maps_.find(n);
    if (it == maps_.end()) throw Error(ErrorCode::IndexOutOfRange, "mutated system has no map at " + std::to_string(n));
    return it->second;
  }

 private:
  std::string name_;
  int from_, bound_;
  std::map<int, Seed> seeds_;
  std::map<int, MeltingMorphismSpec> maps_;
};

}  // namespace

AttainmentCertificate attained_entry(const DirectedSystem& sys, VarId x, VarId y, int bound) {
  SystemView view(sys);
  if (!view.seed(bound).contains(x) || !view.seed(bound).contains(y))
    throw Error(ErrorCode::IndexOutOfRange, "classes must have representatives at the bound");
  return certify(view, x, y, bound);
}

IndSeedWindow ind_seed_window(const DirectedSystem& sys, const std::vector<VarId>& classes, int bound) {
  SystemView view(sys);
  return build_window(view, classes, bound);
}

MutationCommuteReport verify_mutation_commutes(const DirectedSystem& sys, const std::vector<VarId>& classes,
                                               const std::vector<VarId>& seq, int bound) {
  SystemView view(sys);
  IndSeedWindow w = build_window(view, classes, bound);
  if (!w.uniform_level) throw Error(ErrorCode::LiftFailed, "the window is not uniformly attained by the bound");
  const int from = *w.uniform_level;
  if (from >= bound) throw Error(ErrorCode::LiftFailed, "uniform attainment leaves no level below the bound");

  MutationCommuteReport rep;
  rep.lift_from = from;
  // Direct route, remembering the window slot of every step.
  std::vector<std::size_t> slots;
  Seed direct = w.window;
  for (VarId v : seq) {
    slots.push_back(direct.index_of(v));
    direct = mutate(direct, v);
  }
  rep.direct = direct;
  std::set<std::size_t> mutated_slots(slots.begin(), slots.end());

  // Lifted route: level-k slot of each window slot through its unique exchangeable preimage.
  std::map<int, Seed> seeds;
  std::map<int, std::map<std::size_t, std::size_t>> level_slot;  // window slot -> level slot
  for (int k = from; k <= bound; ++k) {
    const Seed& base = view.seed(k);
    for (std::size_t p : mutated_slots) {
      auto pre = unique_exchangeable_preimage(view, classes[p], k, bound);
      if (!pre) throw Error(ErrorCode::LiftFailed, "'" + var_name(classes[p]) + "' has no unique exchangeable preimage at level " + std::to_string(k));
      level_slot[k][p] = base.index_of(*pre);
    }
    Seed cur = base;
    for (std::size_t p : slots) cur = mutate(cur, cur.at(level_slot[k][p]).id);
    seeds.emplace(k, std::move(cur));
  }
  std::map<int, MeltingMorphismSpec> maps;
  for (int k = from; k < bound; ++k) {
    const Seed& base = view.seed(k);
    const Seed& next_base = view.seed(k + 1);
    std::map<std::size_t, std::size_t> up;  // level-k slot -> level-(k+1) slot for mutated slots
    std::set<std::size_t> next_mutated;
    for (const auto& [p, q] : level_slot[k]) up[q] = level_slot[k + 1][p];
    for (const auto& [p, q] : level_slot[k + 1]) next_mutated.insert(q);
    MeltingMorphismSpec f;
    const auto& orig = view.morphism(k);
    for (std::size_t q = 0; q < base.size(); ++q) {
      VarId now = seeds[k].at(q).id;
      auto it = up.find(q);
      if (it != up.end()) {
        f.image[now] = seeds[k + 1].at(it->second).id;
        continue;
      }
      MorphismImage img = orig.image.at(base.at(q).id);
      if (const auto* t = std::get_if<VarId>(&img); t && next_mutated.count(next_base.index_of(*t)))
        throw Error(ErrorCode::LiftFailed, "'" + var_name(base.at(q).id) + "' merges into a mutated variable at level " +
                                               std::to_string(k + 1));
      f.image[now] = img;
    }
    maps.emplace(k, std::move(f));
  }

  std::vector<VarId> classes2 = classes;
  for (std::size_t p : mutated_slots) classes2[p] = seeds[bound].at(level_slot[bound][p]).id;
  MutatedSystem mutated(sys.name() + "-mutated", from, bound, seeds, maps);
  SystemView mview(mutated);
  IndSeedWindow w2 = build_window(mview, classes2, bound);
  rep.lifted = w2.window;

  VarMap phi;
  for (std::size_t p = 0; p < classes.size(); ++p) phi[direct.at(p).id] = classes2[p];
  auto sim = seeds_similar(direct, w2.window, phi);
  rep.similar = sim.has_value();
  if (sim) rep.signs = sim->signs;
  if (!rep.similar) rep.detail = "mutated window and window of the mutated system differ";

  rep.expressions_equal = true;
  for (std::size_t p : mutated_slots) {
    const LaurentPoly& top_expr = *seeds[bound].at(level_slot[bound][p]).expr;
    if (*direct.at(p).expr != top_expr) {
      rep.expressions_equal = false;
      rep.detail = "expression of slot " + var_name(classes[p]) + ": window gives " + lp_to_string(*direct.at(p).expr) +
                   ", bound level gives " + lp_to_string(top_expr);
      break;
    }
    for (int k = from; k < bound; ++k) {
      Substitution sub;
      for (const auto& cv : view.seed(k).vars()) {
        MorphismImage img = view.image(k, cv.id, bound);
        if (const auto* t = std::get_if<VarId>(&img)) {
          sub[cv.id] = LaurentPoly::variable(*t);
        } else {
          sub[cv.id] = LaurentPoly(std::get<long>(img));
        }
      }
      LaurentPoly pushed = lp_substitute(*seeds[k].at(level_slot[k][p]).expr, sub);
      if (pushed != top_expr) {
        rep.expressions_equal = false;
        rep.detail = "level " + std::to_string(k) + " expression of " + var_name(classes[p]) +
                     " does not push forward to the bound";
        break;
      }
    }
  }
  return rep;
}

}  // namespace indcluster
