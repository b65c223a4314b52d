#include "indcluster/directed_system.hpp"

#include <fstream>

#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"

namespace indcluster {

namespace {

class GrassmannChain : public DirectedSystem {
 public:
  explicit GrassmannChain(int bound) : bound_(bound) {}
  std::string name() const override { return "grass-chain"; }
  int probe_bound() const override { return bound_; }
  Seed seed_at(int n) const override { return rect_seed(n + 2, n + 2); }
  MeltingMorphismSpec morphism_at(int n) const override { return r_map(n + 2, n + 2, n + 3, n + 3); }

 private:
  int bound_;
};

std::string indexed(const std::string& stem, int i) { return stem + "_" + std::to_string(i); }

class ExampleChain : public DirectedSystem {
 public:
  explicit ExampleChain(int bound) : bound_(bound) {}
  std::string name() const override { return "xyz-chain"; }
  int probe_bound() const override { return bound_; }

  Seed seed_at(int n) const override {
    const int top = n + 2;
    std::vector<std::string> ex, frozen;
    std::vector<QuiverArrow> arrows;
    for (int i = 1; i <= top - 1; ++i) ex.push_back(indexed("x", i));
    for (int i = 1; i <= top - 1; ++i) ex.push_back(indexed("y", i));
    for (int i = 1; i <= top - 1; ++i) frozen.push_back(indexed("z", i));
    frozen.push_back(indexed("z'", top - 1));
    frozen.push_back("s");
    for (int i = 1; i <= top - 1; ++i) frozen.push_back(indexed("v", i));
    frozen.push_back(indexed("y", top));
    for (int i = 1; i <= top - 2; ++i) arrows.push_back({indexed("x", i), indexed("x", i + 1), i});
    for (int k = 1; k <= top - 1; ++k) arrows.push_back({indexed("x", top - 1), indexed("v", k), 1});
    arrows.push_back({indexed("x", top - 1), "s", 1});
    for (int i = 1; i <= top - 1; ++i) arrows.push_back({indexed("x", i), indexed("z", i), 1});
    for (int i = 1; i <= top - 2; ++i) arrows.push_back({indexed("y", i), indexed("z", i), 1});
    arrows.push_back({indexed("y", top - 1), indexed("z'", top - 1), 1});
    for (int i = 1; i <= top - 1; ++i) arrows.push_back({indexed("y", i), indexed("y", i + 1), 1});
    return seed_from_quiver(ex, frozen, arrows);
  }

  MeltingMorphismSpec morphism_at(int n) const override {
    const int top = n + 2;
    MeltingMorphismSpec f;
    auto same = [&](const std::string& nm) { f.image[var(nm)] = var(nm); };
    for (int i = 1; i <= top - 1; ++i) {
      same(indexed("x", i));
      same(indexed("z", i));
      f.image[var(indexed("v", i))] = var(indexed("x", top));
    }
    for (int i = 1; i <= top; ++i) same(indexed("y", i));
    f.image[var(indexed("z'", top - 1))] = var(indexed("z", top - 1));
    f.image[var("s")] = 1L;
    return f;
  }

 private:
  int bound_;
};

class ConstantSystem : public DirectedSystem {
 public:
  ConstantSystem(Seed s, int bound) : seed_(std::move(s)), bound_(bound) {}
  std::string name() const override { return "constant"; }
  int probe_bound() const override { return bound_; }
  Seed seed_at(int) const override { return seed_; }
  MeltingMorphismSpec morphism_at(int) const override { return MeltingMorphismSpec::identity(seed_); }

 private:
  Seed seed_;
  int bound_;
};

}  // namespace

std::unique_ptr<DirectedSystem> grassmann_chain(int probe_bound) { return std::make_unique<GrassmannChain>(probe_bound); }
std::unique_ptr<DirectedSystem> example_chain(int probe_bound) { return std::make_unique<ExampleChain>(probe_bound); }
std::unique_ptr<DirectedSystem> constant_system(Seed seed, int probe_bound) {
  return std::make_unique<ConstantSystem>(std::move(seed), probe_bound);
}

std::unique_ptr<DirectedSystem> system_by_name(const std::string& spec, std::optional<int> probe_bound) {
  if (spec == "grass-chain") return grassmann_chain(probe_bound.value_or(5));
  if (spec == "xyz-chain") return example_chain(probe_bound.value_or(6));
  const std::string prefix = "constant:";
  if (spec.rfind(prefix, 0) == 0) {
    std::ifstream in(spec.substr(prefix.size()));
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read seed file '" + spec.substr(prefix.size()) + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return constant_system(seed_from_json(j), probe_bound.value_or(3));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown system '" + spec + "'");
}

void SystemView::check_level(int n) const {
  if (n < sys_.first_level())
    throw Error(ErrorCode::IndexOutOfRange, "level " + std::to_string(n) + " precedes the first level " +
                                                std::to_string(sys_.first_level()));
}

const Seed& SystemView::seed(int n) const {
  check_level(n);
  auto it = seeds_.find(n);
  if (it == seeds_.end()) it = seeds_.emplace(n, sys_.seed_at(n)).first;
  return it->second;
}

const MeltingMorphismSpec& SystemView::morphism(int n) const {
  check_level(n);
  auto it = morphisms_.find(n);
  if (it == morphisms_.end()) it = morphisms_.emplace(n, sys_.morphism_at(n)).first;
  return it->second;
}

MorphismImage SystemView::image(int from, VarId v, int to) const {
  if (to < from) throw Error(ErrorCode::IndexOutOfRange, "images only go forward");
  if (from == to) return v;
  auto key = std::make_pair(from, to);
  auto it = composite_.find(key);
  if (it == composite_.end()) {
    std::unordered_map<VarId, MorphismImage> table;
    const auto& f = morphism(from);
    for (const auto& cv : seed(from).vars()) {
      auto img = f.image.find(cv.id);
      if (img == f.image.end())
        throw Error(ErrorCode::InvalidArgument, "morphism at level " + std::to_string(from) + " misses '" +
                                                    var_name(cv.id) + "'");
      if (const auto* w = std::get_if<VarId>(&img->second)) {
        table[cv.id] = image(from + 1, *w, to);
      } else {
        table[cv.id] = img->second;
      }
    }
    it = composite_.emplace(key, std::move(table)).first;
  }
  auto found = it->second.find(v);
  if (found == it->second.end())
    throw Error(ErrorCode::InvalidArgument, "'" + var_name(v) + "' is not in the seed at level " + std::to_string(from));
  return found->second;
}

std::vector<VarId> SystemView::preimages(VarId c, int level, int to) const {
  std::vector<VarId> out;
  for (const auto& cv : seed(level).vars()) {
    auto img = image(level, cv.id, to);
    if (const auto* w = std::get_if<VarId>(&img); w && *w == c) out.push_back(cv.id);
  }
  return out;
}

StabilityReport stable_class(const DirectedSystem& sys, int n, VarId x, int bound) {
  SystemView view(sys);
  if (n > bound) throw Error(ErrorCode::IndexOutOfRange, "level beyond the probe bound");
  view.check_level(n);
  if (!view.seed(n).contains(x))
    throw Error(ErrorCode::IndexOutOfRange, "'" + var_name(x) + "' is not in the seed at level " + std::to_string(n));
  StabilityReport rep;
  VarId cur = x;
  rep.trace.push_back(cur);
  for (int k = n; k < bound; ++k) {
    auto img = view.image(k, cur, k + 1);
    if (const auto* c = std::get_if<long>(&img)) {
      rep.kind = StabilityKind::Specialized;
      rep.value = *c;
      rep.specialized_at = k + 1;
      return rep;
    }
    cur = std::get<VarId>(img);
    if (!view.seed(k + 1).contains(cur)) {
      rep.kind = StabilityKind::UnstableUpToBound;
      return rep;
    }
    rep.trace.push_back(cur);
  }
  return rep;
}

}  // namespace indcluster
