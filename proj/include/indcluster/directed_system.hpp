#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indcluster/morphism.hpp"
#include "indcluster/seed.hpp"

namespace indcluster {

// Chain of finite seeds with melting morphisms seed_at(n) -> seed_at(n+1) for n >= first_level().
class DirectedSystem {
 public:
  virtual ~DirectedSystem() = default;
  virtual std::string name() const = 0;
  virtual int first_level() const { return 0; }
  virtual int probe_bound() const = 0;
  virtual Seed seed_at(int n) const = 0;
  virtual MeltingMorphismSpec morphism_at(int n) const = 0;
};

// seed_at(n) = rect_seed(n+2, n+2) with the label-preserving r-maps.
std::unique_ptr<DirectedSystem> grassmann_chain(int probe_bound = 5);

// Level n is the seed with ordered chain x_1 -> ... -> x_{N-1} (multiplicities 1, ..., N-2), N = n + 2,
// whose last exchangeable also points at frozen v_1, ..., v_{N-1} and s; v_i melt into x_N, s
// specialises to 1, and z'_{N-1} merges into z_{N-1}.
std::unique_ptr<DirectedSystem> example_chain(int probe_bound = 6);

// The same seed at every level, joined by identities.
std::unique_ptr<DirectedSystem> constant_system(Seed seed, int probe_bound = 3);

// "grass-chain", "xyz-chain", "constant:<seed.json>"
std::unique_ptr<DirectedSystem> system_by_name(const std::string& spec, std::optional<int> probe_bound = std::nullopt);

// Memoizes seeds and composite images f_{k,K}.
class SystemView {
 public:
  explicit SystemView(const DirectedSystem& sys) : sys_(sys) {}

  const DirectedSystem& system() const { return sys_; }
  const Seed& seed(int n) const;
  const MeltingMorphismSpec& morphism(int n) const;
  // f_{from,to}(v); v must belong to seed(from).
  MorphismImage image(int from, VarId v, int to) const;
  // Variables of seed(level) whose image at level `to` is the variable c.
  std::vector<VarId> preimages(VarId c, int level, int to) const;
  void check_level(int n) const;

 private:
  const DirectedSystem& sys_;
  mutable std::map<int, Seed> seeds_;
  mutable std::map<int, MeltingMorphismSpec> morphisms_;
  mutable std::map<std::pair<int, int>, std::unordered_map<VarId, MorphismImage>> composite_;
};

enum class StabilityKind { Stable, Specialized, UnstableUpToBound };

struct StabilityReport {
  StabilityKind kind = StabilityKind::Stable;
  std::vector<VarId> trace;  // images at levels n, n+1, ... while they are variables
  long value = 0;            // integer image when Specialized
  int specialized_at = -1;
};

// IndexOutOfRange if n is below the first level or beyond the bound.
StabilityReport stable_class(const DirectedSystem& sys, int n, VarId x, int bound);

}  // namespace indcluster
