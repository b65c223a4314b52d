#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "indcluster/laurent.hpp"
#include "indcluster/partition.hpp"
#include "indcluster/registry.hpp"

namespace indcluster {

struct ClusterVar {
  VarId id;
  bool frozen = false;
  std::optional<Partition> label;
  std::shared_ptr<const LaurentPoly> expr;  // in the initial variables of the seed's origin
};

// Sparse rows keyed by variable; in a valid seed the rows are exactly the exchangeable variables.
class ExchangeMatrix {
 public:
  using Row = std::map<VarId, int>;

  int get(VarId row, VarId col) const;
  void set(VarId row, VarId col, int value);  // value 0 erases
  void add(VarId row, VarId col, int delta) { set(row, col, get(row, col) + delta); }
  const Row& row(VarId r) const;
  bool has_row(VarId r) const { return rows_.count(r) != 0; }
  void ensure_row(VarId r) { rows_[r]; }
  const std::map<VarId, Row>& rows() const { return rows_; }
  bool operator==(const ExchangeMatrix&) const = default;

 private:
  std::map<VarId, Row> rows_;
};

// Immutable once built; mutation returns a new seed.
class Seed {
 public:
  Seed() = default;
  // Expressions default to the variables themselves; ex rows are created for every exchangeable.
  Seed(std::vector<ClusterVar> vars, ExchangeMatrix matrix);

  const std::vector<ClusterVar>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool contains(VarId v) const { return index_.count(v) != 0; }
  std::size_t index_of(VarId v) const;
  const ClusterVar& var(VarId v) const { return vars_[index_of(v)]; }
  const ClusterVar& at(std::size_t slot) const { return vars_[slot]; }
  const LaurentPoly& expr(VarId v) const { return *var(v).expr; }
  bool is_exchangeable(VarId v) const;
  std::vector<VarId> exchangeables() const;
  std::vector<VarId> ids() const;

  const ExchangeMatrix& matrix() const { return matrix_; }
  // b_uv for u exchangeable; -b_vu for u frozen and v exchangeable; 0 between frozen variables.
  int entry(VarId u, VarId v) const;
  // Nonzero entries of the row of an exchangeable variable.
  const ExchangeMatrix::Row& neighbours(VarId x) const { return matrix_.row(x); }

  // Variables refused by mutate (window boundary); they stay exchangeable in the matrix.
  const std::set<VarId>& locked() const { return locked_; }
  bool is_mutable(VarId v) const { return is_exchangeable(v) && !locked_.count(v); }
  Seed with_locked(std::set<VarId> locked) const;
  Seed with_label(VarId v, std::optional<Partition> label) const;
  Seed with_history(std::vector<VarId> history) const;

  // Mutated variables in order of application.
  const std::vector<VarId>& history() const { return history_; }

  // Label name if labelled, registry name otherwise.
  std::string display_name(VarId v) const;
  VarNamer namer() const;
  // Finds a variable by display name or registry name.
  std::optional<VarId> find(const std::string& name) const;
  std::optional<VarId> find_label(const Partition& p) const;

 private:
  friend Seed mutate(const Seed& s, VarId x);
  void reindex();

  std::vector<ClusterVar> vars_;
  std::unordered_map<VarId, std::size_t> index_;
  ExchangeMatrix matrix_;
  std::set<VarId> locked_;
  std::vector<VarId> history_;
};

// Convenience for building seeds by hand: names are interned, arrows are (tail, head, multiplicity).
struct QuiverArrow {
  std::string tail, head;
  int multiplicity = 1;
};
Seed seed_from_quiver(const std::vector<std::string>& exchangeable, const std::vector<std::string>& frozen,
                      const std::vector<QuiverArrow>& arrows);

struct Violation {
  std::string kind;  // "not-skew-symmetric", "frozen-frozen-entry", "dangling-id", ...
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool skew_symmetric = true;
  bool valid() const { return violations.empty(); }
};

ValidationReport seed_validate(const Seed& s);

struct ExchangeRelation {
  VarId old_var, new_var;
  std::vector<std::pair<VarId, int>> positive;  // b_xu > 0
  std::vector<std::pair<VarId, int>> negative;  // b_xv < 0, exponent -b_xv
};

ExchangeRelation exchange_relation(const Seed& before, VarId x, VarId new_var);
// "new*old = prod + prod" using the display names of the mutated seed.
std::string exchange_relation_string(const ExchangeRelation& rel, const Seed& before, const Seed& after);

// NotExchangeable if x is frozen or absent, WindowBoundary if x is locked.
Seed mutate(const Seed& s, VarId x);
// NotExchangeable naming the failing step (0-based) if a step is not mutable.
Seed mutate_seq(const Seed& s, const std::vector<VarId>& seq);

struct Component {
  std::vector<VarId> exchangeable;
  std::vector<VarId> vars;  // exchangeables plus their frozen neighbours, sorted
};

struct ComponentDecomposition {
  std::vector<Component> components;
  std::vector<VarId> isolated;
};

ComponentDecomposition exchangeable_components(const Seed& s);
// Keeps the listed variables, the rows of the exchangeable ones and entries among them.
Seed restrict_seed(const Seed& s, const std::vector<VarId>& keep);

using VarMap = std::unordered_map<VarId, VarId>;

struct SimilarityWitness {
  VarMap phi;
  std::vector<Component> components;  // of the first seed
  std::vector<int> signs;             // one per component
  bool strong() const;                // phi is the identity
};

constexpr std::size_t kSimilaritySearchBound = 12;

// Verifies phi when given; otherwise searches (SearchTooLarge above the bound).
std::optional<SimilarityWitness> seeds_similar(const Seed& a, const Seed& b,
                                               const std::optional<VarMap>& phi = std::nullopt);
std::optional<SimilarityWitness> seeds_strongly_similar(const Seed& a, const Seed& b);

// Marks the listed variables frozen, dropping their rows and every entry between frozen variables.
Seed freeze_vars(const Seed& s, const std::set<VarId>& to_freeze);

// Positional comparison of expressions, matrices and flags; names may differ.
bool seeds_equal_up_to_renaming(const Seed& a, const Seed& b);

// DOT digraph, frozen vertices boxed, multiplicities as labels. NotSkewSymmetric if needed.
std::string quiver_to_dot(const Seed& s);

nlohmann::json seed_to_json(const Seed& s);
Seed seed_from_json(const nlohmann::json& j);

}  // namespace indcluster
