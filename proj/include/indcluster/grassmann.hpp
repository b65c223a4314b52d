#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "indcluster/morphism.hpp"
#include "indcluster/partition.hpp"
#include "indcluster/seed.hpp"

namespace indcluster {

// Rectangle seed of Gr(m, m+n): vertices i x j (1 <= i <= m, 1 <= j <= n) and the empty partition.
// Frozen: the empty partition, m x j and i x n. Degenerate boxes (m = 1 or n = 1) are all frozen.
Seed rect_seed(int rows, int cols);

// Rectangles inside max_h x max_w plus the frozen empty partition. Vertices whose neighbourhood in
// the infinite quiver leaves the window (i == max_h or j == max_w) are locked.
Seed q_infty_window(int max_h, int max_w);

// Frobenius label (a, a-1, ..., a-k | b, b-1, ..., b-k); k = -1 gives the empty partition.
Partition quad_label(int a, int b, int k);

// Quadrilateral quiver of Gr(m, 2m): every exchangeable vertex has two in- and two out-arrows.
Seed quad_quiver(int m);

// d_lambda -> d_lambda from Q_{m,n} into Q_{m',n'}; BoxShrinks if either side shrinks.
MeltingMorphismSpec r_map(int rows, int cols, int rows2, int cols2);

// No alternation a < b < c < d between the two difference sets of the Maya sets.
bool weakly_separated(const Partition& a, const Partition& b);

// New label of the 4-valent vertex v under a three-term Plücker exchange; NotQuadrilateral otherwise.
Partition square_move_label(const Seed& s, VarId v);
// mutate() followed by labelling the new variable with square_move_label.
Seed square_move(const Seed& s, VarId v);
// Mutates the vertex carrying the label; labels the result when it is a square move.
Seed mutate_label(const Seed& s, const Partition& label);
// Fresh initial seed on the label names (d[...]) with the same matrix; drops expressions.
Seed seed_by_labels(const Seed& s);

// ---------------------------------------------------------------- quadratic relations

struct RelationTerm {
  int coeff = 1;
  Partition first, second;  // first >= second
  bool operator==(const RelationTerm&) const = default;
};

// sum coeff * d_first * d_second = 0, normalized: the term holding the lexicographically largest
// label is positive; terms sorted by decreasing labels.
struct QuadraticRelation {
  std::vector<RelationTerm> terms;
  bool operator==(const QuadraticRelation&) const = default;
  bool empty() const { return terms.empty(); }
};

QuadraticRelation normalize_relation(std::vector<RelationTerm> terms);
// sum_l (-1)^l d_{I, j_l} d_{J \ j_l} with antisymmetric index tuples, entries >= -m.
QuadraticRelation pluecker_relation(int m, const std::vector<int>& I, const std::vector<int>& J);
QuadraticRelation hook_relation(int a, int b);
// Diagonal exchange through (k^k); k = 0 is the KP relation, which is also the k = 1 instance.
QuadraticRelation diag_relation(int k);
QuadraticRelation kp_relation();

std::string relation_to_string(const QuadraticRelation& r);
Rational relation_residual(const QuadraticRelation& r, const std::function<Rational(const Partition&)>& value);
nlohmann::json relation_to_json(const QuadraticRelation& r);

// ---------------------------------------------------------------- minors

using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix a);
std::size_t matrix_rank(Matrix a);

// Plücker coordinates of the row space of an m x (m+n) matrix, column c carrying index c - m.
class MinorsOracle {
 public:
  MinorsOracle(int rows, int cols, Matrix matrix);
  Rational operator()(const Partition& p) const;  // 0 outside the box
  // Values for every labelled variable of s.
  Assignment assignment(const Seed& s) const;
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  int rows_, cols_;
  Matrix matrix_;
};

MinorsOracle minors_oracle(int rows, int cols, const Matrix& m);
Matrix random_matrix(int rows, int total_cols, std::mt19937_64& rng, long bound = 1000000);
// Minor of the generic matrix with entries M[i,j] (0-based), as a polynomial.
LaurentPoly symbolic_minor(const Partition& p, int rows, int cols);

// ---------------------------------------------------------------- Plücker clusters

// Label sets of all seeds reached by at most max_moves square moves, as sorted label lists.
std::vector<std::vector<Partition>> square_move_bfs(const Seed& start, int max_moves);

// Labels to mutate, in order, to reach a seed holding target; SearchExhausted otherwise.
std::vector<Partition> square_move_path(const Seed& start, const Partition& target,
                                        std::size_t max_states = 200000);

struct LaurentOptions {
  std::uint64_t rng_seed = 1;
  int verify_points = 3;
  bool exact = false;  // symbolic verification, only for m + n <= 6
  std::size_t max_states = 200000;
};

struct LaurentExpansion {
  Partition target;
  int rows = 0, cols = 0;
  LaurentPoly poly;                 // in the rectangle variables d[...]
  std::vector<Partition> path;      // labels mutated from rect_seed
  int points_verified = 0;
  bool oracle_ok = false;
  bool exact_checked = false;
  bool exact_ok = false;
  bool verified() const { return oracle_ok && (!exact_checked || exact_ok); }
};

// Expansion of d_lambda in the rectangle cluster of Gr(m, m+n). DoesNotFitBox, SearchExhausted.
LaurentExpansion laurent_expansion(const Partition& p, int rows, int cols, const LaurentOptions& opts = {});

}  // namespace indcluster
