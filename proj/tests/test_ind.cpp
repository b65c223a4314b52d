#include <cstdlib>
#include <functional>

#include "doctest.h"
#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"
#include "indcluster/ind_window.hpp"

using namespace indcluster;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

VarId d(const Partition& p) { return var(p.label_name()); }

std::vector<VarId> rect_classes(int h, int w) {
  std::vector<VarId> out{d(Partition{})};
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= w; ++j) out.push_back(d(Partition::rectangle(i, j)));
  return out;
}

std::vector<VarId> example_classes(int top, bool with_boundary_rows) {
  std::vector<VarId> out;
  for (int i = 1; i <= top; ++i) out.push_back(var("x_" + std::to_string(i)));
  for (int i = 1; i <= top; ++i) out.push_back(var("y_" + std::to_string(i)));
  for (int i = 1; i <= top; ++i) out.push_back(var("z_" + std::to_string(i)));
  (void)with_boundary_rows;
  return out;
}

}  // namespace

TEST_CASE("stable_class") {
  auto chain = grassmann_chain(5);
  auto r = stable_class(*chain, 0, d(Partition({1})), 5);
  CHECK(r.kind == StabilityKind::Stable);
  CHECK(r.trace.size() == 6);
  for (VarId v : r.trace) CHECK(v == d(Partition({1})));

  auto constant = constant_system(rect_seed(2, 2), 3);
  auto c = stable_class(*constant, 1, d(Partition({2})), 3);
  CHECK(c.kind == StabilityKind::Stable);
  CHECK(c.trace.front() == d(Partition({2})));

  auto ex = example_chain(6);
  auto s = stable_class(*ex, 2, var("s"), 6);
  CHECK(s.kind == StabilityKind::Specialized);
  CHECK(s.value == 1);
  CHECK(s.specialized_at == 3);

  CHECK(code_of([&] { stable_class(*chain, 6, d(Partition({1})), 5); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("directed systems consist of melting morphisms") {
  for (const auto& sys : {grassmann_chain(3), example_chain(3)}) {
    SystemView view(*sys);
    for (int n = 0; n < 2; ++n)
      CHECK(check_melting_morphism(view.morphism(n), view.seed(n), view.seed(n + 1), 1).passed());
  }
}

TEST_CASE("attained_entry") {
  auto chain = grassmann_chain(5);
  auto c = attained_entry(*chain, d(Partition({1})), d(Partition{}), 5);
  CHECK(c.status == AttainmentStatus::Attained);
  CHECK(c.magnitude == 1);
  CHECK(c.attained_at == 0);
  CHECK(c.witnesses.size() == 6);

  auto constant = constant_system(rect_seed(2, 3), 3);
  auto k = attained_entry(*constant, d(Partition({1})), d(Partition({2})), 3);
  CHECK(k.status == AttainmentStatus::Attained);
  CHECK(k.attained_at == 0);
  auto z = attained_entry(*constant, d(Partition({1})), d(Partition({3, 3})), 3);
  CHECK(z.status == AttainmentStatus::Zero);

  // The frozen v_i of level n all melt into x_{N}; the entry with x_{N-1} is certified only
  // from the level where x_N itself is present.
  auto ex = example_chain(6);
  auto xv = attained_entry(*ex, var("x_4"), var("x_5"), 6);
  CHECK(xv.status == AttainmentStatus::Attained);
  CHECK(xv.magnitude == 4);
  CHECK(xv.attained_at == 4);
  auto yz = attained_entry(*ex, var("y_3"), var("z_3"), 6);
  CHECK(yz.status == AttainmentStatus::Attained);
  CHECK(yz.attained_at == 2);
  REQUIRE(yz.witnesses.size() == 5);
  CHECK(yz.witnesses.front().second == var("z'_3"));
  CHECK(yz.witnesses[1].second == var("z_3"));
}

TEST_CASE("property: certified magnitudes reappear at every level of the run") {
  auto ex = example_chain(6);
  SystemView view(*ex);
  for (int i = 1; i <= 4; ++i)
    for (const char* row : {"x_", "y_"})
      for (const char* col : {"x_", "y_", "z_"}) {
        VarId x = var(row + std::to_string(i));
        for (int j = 1; j <= 4; ++j) {
          VarId y = var(col + std::to_string(j));
          if (x == y) continue;
          auto c = attained_entry(*ex, x, y, 6);
          if (c.status != AttainmentStatus::Attained) continue;
          for (int k = c.attained_at; k <= 6; ++k) {
            auto [xk, yk] = c.witnesses[static_cast<std::size_t>(k - c.attained_at)];
            CHECK(std::abs(view.seed(k).entry(xk, yk)) == c.magnitude);
          }
        }
      }
}

TEST_CASE("ind_seed_window: Grassmannian chain matches the infinite quiver") {
  auto chain = grassmann_chain(5);
  auto w = ind_seed_window(*chain, rect_classes(3, 3), 5);
  CHECK(seed_validate(w.window).valid());
  auto sim = seeds_strongly_similar(w.window, q_infty_window(3, 3));
  REQUIRE(sim.has_value());
  CHECK(sim->signs.size() == exchangeable_components(w.window).components.size());
  CHECK(w.window.locked() == q_infty_window(3, 3).locked());
  REQUIRE(w.uniform_level.has_value());
  for (const auto& c : w.certificates) CHECK(c.status == AttainmentStatus::Attained);
}

TEST_CASE("ind_seed_window: constant system") {
  Seed q = rect_seed(2, 2);
  auto sys = constant_system(q, 3);
  std::vector<VarId> classes = q.ids();
  auto w = ind_seed_window(*sys, classes, 3);
  auto sim = seeds_strongly_similar(w.window, q);
  REQUIRE(sim.has_value());
  CHECK(w.uniform_level == 0);
}

TEST_CASE("ind_seed_window: example system") {
  auto ex = example_chain(6);
  auto w = ind_seed_window(*ex, example_classes(4, true), 6);
  const Seed& s = w.window;
  auto x = [](int i) { return var("x_" + std::to_string(i)); };
  auto y = [](int i) { return var("y_" + std::to_string(i)); };
  auto z = [](int i) { return var("z_" + std::to_string(i)); };
  for (int i = 1; i <= 4; ++i) {
    CHECK(s.var(z(i)).frozen);
    CHECK(std::abs(s.entry(x(i), z(i))) == 1);
    CHECK(std::abs(s.entry(y(i), z(i))) == 1);
    if (i < 4) {
      CHECK(std::abs(s.entry(x(i), x(i + 1))) == i);
      CHECK(std::abs(s.entry(y(i), y(i + 1))) == 1);
    }
  }
  // Two components (x and y), each oriented by its lexicographically smallest entry.
  CHECK(w.sign_choices.size() == 2);
  for (int i = 1; i <= 3; ++i) {
    CHECK(s.entry(x(i), x(i + 1)) == i);
    CHECK(s.entry(y(i), y(i + 1)) == 1);
  }
  // (y_3, z_3): entry-wise from level 2, uniformly only from level 3.
  auto smaller = ind_seed_window(*ex, {x(1), x(2), x(3), y(1), y(2), y(3), z(1), z(2), z(3)}, 6);
  int entrywise = -1;
  for (const auto& c : smaller.certificates)
    if (c.row == y(3) && c.col == z(3)) entrywise = c.attained_at;
  CHECK(entrywise == 2);
  CHECK(smaller.column_uniform_level.at(z(3)) == 3);
  REQUIRE(smaller.uniform_level.has_value());
  CHECK(*smaller.uniform_level >= 3);
  CHECK(*smaller.uniform_level < 6);
}

TEST_CASE("property: flipping the sign choice negates exactly one component") {
  auto ex = example_chain(6);
  auto w = ind_seed_window(*ex, example_classes(3, false), 6);
  for (const auto& choice : w.sign_choices) {
    ExchangeMatrix flipped;
    std::set<VarId> comp(choice.component.begin(), choice.component.end());
    for (const auto& [r, row] : w.window.matrix().rows())
      for (const auto& [c, b] : row) flipped.set(r, c, comp.count(r) ? -b : b);
    Seed other(w.window.vars(), flipped);
    auto sim = seeds_strongly_similar(w.window, other);
    REQUIRE(sim.has_value());
    int negated = 0;
    for (int s : sim->signs) negated += s == -1 ? 1 : 0;
    CHECK(negated == 1);
  }
}

TEST_CASE("property: enlarging the class set keeps certified entries") {
  auto chain = grassmann_chain(5);
  auto small = ind_seed_window(*chain, rect_classes(2, 2), 5);
  auto big = ind_seed_window(*chain, rect_classes(3, 3), 5);
  for (const auto& c : small.certificates) {
    CHECK(std::abs(big.window.entry(c.row, c.col)) == c.magnitude);
    CHECK(std::abs(c.value) == c.magnitude);
  }
}

TEST_CASE("ind_seed_window reports unstable entries") {
  // Below the bound x_3 has several frozen preimages, so (x_2, x_3) is seen on one level only.
  auto ex = example_chain(2);
  CHECK(code_of([&] { ind_seed_window(*ex, {var("x_2"), var("x_3")}, 2); }) == ErrorCode::UnstableWindow);
  CHECK(code_of([&] { ind_seed_window(*ex, {var("x_1"), var("z_1")}, 0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("verify_mutation_commutes") {
  auto chain = grassmann_chain(5);
  auto classes = rect_classes(3, 3);
  auto empty = verify_mutation_commutes(*chain, classes, {}, 5);
  CHECK(empty.passed());
  auto kp = verify_mutation_commutes(*chain, classes, {d(Partition({1}))}, 5);
  CHECK(kp.passed());
  std::size_t slot = 1;
  CHECK(*kp.direct.at(slot).expr == lp_parse("(d[2]*d[1,1] + d[]*d[2,2]) / d[1]"));
  auto two = verify_mutation_commutes(*chain, classes, {d(Partition({1})), d(Partition({2}))}, 5);
  CHECK(two.passed());

  auto ex = example_chain(6);
  auto exr = verify_mutation_commutes(*ex, example_classes(4, true), {var("x_2"), var("y_3")}, 6);
  CHECK(exr.passed());
  CHECK(code_of([&] { verify_mutation_commutes(*chain, classes, {d(Partition::rectangle(3, 3))}, 5); }) ==
        ErrorCode::WindowBoundary);
}
