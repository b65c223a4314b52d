#include <random>
#include <regex>

#include "doctest.h"
#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"
#include "indcluster/morphism.hpp"
#include "indcluster/seed.hpp"

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

VarId label(const Seed& s, const char* text) { return *s.find_label(parse_partition(text)); }

// Random skew-symmetric seed: 2..5 exchangeables, 0..2 frozen, entries in [-max_entry, max_entry].
Seed random_seed(std::mt19937_64& rng, int serial, int max_entry = 2) {
  std::uniform_int_distribution<int> nex(2, 5), nfr(0, 2), entry(-max_entry, max_entry);
  int e = nex(rng), f = nfr(rng);
  std::vector<ClusterVar> vars;
  std::string tag = "rs" + std::to_string(serial) + "_";
  for (int i = 0; i < e; ++i) vars.push_back({var(tag + "x" + std::to_string(i)), false, std::nullopt, nullptr});
  for (int i = 0; i < f; ++i) vars.push_back({var(tag + "f" + std::to_string(i)), true, std::nullopt, nullptr});
  ExchangeMatrix m;
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e + f; ++j) {
      int b = entry(rng);
      m.set(vars[i].id, vars[j].id, b);
      if (j < e) m.set(vars[j].id, vars[i].id, -b);
    }
  return Seed(vars, m);
}

bool ex_part_skew_symmetric(const Seed& s) {
  for (VarId u : s.exchangeables())
    for (VarId v : s.exchangeables())
      if (s.entry(u, v) != -s.entry(v, u)) return false;
  return true;
}

// The 12-vertex example quiver with frozen x2, x4, x9, x11, x12.
Seed twelve_vertex_seed() {
  return seed_from_quiver({"t_x1", "t_x3", "t_x5", "t_x6", "t_x7", "t_x8", "t_x10"},
                          {"t_x2", "t_x4", "t_x9", "t_x11", "t_x12"},
                          {{"t_x1", "t_x2"}, {"t_x1", "t_x3"}, {"t_x1", "t_x4"}, {"t_x2", "t_x3", 2},
                           {"t_x3", "t_x4"}, {"t_x2", "t_x5"}, {"t_x4", "t_x5"}, {"t_x5", "t_x6"},
                           {"t_x2", "t_x7"}, {"t_x7", "t_x8"}, {"t_x9", "t_x10"}, {"t_x10", "t_x11"}});
}

}  // namespace

TEST_CASE("seed_validate") {
  CHECK(seed_validate(rect_seed(3, 3)).valid());

  VarId u = var("sv_u"), v = var("sv_v"), f = var("sv_f"), g = var("sv_g");
  ExchangeMatrix sym;
  sym.set(u, v, 1);
  sym.set(v, u, 1);
  auto r1 = seed_validate(Seed({{u, false, {}, nullptr}, {v, false, {}, nullptr}}, sym));
  CHECK_FALSE(r1.valid());
  CHECK_FALSE(r1.skew_symmetric);

  ExchangeMatrix ff;
  ff.set(u, f, 1);
  ff.set(f, g, 1);
  auto r2 = seed_validate(Seed({{u, false, {}, nullptr}, {f, true, {}, nullptr}, {g, true, {}, nullptr}}, ff));
  CHECK_FALSE(r2.valid());
  bool saw = false;
  for (const auto& viol : r2.violations) saw |= viol.kind == "frozen-frozen-entry";
  CHECK(saw);
}

TEST_CASE("mutate: KP exchange on the 2 x 2 rectangle seed") {
  Seed q = rect_seed(2, 2);
  VarId one = label(q, "(1)");
  Seed m = mutate(q, one);
  const LaurentPoly& expr = m.at(q.index_of(one)).expr ? *m.at(q.index_of(one)).expr : LaurentPoly();
  CHECK(expr == lp_parse("(d[2]*d[1,1] + d[]*d[2,2]) / d[1]"));
  auto rel = exchange_relation(q, one, m.at(q.index_of(one)).id);
  CHECK(rel.positive.size() == 2);
  CHECK(rel.negative.size() == 2);
}

TEST_CASE("mutate: two-vertex seed") {
  Seed s = seed_from_quiver({"tv_x1", "tv_x2"}, {}, {{"tv_x1", "tv_x2"}});
  Seed m = mutate(s, var("tv_x1"));
  CHECK(*m.at(0).expr == lp_parse("(tv_x2 + 1) / tv_x1"));
  CHECK(m.entry(m.at(0).id, var("tv_x2")) == -1);
  CHECK(m.entry(var("tv_x2"), m.at(0).id) == 1);
}

TEST_CASE("mutate refuses frozen and absent variables") {
  Seed q = rect_seed(2, 2);
  CHECK(code_of([&] { mutate(q, label(q, "(2,2)")); }) == ErrorCode::NotExchangeable);
  CHECK(code_of([&] { mutate(q, var("not_in_seed")); }) == ErrorCode::NotExchangeable);
  Seed w = q_infty_window(2, 2);
  CHECK(code_of([&] { mutate(w, label(w, "(2,2)")); }) == ErrorCode::WindowBoundary);
}

TEST_CASE("property: mutation is an involution on random seeds") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Seed s = random_seed(rng, trial);
    auto ex = s.exchangeables();
    VarId x = ex[rng() % ex.size()];
    std::size_t slot = s.index_of(x);
    Seed once = mutate(s, x);
    Seed twice = mutate(once, once.at(slot).id);
    CHECK(*twice.at(slot).expr == LaurentPoly::variable(x));
    CHECK(seeds_equal_up_to_renaming(twice, s));
  }
}

TEST_CASE("property: matrix mutation preserves skew-symmetry and the Laurent phenomenon") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    // Unit entries keep the expressions small enough to expand exactly.
    Seed s = random_seed(rng, 100 + trial, 1);
    std::set<VarId> initial_ex;
    for (VarId v : s.exchangeables()) initial_ex.insert(v);
    Seed cur = s;
    for (int step = 0; step < 5; ++step) {
      std::vector<std::size_t> slots;
      for (std::size_t p = 0; p < cur.size(); ++p)
        if (cur.is_exchangeable(cur.at(p).id)) slots.push_back(p);
      cur = mutate(cur, cur.at(slots[rng() % slots.size()]).id);
      CHECK(ex_part_skew_symmetric(cur));
      CHECK(seed_validate(cur).valid());
      for (const auto& cv : cur.vars()) {
        Monomial den = cv.expr->denominator();
        for (const auto& [v, e] : den.factors()) CHECK(initial_ex.count(v) == 1);
      }
    }
  }
}

TEST_CASE("mutate_seq") {
  Seed q = rect_seed(2, 2);
  CHECK(seeds_equal_up_to_renaming(mutate_seq(q, {}), q));
  Seed once = mutate(q, label(q, "(1)"));
  Seed back = mutate_seq(q, {label(q, "(1)"), once.at(q.index_of(label(q, "(1)"))).id});
  CHECK(seeds_equal_up_to_renaming(back, q));
  try {
    mutate_seq(q, {label(q, "(1)"), label(q, "(2)")});
    FAIL("expected NotExchangeable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotExchangeable);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("exchangeable_components") {
  auto dec = exchangeable_components(twelve_vertex_seed());
  CHECK(dec.components.size() == 4);
  REQUIRE(dec.isolated.size() == 1);
  CHECK(var_name(dec.isolated[0]) == "t_x12");

  Seed frozen_only = seed_from_quiver({}, {"fo_a", "fo_b"}, {});
  auto d2 = exchangeable_components(frozen_only);
  CHECK(d2.components.empty());
  CHECK(d2.isolated.size() == 2);

  Seed q = rect_seed(3, 3);
  auto d3 = exchangeable_components(q);
  CHECK(d3.components.size() == 1);
  CHECK(d3.isolated.empty());
  CHECK(d3.components[0].vars.size() == q.size());
}

TEST_CASE("property: components partition the variables and mutation stays local") {
  Seed s = twelve_vertex_seed();
  auto dec = exchangeable_components(s);
  std::multiset<VarId> seen_ex;
  for (const auto& c : dec.components)
    for (VarId v : c.exchangeable) seen_ex.insert(v);
  CHECK(seen_ex.size() == s.exchangeables().size());
  for (VarId v : s.exchangeables()) CHECK(seen_ex.count(v) == 1);

  for (const auto& c : dec.components) {
    VarId x = c.exchangeable.front();
    Seed m = mutate(s, x);
    for (const auto& other : dec.components) {
      if (&other == &c) continue;
      for (VarId u : other.exchangeable)
        for (VarId v : other.vars) CHECK(m.entry(u, v) == s.entry(u, v));
    }
  }
}

TEST_CASE("seeds_similar") {
  Seed q = rect_seed(2, 2);
  auto id = seeds_similar(q, q);
  REQUIRE(id.has_value());
  CHECK(id->strong());
  for (int sg : id->signs) CHECK(sg == 1);

  // Flip every entry of the one component of the 2 x 2 seed.
  ExchangeMatrix flipped;
  for (const auto& [r, row] : q.matrix().rows())
    for (const auto& [c, b] : row) flipped.set(r, c, -b);
  Seed neg(q.vars(), flipped);
  VarMap phi;
  for (const auto& cv : q.vars()) phi[cv.id] = cv.id;
  auto w2 = seeds_similar(q, neg, phi);
  REQUIRE(w2.has_value());
  REQUIRE(w2->signs.size() == 1);
  CHECK(w2->signs[0] == -1);
  auto strong = seeds_strongly_similar(q, neg);
  REQUIRE(strong.has_value());
  CHECK(strong->signs[0] == -1);

  CHECK_FALSE(seeds_similar(rect_seed(2, 2), rect_seed(2, 3)).has_value());
  CHECK(code_of([] { seeds_similar(rect_seed(4, 4), rect_seed(4, 4)); }) == ErrorCode::SearchTooLarge);
}

TEST_CASE("seeds_similar finds a renaming by search") {
  Seed a = seed_from_quiver({"ss_a", "ss_b"}, {"ss_f"}, {{"ss_a", "ss_b", 2}, {"ss_f", "ss_b"}});
  Seed b = seed_from_quiver({"ss_q", "ss_p"}, {"ss_g"}, {{"ss_p", "ss_q", 2}, {"ss_g", "ss_q"}});
  auto w = seeds_similar(a, b);
  REQUIRE(w.has_value());
  CHECK(w->phi.at(var("ss_a")) == var("ss_p"));
  CHECK(w->phi.at(var("ss_b")) == var("ss_q"));
  CHECK(w->phi.at(var("ss_f")) == var("ss_g"));
}

TEST_CASE("check_melting_morphism") {
  Seed q22 = rect_seed(2, 2), q33 = rect_seed(3, 3);
  auto rep = check_melting_morphism(r_map(2, 2, 3, 3), q22, q33, 3);
  CHECK(rep.passed());
  CHECK(rep.cm2_checked);
  CHECK(rep.sequences_checked > 0);

  auto zero = r_map(2, 2, 3, 3);
  zero.image[label(q22, "(1)")] = 0L;
  auto r0 = check_melting_morphism(zero, q22, q33, 3);
  CHECK(r0.failed_axiom == "iMCM");

  auto two = r_map(2, 2, 3, 3);
  two.image[label(q22, "(2)")] = 2L;
  auto r2 = check_melting_morphism(two, q22, q33, 3);
  CHECK(r2.failed_axiom == "specialisation");
}

TEST_CASE("property: identity morphisms pass at every depth") {
  Seed q = rect_seed(2, 3);
  for (int d = 0; d <= 3; ++d) CHECK(check_melting_morphism(MeltingMorphismSpec::identity(q), q, q, d).passed());
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Seed s = random_seed(rng, 200 + trial);
    CHECK(check_melting_morphism(MeltingMorphismSpec::identity(s), s, s, 2).passed());
  }
}

TEST_CASE("quiver_to_dot") {
  std::string dot = quiver_to_dot(rect_seed(5, 4));
  std::regex node(R"(^\s*"[^"]+"( \[shape=box\])?;)", std::regex::multiline);
  std::size_t nodes = 0, boxed = 0;
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), node); it != std::sregex_iterator(); ++it) {
    ++nodes;
    if ((*it)[1].matched) ++boxed;
  }
  CHECK(nodes == 21);
  CHECK(boxed == 9);

  std::string single = quiver_to_dot(seed_from_quiver({}, {"dot_f"}, {}));
  CHECK(single.find("shape=box") != std::string::npos);
  CHECK(single.find("->") == std::string::npos);

  std::string two = quiver_to_dot(seed_from_quiver({"dot_a", "dot_b"}, {}, {{"dot_a", "dot_b", 2}}));
  CHECK(two.find("label=\"2\"") != std::string::npos);

  VarId u = var("dot_u"), v = var("dot_v");
  ExchangeMatrix sym;
  sym.set(u, v, 1);
  sym.set(v, u, 1);
  CHECK(code_of([&] { quiver_to_dot(Seed({{u, false, {}, nullptr}, {v, false, {}, nullptr}}, sym)); }) ==
        ErrorCode::NotSkewSymmetric);
}

TEST_CASE("property: JSON round-trip of seeds") {
  Seed q = mutate(q_infty_window(3, 3), *q_infty_window(3, 3).find_label(parse_partition("(1)")));
  Seed back = seed_from_json(seed_to_json(q));
  CHECK(seeds_equal_up_to_renaming(back, q));
  CHECK(back.locked() == q.locked());
  CHECK(back.history() == q.history());
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    Seed s = random_seed(rng, 300 + trial);
    Seed m = mutate(s, s.exchangeables().front());
    CHECK(seeds_equal_up_to_renaming(seed_from_json(seed_to_json(m)), m));
  }
}
