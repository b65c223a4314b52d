// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "indcluster/error.hpp"
#include "indcluster/grassmann.hpp"
#include "indcluster/ind_window.hpp"
#include "indcluster/sato.hpp"

using namespace indcluster;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const Error& e) {
    out.ok = false;
    out.why = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    out.ok = false;
    out.why = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && budget_s > 0 && secs > budget_s) {
    out.ok = false;
    out.why = "over the " + std::to_string(budget_s) + " s budget";
  }
  if (!out.ok) ++failures;
  std::printf("%s criterion %d (%.2f s): %s%s%s\n", out.ok ? "PASS" : "FAIL", id, secs, title,
              out.ok ? "" : " -- ", out.ok ? "" : out.why.c_str());
  std::fflush(stdout);
}

LaurentPoly d(const char* p) { return LaurentPoly::variable(var(parse_partition(p).label_name())); }

VarId label_id(const Partition& p) { return var(p.label_name()); }

std::vector<VarId> rect_classes(int h, int w) {
  std::vector<VarId> out{label_id(Partition{})};
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= w; ++j) out.push_back(label_id(Partition::rectangle(i, j)));
  return out;
}

bool vanishes_on_oracle(const QuadraticRelation& r, int m, int n, int points, std::mt19937_64& rng) {
  for (int k = 0; k < points; ++k) {
    auto oracle = minors_oracle(m, n, random_matrix(m, m + n, rng, 1000));
    if (relation_residual(r, [&](const Partition& p) { return oracle(p); }) != 0) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "KP exchange from the 2 x 2 rectangle seed and the infinite window", 1, [](Outcome& o) {
    const LaurentPoly kp_rhs = d("(2)") * d("(1,1)") + d("()") * d("(2,2)");
    for (const Seed& s : {rect_seed(2, 2), q_infty_window(2, 2)}) {
      Seed m = mutate_label(s, Partition({1}));
      auto v = m.find_label(Partition({2, 1}));
      o.require(v.has_value(), "no vertex labelled (2,1) after the mutation");
      if (!v) return;
      o.require(m.expr(*v) * d("(1)") == kp_rhs, "new variable violates d21*d1 = d2*d11 + d*d22");
    }
  });

  criterion(2, "hook relations vanish on Gr(4,8) minors", 5, [](Outcome& o) {
    std::mt19937_64 rng(2);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        o.require(vanishes_on_oracle(hook_relation(a, b), 4, 4, 5, rng),
                  "hook relation (" + std::to_string(a) + "," + std::to_string(b) + ") is nonzero");
    o.require(hook_relation(1, 1) == kp_relation(), "hook (1,1) differs from the KP relation");
  });

  criterion(3, "diagonal relations vanish on Gr(4,8) minors", 5, [](Outcome& o) {
    std::mt19937_64 rng(3);
    for (int k = 0; k <= 2; ++k)
      o.require(vanishes_on_oracle(diag_relation(k), 4, 4, 5, rng), "diag relation " + std::to_string(k) + " is nonzero");
    o.require(diag_relation(0) == kp_relation(), "diag 0 differs from the KP relation");
  });

  criterion(4, "Laurent expansions inside 3 x 3 are correct, positive and use rectangles of the bounding box", 60,
            [](Outcome& o) {
              for (const auto& lambda : partitions_in_box(3, 3)) {
                LaurentOptions opts;
                opts.verify_points = 3;
                auto e = laurent_expansion(lambda, 3, 3, opts);
                const std::string who = lambda.to_string();
                o.require(e.oracle_ok && e.points_verified == 3, who + " disagrees with the minors oracle");
                o.require(lp_is_coefficient_positive(e.poly) && !e.poly.is_zero(), who + " has a nonpositive coefficient");
                for (VarId v : e.poly.variables()) {
                  Partition p = parse_partition(var_name(v).substr(1));
                  bool inside = p.empty() || (p.is_rectangle() && p.length() <= lambda.length() && p.part(0) <= lambda.part(0));
                  o.require(inside, who + " uses " + var_name(v));
                }
              }
            });

  criterion(5, "weak separation: the (3,1,1) vs (1) pair and square-move clusters of Gr(3,7)", 120, [](Outcome& o) {
    o.require(!weakly_separated(Partition({3, 1, 1}), Partition({1})), "(3,1,1) and (1) accepted");
    auto layers = square_move_bfs(rect_seed(3, 4), 6);
    o.require(layers.size() > 1, "no square moves found");
    for (const auto& cluster : layers)
      for (std::size_t i = 0; i < cluster.size(); ++i)
        for (std::size_t j = i + 1; j < cluster.size(); ++j)
          o.require(weakly_separated(cluster[i], cluster[j]),
                    cluster[i].to_string() + " and " + cluster[j].to_string() + " share a cluster");
  });

  criterion(6, "ind-seed windows of the Grassmannian chain and of the example system", 10, [](Outcome& o) {
    auto chain = grassmann_chain(5);
    auto w = ind_seed_window(*chain, rect_classes(3, 3), 5);
    o.require(seeds_strongly_similar(w.window, q_infty_window(3, 3)).has_value(), "3 x 3 window not strongly similar");

    auto ex = example_chain(6);
    std::vector<VarId> classes;
    std::vector<std::string> xs, zs;
    std::vector<QuiverArrow> arrows;
    auto nm = [](const char* stem, int i) { return std::string(stem) + "_" + std::to_string(i); };
    for (int i = 1; i <= 4; ++i) {
      xs.push_back(nm("x", i));
      zs.push_back(nm("z", i));
      arrows.push_back({nm("x", i), nm("z", i), 1});
      arrows.push_back({nm("y", i), nm("z", i), 1});
      if (i < 4) {
        arrows.push_back({nm("x", i), nm("x", i + 1), i});
        arrows.push_back({nm("y", i), nm("y", i + 1), 1});
      }
    }
    for (int i = 1; i <= 4; ++i) xs.push_back(nm("y", i));
    for (const auto& s : xs) classes.push_back(var(s));
    for (const auto& s : zs) classes.push_back(var(s));
    Seed expected = seed_from_quiver(xs, zs, arrows);
    auto win = ind_seed_window(*ex, classes, 6);
    o.require(seeds_strongly_similar(win.window, expected).has_value(), "example window differs from the expected ind-quiver");

    int entrywise = -1;
    for (const auto& c : win.certificates)
      if (c.row == var("y_3") && c.col == var("z_3")) entrywise = c.attained_at;
    auto col = win.column_uniform_level.find(var("z_3"));
    o.require(entrywise >= 0, "(y_3, z_3) not certified");
    o.require(col != win.column_uniform_level.end() && col->second > entrywise,
              "(y_3, z_3) is not uniformly attained strictly later than entry-wise");
  });

  criterion(7, "mutation commutes with the colimit for all sequences of length <= 2 on the 3 x 3 window", 0,
            [](Outcome& o) {
              auto chain = grassmann_chain(5);
              auto classes = rect_classes(3, 3);
              Seed window = ind_seed_window(*chain, classes, 5).window;
              std::size_t sequences = 0;
              auto check = [&](const std::vector<VarId>& seq) {
                auto rep = verify_mutation_commutes(*chain, classes, seq, 5);
                ++sequences;
                std::string names;
                for (VarId v : seq) names += var_name(v) + " ";
                o.require(rep.passed(), "routes differ on " + names + rep.detail);
              };
              check({});
              for (VarId x : window.exchangeables()) {
                if (!window.is_mutable(x)) continue;
                check({x});
                Seed after = mutate(window, x);
                for (VarId y : after.exchangeables())
                  if (after.is_mutable(y)) check({x, y});
              }
              o.require(sequences > 1, "no admissible sequences");
            });

  criterion(8, "the quadrilateral mutation sequence yields Q(4), 4-valent", 10, [](Outcome& o) {
    Seed s = q_infty_window(5, 5);
    for (const char* l : {"(1)", "(1,1)", "(2)", "(2,2)", "(1,1,1)", "(3)", "(2,2,2)", "(3,3)", "(3,3,3)", "(2,1)"})
      s = mutate_label(s, parse_partition(l));
    Seed q = seed_by_labels(quad_quiver(4));
    std::vector<VarId> keep;
    std::set<VarId> frozen;
    for (const auto& cv : q.vars()) {
      auto v = s.find_label(*cv.label);
      o.require(v.has_value(), cv.label->to_string() + " missing after the sequence");
      if (!v) return;
      keep.push_back(*v);
      if (cv.frozen) frozen.insert(cv.id);
    }
    Seed sub = freeze_vars(seed_by_labels(restrict_seed(s, keep)), frozen);
    o.require(seeds_strongly_similar(sub, q).has_value(), "subquiver not strongly similar to quad_quiver(4)");
    for (VarId v : sub.exchangeables()) {
      int valency = 0;
      for (const auto& [u, b] : sub.neighbours(v)) valency += std::abs(b);
      o.require(valency == 4, sub.display_name(v) + " is not 4-valent");
    }
  });

  criterion(9, "Schur orthonormality, Schubert duality, tau-functions of points, Giambelli", 120, [](Outcome& o) {
    auto small = partitions_up_to(6);
    std::vector<SymFuncP> s;
    for (const auto& l : small) s.push_back(schur_in_p(l));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        o.require(hall_product(s[i], s[j]) == (i == j ? 1 : 0), "Schur functions not orthonormal");
    auto five = partitions_up_to(5);
    for (const auto& l : five) {
      PointW h = PointW::schubert(l);
      for (const auto& m : five) o.require(point_delta(h, m) == (l == m ? 1 : 0), "Schubert duality fails");
    }
    std::mt19937_64 rng(9);
    for (int rank : {2, 3})
      for (int t = 0; t < 10; ++t) {
        const int n = 3;
        PointW w = point_from_matrix(rank, n, random_matrix(rank, rank + n, rng, 50));
        Tau tau = tau_from_point(w, rank * n);
        o.require(kp_residual(tau) == 0, "KP residual nonzero");
        o.require(check_plucker(tau, 3, 4).passed, "Plücker relation fails on a point");
      }
    PointW generic;
    generic.band = 8;
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int j = 1; j <= 8; ++j)
      for (int n = -j + 1; n <= 8; ++n)
        if (int c = coef(rng); c != 0) generic.coeffs[{n, j}] = c;
    for (const auto& l : partitions_up_to(8))
      if (partition_to_frobenius(l).arms.size() <= 2)
        o.require(giambelli_check(generic, l).passed(), "Giambelli fails for " + l.to_string());
  });

  criterion(10, "positive rectangle values give positive coordinates inside 3 x 3", 0, [](Outcome& o) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> num(1, 20), den(1, 20);
    auto lambdas = partitions_in_box(3, 3);
    for (int t = 0; t < 20; ++t) {
      std::map<Partition, Rational> values;
      auto draw = [&] {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        return q;
      };
      values[Partition{}] = draw();
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) values[Partition::rectangle(i, j)] = draw();
      o.require(positivity_certificate(values, lambdas, 3, 3).all_positive, "a coordinate is not positive");
    }
  });

  criterion(11, "melting morphism checker accepts r-maps and names violated axioms", 0, [](Outcome& o) {
    o.require(check_melting_morphism(r_map(2, 2, 3, 3), rect_seed(2, 2), rect_seed(3, 3), 3).passed(), "r-map 2x2 -> 3x3");
    o.require(check_melting_morphism(r_map(2, 3, 3, 4), rect_seed(2, 3), rect_seed(3, 4), 3).passed(), "r-map 2x3 -> 3x4");
    Seed q22 = rect_seed(2, 2), q33 = rect_seed(3, 3);
    auto zero = r_map(2, 2, 3, 3);
    zero.image[*q22.find_label(Partition({1}))] = 0L;
    o.require(check_melting_morphism(zero, q22, q33, 3).failed_axiom == "iMCM", "exchangeable to 0 not reported as iMCM");
    auto two = r_map(2, 2, 3, 3);
    two.image[*q22.find_label(Partition({2}))] = 2L;
    o.require(check_melting_morphism(two, q22, q33, 3).failed_axiom == "specialisation",
              "neighbour specialisation not reported");
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
