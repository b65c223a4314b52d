#include <random>

#include "doctest.h"
#include "indcluster/error.hpp"
#include "indcluster/sato.hpp"
#include "oracles.hpp"

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

// Random point of the given stratum perturbing the first `columns` basis vectors.
PointW random_point(std::mt19937_64& rng, const Partition& stratum, int band, int columns, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  PointW w;
  w.stratum = stratum;
  w.band = band;
  for (int j = 1; j <= columns; ++j)
    for (int n = stratum.part(j - 1) - j + 1; n <= band; ++n)
      if (int c = d(rng); c != 0) w.coeffs[{n, j}] = c;
  return w;
}

bool contains(const Partition& big, const Partition& small) {
  for (int i = 0; i < small.length(); ++i)
    if (big.part(i) < small.part(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("Schubert points pair dually with coordinates") {
  auto parts = partitions_up_to(5);
  for (const auto& l : parts) {
    PointW h = PointW::schubert(l);
    for (const auto& m : parts) CHECK(point_delta(h, m) == (l == m ? 1 : 0));
  }
}

TEST_CASE("coordinates vanish off the closure of the stratum") {
  std::mt19937_64 rng(7);
  for (const auto& mu : partitions_up_to(3)) {
    PointW w = random_point(rng, mu, 4, 4);
    CHECK(point_delta(w, mu) == 1);
    for (const auto& nu : partitions_up_to(6))
      if (!contains(nu, mu)) CHECK(point_delta(w, nu) == 0);
  }
}

TEST_CASE("point_from_matrix reproduces maximal minors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 2, n = 2 + trial % 3;
    Matrix a = oracle::random_int_matrix(m, m + n, rng, 5);
    if (trial % 4 == 3)
      for (auto& row : a) row[0] = 0;  // forces a nonempty stratum
    Rational rank_probe = 0;
    for (const auto& l : partitions_in_box(m, n)) rank_probe += abs(oracle::minor_for(a, l));
    if (rank_probe == 0) continue;
    PointW w = point_from_matrix(m, n, a);
    Rational scale = oracle::minor_for(a, w.stratum);
    REQUIRE(scale != 0);
    for (const auto& l : partitions_in_box(m, n)) CHECK(point_delta(w, l) * scale == oracle::minor_for(a, l));
    for (const auto& l : partitions_up_to(m * n + 2))
      if (!(l.length() <= m && l.part(0) <= n)) CHECK(point_delta(w, l) == 0);
  }
}

TEST_CASE("point_from_matrix: invariances and errors") {
  std::mt19937_64 rng(3);
  Matrix a = oracle::random_int_matrix(3, 6, rng, 4);
  Matrix swapped = a;
  std::swap(swapped[0], swapped[2]);
  PointW w1 = point_from_matrix(3, 3, a), w2 = point_from_matrix(3, 3, swapped);
  CHECK(w1.coeffs == w2.coeffs);
  CHECK(w1.stratum == w2.stratum);

  Matrix id{{1, 0, 2, 3}, {0, 1, 5, 7}};
  PointW w = point_from_matrix(2, 2, id);
  CHECK(w.stratum == Partition{});
  for (const auto& l : partitions_in_box(2, 2)) CHECK(point_delta(w, l) == oracle::minor_for(id, l));

  Matrix deficient{{1, 2, 3}, {2, 4, 6}};
  CHECK(code_of([&] { point_from_matrix(2, 1, deficient); }) == ErrorCode::RankDeficient);
}

TEST_CASE("property: truncation is stable on random points") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> band(0, 6);
  auto strata = partitions_up_to(3);
  for (int t = 0; t < 100; ++t) {
    PointW w = random_point(rng, strata[static_cast<std::size_t>(t) % strata.size()], band(rng), 5);
    for (const auto& l : partitions_up_to(5)) CHECK_NOTHROW(point_delta(w, l));
  }
}

TEST_CASE("matrix points give tau-functions") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 6; ++t) {
    const int m = 2 + t % 2, n = 3;
    Matrix a = oracle::random_int_matrix(m, m + n, rng, 4);
    PointW w = point_from_matrix(m, n, a);
    Tau tau = tau_from_point(w, m * n);
    CHECK(kp_residual(tau) == 0);
    auto rep = check_plucker(tau, 3, 4);
    CHECK(rep.passed);
    CHECK(rep.relations_checked > 0);
  }
}

TEST_CASE("random banded points give tau-functions") {
  std::mt19937_64 rng(9);
  PointW w = random_point(rng, Partition{}, 3, 3);
  Tau tau = tau_from_point(w, 8);
  CHECK(kp_residual(tau) == 0);
  CHECK(check_plucker(tau, 2, 3).passed);
}

TEST_CASE("a non-tau sum of Schur functions fails KP") {
  Tau bad;
  for (const char* p : {"()", "(1)", "(2)", "(1,1)", "(2,1)", "(2,2)"}) bad.set(parse_partition(p), 1);
  CHECK(kp_residual(bad) == 1);
  auto rep = check_plucker(bad, 2, 2);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.failing.has_value());
  CHECK(abs(rep.residual) == 1);
  CHECK(code_of([&] { check_plucker(bad, 0, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Giambelli identity") {
  std::mt19937_64 rng(13);
  Matrix a = oracle::random_int_matrix(2, 5, rng, 4);
  PointW w = point_from_matrix(2, 3, a);
  if (w.stratum == Partition{}) {
    auto r = giambelli_check(w, Partition({3, 2}));
    CHECK(r.passed());
    CHECK(frobenius_to_string(r.frobenius) == frobenius_to_string(partition_to_frobenius(Partition({3, 2}))));
  }
  Matrix b = oracle::random_int_matrix(3, 6, rng, 4);
  PointW wb = point_from_matrix(3, 3, b);
  if (wb.stratum == Partition{}) CHECK(giambelli_check(wb, Partition({2, 2})).passed());

  // Independent check of the minor form on the oracle: d_(2,2) d_() = det of hook minors.
  auto d = [&](const char* p) { return oracle::minor_for(b, parse_partition(p)); };
  CHECK(d("(2,2)") * d("()") == d("(2,1)") * d("(1)") - d("(1,1)") * d("(2)"));

  PointW band8 = random_point(rng, Partition{}, 8, 8);
  int checked = 0;
  for (const auto& l : partitions_up_to(8)) {
    if (partition_to_frobenius(l).arms.size() > 2) continue;
    CHECK(giambelli_check(band8, l).passed());
    ++checked;
  }
  CHECK(checked > 0);

  PointW off = PointW::schubert(Partition({1}));
  CHECK(code_of([&] { giambelli_check(off, Partition({2})); }) == ErrorCode::EmptyCoordinateZero);
}

TEST_CASE("positivity certificate") {
  std::map<Partition, Rational> ones;
  for (const char* p : {"()", "(1)", "(2)", "(1,1)", "(2,2)"}) ones[parse_partition(p)] = 1;
  auto rep = positivity_certificate(ones, {Partition({2, 1})}, 2, 2);
  CHECK(rep.values.at(Partition({2, 1})) == 2);
  CHECK(rep.all_positive);

  auto zero = ones;
  zero[Partition({1})] = 0;
  CHECK(code_of([&] { positivity_certificate(zero, {Partition({2, 1})}, 2, 2); }) == ErrorCode::NonPositiveInput);
  auto bad_key = ones;
  bad_key[Partition({2, 1})] = 1;
  CHECK(code_of([&] { positivity_certificate(bad_key, {Partition({2, 1})}, 2, 2); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { positivity_certificate(ones, {Partition({3})}, 2, 2); }) == ErrorCode::DoesNotFitBox);
}

TEST_CASE("property: positive rectangles give positive coordinates") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  for (int t = 0; t < 10; ++t) {
    std::map<Partition, Rational> values;
    Rational empty(num(rng), den(rng));
    empty.canonicalize();
    values[Partition{}] = empty;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        values[Partition::rectangle(i, j)] = q;
      }
    auto rep = positivity_certificate(values, partitions_in_box(3, 3), 3, 3);
    CHECK(rep.all_positive);
    for (const auto& [p, v] : values) CHECK(rep.values.at(p) == v);
  }
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(19);
  PointW w = random_point(rng, Partition({2, 1}), 5, 4);
  w.coeffs[{4, 1}] = Rational(3, 7);
  PointW back = point_from_json(point_to_json(w));
  CHECK(back.coeffs == w.coeffs);
  CHECK(back.stratum == w.stratum);
  CHECK(back.band == w.band);
  Tau tau = tau_from_point(w, 6);
  CHECK(tau_from_json(tau_to_json(tau)).coeffs == tau.coeffs);
  CHECK(code_of([&] { point_from_json(nlohmann::json{{"stratum", nlohmann::json::array()}, {"band", 1}, {"coeffs", {{5, 1, "1"}}}}); }) ==
        ErrorCode::InvalidArgument);
}
