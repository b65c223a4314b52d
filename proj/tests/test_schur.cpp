#include "doctest.h"
#include "indcluster/error.hpp"
#include "indcluster/sato.hpp"
#include "indcluster/schur.hpp"
#include "oracles.hpp"

using namespace indcluster;

TEST_CASE("z_mu") {
  CHECK(z_mu(Partition{}) == 1);
  CHECK(z_mu(Partition({2, 1})) == 2);
  CHECK(z_mu(Partition({1, 1, 1})) == 6);
  CHECK(z_mu(Partition({2, 2, 1})) == 8);
}

TEST_CASE("characters: dimension from the hook-length formula") {
  for (int n = 0; n <= 7; ++n) {
    Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& l : partitions_of(n)) CHECK(Integer(character(l, ones)) == oracle::hook_length_dim(l));
  }
  CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK_THROWS_AS(character(Partition({2}), Partition({1})), Error);
}

TEST_CASE("characters: column orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    auto parts = partitions_of(n);
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        Integer sum = 0;
        for (const auto& l : parts) sum += Integer(character(l, mu)) * Integer(character(l, nu));
        CHECK(sum == (mu == nu ? z_mu(mu) : Integer(0)));
      }
  }
}

TEST_CASE("schur_in_p agrees with Jacobi-Trudi") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) CHECK(schur_in_p(l) == oracle::jacobi_trudi(l));
}

TEST_CASE("symfunc printing") {
  CHECK(symfunc_to_string(schur_in_p(Partition({2}))) == "1/2*p[1,1] + 1/2*p[2]");
  CHECK(symfunc_to_string(SymFuncP{}) == "0");
  CHECK(symfunc_to_string(SymFuncP::constant(1)) == "1");
}

TEST_CASE("Hall product: Schur functions are orthonormal") {
  auto parts = partitions_up_to(6);
  std::vector<SymFuncP> s;
  for (const auto& l : parts) s.push_back(schur_in_p(l));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) CHECK(hall_product(s[i], s[j]) == (i == j ? 1 : 0));
}

TEST_CASE("Hall product on power sums") {
  for (const auto& l : partitions_up_to(5))
    for (const auto& m : partitions_up_to(5))
      CHECK(hall_product(SymFuncP::power_sum(l), SymFuncP::power_sum(m)) == (l == m ? Rational(z_mu(l)) : Rational(0)));
}

TEST_CASE("tau coefficients") {
  Tau p2 = tau_from_symfunc(SymFuncP::power_sum(Partition({2})));
  CHECK(tau_coeff(p2, Partition({2})) == 1);
  CHECK(tau_coeff(p2, Partition({1, 1})) == -1);
  CHECK(tau_coeff(p2, Partition({1})) == 0);
  Tau s21 = tau_schur(Partition({2, 1}));
  CHECK(tau_coeff(s21, Partition({2, 1})) == 1);
  CHECK(s21.coeffs.size() == 1);
  CHECK(kp_residual(s21) == 0);
  Tau one = tau_from_symfunc(SymFuncP::constant(3));
  CHECK(tau_coeff(one, Partition{}) == 3);
}

TEST_CASE("property: every Schur tau passes the Plucker relations") {
  for (const auto& l : partitions_up_to(4)) {
    auto rep = check_plucker(tau_schur(l), 2, 3);
    CHECK(rep.passed);
    CHECK(kp_residual(tau_schur(l)) == 0);
  }
}
