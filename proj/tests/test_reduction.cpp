#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "d4/reduction.hpp"

using namespace d4;

TEST_CASE("build_problem on {1,5,12}") {
  auto t = make_triple(1, 5, 12);
  auto p = build_problem(t, {2, 2, true}, {2, 2, true}, 1000);
  long pr = 256;
  // xi = (4+sqrt(12))/2, eta = (8+sqrt(60))/2
  double xi = (4 + std::sqrt(12.0)) / 2, eta = (8 + std::sqrt(60.0)) / 2;
  CHECK(p.kappa(pr).mid() == doctest::Approx(std::log(xi) / std::log(eta)).epsilon(1e-12));
  CHECK(p.B(pr).mid() == doctest::Approx(xi * xi).epsilon(1e-12));
  double kappa0 = std::pow(2 - 2 * std::sqrt(12.0), 2) / (2 * 11);
  CHECK(p.A(pr).mid() == doctest::Approx(kappa0 / std::log(eta)).epsilon(1e-12));
  double mu = std::sqrt(5.0) * (2 * std::sqrt(12.0) + 2) /
              (2 * std::sqrt(12.0) + 2 * std::sqrt(5.0));
  CHECK(p.mu_hat(pr).mid() == doctest::Approx(std::log(mu) / std::log(eta)).epsilon(1e-12));
}

TEST_CASE("bd_reduce_values on a synthetic form") {
  // kappa = golden ratio, mu_hat = 0.123, A = 1000, B = 10, M = 1e6
  auto kap = [](long p) {
    return (Interval::exact(1, p) + Interval::of_sqrt(5, p)) / Interval::exact(2, p);
  };
  auto muh = [](long p) { return Interval::exact(123, p) / Interval::exact(1000, p); };
  auto Af = [](long p) { return Interval::exact(1000, p); };
  auto Bf = [](long p) { return Interval::exact(10, p); };
  Integer M = 1000000;
  auto res = bd_reduce_values(kap, muh, Af, Bf, M);
  REQUIRE(res.status == ReduceStatus::reduced);
  CHECK(res.q_used > 6 * M);
  CHECK(res.new_M < M);
  CHECK(res.new_M < 20);
  // cross-check epsilon and the new bound in long double arithmetic
  long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  long double q = res.q_used.get_d();
  auto frac_dist = [](long double x) {
    long double f = x - std::floor(x);
    return std::min(f, 1.0L - f);
  };
  long double eps = frac_dist(q * 0.123L) - 1000000.0L * frac_dist(q * phi);
  CHECK(std::abs((long double)res.epsilon.to_double() - eps) < 1e-6L);
  long double nm = std::floor(std::log(1000.0L * q / eps) / std::log(10.0L));
  CHECK(res.new_M == (long)nm);
}

TEST_CASE("bd_reduce is stable under doubled precision") {
  auto t = make_triple(1, 5, 12);
  Integer M0 = Integer(1) << 100;
  for (const auto& A : enumerate_classes_A(t))
    for (const auto& B : enumerate_classes_B(t)) {
      auto p = build_problem(t, A, B, M0);
      auto r1 = bd_reduce(p, 256);
      auto r2 = bd_reduce(p, 512);
      CHECK(r1.status == r2.status);
      if (r1.status == ReduceStatus::reduced) {
        CHECK(r1.new_M == r2.new_M);
        CHECK(r1.epsilon.sgn() == r2.epsilon.sgn());
      }
    }
}

TEST_CASE("campaign on {1,5,12} reaches a small fixpoint") {
  auto t = make_triple(1, 5, 12);
  Integer M0 = Integer(1) << 100;
  auto entries = bd_campaign(t, M0);
  REQUIRE(entries.size() == 8);
  for (const auto& e : entries) {
    CHECK(e.status == ReduceStatus::reduced);
    CHECK(e.final_M <= 12);
    CHECK(e.rounds <= 12);
  }
}

TEST_CASE("campaign checkpoint replay") {
  const char* path = "/tmp/d4_test_campaign.jsonl";
  std::remove(path);
  auto t = make_triple(1, 5, 12);
  Integer M0 = Integer(1) << 80;
  auto first = bd_campaign(t, M0, path);
  auto second = bd_campaign(t, M0, path);  // fully replayed
  REQUIRE(first.size() == second.size());
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].ia == second[i].ia);
    CHECK(first[i].ib == second[i].ib);
    CHECK(first[i].final_M == second[i].final_M);
    CHECK(first[i].rounds == second[i].rounds);
  }
  std::ifstream in(path);
  int lines = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 8);  // replay appended nothing
  std::remove(path);
}

TEST_CASE("multiplicative independence guard") {
  CHECK(multiplicatively_independent(make_triple(1, 5, 12)));
  CHECK(multiplicatively_independent(make_triple(1, 12, 21)));
}
