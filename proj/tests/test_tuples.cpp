#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d4/tuples.hpp"

using namespace d4;

TEST_CASE("make_pair") {
  CHECK(make_pair(1, 5).r == 3);
  CHECK_THROWS_AS(make_pair(1, 2), domain_error);
  CHECK(make_pair(4620, 31680).r == 12098);
  CHECK_THROWS_AS(make_pair(5, 1), domain_error);
}

TEST_CASE("verify_tuple") {
  CHECK(verify_tuple({1, 5, 12, 96}));
  CHECK_FALSE(verify_tuple({1, 2, 3}));
  CHECK_FALSE(verify_tuple({1, 5, 12, 0}));
  CHECK_FALSE(verify_tuple({1, 5, 5}));
  CHECK(verify_tuple({}));
}

TEST_CASE("regular_triple_c") {
  CHECK(regular_triple_c(make_pair(1, 5)) == 12);
  CHECK(regular_triple_c(make_pair(1, 12)) == 21);
  CHECK(regular_triple_c(make_pair(4620, 31680)) == 60496);
}

TEST_CASE("d_plus and d_minus") {
  auto t = make_triple(1, 5, 12);
  CHECK(d_plus(t) == 96);
  CHECK(d_minus(t) == 0);
  auto t2 = make_triple(1, 12, 21);
  Integer dp = d_plus(t2);
  CHECK(verify_tuple({1, 12, 21, dp}));
  CHECK(dp > t2.c);
  // regular triple always has d_minus = 0
  auto t3 = make_triple(make_pair(2, 6).a, 6, regular_triple_c(make_pair(2, 6)));
  CHECK(d_minus(t3) == 0);
}

TEST_CASE("c_family recurrence") {
  auto p = make_pair(1, 12);
  CHECK(c_family(p, 0, 1) == 0);
  CHECK(c_family(p, 1, 1) == 21);
  CHECK(c_family(p, 2, 1) == 320);
  CHECK(c_family(p, 1, -1) == 5);
  CHECK(c_family(p, 2, -1) == 96);
  for (int tau : {1, -1})
    for (int nu = 1; nu <= 6; ++nu) {
      Integer c = c_family(p, nu, tau);
      if (c > p.b) CHECK(verify_tuple({p.a, p.b, c}));
    }
}

TEST_CASE("c_family matches the surd closed form after rounding") {
  // closed form: (4/ab) * { ((sqrt(b)+tau sqrt(a))/2)^2 * ((r+sqrt(ab))/2)^(2nu)
  //              + ((sqrt(b)-tau sqrt(a))/2)^2 * ((r-sqrt(ab))/2)^(2nu) } - (a+b+... )
  // evaluated numerically; conjugate surds cancel to within rounding
  long p = 512;
  for (auto [av, bv] : {std::pair<int, int>{1, 12}, {1, 5}, {2, 6}, {3, 7}}) {
    auto pr = make_pair(av, bv);
    Interval sa = Interval::of_sqrt(pr.a, p), sb = Interval::of_sqrt(pr.b, p);
    Interval sab = Interval::of_sqrt(pr.a * pr.b, p);
    Interval two = Interval::exact(2, p);
    Interval alpha = (Interval::exact(pr.r, p) + sab) / two;
    Interval beta = (Interval::exact(pr.r, p) - sab) / two;
    for (int tau : {1, -1}) {
      Interval st = Interval::exact(tau, p);
      Interval u = (sb + st * sa) / two;
      Interval v = (sb - st * sa) / two;
      for (int nu = 0; nu <= 12; ++nu) {
        Interval an = Interval::point(Real(1.0, p)), bn = an;
        for (int k = 0; k < 2 * nu; ++k) {
          an = an * alpha;
          bn = bn * beta;
        }
        Interval val = Interval::exact(4, p) / Interval::exact(pr.a * pr.b, p) *
                       (u * u * an + v * v * bn -
                        Interval::exact(pr.a + pr.b, p) / two);
        Integer nearest = ((val.lo() + val.hi()) / Real(2.0, p)).round_nearest();
        CHECK(nearest == c_family(pr, nu, tau));
      }
    }
  }
}

TEST_CASE("pair_descent_step") {
  auto t = make_triple(1, 5, 12);
  auto d1 = pair_descent_step(t);
  CHECK(d1.s_prime == 2);
  // consistency: t'^2 = b c' + 4
  CHECK(d1.t_prime * d1.t_prime == t.b() * d1.c_prime + 4);
  CHECK(d1.t_prime == 2);
  CHECK(d1.c_prime == 0);
  CHECK(d1.where == DescentStep::Where::zero);

  auto t2 = make_triple(1, 12, 21);
  auto d2 = pair_descent_step(t2);
  CHECK(d2.s_prime == 2);
  CHECK(d2.c_prime == 0);

  // c_2^+ descends to c_1^+
  auto p = make_pair(1, 12);
  auto t3 = make_triple(1, 12, c_family(p, 2, 1));
  CHECK(pair_descent_step(t3).c_prime == c_family(p, 1, 1));
  // and deeper family members step down one level
  auto t4 = make_triple(1, 12, c_family(p, 3, -1));
  CHECK(pair_descent_step(t4).c_prime == c_family(p, 2, -1));
}

TEST_CASE("classify_quadruple") {
  auto t = make_triple(1, 5, 12);
  auto q = make_quadruple(t, 96);
  CHECK(classify_quadruple(q).kind == RegularityKind::regular_plus);
  // {1,12,96} has d_- = 5; the sorted quadruple is {1,5,12,96} again, and the
  // classification prefers the largest element as d
  auto t2 = make_triple(1, 12, 96);
  CHECK(d_minus(t2) == 5);
  auto q2 = make_quadruple(t2, 5);
  CHECK(classify_quadruple(q2).kind == RegularityKind::regular_plus);
  CHECK_THROWS_AS(make_quadruple(t, 12), domain_error);
  CHECK_THROWS_AS(make_quadruple(t, 7), domain_error);
}
