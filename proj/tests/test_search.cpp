#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "d4/search.hpp"

using namespace d4;

TEST_CASE("brute_force_extensions") {
  auto t = make_triple(1, 5, 12);
  CHECK(brute_force_extensions(t, 10000) == std::vector<Integer>{96});
  CHECK(brute_force_extensions(t, 50).empty());
  CHECK(brute_force_extensions(t, 96) == std::vector<Integer>{96});
  CHECK_THROWS_AS(brute_force_extensions(t, 0), domain_error);
}

TEST_CASE("enumerate_pairs") {
  auto ps = enumerate_pairs(13);
  auto has = [&](long a, long b) {
    return std::any_of(ps.begin(), ps.end(),
                       [&](const D4Pair& p) { return p.a == a && p.b == b; });
  };
  CHECK(has(1, 5));
  CHECK(has(1, 12));
  CHECK(has(2, 6));
  CHECK(has(3, 7));
  CHECK_FALSE(has(1, 2));
  // exhaustive cross-check against the quadratic scan
  std::vector<std::pair<long, long>> naive;
  for (long a = 1; a <= 13; ++a)
    for (long b = a + 1; b <= 13; ++b)
      if (is_perfect_square(Integer(a) * b + 4).first) naive.emplace_back(a, b);
  REQUIRE(ps.size() == naive.size());
  for (size_t i = 0; i < ps.size(); ++i) {
    CHECK(ps[i].a == naive[i].first);
    CHECK(ps[i].b == naive[i].second);
  }
}

TEST_CASE("enumerate_triples") {
  auto ts = enumerate_triples(12);
  bool found = std::any_of(ts.begin(), ts.end(), [](const D4Triple& t) {
    return t.a() == 1 && t.b() == 5 && t.c == 12;
  });
  CHECK(found);
  // every triple member pair really is a D(4)-pair and ordering holds
  for (const auto& t : ts) {
    CHECK(t.a() < t.b());
    CHECK(t.b() < t.c);
    CHECK(verify_tuple({t.a(), t.b(), t.c}));
  }
  // against the cubic scan
  long naive = 0;
  for (long a = 1; a <= 12; ++a)
    for (long b = a + 1; b <= 12; ++b)
      for (long c = b + 1; c <= 12; ++c)
        if (verify_tuple({a, b, c})) ++naive;
  CHECK((long)ts.size() == naive);
}

TEST_CASE("count_N on a regular triple") {
  auto t = make_triple(1, 5, 12);
  auto cn = count_N(t, 1000000);
  CHECK(cn.n_irregular_found == 0);
  CHECK_FALSE(cn.certified);
}

TEST_CASE("case check eliminates all pairs") {
  auto rep = case_check_prop_mn9_k0(4, 5);
  CHECK(rep.pairs_scanned > 0);
  CHECK(rep.survivors.empty());
}

TEST_CASE("verify_theorem_claims at small scale") {
  auto rep = verify_theorem_claims(500, 200, 2000000);
  CHECK(rep.triples_checked > 0);
  CHECK(rep.c_gap_violations.empty());
  CHECK(rep.irregular_finds.empty());
  CHECK(rep.index_violations == 0);
  CHECK(rep.sandwich_violations == 0);
}

TEST_CASE("pair_family_check") {
  auto p = make_pair(1, 5);
  auto rep = pair_family_check(p, 1000000);
  CHECK(rep.all_family);
  CHECK(std::find(rep.extensions.begin(), rep.extensions.end(), Integer(12)) !=
        rep.extensions.end());
  CHECK(std::find(rep.extensions.begin(), rep.extensions.end(), Integer(96)) !=
        rep.extensions.end());

  auto p2 = make_pair(2, 6);
  CHECK(pair_family_check(p2, 1000000).all_family);

  // the known pair with an extension outside the two-parameter family
  auto p3 = make_pair(4620, 31680);
  auto rep3 = pair_family_check(p3, 150000000);
  CHECK_FALSE(rep3.all_family);
  CHECK(std::find(rep3.non_family.begin(), rep3.non_family.end(), Integer(146434197)) !=
        rep3.non_family.end());
}
