#pragma once

#include <string>
#include <vector>

#include "d4/pell.hpp"

namespace d4 {

// Naive-side oracle: every d <= d_max with d not in {a,b,c} extending the
// triple, found by scanning x with ad+4 = x^2. Ascending.
std::vector<Integer> brute_force_extensions(const D4Triple& t, const Integer& d_max);

// All pairs a < b <= b_max, sorted by (a,b).
std::vector<D4Pair> enumerate_pairs(const Integer& b_max);

// All triples a < b < c <= c_max, sorted by (a,b,c).
std::vector<D4Triple> enumerate_triples(const Integer& c_max);

struct CountN {
  Integer n_regular;
  Integer n_irregular_found;
  bool certified;
};

CountN count_N(const D4Triple& t, const Integer& z_max, bool certify = false);

struct CaseCheckReport {
  std::string case_id;
  Integer pairs_scanned;
  std::vector<std::pair<Integer, Integer>> survivors;  // (b, c) hits
  double elapsed_seconds;
};

// Quadratic-root elimination over a in [a_lo, a_hi], b in [1e5, 169.169 a^5]:
// roots c_pm of A c^2 + B c + D with A = r^2, B = -(13b-29a) r^2,
// D = 4((6b-15a)^2 - r^2); integral positive roots are survivors.
CaseCheckReport case_check_prop_mn9_k0(int a_lo = 4, int a_hi = 12);

struct ClaimsReport {
  Integer triples_checked;
  std::vector<D4Triple> c_gap_violations;      // c != a+b+2r and c <= max{ab+a+b, 4b}
  std::vector<D4Quadruple> irregular_finds;    // quadruples failing regularity
  Integer index_violations;                    // intersections outside n-1 <= m <= 2n+1
  Integer sandwich_violations;                 // growth sandwich failures
};

// Desk-scale sweep: c-gap on all triples with c <= c_gap_c_max; extension
// regularity on triples with c <= sweep_c_max and d <= d_max; index relation
// and w_n growth sandwich on the same triples.
ClaimsReport verify_theorem_claims(const Integer& c_gap_c_max, const Integer& sweep_c_max,
                                   const Integer& d_max);

struct FamilyReport {
  std::vector<Integer> extensions;      // all c in (b, c_max] extending the pair
  std::vector<Integer> family_values;   // c_nu^+- in the same window
  std::vector<Integer> non_family;      // extensions not matching any family value
  bool all_family;
};

FamilyReport pair_family_check(const D4Pair& p, const Integer& c_max);

}  // namespace d4
