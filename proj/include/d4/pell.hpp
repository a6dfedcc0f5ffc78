#pragma once

#include <vector>

#include "d4/tuples.hpp"

namespace d4 {

// Fundamental solution (z0, x0) of c x^2 - a z^2 = 4(c - a).
struct PellClassA {
  Integer z0, x0;
  bool in_range;  // 1 <= x0 < sqrt(s+2) and |z0| < sqrt(c*sqrt(c/a))
};

// Fundamental solution (z1, y1) of c y^2 - b z^2 = 4(c - b).
struct PellClassB {
  Integer z1, y1;
  bool in_range;
};

enum class CaseClause {
  ee_z2,        // m,n even, |z0| = |z1| = 2
  ee_half_crst, // m,n even, |z0| = |z1| = (cr-st)/2
  eo,           // m even, n odd: |z1| = s, |z0| = (cr-st)/2, z0 z1 < 0
  oe,           // m odd, n even: |z0| = t, |z1| = (cr-st)/2, z0 z1 < 0
  oo,           // m,n odd: |z0| = t, |z1| = s, z0 z1 > 0
  unclassified
};

struct ClassCase {
  std::vector<CaseClause> clauses;  // degenerate small triples may match several
  bool excluded_for_d_above_dplus = false;  // set for the m-odd/n-even clause
};

struct IntersectionSolution {
  long m, n;
  Integer z, d;
  size_t class_a_index, class_b_index;
};

struct IntersectionReport {
  std::vector<IntersectionSolution> extensions;       // d > c, d not in {a,b}
  std::vector<IntersectionSolution> regular_or_small; // d <= c or d in {0,a,b}
};

std::vector<PellClassA> enumerate_classes_A(const D4Triple& t);
std::vector<PellClassB> enumerate_classes_B(const D4Triple& t);

ClassCase classify_case(const PellClassA& A, const PellClassB& B, const D4Triple& t);

// v_0 = z0, v_1 = (s z0 + c x0)/2, v_{m+2} = s v_{m+1} - v_m.
std::vector<Integer> gen_v(const D4Triple& t, const PellClassA& A, int count);
// w_0 = z1, w_1 = (t z1 + c y1)/2, w_{n+2} = t w_{n+1} - w_n.
std::vector<Integer> gen_w(const D4Triple& t, const PellClassB& B, int count);

IntersectionReport find_intersections(const D4Triple& t, const Integer& z_max);

// (eps+1)/(0.999 eps) * n + 1.5 - 0.4 (eps+1)/(0.999 eps), valid for c > b^eps.
Real index_upper_bound(const Real& eps, long n);

// Index arguments use the even-case normalization: (m, n) refer to the
// solution v_{2m} = w_{2n}, so a full-index intersection (2k, 2l) is queried
// as (k, l). The odd-case pair below uses the v_{2m+1} = w_{2n+1} reading.
struct CongruenceRecord {
  // a z0 m^2 - b z1 n^2 == t y1 n - s x0 m  (mod c)
  Integer lhs5, rhs5;
  bool ok5;
  // odd-index pair: +-2t(a m(m+1) - b n(n+1)) == 2rs(n-m) and the s/t mirror
  Integer lhs8_plus, lhs8_minus, rhs8;
  Integer lhs9_plus, lhs9_minus, rhs9;
  bool ok8, ok9;
};

CongruenceRecord congruence_residues(const D4Triple& t, const PellClassA& A, const PellClassB& B,
                                     long m, long n);

// Sequence-shift identities between the +-(cr-st)/2 and -+t (resp. -+s)
// seeded sequences; offset is the index shift of the returned class.
struct ShiftedA {
  PellClassA cls;
  int offset;
};
struct ShiftedB {
  PellClassB cls;
  int offset;
};

ShiftedA shift_class(const D4Triple& t, const PellClassA& A);
ShiftedB shift_class(const D4Triple& t, const PellClassB& B);

}  // namespace d4
