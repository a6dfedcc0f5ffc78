#pragma once

#include <array>
#include <optional>
#include <vector>

#include "d4/arith.hpp"

namespace d4 {

// Pair {a,b} with ab+4 = r^2, a < b.
struct D4Pair {
  Integer a, b, r;
};

// Triple {a,b,c} with a < b < c; s^2 = ac+4, t^2 = bc+4.
struct D4Triple {
  D4Pair pair;
  Integer c, s, t;

  const Integer& a() const { return pair.a; }
  const Integer& b() const { return pair.b; }
  const Integer& r() const { return pair.r; }
};

struct D4Quadruple {
  D4Triple triple;
  Integer d, x, y, z;
};

enum class RegularityKind { regular_plus, regular_minus, irregular };

struct RegularityTag {
  RegularityKind kind;
  // which embedded sorted sub-triple matched (indices into the sorted
  // quadruple of the omitted element), -1 when irregular
  int matched_subtriple = -1;
};

D4Pair make_pair(const Integer& a, const Integer& b);
std::optional<D4Pair> try_make_pair(const Integer& a, const Integer& b);

D4Triple make_triple(const Integer& a, const Integer& b, const Integer& c);
std::optional<D4Triple> try_make_triple(const Integer& a, const Integer& b, const Integer& c);

D4Quadruple make_quadruple(const D4Triple& t, const Integer& d);

bool verify_tuple(const std::vector<Integer>& elems);

// a + b + 2r, the smallest c extending the pair to a triple.
Integer regular_triple_c(const D4Pair& p);

// d±  = a+b+c + (abc ± rst)/2
Integer d_plus(const D4Triple& t);
Integer d_minus(const D4Triple& t);

// c_nu^tau by the integer recurrence
//   c_{nu+1} = (ab+2) c_nu - c_{nu-1} + 2(a+b),  c_0 = 0, c_1 = a+b+2*tau*r.
Integer c_family(const D4Pair& p, int nu, int tau);

struct DescentStep {
  Integer s_prime, t_prime, c_prime;
  enum class Where { above_b, equal_b, zero, between } where;
};

DescentStep pair_descent_step(const D4Triple& t);

RegularityTag classify_quadruple(const D4Quadruple& q);

}  // namespace d4
