#include "d4/tuples.hpp"

#include <algorithm>
#include <cassert>

namespace d4 {

std::optional<D4Pair> try_make_pair(const Integer& a, const Integer& b) {
  if (!(0 < a && a < b)) return std::nullopt;
  auto [ok, r] = is_perfect_square(a * b + 4);
  if (!ok) return std::nullopt;
  return D4Pair{a, b, r};
}

D4Pair make_pair(const Integer& a, const Integer& b) {
  auto p = try_make_pair(a, b);
  if (!p) throw domain_error("not a D(4)-pair: (" + dec_str(a) + "," + dec_str(b) + ")");
  return *p;
}

std::optional<D4Triple> try_make_triple(const Integer& a, const Integer& b, const Integer& c) {
  auto p = try_make_pair(a, b);
  if (!p || c <= b) return std::nullopt;
  auto [oks, s] = is_perfect_square(a * c + 4);
  if (!oks) return std::nullopt;
  auto [okt, t] = is_perfect_square(b * c + 4);
  if (!okt) return std::nullopt;
  return D4Triple{*p, c, s, t};
}

D4Triple make_triple(const Integer& a, const Integer& b, const Integer& c) {
  auto t = try_make_triple(a, b, c);
  if (!t)
    throw domain_error("not a D(4)-triple: (" + dec_str(a) + "," + dec_str(b) + "," + dec_str(c) +
                       ")");
  return *t;
}

D4Quadruple make_quadruple(const D4Triple& t, const Integer& d) {
  if (d < 1 || d == t.a() || d == t.b() || d == t.c)
    throw domain_error("invalid quadruple element d=" + dec_str(d));
  auto [okx, x] = is_perfect_square(t.a() * d + 4);
  auto [oky, y] = is_perfect_square(t.b() * d + 4);
  auto [okz, z] = is_perfect_square(t.c * d + 4);
  if (!okx || !oky || !okz) throw domain_error("d does not extend the triple: " + dec_str(d));
  return D4Quadruple{t, d, x, y, z};
}

bool verify_tuple(const std::vector<Integer>& elems) {
  for (const auto& e : elems)
    if (e <= 0) return false;
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[i] == elems[j]) return false;
      if (!is_perfect_square(elems[i] * elems[j] + 4).first) return false;
    }
  return true;
}

Integer regular_triple_c(const D4Pair& p) { return p.a + p.b + 2 * p.r; }

Integer d_plus(const D4Triple& t) {
  Integer rst = t.r() * t.s * t.t;
  return t.a() + t.b() + t.c + (t.a() * t.b() * t.c + rst) / 2;
}

Integer d_minus(const D4Triple& t) {
  Integer rst = t.r() * t.s * t.t;
  return t.a() + t.b() + t.c + (t.a() * t.b() * t.c - rst) / 2;
}

Integer c_family(const D4Pair& p, int nu, int tau) {
  if (nu < 0) throw domain_error("c_family: nu must be >= 0");
  if (tau != 1 && tau != -1) throw domain_error("c_family: tau must be +-1");
  Integer ab = p.a * p.b;
  Integer prev = 0;
  Integer cur = p.a + p.b + 2 * tau * p.r;
  if (nu == 0) return prev;
  for (int k = 1; k < nu; ++k) {
    Integer next = (ab + 2) * cur - prev + 2 * (p.a + p.b);
    prev = cur;
    cur = next;
  }
  return cur;
}

DescentStep pair_descent_step(const D4Triple& t) {
  Integer rs_at = t.r() * t.s - t.a() * t.t;
  Integer rt_bs = t.r() * t.t - t.b() * t.s;
  assert(rs_at % 2 == 0 && rt_bs % 2 == 0);
  Integer sp = rs_at / 2;
  Integer tp = rt_bs / 2;
  Integer num = sp * sp - 4;
  assert(num % t.a() == 0);
  Integer cp = num / t.a();
  DescentStep::Where w;
  if (cp == 0)
    w = DescentStep::Where::zero;
  else if (cp == t.b())
    w = DescentStep::Where::equal_b;
  else if (cp > t.b())
    w = DescentStep::Where::above_b;
  else
    w = DescentStep::Where::between;
  return DescentStep{sp, tp, cp, w};
}

RegularityTag classify_quadruple(const D4Quadruple& q) {
  std::array<Integer, 4> e = {q.triple.a(), q.triple.b(), q.triple.c, q.d};
  std::sort(e.begin(), e.end());
  // check d-regularity of the omitted element against each sorted sub-triple,
  // preferring the canonical reading with the largest element as d
  for (int omit = 3; omit >= 0; --omit) {
    std::vector<Integer> sub;
    Integer probe;
    for (int i = 0; i < 4; ++i)
      (i == omit ? probe : sub.emplace_back()) = e[i];
    auto t = try_make_triple(sub[0], sub[1], sub[2]);
    if (!t) continue;  // probe below c of the sub-triple makes sub unsorted-valid anyway
    if (probe == d_plus(*t)) return {RegularityKind::regular_plus, omit};
    Integer dm = d_minus(*t);
    if (dm != 0 && probe == dm) return {RegularityKind::regular_minus, omit};
  }
  return {RegularityKind::irregular, -1};
}

}  // namespace d4
