#include "d4/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace d4 {

namespace {

using u64 = std::uint64_t;

u64 u64_isqrt(u64 n) {
  u64 r = (u64)std::sqrt((double)n);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool u64_square(u64 n, u64& root) {
  // cheap mod-64 filter kills ~82% of non-squares before the sqrt
  static const bool ok64[64] = {1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0,
                                1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0,
                                0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0,
                                0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0};
  if (!ok64[n & 63]) return false;
  root = u64_isqrt(n);
  return root * root == n;
}

u64 to_u64(const Integer& n, const char* what) {
  if (n < 0 || !n.fits_ulong_p()) throw domain_error(std::string(what) + ": out of native range");
  return n.get_ui();
}

void factorize(u64 n, std::unordered_map<u64, int>& f) {
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
}

std::vector<u64> divisors_of(const std::unordered_map<u64, int>& f) {
  std::vector<u64> ds{1};
  for (auto [p, e] : f) {
    size_t sz = ds.size();
    u64 pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
    }
  }
  return ds;
}

}  // namespace

std::vector<Integer> brute_force_extensions(const D4Triple& t, const Integer& d_max) {
  if (d_max < 1) throw domain_error("brute_force_extensions: d_max >= 1");
  u64 a = to_u64(t.a(), "a"), b = to_u64(t.b(), "b"), c = to_u64(t.c, "c"),
      dm = to_u64(d_max, "d_max");
  std::vector<Integer> out;
  // ad+4 = x^2 drives the scan; one square test per candidate x
  u64 x_max = u64_isqrt(a * dm + 4);
  for (u64 x = 3; x <= x_max; ++x) {
    u64 num = x * x - 4;
    if (num % a != 0) continue;
    u64 d = num / a;
    if (d == a || d == b || d == c) continue;
    u64 rt;
    if (!u64_square(b * d + 4, rt)) continue;
    if (!u64_square(c * d + 4, rt)) continue;
    out.emplace_back(d);
  }
  return out;
}

std::vector<D4Pair> enumerate_pairs(const Integer& b_max) {
  if (b_max < 2) throw domain_error("enumerate_pairs: b_max >= 2");
  u64 bm = to_u64(b_max, "b_max");
  if (bm > 2000000000ULL) throw domain_error("enumerate_pairs: b_max too large for native scan");
  std::vector<std::pair<u64, u64>> raw;
  // ab = r^2 - 4 = (r-2)(r+2); factoring the two halves separately keeps the
  // divisor walk near O(sqrt(r)) per r
  u64 n_lim = bm * (bm - 1);
  for (u64 r = 3; r * r - 4 <= n_lim; ++r) {
    u64 n = r * r - 4;
    std::unordered_map<u64, int> f;
    factorize(r - 2, f);
    factorize(r + 2, f);
    for (u64 a : divisors_of(f)) {
      u64 b = n / a;
      if (a < b && b <= bm) raw.emplace_back(a, b);
    }
  }
  std::sort(raw.begin(), raw.end());
  std::vector<D4Pair> out;
  out.reserve(raw.size());
  for (auto [a, b] : raw) out.push_back(make_pair(a, b));
  return out;
}

std::vector<D4Triple> enumerate_triples(const Integer& c_max) {
  auto pairs = enumerate_pairs(c_max);
  std::unordered_set<u64> pair_keys;
  std::unordered_map<u64, std::vector<u64>> partners;  // a -> sorted b list
  for (const auto& p : pairs) {
    u64 a = p.a.get_ui(), b = p.b.get_ui();
    pair_keys.insert((a << 32) | b);
    partners[a].push_back(b);
  }
  std::vector<D4Triple> out;
  for (const auto& p : pairs) {
    u64 a = p.a.get_ui(), b = p.b.get_ui();
    auto it = partners.find(a);
    if (it == partners.end()) continue;
    for (u64 c : it->second) {
      if (c <= b) continue;
      if (pair_keys.count((b << 32) | c)) out.push_back(make_triple(a, b, c));
    }
  }
  std::sort(out.begin(), out.end(), [](const D4Triple& u, const D4Triple& v) {
    if (u.a() != v.a()) return u.a() < v.a();
    if (u.b() != v.b()) return u.b() < v.b();
    return u.c < v.c;
  });
  return out;
}

CountN count_N(const D4Triple& t, const Integer& z_max, bool certify) {
  auto rep = find_intersections(t, z_max);
  Integer dp = d_plus(t);
  CountN cn{0, 0, false};
  std::unordered_set<std::string> seen;
  for (const auto& sol : rep.extensions) {
    if (sol.d <= dp) continue;
    if (!seen.insert(dec_str(sol.d)).second) continue;
    auto q = make_quadruple(t, sol.d);
    if (classify_quadruple(q).kind == RegularityKind::irregular)
      cn.n_irregular_found += 1;
    else
      cn.n_regular += 1;
  }
  cn.certified = certify;  // caller combines with a completed reduction campaign
  return cn;
}

CaseCheckReport case_check_prop_mn9_k0(int a_lo, int a_hi) {
  auto t0 = std::chrono::steady_clock::now();
  CaseCheckReport rep{"prop_mn9_k0", 0, {}, 0.0};
  for (int a = a_lo; a <= a_hi; ++a) {
    // b in [1e5, 169.169 a^5], endpoints floored
    u64 b_lo = 100000;
    double hi = 169.169 * std::pow((double)a, 5.0);
    u64 b_hi = (u64)hi;
    u64 r_lo = u64_isqrt((u64)a * b_lo + 4);
    u64 r_hi = u64_isqrt((u64)a * b_hi + 4) + 1;
    for (u64 r = r_lo; r <= r_hi; ++r) {
      u64 n = r * r - 4;
      if (n % a != 0) continue;
      u64 b = n / a;
      if (b < b_lo || b > b_hi) continue;
      rep.pairs_scanned += 1;
      Integer A = Integer(r) * r;
      Integer B = -(13 * Integer(b) - 29 * a) * A;
      Integer six_b = 6 * Integer(b) - 15 * a;
      Integer D = 4 * (six_b * six_b - A);
      Integer disc = B * B - 4 * A * D;
      if (disc < 0) continue;
      auto [sq_ok, sq] = is_perfect_square(disc);
      if (!sq_ok) continue;
      for (int sign : {1, -1}) {
        Integer num = -B + sign * sq;
        if (num <= 0) continue;
        if (num % (2 * A) != 0) continue;
        rep.survivors.emplace_back(Integer(b), num / (2 * A));
      }
    }
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ClaimsReport verify_theorem_claims(const Integer& c_gap_c_max, const Integer& sweep_c_max,
                                   const Integer& d_max) {
  ClaimsReport rep{0, {}, {}, 0, 0};
  auto gap_triples = enumerate_triples(c_gap_c_max);
  rep.triples_checked = (long)gap_triples.size();
  for (const auto& t : gap_triples) {
    if (t.c == regular_triple_c(t.pair)) continue;
    Integer lim = std::max(Integer(t.a() * t.b() + t.a() + t.b()), Integer(4 * t.b()));
    if (t.c <= lim) rep.c_gap_violations.push_back(t);
  }

  for (const auto& t : gap_triples) {
    if (t.c > sweep_c_max) continue;
    for (const auto& d : brute_force_extensions(t, d_max)) {
      auto q = make_quadruple(t, d);
      if (classify_quadruple(q).kind == RegularityKind::irregular) rep.irregular_finds.push_back(q);
    }
    // intersections: index relation on every emitted extension
    Integer z_max = isqrt(d_max * t.c + 4);
    if (z_max < t.c) z_max = t.c;
    auto ir = find_intersections(t, z_max);
    for (const auto& sol : ir.extensions)
      if (!(sol.n - 1 <= sol.m && sol.m <= 2 * sol.n + 1)) rep.index_violations += 1;
    // growth sandwich for range-flagged classes: (c/(2 y1))(t-1)^{n-1} < w_n < c y1 t^{n-1}
    for (const auto& B : enumerate_classes_B(t)) {
      // positive seeds only: negative z1 classes can dip below the lower
      // bound for small indices
      if (!B.in_range || B.z1 <= 0) continue;
      auto w = gen_w(t, B, 8);
      Rational lo = Rational(t.c, 2 * B.y1);
      Integer hi = t.c * B.y1;
      for (int n = 1; n < 8; ++n) {
        if (!(Rational(w[n]) > lo && w[n] < hi)) rep.sandwich_violations += 1;
        lo *= (t.t - 1);
        hi *= t.t;
      }
    }
  }
  return rep;
}

FamilyReport pair_family_check(const D4Pair& p, const Integer& c_max) {
  FamilyReport rep;
  u64 a = to_u64(p.a, "a"), b = to_u64(p.b, "b"), cm = to_u64(c_max, "c_max");
  // extensions via ac+4 = s^2
  u64 s_max = u64_isqrt(a * cm + 4);
  for (u64 s = 3; s <= s_max; ++s) {
    u64 num = s * s - 4;
    if (num % a != 0) continue;
    u64 c = num / a;
    if (c <= b) continue;
    u64 rt;
    if (!u64_square(b * c + 4, rt)) continue;
    rep.extensions.emplace_back(c);
  }
  for (int tau : {1, -1}) {
    for (int nu = 1;; ++nu) {
      Integer c = c_family(p, nu, tau);
      if (c > c_max) break;
      if (c > p.b) rep.family_values.push_back(c);
    }
  }
  std::sort(rep.family_values.begin(), rep.family_values.end());
  for (const auto& c : rep.extensions)
    if (!std::binary_search(rep.family_values.begin(), rep.family_values.end(), c))
      rep.non_family.push_back(c);
  rep.all_family = rep.non_family.empty();
  return rep;
}

}  // namespace d4
