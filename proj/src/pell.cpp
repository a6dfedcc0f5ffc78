#include "d4/pell.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace d4 {

namespace {

Integer mod_c(const Integer& x, const Integer& c) {
  Integer r = x % c;
  if (r < 0) r += c;
  return r;
}

// (cr - st)/2, the fourth fundamental |z| value of the classification
Integer half_crst(const D4Triple& t) {
  Integer num = t.c * t.r() - t.s * t.t;
  assert(num % 2 == 0);
  return num / 2;
}

bool z0_in_range(const D4Triple& t, const Integer& z) {
  // |z| < sqrt(c sqrt(c/a))  <=>  a z^4 < c^3
  Integer z2 = z * z;
  return t.a() * z2 * z2 < t.c * t.c * t.c;
}

bool z1_in_range(const D4Triple& t, const Integer& z) {
  Integer z2 = z * z;
  return t.b() * z2 * z2 < t.c * t.c * t.c;
}

}  // namespace

std::vector<PellClassA> enumerate_classes_A(const D4Triple& t) {
  std::vector<PellClassA> out;
  // 1 <= x0 < sqrt(s+2)
  for (Integer x0 = 1; x0 * x0 < t.s + 2; ++x0) {
    Integer num = t.c * x0 * x0 - 4 * (t.c - t.a());
    if (num < 0 || num % t.a() != 0) continue;
    auto [ok, z] = is_perfect_square(num / t.a());
    if (!ok) continue;
    if (z == 0) {
      out.push_back({0, x0, z0_in_range(t, z)});
    } else {
      out.push_back({-z, x0, z0_in_range(t, z)});
      out.push_back({z, x0, z0_in_range(t, z)});
    }
  }
  std::sort(out.begin(), out.end(), [](const PellClassA& u, const PellClassA& v) {
    return u.x0 != v.x0 ? u.x0 < v.x0 : u.z0 < v.z0;
  });
  return out;
}

std::vector<PellClassB> enumerate_classes_B(const D4Triple& t) {
  std::vector<PellClassB> out;
  for (Integer y1 = 1; y1 * y1 < t.t + 2; ++y1) {
    Integer num = t.c * y1 * y1 - 4 * (t.c - t.b());
    if (num < 0 || num % t.b() != 0) continue;
    auto [ok, z] = is_perfect_square(num / t.b());
    if (!ok) continue;
    if (z == 0) {
      out.push_back({0, y1, z1_in_range(t, z)});
    } else {
      out.push_back({-z, y1, z1_in_range(t, z)});
      out.push_back({z, y1, z1_in_range(t, z)});
    }
  }
  std::sort(out.begin(), out.end(), [](const PellClassB& u, const PellClassB& v) {
    return u.y1 != v.y1 ? u.y1 < v.y1 : u.z1 < v.z1;
  });
  return out;
}

ClassCase classify_case(const PellClassA& A, const PellClassB& B, const D4Triple& t) {
  ClassCase cc;
  Integer h = half_crst(t);
  Integer az0 = abs(A.z0), az1 = abs(B.z1);
  int prod_sign = sgn(A.z0) * sgn(B.z1);
  if (A.z0 == B.z1 && az0 == 2) cc.clauses.push_back(CaseClause::ee_z2);
  if (A.z0 == B.z1 && az0 == h) cc.clauses.push_back(CaseClause::ee_half_crst);
  if (az0 == t.t && az1 == h && prod_sign < 0) {
    cc.clauses.push_back(CaseClause::oe);
    cc.excluded_for_d_above_dplus = true;
  }
  if (az1 == t.s && az0 == h && prod_sign < 0) cc.clauses.push_back(CaseClause::eo);
  if (az0 == t.t && az1 == t.s && prod_sign > 0) cc.clauses.push_back(CaseClause::oo);
  if (cc.clauses.empty()) cc.clauses.push_back(CaseClause::unclassified);
  return cc;
}

std::vector<Integer> gen_v(const D4Triple& t, const PellClassA& A, int count) {
  if (count < 1) throw domain_error("gen_v: count must be >= 1");
  Integer first = t.s * A.z0 + t.c * A.x0;
  assert(first % 2 == 0);
  std::vector<Integer> v;
  v.reserve(count);
  v.push_back(A.z0);
  if (count == 1) return v;
  v.push_back(first / 2);
  for (int i = 2; i < count; ++i) v.push_back(t.s * v[i - 1] - v[i - 2]);
  return v;
}

std::vector<Integer> gen_w(const D4Triple& t, const PellClassB& B, int count) {
  if (count < 1) throw domain_error("gen_w: count must be >= 1");
  Integer first = t.t * B.z1 + t.c * B.y1;
  assert(first % 2 == 0);
  std::vector<Integer> w;
  w.reserve(count);
  w.push_back(B.z1);
  if (count == 1) return w;
  w.push_back(first / 2);
  for (int i = 2; i < count; ++i) w.push_back(t.t * w[i - 1] - w[i - 2]);
  return w;
}

IntersectionReport find_intersections(const D4Triple& t, const Integer& z_max) {
  if (z_max < t.c) throw domain_error("find_intersections: z_max must be >= c");
  IntersectionReport rep;
  auto as = enumerate_classes_A(t);
  auto bs = enumerate_classes_B(t);
  for (size_t ia = 0; ia < as.size(); ++ia) {
    // v-values up to z_max, keyed by value with the smallest index kept
    std::map<Integer, long> vm;
    {
      Integer prev = as[ia].z0;
      Integer cur = (t.s * as[ia].z0 + t.c * as[ia].x0) / 2;
      long m = 0;
      if (prev <= z_max) vm.emplace(prev, m);
      while (cur <= z_max) {
        ++m;
        vm.emplace(cur, m);
        Integer next = t.s * cur - prev;
        prev = cur;
        cur = next;
        if (m > 100000) throw domain_error("find_intersections: runaway v sequence");
      }
    }
    for (size_t ib = 0; ib < bs.size(); ++ib) {
      Integer prev = bs[ib].z1;
      Integer cur = (t.t * bs[ib].z1 + t.c * bs[ib].y1) / 2;
      long n = 0;
      auto consider = [&](const Integer& z, long n_idx) {
        auto it = vm.find(z);
        if (it == vm.end()) return;
        Integer num = z * z - 4;
        if (num % t.c != 0) return;
        Integer d = num / t.c;
        IntersectionSolution sol{it->second, n_idx, z, d, ia, ib};
        if (d <= t.c || d == t.a() || d == t.b())
          rep.regular_or_small.push_back(sol);
        else
          rep.extensions.push_back(sol);
      };
      if (prev <= z_max) consider(prev, 0);
      while (cur <= z_max) {
        ++n;
        consider(cur, n);
        Integer next = t.t * cur - prev;
        prev = cur;
        cur = next;
        if (n > 100000) throw domain_error("find_intersections: runaway w sequence");
      }
    }
  }
  auto by_z = [](const IntersectionSolution& u, const IntersectionSolution& v) {
    if (u.z != v.z) return u.z < v.z;
    if (u.class_a_index != v.class_a_index) return u.class_a_index < v.class_a_index;
    return u.class_b_index < v.class_b_index;
  };
  std::sort(rep.extensions.begin(), rep.extensions.end(), by_z);
  std::sort(rep.regular_or_small.begin(), rep.regular_or_small.end(), by_z);
  return rep;
}

Real index_upper_bound(const Real& eps, long n) {
  long p = eps.prec();
  Real one(1.0, p);
  if (eps < one || eps >= Real(12.0, p) || n < 1)
    throw domain_error("index_upper_bound: need 1 <= eps < 12, n >= 1");
  Real f = (eps + one) / (Real(0.999, p) * eps);
  return f * Real((double)n, p) + Real(1.5, p) - Real(0.4, p) * f;
}

CongruenceRecord congruence_residues(const D4Triple& t, const PellClassA& A, const PellClassB& B,
                                     long m, long n) {
  CongruenceRecord rec;
  const Integer& c = t.c;
  Integer mi = m, ni = n;
  rec.lhs5 = mod_c(t.a() * A.z0 * mi * mi - t.b() * B.z1 * ni * ni, c);
  rec.rhs5 = mod_c(t.t * B.y1 * ni - t.s * A.x0 * mi, c);
  rec.ok5 = rec.lhs5 == rec.rhs5;
  Integer core = t.a() * mi * (mi + 1) - t.b() * ni * (ni + 1);
  rec.lhs8_plus = mod_c(2 * t.t * core, c);
  rec.lhs8_minus = mod_c(-2 * t.t * core, c);
  rec.rhs8 = mod_c(2 * t.r() * t.s * (ni - mi), c);
  rec.ok8 = rec.lhs8_plus == rec.rhs8 || rec.lhs8_minus == rec.rhs8;
  rec.lhs9_plus = mod_c(2 * t.s * core, c);
  rec.lhs9_minus = mod_c(-2 * t.s * core, c);
  rec.rhs9 = mod_c(2 * t.r() * t.t * (ni - mi), c);
  rec.ok9 = rec.lhs9_plus == rec.rhs9 || rec.lhs9_minus == rec.rhs9;
  return rec;
}

ShiftedA shift_class(const D4Triple& t, const PellClassA& A) {
  Integer h = half_crst(t);
  Integer z_new;
  int offset;
  if (A.z0 == h) {
    z_new = -t.t;
    offset = 1;  // v_{h,m} = v_{-t,m+1}
  } else if (A.z0 == -h) {
    z_new = t.t;
    offset = -1;  // v_{-h,m+1} = v_{t,m}
  } else if (A.z0 == -t.t) {
    z_new = h;
    offset = -1;
  } else if (A.z0 == t.t) {
    z_new = -h;
    offset = 1;
  } else {
    throw domain_error("shift_class: |z0| must be t or (cr-st)/2");
  }
  Integer num = t.a() * z_new * z_new + 4 * (t.c - t.a());
  assert(num % t.c == 0);
  auto [ok, x_new] = is_perfect_square(num / t.c);
  assert(ok);
  return ShiftedA{{z_new, x_new, z0_in_range(t, z_new)}, offset};
}

ShiftedB shift_class(const D4Triple& t, const PellClassB& B) {
  Integer h = half_crst(t);
  Integer z_new;
  int offset;
  if (B.z1 == h) {
    z_new = -t.s;
    offset = 1;  // w_{h,n} = w_{-s,n+1}
  } else if (B.z1 == -h) {
    z_new = t.s;
    offset = -1;
  } else if (B.z1 == -t.s) {
    z_new = h;
    offset = -1;
  } else if (B.z1 == t.s) {
    z_new = -h;
    offset = 1;
  } else {
    throw domain_error("shift_class: |z1| must be s or (cr-st)/2");
  }
  Integer num = t.b() * z_new * z_new + 4 * (t.c - t.b());
  assert(num % t.c == 0);
  auto [ok, y_new] = is_perfect_square(num / t.c);
  assert(ok);
  return ShiftedB{{z_new, y_new, z1_in_range(t, z_new)}, offset};
}

}  // namespace d4
