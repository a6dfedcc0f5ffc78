#include "d4/bounds.hpp"

#include <algorithm>
#include <functional>

namespace d4 {

namespace {

Real lit(const char* s, long p) { return Real(s, p); }

Real rz(const Integer& n, long p) { return Real(n, p); }

Real max_real(const Real& a, const Real& b) { return a < b ? b : a; }

}  // namespace

BoundReport rickert_bound(const Integer& a, const Integer& b, const Integer& c, long prec) {
  if (!(0 < a && a < b && b < c)) throw domain_error("rickert_bound: need 0 < a < b < c");
  Integer ap = std::max(Integer(4 * a), Integer(4 * (b - a)));
  Integer d2 = (b - a) * (b - a);
  BoundReport rep{"rickert", {}, false, Real(prec), ""};
  rep.inputs = {{"a", dec_str(a)}, {"b", dec_str(b)}, {"c", dec_str(c)}, {"a_prime", dec_str(ap)}};
  // c > 308.07 a' b (b-a)^2 / a
  rep.precondition_ok = rz(c, prec) > lit("308.07", prec) * rz(ap * b * d2, prec) / rz(a, prec);
  Real num = Real(2.0, prec) * log(lit("32.02", prec) * rz(a * ap * b * b * b * b * c * c, prec)) *
             log(lit("0.026", prec) * rz(a * b * c * c, prec) / rz(d2, prec));
  Real den = log(lit("0.00325", prec) * rz(a * c, prec) / rz(ap * b * d2, prec)) *
             log(rz(b * c, prec));
  rep.bound = num / den;
  return rep;
}

BoundReport rickert2_bound(const Integer& a, const Integer& b, const Integer& c, long prec) {
  if (!(0 < a && a < b && b < c)) throw domain_error("rickert2_bound: need 0 < a < b < c");
  Integer ap = std::max(Integer(4 * a), Integer(4 * (b - a)));
  Integer d2 = (b - a) * (b - a);
  BoundReport rep{"rickert2", {}, false, Real(prec), ""};
  rep.inputs = {{"a", dec_str(a)}, {"b", dec_str(b)}, {"c", dec_str(c)}, {"a_prime", dec_str(ap)}};
  rep.precondition_ok = rz(c, prec) > lit("59.488", prec) * rz(ap * b * d2, prec) / rz(a, prec);
  Real num = Real(8.0, prec) *
             log(lit("8.40335e13", prec) * sqrt(rz(a * ap, prec)) * rz(b * b * c, prec)) *
             log(lit("0.20533", prec) * sqrt(rz(a * b, prec)) * rz(c, prec) /
                 rz(b - a, prec));
  Real den = log(rz(b * c, prec)) *
             log(lit("0.016858", prec) * rz(a * c, prec) / rz(ap * b * d2, prec));
  rep.bound = num / den;
  return rep;
}

Real matveev_C(long D, long prec) {
  if (D < 1) throw domain_error("matveev_C: D >= 1");
  Real e4 = exp(Real(4.0, prec));
  Real d(Real((double)D, prec));
  Real inner = pow(Real(3.0, prec), lit("5.5", prec)) * exp(lit("20.2", prec)) * d * d *
               log(exp(Real(1.0, prec)) * d);
  return lit("11796480", prec) * e4 * d * d * log(inner);
}

Integer matveev_m_bound(const D4Triple& t, long prec) {
  Interval bc = Interval::exact(t.b() * t.c, prec);
  Interval eta = (Interval::exact(t.t, prec) + bc.sqrt_()) / Interval::exact(2, prec);
  Real rhs = lit("2.7717e12", prec) * eta.log_().hi() * log(rz(t.c, prec));
  auto lhs = [&](const Integer& m) {
    return rz(m, prec) / log(lit("38.92", prec) * rz(m + 1, prec));
  };
  Integer lo = 6, hi = 12;
  while (lhs(hi) < rhs) hi *= 2;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (lhs(mid) < rhs)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

KappaDelta kappa_delta(int clause, const D4Triple& t, long prec) {
  switch (clause) {
    case 1:
      return {lit("2.7", prec) * Interval::of_sqrt(t.a() * t.c, prec).hi(), 0, 1};
    case 2:
      return {Real(6.0, prec), 0, 2};
    case 3:
      return {Real(1.0, prec) / rz(2 * t.a() * t.b(), prec), 0, 3};
    case 4:
      return {lit("2.0001", prec) * rz(t.b(), prec) / rz(t.c, prec), 1, 4};
    default:
      throw domain_error("kappa_delta: clause must be 1..4");
  }
}

Real okazaki_gap(long m0, int delta, const Real& kappa, const D4Triple& t, const Integer& Delta) {
  if (m0 < 1 || Delta < 1) throw domain_error("okazaki_gap: m0, Delta >= 1");
  long p = kappa.prec();
  Interval bc = Interval::exact(t.b() * t.c, p);
  Interval eta = (Interval::exact(t.t, p) + bc.sqrt_()) / Interval::exact(2, p);
  Real ac = rz(t.a() * t.c, p);
  return pow_si(ac, m0 - delta) * rz(Delta, p) * eta.log_().lo() / kappa;
}

PadeReport pade_lambda(const Integer& a, const Integer& b, const Integer& c, const Integer& z,
                       long prec) {
  if (!(0 < a && a < b && b < c)) throw domain_error("pade_lambda: need 0 < a < b < c");
  Integer a1 = 4 * a * (c - b);
  Integer a2 = 4 * b * (c - a);
  Integer N = a * b * z * z;
  Integer u = c - b, v = c - a, w = b - a;
  Integer a1p = std::max(a1, Integer(a2 - a1));
  PadeReport rep;
  rep.a1 = a1;
  rep.a2 = a2;
  rep.N = N;
  rep.precondition_ok = N >= 100000 * a2;
  Real top = log(lit("256", prec) * rz(a1p, prec) * rz(a2, prec) * rz(u, prec) * rz(N, prec) /
                 rz(a1, prec));
  Real bot = log(lit("0.02636", prec) * rz(N, prec) * rz(N, prec) /
                 (rz(a1, prec) * rz(a2, prec) * rz(a2 - a1, prec) * rz(u, prec) * rz(v, prec) *
                  rz(w, prec)));
  rep.lambda = Real(1.0, prec) + top / bot;
  rep.coefficient = Real(1.0, prec) / (lit("512.01", prec) * rz(a1p, prec) * rz(a2, prec) *
                                       rz(u, prec) * rz(N, prec) / rz(a1, prec));
  return rep;
}

Real gap_n2_bound(long n1, GapVariant variant, long prec) {
  Real n(Real((double)n1, prec));
  if (variant == GapVariant::general) {
    if (n1 < 8) throw domain_error("gap_n2_bound: general variant needs n1 >= 8");
    Real den = lit("0.4795", prec) * n - lit("3.82175", prec);
    if (den.sgn() <= 0) throw domain_error("gap_n2_bound: nonpositive denominator");
    return (n + lit("1.1", prec)) * (lit("3.5205", prec) * n + lit("4.75675", prec)) / den -
           lit("1.1", prec);
  }
  if (n1 < 9) throw domain_error("gap_n2_bound: ts variant needs n1 >= 9");
  Real den = lit("0.4853", prec) * n - lit("3.85292", prec);
  if (den.sgn() <= 0) throw domain_error("gap_n2_bound: nonpositive denominator");
  return (n + Real(1.0, prec)) * (lit("2.5147", prec) * n + lit("5.11467", prec)) / den -
         Real(1.0, prec);
}

LaurentParams laurent_params(const Real& h, long prec) {
  LaurentParams P{Real(prec), Real(prec), Real(prec), Real(prec), Real(prec),
                  Real(prec), Real(prec), Real(prec), Real(prec)};
  P.rho = lit("8.2", prec);
  P.mu = lit("0.48", prec);
  Real one(1.0, prec), two(2.0, prec);
  P.sigma = (one + two * P.mu - P.mu * P.mu) / two;
  P.lambda = P.sigma * log(P.rho);
  P.h = h;
  P.H = h / P.lambda;
  Real t = sqrt(one + one / (Real(4.0, prec) * P.H * P.H));
  P.omega = two * (one + t);
  P.theta = t + one / (two * P.H);
  Real L5 = log(lit("1e5", prec));
  Real inner = P.omega * P.omega / Real(9.0, prec) +
               Real(16.0, prec) * P.lambda * pow(P.omega, lit("1.25", prec)) *
                   pow(P.theta, lit("0.25", prec)) /
                   (Real(3.0, prec) * (P.rho + Real(3.0, prec)) * sqrt(P.H) * L5) +
               Real(16.0, prec) * P.lambda * P.omega /
                   (Real(3.0, prec) * (P.rho + Real(3.0, prec)) * P.H * L5);
  Real root = sqrt(inner) / two;
  Real base = P.omega / Real(6.0, prec) + root;
  P.C0 = base * base;
  return P;
}

Real laurent_B(const Real& h, long prec) {
  LaurentParams P = laurent_params(h, prec);
  Real L5 = log(lit("1e5", prec));
  Real rp3 = P.rho + Real(3.0, prec);
  Real t1 = P.C0 * P.mu / (P.lambda * P.lambda * P.lambda * P.sigma) * rp3 * rp3 * h * h;
  Real t2 = (Real(2.0, prec) * sqrt(P.omega * P.theta) * h +
             Real(2.0, prec) * log(sqrt(P.C0 * P.omega * P.theta) * rp3 * rp3 /
                                   (P.lambda * P.lambda * P.lambda)) +
             Real(4.0, prec) * log(h)) /
            (L5 * L5);
  return t1 + t2 + Real(1.0, prec);
}

Real laurent_h(const Real& X, long prec) {
  LaurentParams P = laurent_params(Real(10.0, prec), prec);  // only rho/mu/lambda needed
  return Real(4.0, prec) * log(Real(2.0, prec) * X + Real(1.0, prec)) +
         Real(4.0, prec) * log(P.lambda / (P.rho + Real(3.0, prec))) + lit("7.06", prec) +
         log(P.rho);
}

BoundReport laurent_apply(const Real& hint, const Real& multiplier, bool fixed_point, long prec) {
  BoundReport rep{"laurent", {}, true, Real(prec), ""};
  rep.inputs = {{"hint", hint.str()}, {"multiplier", multiplier.str()}};
  Real X = multiplier * laurent_B(laurent_h(hint, prec), prec);
  if (fixed_point) {
    Real tol = lit("1e-9", prec);
    for (int i = 0; i < 64; ++i) {
      Real Xn = multiplier * laurent_B(laurent_h(X, prec), prec);
      Real rel = abs(Xn - X) / X;
      X = Xn;
      if (rel < tol) {
        rep.notes = "fixed point after " + std::to_string(i + 1) + " iterations";
        rep.bound = X;
        return rep;
      }
    }
    throw domain_error("laurent_apply: fixed point did not converge");
  }
  rep.bound = X;
  return rep;
}

Real alpha_gap(const Integer& a0, const Integer& b0, const Integer& c0, const Real& rho,
               const Real& L, long prec) {
  if (a0 < 1 || b0 < 1 || c0 < 1) throw domain_error("alpha_gap: a0,b0,c0 >= 1");
  Real one(1.0, prec), two(2.0, prec), four(4.0, prec);
  Real lam = sqrt(rz(a0, prec) + four) / sqrt(rho * rz(a0, prec) + four);
  Real b0r = rz(b0, prec), c0r = rz(c0, prec);
  auto ok = [&](const Real& al) {
    Real c1 = al * al + (one + two / (b0r * c0r)) * al;
    if (c1 > one) return false;
    Real c2 = four * (one - one / (L * L)) * al * al +
              al * (b0r * (lam + one / sqrt(rho)) + two / c0r * (lam + sqrt(rho)));
    return !(c2 > b0r);
  };
  Real lo(0.0, prec), hi(1.0, prec);
  if (!ok(lo)) throw domain_error("alpha_gap: no feasible alpha");
  for (int i = 0; i < 4 * 64; ++i) {
    Real mid = (lo + hi) / two;
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

namespace {

// A catalog case: the inequality G(x) < R(x) in one integer variable,
// solved for the largest x where it still holds.
struct CatalogCase {
  Integer reference_value;
  Integer scan_lo, scan_hi;
  std::function<bool(const Integer&, long)> holds;
  // within_one: computed must land within 1 of the published threshold;
  // at_most: the claim is only that the crossover sits at or below reference_value
  enum class Pass { within_one, at_most } pass_mode = Pass::within_one;
};

Real powq(const Real& x, long num, long den, long p) {
  return pow(x, rz(num, p) / rz(den, p));
}

Real c_sub(const char* k, double exp_num, const Integer& b, long p) {
  return lit(k, p) * pow(rz(b, p), Real(exp_num, p));
}

const std::map<std::string, CatalogCase>& catalog() {
  static const std::map<std::string, CatalogCase> cat = [] {
    std::map<std::string, CatalogCase> m;
    auto add = [&](const std::string& id, const Integer& ref,
                   std::function<bool(const Integer&, long)> f, Integer lo = 10,
                   Integer hi = 100000000,
                   CatalogCase::Pass mode = CatalogCase::Pass::within_one) {
      m[id] = CatalogCase{ref, lo, hi, std::move(f), mode};
    };

    // d = d_+ elimination, even indices, b >= 2.21a; c at its floor 2.3 b^5
    add("prop_dplus_ee_b221a", 19289, [](const Integer& b, long p) {
      Real c = c_sub("2.3", 5.0, b, p);
      Real G = lit("0.45273", p) * powq(rz(b, p), -9, 28, p) * powq(c, 5, 28, p);
      Real R = Real(2.0, p) * log(lit("57.955", p) * pow_si(rz(b, p), 6) * c * c) *
               log(lit("0.0393", p) * c * c) /
               (log(rz(b, p) * c) * log(lit("0.0008125", p) * pow_si(rz(b, p), -4) * c));
      return G < R;
    });

    // 2a < b < 2.21a, even indices; c at 1.1 b^7.5; two competing lower bounds
    auto R_2a221 = [](const Integer& b, long p) {
      Real c = c_sub("1.1", 7.5, b, p);
      return Real(2.0, p) * log(lit("35.0627", p) * pow_si(rz(b, p), 6) * c * c) *
             log(lit("0.052", p) * c * c) /
             (log(rz(b, p) * c) * log(lit("0.0022397", p) * pow_si(rz(b, p), -3) * c));
    };
    add("prop_dplus_ee_2a221_F1", 722, [R_2a221](const Integer& b, long p) {
      Real G = lit("0.50799", p) * powq(rz(b, p), 9, 16, p);
      return G < R_2a221(b, p);
    });
    add("prop_dplus_ee_2a221_F2", 81874, [R_2a221](const Integer& b, long p) {
      Real G = lit("0.17888", p) * powq(rz(b, p), 23, 56, p);
      return G < R_2a221(b, p);
    });

    // b < 2a, even indices; c at 1.1 b^7.5
    auto R_blt2a = [](const Integer& b, long p) {
      Real c = c_sub("1.1", 7.5, b, p);
      return Real(2.0, p) * log(lit("128.08", p) * pow_si(rz(b, p), 6) * c * c) *
             log(lit("0.0000081", p) * pow_si(rz(b, p), 2) * c * c) /
             (log(rz(b, p) * c) * log(lit("0.00325", p) * pow_si(rz(b, p), -3) * c));
    };
    add("prop_dplus_ee_blt2a_F1", 1396, [R_blt2a](const Integer& b, long p) {
      Real G = lit("0.35921", p) * powq(rz(b, p), 9, 16, p);
      return G < R_blt2a(b, p);
    });
    add("prop_dplus_ee_blt2a_F2", 98413, [R_blt2a](const Integer& b, long p) {
      Real G = lit("0.17888", p) * powq(rz(b, p), 23, 56, p);
      return G < R_blt2a(b, p);
    });

    // odd indices, b >= 2a; c at 2.3 b^5
    add("prop_dplus_oo_bge2a", 97144, [](const Integer& b, long p) {
      Real c = c_sub("2.3", 5.0, b, p);
      Real G = lit("0.30921", p) * powq(rz(b, p), -3, 4, p) * powq(c, 1, 4, p);
      Real R = Real(2.0, p) * log(lit("64.04", p) * pow_si(rz(b, p), 6) * c * c) *
               log(lit("0.052", p) * c * c) /
               (log(rz(b, p) * c) * log(lit("0.0008125", p) * pow_si(rz(b, p), -4) * c));
      return G < R;
    });

    // odd indices, b < 2a; c at 1.1 b^7.5
    add("prop_dplus_oo_blt2a", 48, [R_blt2a](const Integer& b, long p) {
      Real c = c_sub("1.1", 7.5, b, p);
      Real G = lit("0.30921", p) * powq(rz(b, p), -3, 4, p) * powq(c, 1, 4, p);
      return G < R_blt2a(b, p);
    }, 3);

    auto G_n = [](const Real& c, const Integer& b, long p) {
      return lit("0.5348", p) * powq(rz(b, p), -3, 4, p) * powq(c, 1, 4, p);
    };

    add("thm15_i", 99887, [G_n](const Integer& b, long p) {
      Real c = c_sub("890", 4.0, b, p);
      Real R = Real(2.0, p) * log(lit("128.08", p) * pow_si(rz(b, p), 6) * c * c) *
               log(lit("0.0000081", p) * pow_si(rz(b, p), 2) * c * c) /
               (log(rz(b, p) * c) * log(lit("0.00325", p) * pow_si(rz(b, p), -3) * c));
      return G_n(c, b, p) < R;
    });
    add("thm15_ii", 99949, [G_n](const Integer& b, long p) {
      Real c = c_sub("1613", 4.0, b, p);
      Real R = Real(2.0, p) * log(lit("58.71", p) * pow_si(rz(b, p), 6) * c * c) *
               log(lit("0.052", p) * c * c) /
               (log(rz(b, p) * c) * log(lit("0.000087903", p) * pow_si(rz(b, p), -3) * c));
      return G_n(c, b, p) < R;
    });

    auto R_iii = [](const Real& c, const Integer& b, const Integer& a0, long p) {
      return Real(8.0, p) * log(lit("8.40335e13", p) * pow_si(rz(b, p), 3) * c) *
             log(lit("0.002579", p) * c * c) /
             (log(rz(b, p) * c) *
              log(lit("0.0042145", p) * pow_si(rz(b, p), -4) * c * rz(a0, p)));
    };
    add("thm15_iii", 99998, [G_n, R_iii](const Integer& b, long p) {
      Real c = c_sub("52761", 4.0, b, p);
      return G_n(c, b, p) < R_iii(c, b, 1, p);
    });
    add("thm15_iii_aux", 73454, [G_n, R_iii](const Integer& b, long p) {
      Real c = c_sub("39247", 4.0, b, p);
      return G_n(c, b, p) < R_iii(c, b, 42, p);
    });
    add("thm15_iii_a1", 999994, [G_n, R_iii](const Integer& b, long p) {
      Real c = c_sub("39247", 4.0, b, p);
      return G_n(c, b, p) < R_iii(c, b, 1, p);
    });

    // descent step bound: m2 = 1.999 c^8 log(sqrt(c)) against the three-log bound
    add("nprime_minus_t", 56, [](const Integer& c, long p) {
      Real cr = rz(c, p);
      Real m2 = lit("1.999", p) * pow_si(cr, 8) * log(sqrt(cr));
      Real lhs = m2 / log(lit("38.92", p) * (m2 + Real(1.0, p)));
      Real rhs = lit("2.81e12", p) * log(cr) * log(cr / Real(2.0, p));
      return lhs < rhs;
    }, 3, 1000000);

    // m ~ c^5 regime: the inequality dies before c reaches 1e5
    add("prop_m0", 100000, [](const Integer& c, long p) {
      Real cr = rz(c, p);
      Real c5 = pow_si(cr, 5);
      Real lhs = c5 / log(lit("38.92", p) * (c5 + Real(1.0, p)));
      Real rhs = lit("2.7717e12", p) * log(cr) * log(cr);
      return lhs < rhs;
    }, 3, 10000000, CatalogCase::Pass::at_most);

    return m;
  }();
  return cat;
}

}  // namespace

std::vector<std::string> threshold_catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : catalog()) ids.push_back(id);
  return ids;
}

Integer threshold_solve(const std::string& case_id, long prec) {
  auto it = catalog().find(case_id);
  if (it == catalog().end()) throw domain_error("threshold_solve: unknown case " + case_id);
  const CatalogCase& cc = it->second;
  Integer lo = cc.scan_lo;
  // the inequality region need not start at scan_lo; walk up to its onset first
  while (lo < cc.scan_hi && !cc.holds(lo, prec)) lo *= 2;
  if (lo >= cc.scan_hi) throw domain_error("threshold_solve: inequality never holds in range");
  Integer hi = cc.scan_hi;
  if (cc.holds(hi, prec)) throw domain_error("threshold_solve: inequality still holds at range top");
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (cc.holds(mid, prec))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

ThresholdEntry threshold_entry(const std::string& case_id, long prec) {
  const CatalogCase& cc = catalog().at(case_id);
  Integer got = threshold_solve(case_id, prec);
  bool pass;
  if (cc.pass_mode == CatalogCase::Pass::at_most) {
    pass = got <= cc.reference_value;
  } else {
    Integer diff = got - cc.reference_value;
    pass = diff >= -1 && diff <= 1;
  }
  return ThresholdEntry{case_id, cc.reference_value, got, pass};
}

std::vector<ThresholdEntry> threshold_catalog(long prec) {
  std::vector<ThresholdEntry> out;
  for (const auto& [id, _] : catalog()) out.push_back(threshold_entry(id, prec));
  return out;
}

}  // namespace d4
