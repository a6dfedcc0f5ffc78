#include "d4/arith.hpp"

#include <cstring>

namespace d4 {

std::string dec_str(const Integer& n) { return n.get_str(); }

Integer parse_integer(const std::string& s) {
  Integer n;
  if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
    throw domain_error("not a decimal integer: '" + s + "'");
  return n;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw domain_error("isqrt of negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::pair<bool, Integer> is_perfect_square(const Integer& n) {
  if (n < 0) return {false, 0};
  // GMP runs fast residue filters before committing to a root extraction.
  if (!mpz_perfect_square_p(n.get_mpz_t())) return {false, 0};
  Integer r = isqrt(n);
  return {true, r};
}

long default_prec() {
  static long p = [] {
    long v = 256;
    if (const char* e = std::getenv("D4LAB_PREC")) {
      long parsed = std::atol(e);
      if (parsed > 0) v = parsed;
    }
    return v < 64 ? 64 : v;
  }();
  return p;
}

std::string Real::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real log(const Real& x) {
  Real r(x.prec());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real exp(const Real& x) {
  Real r(x.prec());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
Real pow_si(const Real& x, long e) {
  Real r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Interval Interval::exact(const Integer& n, long prec) {
  Real lo(prec), hi(prec);
  mpfr_set_z(lo.raw(), n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.raw(), n.get_mpz_t(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::of_sqrt(const Integer& n, long prec) {
  if (n < 0) throw domain_error("sqrt of negative number");
  Interval x = exact(n, prec);
  Real lo(prec), hi(prec);
  mpfr_sqrt(lo.raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_sqrt(hi.raw(), x.hi().raw(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::operator+(const Interval& o) const {
  long p = std::max(prec(), o.prec());
  Real lo(p), hi(p);
  mpfr_add(lo.raw(), lo_.raw(), o.lo_.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), hi_.raw(), o.hi_.raw(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::operator-(const Interval& o) const {
  long p = std::max(prec(), o.prec());
  Real lo(p), hi(p);
  mpfr_sub(lo.raw(), lo_.raw(), o.hi_.raw(), MPFR_RNDD);
  mpfr_sub(hi.raw(), hi_.raw(), o.lo_.raw(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::operator*(const Interval& o) const {
  long p = std::max(prec(), o.prec());
  mpfr_t cand, best_lo, best_hi;
  mpfr_init2(cand, p);
  mpfr_init2(best_lo, p);
  mpfr_init2(best_hi, p);
  bool first = true;
  const mpfr_srcptr xs[2] = {lo_.raw(), hi_.raw()};
  const mpfr_srcptr ys[2] = {o.lo_.raw(), o.hi_.raw()};
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(cand, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(cand, best_lo) < 0) mpfr_set(best_lo, cand, MPFR_RNDD);
      mpfr_mul(cand, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(cand, best_hi) > 0) mpfr_set(best_hi, cand, MPFR_RNDU);
      first = false;
    }
  Real lo(p), hi(p);
  mpfr_set(lo.raw(), best_lo, MPFR_RNDD);
  mpfr_set(hi.raw(), best_hi, MPFR_RNDU);
  mpfr_clears(cand, best_lo, best_hi, (mpfr_ptr) nullptr);
  return Interval(lo, hi);
}

Interval Interval::operator/(const Interval& o) const {
  if (o.certified_sign() == 0) throw precision_exhausted("interval division by interval containing 0");
  long p = std::max(prec(), o.prec());
  mpfr_t cand, best_lo, best_hi;
  mpfr_init2(cand, p);
  mpfr_init2(best_lo, p);
  mpfr_init2(best_hi, p);
  bool first = true;
  const mpfr_srcptr xs[2] = {lo_.raw(), hi_.raw()};
  const mpfr_srcptr ys[2] = {o.lo_.raw(), o.hi_.raw()};
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_div(cand, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(cand, best_lo) < 0) mpfr_set(best_lo, cand, MPFR_RNDD);
      mpfr_div(cand, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(cand, best_hi) > 0) mpfr_set(best_hi, cand, MPFR_RNDU);
      first = false;
    }
  Real lo(p), hi(p);
  mpfr_set(lo.raw(), best_lo, MPFR_RNDD);
  mpfr_set(hi.raw(), best_hi, MPFR_RNDU);
  mpfr_clears(cand, best_lo, best_hi, (mpfr_ptr) nullptr);
  return Interval(lo, hi);
}

Interval Interval::log_() const {
  if (lo_.sgn() <= 0) throw domain_error("interval log needs a positive interval");
  Real lo(prec()), hi(prec());
  mpfr_log(lo.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_log(hi.raw(), hi_.raw(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval Interval::sqrt_() const {
  if (lo_.sgn() < 0) throw domain_error("interval sqrt needs a nonnegative interval");
  Real lo(prec()), hi(prec());
  mpfr_sqrt(lo.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_sqrt(hi.raw(), hi_.raw(), MPFR_RNDU);
  return Interval(lo, hi);
}

bool Interval::certified_floor(Integer& out) const {
  Integer fl = lo_.floor();
  Integer fh = hi_.floor();
  if (fl != fh) return false;
  out = fl;
  return true;
}

Interval Interval::dist_to_nearest_int() const {
  Integer nl = lo_.round_nearest();
  Integer nh = hi_.round_nearest();
  if (nl != nh) throw precision_exhausted("dist_to_nearest_int: nearest integer uncertified");
  Interval d = *this - Interval::exact(nl, prec());
  Real alo(prec()), ahi(prec());
  // |d| for an interval that may straddle 0
  if (d.certified_sign() > 0) return d;
  if (d.certified_sign() < 0) return -d;
  mpfr_set_zero(alo.raw(), 1);
  mpfr_max(ahi.raw(), (-d.lo()).raw(), d.hi().raw(), MPFR_RNDU);
  return Interval(alo, ahi);
}

std::vector<Integer> continued_fraction(Interval x, int depth) {
  if (depth < 1) throw domain_error("continued_fraction: depth must be >= 1");
  if (x.lo().sgn() <= 0) throw domain_error("continued_fraction: x must be positive");
  std::vector<Integer> out;
  out.reserve(depth);
  for (int k = 0; k < depth; ++k) {
    Integer a;
    if (!x.certified_floor(a)) throw precision_exhausted("continued_fraction: quotient uncertified");
    out.push_back(a);
    if (k + 1 == depth) break;
    Interval frac = x - Interval::exact(a, x.prec());
    if (frac.certified_sign() <= 0)
      throw precision_exhausted("continued_fraction: fractional part sign uncertified");
    Interval one = Interval::exact(1, x.prec());
    x = one / frac;
  }
  return out;
}

std::vector<Rational> convergents(const std::vector<Integer>& q) {
  if (q.empty()) throw domain_error("convergents: empty quotient list");
  std::vector<Rational> out;
  out.reserve(q.size());
  Integer pm1 = 1, pm2 = 0;  // p_{k-1}, p_{k-2}
  Integer qm1 = 0, qm2 = 1;
  for (const Integer& a : q) {
    Integer p = a * pm1 + pm2;
    Integer qq = a * qm1 + qm2;
    out.emplace_back(Rational(p, qq));
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = qq;
  }
  return out;
}

}  // namespace d4
