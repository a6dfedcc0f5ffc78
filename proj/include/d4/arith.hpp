#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace d4 {

// Exact arbitrary-precision signed integer.
using Integer = mpz_class;
// Exact rational, kept in lowest terms by GMP.
using Rational = mpq_class;

std::string dec_str(const Integer& n);
Integer parse_integer(const std::string& s);

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when the working precision cannot certify a result; the caller
// is expected to retry at higher precision.
struct precision_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// floor(sqrt(n)), exact. Throws domain_error for n < 0.
Integer isqrt(const Integer& n);

// (flag, root): flag true iff n == root^2 with root >= 0.
std::pair<bool, Integer> is_perfect_square(const Integer& n);

// Default precision in bits: D4LAB_PREC env var, else 256. Always >= 64.
long default_prec();

// A real number carried at an explicit binary precision (MPFR, round to
// nearest). Arithmetic results take the larger precision of the operands.
class Real {
 public:
  explicit Real(long prec = default_prec()) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(double x, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(const Integer& n, long prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN); }
  Real(const char* s, long prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s, 10, MPFR_RNDN) != 0) throw domain_error(std::string("bad real literal: ") + s);
  }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  long prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 20) const;
  int sgn() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // Largest integer <= value.
  Integer floor() const {
    Integer r;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_floor(t, v_);
    mpfr_get_z(r.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
  }
  Integer round_nearest() const {
    Integer r;
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_round(t, v_);
    mpfr_get_z(r.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
  Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

 private:
  using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real bin(const Real& a, const Real& b, BinOp op) {
    Real r(std::max(a.prec(), b.prec()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow_si(const Real& x, long e);

inline Real real_of(const Integer& n, long prec = default_prec()) { return Real(n, prec); }
inline Real real_of(double x, long prec = default_prec()) { return Real(x, prec); }

// Closed interval [lo, hi] with outward (directed) rounding; used where an
// inequality or an integer part must be certified rather than estimated.
class Interval {
 public:
  Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (mpfr_cmp(lo_.raw(), hi_.raw()) > 0) throw domain_error("interval: lo > hi");
  }
  static Interval exact(const Integer& n, long prec);
  static Interval of_sqrt(const Integer& n, long prec);  // [sqrt(n)] outward
  static Interval point(const Real& x) { return Interval(x, x); }

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  long prec() const { return lo_.prec(); }
  double mid() const { return (lo_.to_double() + hi_.to_double()) / 2; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // requires 0 not in o
  Interval operator-() const { return Interval(-hi_, -lo_); }

  Interval log_() const;   // requires lo > 0
  Interval sqrt_() const;  // requires lo >= 0

  // Sign certified: +1 if lo > 0, -1 if hi < 0, 0 if the interval straddles 0.
  int certified_sign() const {
    if (lo_.sgn() > 0) return 1;
    if (hi_.sgn() < 0) return -1;
    return 0;
  }
  // floor certified iff floor(lo) == floor(hi).
  bool certified_floor(Integer& out) const;
  // Distance to the nearest integer, certified to share that nearest integer
  // across the interval; throws precision_exhausted otherwise.
  Interval dist_to_nearest_int() const;

 private:
  Real lo_, hi_;
};

// Partial quotients of a positive real given by an interval evaluator
// f(prec) -> Interval. Retries internally with doubled precision up to
// max_prec; throws precision_exhausted if a quotient cannot be certified.
template <typename F>
std::vector<Integer> continued_fraction(F eval, int depth, long start_prec = default_prec(),
                                        long max_prec = 16384);

// Single-shot variant on a fixed interval; throws precision_exhausted when
// the interval is too wide to certify `depth` quotients.
std::vector<Integer> continued_fraction(Interval x, int depth);

// Convergents p_k/q_k of a quotient list; denominators strictly increase
// from k >= 1.
std::vector<Rational> convergents(const std::vector<Integer>& quotients);

template <typename F>
std::vector<Integer> continued_fraction(F eval, int depth, long start_prec, long max_prec) {
  for (long p = start_prec; p <= max_prec; p *= 2) {
    try {
      return continued_fraction(eval(p), depth);
    } catch (const precision_exhausted&) {
      if (p * 2 > max_prec) throw;
    }
  }
  throw precision_exhausted("continued_fraction: precision cap reached");
}

}  // namespace d4
