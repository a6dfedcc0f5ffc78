#pragma once

#include <map>
#include <string>
#include <vector>

#include "d4/tuples.hpp"

namespace d4 {

struct BoundReport {
  std::string kind;
  std::map<std::string, std::string> inputs;
  bool precondition_ok;
  Real bound;
  std::string notes;
};

// Simultaneous-approximation index bounds; both take natural logs throughout.
BoundReport rickert_bound(const Integer& a, const Integer& b, const Integer& c,
                          long prec = default_prec());
BoundReport rickert2_bound(const Integer& a, const Integer& b, const Integer& c,
                           long prec = default_prec());

// 11796480 e^4 D^2 log(3^5.5 e^20.2 D^2 log(e D))
Real matveev_C(long D, long prec = default_prec());

// Largest m with m / log(38.92 (m+1)) < 2.7717e12 * log(eta) * log(c),
// eta = (t + sqrt(bc))/2.
Integer matveev_m_bound(const D4Triple& t, long prec = default_prec());

struct KappaDelta {
  Real kappa;
  int delta;
  int clause;  // 1..4
};

// clause 1: fundamental solutions inside the standard ranges;
// clause 2: |z0| = 2;  clause 3: z0 = t;  clause 4: z0 = -t (needs c > ab+a+b).
KappaDelta kappa_delta(int clause, const D4Triple& t, long prec = default_prec());

// kappa^{-1} (ac)^{m0 - delta} * Delta * log(eta)
Real okazaki_gap(long m0, int delta, const Real& kappa, const D4Triple& t, const Integer& Delta);

struct PadeReport {
  bool precondition_ok;
  Real lambda;       // approximation exponent, in (1,2) when useful
  Real coefficient;  // (512.01 a1' a2 u N / a1)^{-1}
  Integer a1, a2, N;
};

PadeReport pade_lambda(const Integer& a, const Integer& b, const Integer& c, const Integer& z,
                       long prec = default_prec());

enum class GapVariant { general, ts_class };

Real gap_n2_bound(long n1, GapVariant variant, long prec = default_prec());

struct LaurentParams {
  Real rho, mu, sigma, lambda, h, H, omega, theta, C0;
};

LaurentParams laurent_params(const Real& h, long prec = default_prec());

// B(h): the two-log bound evaluated at the given h.
Real laurent_B(const Real& h, long prec = default_prec());

// h as a function of the quantity X being bounded.
Real laurent_h(const Real& X, long prec = default_prec());

// Evaluates multiplier * B(h(hint)). With fixed_point, iterates
// X <- multiplier * B(h(X)) from the hint until relatively stable.
BoundReport laurent_apply(const Real& hint, const Real& multiplier, bool fixed_point = false,
                          long prec = default_prec());

// Largest alpha meeting both quadratic constraints of the m-lower-bound
// lemma, by bisection.
Real alpha_gap(const Integer& a0, const Integer& b0, const Integer& c0, const Real& rho,
               const Real& L, long prec = default_prec());

struct ThresholdEntry {
  std::string case_id;
  Integer reference_value;  // the published threshold this computation targets
  Integer computed;     // largest integer where the case inequality still holds
  bool pass;            // |computed - reference_value| <= 1
};

std::vector<std::string> threshold_catalog_ids();
Integer threshold_solve(const std::string& case_id, long prec = default_prec());
ThresholdEntry threshold_entry(const std::string& case_id, long prec = default_prec());
std::vector<ThresholdEntry> threshold_catalog(long prec = default_prec());

}  // namespace d4
