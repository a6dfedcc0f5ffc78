#pragma once

#include <functional>
#include <string>
#include <vector>

#include "d4/pell.hpp"

namespace d4 {

// One linear form m log(xi) - n log(eta) + log(mu), normalized by log(eta):
//   kappa = log(xi)/log(eta), mu_hat = log(mu)/log(eta),
//   A = kappa0/log(eta), B = xi^2, M = current index bound.
struct ReductionProblem {
  D4Triple triple;
  PellClassA class_a;
  PellClassB class_b;
  Integer M;

  Interval kappa(long prec) const;
  Interval mu_hat(long prec) const;
  Interval A(long prec) const;
  Interval B(long prec) const;
};

ReductionProblem build_problem(const D4Triple& t, const PellClassA& A, const PellClassB& B,
                               const Integer& M);

enum class ReduceStatus { reduced, failed_epsilon, precision_retry };

struct ReductionResult {
  Integer new_M;
  Integer q_used;
  Real epsilon;
  ReduceStatus status;
};

// One Dujella-Petho style step on generic evaluators (each re-evaluates its
// quantity at the requested precision). Tries up to `attempts` convergent
// denominators q > 6M and escalates precision internally up to max_prec.
ReductionResult bd_reduce_values(const std::function<Interval(long)>& kappa,
                                 const std::function<Interval(long)>& mu_hat,
                                 const std::function<Interval(long)>& A,
                                 const std::function<Interval(long)>& B, const Integer& M,
                                 long start_prec = default_prec(), long max_prec = 16384,
                                 int attempts = 10);

ReductionResult bd_reduce(const ReductionProblem& p, long start_prec = default_prec());

// Bounded search for an integer relation xi^i = eta^j (exponents up to
// `max_exp`); returns false when a candidate relation survives the interval
// test, true otherwise.
bool multiplicatively_independent(const D4Triple& t, int max_exp = 20,
                                  long prec = 512);

struct CampaignEntry {
  size_t ia, ib;
  Integer final_M;
  int rounds;
  ReduceStatus status;
};

// Runs bd_reduce per class pair to a fixpoint. When checkpoint_path is
// nonempty, finished pairs are appended there as JSON lines and already
// recorded pairs are replayed instead of recomputed.
std::vector<CampaignEntry> bd_campaign(const D4Triple& t, const Integer& M0,
                                       const std::string& checkpoint_path = "",
                                       long start_prec = default_prec());

}  // namespace d4
