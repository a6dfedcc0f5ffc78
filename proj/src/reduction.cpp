#include "d4/reduction.hpp"

#include <fstream>
#include <json.hpp>
#include <map>

namespace d4 {

namespace {

using nlohmann::json;

Interval iv_int(const Integer& n, long p) { return Interval::exact(n, p); }

Interval xi_iv(const D4Triple& t, long p) {
  return (iv_int(t.s, p) + Interval::of_sqrt(t.a() * t.c, p)) / iv_int(2, p);
}

Interval eta_iv(const D4Triple& t, long p) {
  return (iv_int(t.t, p) + Interval::of_sqrt(t.b() * t.c, p)) / iv_int(2, p);
}

// quotients of x until certification fails or max_depth reached
std::vector<Integer> cf_prefix(Interval x, int max_depth) {
  std::vector<Integer> out;
  for (int k = 0; k < max_depth; ++k) {
    Integer a;
    if (!x.certified_floor(a)) break;
    out.push_back(a);
    Interval frac = x - Interval::exact(a, x.prec());
    if (frac.certified_sign() <= 0) break;
    x = Interval::exact(1, x.prec()) / frac;
  }
  return out;
}

}  // namespace

Interval ReductionProblem::kappa(long prec) const {
  return xi_iv(triple, prec).log_() / eta_iv(triple, prec).log_();
}

Interval ReductionProblem::mu_hat(long prec) const {
  const D4Triple& t = triple;
  Interval sa = Interval::of_sqrt(t.a(), prec);
  Interval sb = Interval::of_sqrt(t.b(), prec);
  Interval sc = Interval::of_sqrt(t.c, prec);
  Interval num = sb * (iv_int(class_a.x0, prec) * sc + iv_int(class_a.z0, prec) * sa);
  Interval den = sa * (iv_int(class_b.y1, prec) * sc + iv_int(class_b.z1, prec) * sb);
  Interval mu = num / den;
  return mu.log_() / eta_iv(t, prec).log_();
}

Interval ReductionProblem::A(long prec) const {
  const D4Triple& t = triple;
  Interval diff = iv_int(class_a.z0, prec) * Interval::of_sqrt(t.a(), prec) -
                  iv_int(class_a.x0, prec) * Interval::of_sqrt(t.c, prec);
  Interval kappa0 = diff * diff / iv_int(2 * (t.c - t.a()), prec);
  return kappa0 / eta_iv(t, prec).log_();
}

Interval ReductionProblem::B(long prec) const {
  Interval xi = xi_iv(triple, prec);
  return xi * xi;
}

ReductionProblem build_problem(const D4Triple& t, const PellClassA& A, const PellClassB& B,
                               const Integer& M) {
  return ReductionProblem{t, A, B, M};
}

ReductionResult bd_reduce_values(const std::function<Interval(long)>& kappa,
                                 const std::function<Interval(long)>& mu_hat,
                                 const std::function<Interval(long)>& A,
                                 const std::function<Interval(long)>& B, const Integer& M,
                                 long start_prec, long max_prec, int attempts) {
  if (M < 1) throw domain_error("bd_reduce: M >= 1 required");
  for (long p = start_prec; p <= max_prec; p *= 2) {
    try {
      Interval k = kappa(p), mh = mu_hat(p), Av = A(p), Bv = B(p);
      auto quots = cf_prefix(k, 2000);
      auto convs = convergents(quots);
      int tried = 0;
      Integer last_q = 0;
      Real last_eps(p);
      bool saw_eps = false;
      for (const auto& pq : convs) {
        Integer q = pq.get_den();
        if (q <= 6 * M) continue;
        if (tried >= attempts) break;
        ++tried;
        last_q = q;
        Interval qi = iv_int(q, p);
        Interval dk = (k * qi).dist_to_nearest_int();
        Interval dm = (mh * qi).dist_to_nearest_int();
        Interval eps = dm - iv_int(M, p) * dk;
        int sg = eps.certified_sign();
        if (sg == 0) throw precision_exhausted("bd_reduce: epsilon sign uncertified");
        last_eps = eps.lo();
        saw_eps = true;
        if (sg < 0) continue;
        Interval val = (Av * qi / eps).log_() / Bv.log_();
        Integer nm;
        if (!val.certified_floor(nm)) throw precision_exhausted("bd_reduce: new M uncertified");
        if (nm < 0) nm = 0;
        return ReductionResult{nm, q, eps.lo(), ReduceStatus::reduced};
      }
      if (tried == 0) throw precision_exhausted("bd_reduce: not enough certified convergents");
      return ReductionResult{M, last_q, saw_eps ? last_eps : Real(p),
                             ReduceStatus::failed_epsilon};
    } catch (const precision_exhausted&) {
      if (p * 2 > max_prec) throw;
    }
  }
  throw precision_exhausted("bd_reduce: precision cap reached");
}

ReductionResult bd_reduce(const ReductionProblem& p, long start_prec) {
  return bd_reduce_values([&](long q) { return p.kappa(q); },
                          [&](long q) { return p.mu_hat(q); }, [&](long q) { return p.A(q); },
                          [&](long q) { return p.B(q); }, p.M, start_prec);
}

bool multiplicatively_independent(const D4Triple& t, int max_exp, long prec) {
  Interval lx = xi_iv(t, prec).log_();
  Interval le = eta_iv(t, prec).log_();
  for (int i = 1; i <= max_exp; ++i)
    for (int j = 1; j <= max_exp; ++j) {
      // xi^i = eta^j  <=>  i log xi - j log eta = 0
      Interval rel = iv_int(i, prec) * lx - iv_int(j, prec) * le;
      if (rel.certified_sign() == 0) return false;
    }
  return true;
}

std::vector<CampaignEntry> bd_campaign(const D4Triple& t, const Integer& M0,
                                       const std::string& checkpoint_path, long start_prec) {
  auto as = enumerate_classes_A(t);
  auto bs = enumerate_classes_B(t);

  std::map<std::pair<size_t, size_t>, CampaignEntry> done;
  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line);
      if (j.value("a", "") != dec_str(t.a()) || j.value("b", "") != dec_str(t.b()) ||
          j.value("c", "") != dec_str(t.c) || j.value("M0", "") != dec_str(M0))
        continue;
      CampaignEntry e;
      e.ia = j.at("ia").get<size_t>();
      e.ib = j.at("ib").get<size_t>();
      e.final_M = parse_integer(j.at("M").get<std::string>());
      e.rounds = j.at("rounds").get<int>();
      e.status = j.at("status").get<std::string>() == "reduced" ? ReduceStatus::reduced
                                                                : ReduceStatus::failed_epsilon;
      done[{e.ia, e.ib}] = e;
    }
  }

  std::vector<CampaignEntry> out;
  std::ofstream ck;
  if (!checkpoint_path.empty()) ck.open(checkpoint_path, std::ios::app);

  for (size_t ia = 0; ia < as.size(); ++ia)
    for (size_t ib = 0; ib < bs.size(); ++ib) {
      if (auto it = done.find({ia, ib}); it != done.end()) {
        out.push_back(it->second);
        continue;
      }
      Integer M = M0;
      int rounds = 0;
      ReduceStatus status = ReduceStatus::reduced;
      while (true) {
        ReductionProblem prob = build_problem(t, as[ia], bs[ib], M);
        ReductionResult res = bd_reduce(prob, start_prec);
        ++rounds;
        if (res.status != ReduceStatus::reduced) {
          status = res.status;
          break;
        }
        if (res.new_M >= M) break;  // fixpoint
        M = res.new_M;
        if (M < 1) break;
        if (rounds > 64) break;
      }
      CampaignEntry e{ia, ib, M, rounds, status};
      out.push_back(e);
      if (ck.is_open()) {
        json j{{"a", dec_str(t.a())},  {"b", dec_str(t.b())},
               {"c", dec_str(t.c)},    {"M0", dec_str(M0)},
               {"ia", ia},             {"ib", ib},
               {"M", dec_str(e.final_M)}, {"rounds", e.rounds},
               {"status", e.status == ReduceStatus::reduced ? "reduced" : "failed_epsilon"}};
        ck << j.dump() << "\n";
      }
    }
  return out;
}

}  // namespace d4
