#include "seshadri/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace seshadri {

std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::ThmA: return "thm_a";
    case BoundMethod::ThmB: return "thm_b";
    case BoundMethod::Cor13: return "cor13";
    case BoundMethod::ExactRank1: return "exact_rank1";
  }
  throw std::logic_error("to_string: bad BoundMethod");
}

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::WindowEmpty: return "window empty";
    case AuditStatus::Adjunction: return "adjunction";
    case AuditStatus::Killed: return "killed";
    case AuditStatus::Unkilled: return "unkilled";
    case AuditStatus::Realized: return "realized";
  }
  throw std::logic_error("to_string: bad AuditStatus");
}

namespace {

// Every certified value must stay weakly below the trivial upper bound.
void check_limit(const Rational& eps_sq, const SurfaceData& s, int n) {
  if (eps_sq > Rational(s.l2, n))
    throw std::logic_error("bound exceeds the trivial limit L^2/n");
}

std::vector<AuditEntry> audit_from_enumeration(const SurfaceData& s, const CandidateSet& cs,
                                               const CertificateStore& store, bool* all_killed,
                                               bool* special_killed) {
  std::vector<AuditEntry> audit;
  *all_killed = true;
  *special_killed = true;
  for (const auto& rej : cs.rejections) {
    AuditEntry e;
    e.m = rej.m;
    e.k = rej.k;
    e.degree = rej.degree;
    e.status = rej.reason == RejectReason::WindowEmpty ? AuditStatus::WindowEmpty
                                                       : AuditStatus::Adjunction;
    audit.push_back(std::move(e));
  }
  for (const auto& c : cs.classes) {
    AuditEntry e;
    e.m = c.m;
    e.k = c.k;
    e.degree = c.degree;
    e.ratio = c.ratio;
    std::optional<CertificateStore::Lookup> killer =
        c.k == 0 ? store.best_uniform(s, c.m, c.n, /*for_alpha0=*/true)
                 : store.best_almost_uniform(s, c.m, c.k, c.n);
    // A bound alpha0 > t g (certified as bound_sq > t^2 in units of g^2)
    // leaves no curve that could realize the class.
    if (killer && killer->bound_sq > Rational(c.degree * c.degree)) {
      e.status = AuditStatus::Killed;
      e.certificate = killer->source;
      e.cert_bound_sq = killer->bound_sq;
    } else {
      e.status = AuditStatus::Unkilled;
      *all_killed = false;
      if (c.m == 1 && c.k == -1) *special_killed = false;
    }
    audit.push_back(std::move(e));
  }
  return audit;
}

}  // namespace

BoundOutcome bound_thm_a(const SurfaceData& s, int n, const Rational& mu,
                         const CertificateStore& store, bool use_mu_prime) {
  if (n < 3) throw std::domain_error("bound_thm_a: n must be >= 3");
  BoundOutcome out;
  out.report = check_hypotheses(TheoremId::A, s, n, mu, store);
  if (!out.report.passed()) return out;

  BoundResult r;
  r.n = n;
  r.method = BoundMethod::ThmA;
  Rational limit(s.l2, n);
  if (!use_mu_prime) {
    r.epsilon_lower_sq = limit * (Rational(1) - (Rational(Int(n) - 2) * mu).reciprocal());
    r.strict = true;
  } else {
    Rational mu_prime = mu * Rational(Int(n) - 1, Int(n) + 1);
    if (mu_prime < Rational(1))
      throw std::domain_error("bound_thm_a: mu (n-1)/(n+1) must be >= 1 for the mu' variant");
    r.epsilon_lower_sq = limit * (Rational(1) - (Rational(n) * mu_prime).reciprocal());
    r.strict = false;
  }
  check_limit(r.epsilon_lower_sq, s, n);
  out.bound = std::move(r);
  return out;
}

BoundOutcome bound_thm_b(const SurfaceData& s, int n, const Rational& mu,
                         const CertificateStore& store, const EnumOptions& opts) {
  BoundOutcome out;
  out.report = check_hypotheses(TheoremId::B, s, n, mu, store);

  CandidateSet cs = enumerate_homogeneous(s, n, EnumParams::from_mu(mu, n), opts);
  bool all_killed = true;
  bool special_killed = true;
  out.audit = audit_from_enumeration(s, cs, store, &all_killed, &special_killed);

  // Either route certifies that F(delta) is nef: the hypothesis rows
  // cover every family the enumeration can produce except m = -k = 1
  // (those must be killed individually), or every enumerated class is
  // killed outright.
  bool emit = (out.report.passed() && special_killed) || all_killed;
  if (!emit) return out;

  BoundResult r;
  r.n = n;
  r.method = BoundMethod::ThmB;
  r.epsilon_lower_sq =
      Rational(s.l2, n) * (Rational(1) - (Rational(n) * mu).reciprocal());
  r.strict = false;
  r.audit = std::move(out.audit);
  check_limit(r.epsilon_lower_sq, s, n);
  out.bound = std::move(r);
  return out;
}

BoundResult cor13_bound(long long n) {
  if (n < 16) throw std::domain_error("cor13_bound: requires n >= 16");
  Int nn(n);
  Int q = isqrt_floor(nn);
  Int mu1 = 1 + q * (q - 3) / 2;
  Rational term1(nn * mu1 - 1, nn * nn * mu1);
  Rational term2(21 * nn - 1, 21 * nn * nn);
  BoundResult r;
  r.n = static_cast<int>(n);
  r.method = BoundMethod::Cor13;
  r.epsilon_lower_sq = std::max(term1, term2);
  r.strict = false;
  check_limit(r.epsilon_lower_sq, SurfaceData::p2(), r.n);
  return r;
}

BoundResult exact_epsilon_result(const SurfaceData& s, const CandidateClass& c) {
  Rational eps = exact_epsilon_rank1(s, c);
  BoundResult r;
  r.n = c.n;
  r.method = BoundMethod::ExactRank1;
  r.epsilon_lower_sq = eps.squared();
  r.strict = false;
  r.exact = true;
  AuditEntry e;
  e.m = c.m;
  e.k = c.k;
  e.degree = c.degree;
  e.ratio = c.ratio;
  e.status = AuditStatus::Realized;
  e.certificate = "caller-certified abnormal curve";
  r.audit.push_back(std::move(e));
  check_limit(r.epsilon_lower_sq, s, c.n);
  return r;
}

AmpleDecision ample_check(long long n, long long t, long long m) {
  if (t < 1 || m < 1) throw std::invalid_argument("ample_check: t and m must be >= 1");
  if (n < 16) return {false, "criterion requires n >= 16"};
  Int nn(n), tt(t), mm(m);
  if (tt * tt <= mm * mm * nn)
    return {false, "t^2 <= m^2 n: not strictly above the degree threshold"};
  Int q = isqrt_floor(nn);
  // m^2 < floor(sqrt n)(floor(sqrt n)-3)/2 + 1 - 1/n, cleared of denominators:
  // 2 n m^2 < n q (q-3) + 2n - 2.
  if (!(2 * nn * mm * mm < nn * q * (q - 3) + 2 * nn - 2))
    return {false, "m^2 >= floor(sqrt n)(floor(sqrt n)-3)/2 + 1 - 1/n"};
  return {true, "t^2 > m^2 n and m below the multiplicity threshold"};
}

bool ah_condition(const SurfaceData& s, long long n, long long m, long long alpha_deg) {
  if (m <= 0) return true;  // nothing to impose
  if (alpha_deg < 1) throw std::invalid_argument("ah_condition: alpha_deg must be >= 1");
  Rational alpha = Rational(alpha_deg) * Rational(s.l2);
  Rational dim = alpha * (alpha - Rational(s.lk)) / (Rational(2) * Rational(s.l2)) + Rational(s.pa);
  Rational need = Rational(Int(n) * m * (m + 1), 2);
  return dim >= need;
}

}  // namespace seshadri
