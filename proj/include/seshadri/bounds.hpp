#pragma once

// Certified lower bounds on the multi-point Seshadri constant, reported
// as exact rationals epsilon_lower_sq <= epsilon^2, together with an
// audit trail: every enumerated obstruction class and the certificate
// that rules it out (or the window / genus filter that made it moot).

#include <optional>
#include <string>
#include <vector>

#include "seshadri/certificates.hpp"
#include "seshadri/enumerate.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

enum class BoundMethod { ThmA, ThmB, Cor13, ExactRank1 };
std::string to_string(BoundMethod m);

enum class AuditStatus { WindowEmpty, Adjunction, Killed, Unkilled, Realized };
std::string to_string(AuditStatus s);

struct AuditEntry {
  Int m;
  Int k;
  std::optional<Int> degree;
  std::optional<Rational> ratio;
  AuditStatus status = AuditStatus::WindowEmpty;
  std::string certificate;             // source of the kill, when any
  std::optional<Rational> cert_bound_sq;
};

struct BoundResult {
  int n = 0;
  BoundMethod method = BoundMethod::ThmB;
  Rational epsilon_lower_sq;
  bool strict = false;  // true: epsilon^2 > value; false: epsilon^2 >= value
  bool exact = false;   // true when the value is epsilon^2 itself
  std::vector<AuditEntry> audit;
};

struct BoundOutcome {
  std::optional<BoundResult> bound;  // empty on hypothesis failure
  HypothesisReport report;
  std::vector<AuditEntry> audit;     // populated also when no bound was emitted
  bool ok() const { return bound.has_value(); }
};

// epsilon^2 > (L^2/n) (1 - 1/((n-2) mu)) once every uniform pattern with
// 1 <= m < mu carries an alpha certificate at the required level.
// Requires n >= 3 and mu >= 1.  With use_mu_prime the slightly stronger
// variant through mu' = mu (n-1)/(n+1) is reported instead (non-strict);
// it needs mu' >= 1.
BoundOutcome bound_thm_a(const SurfaceData& s, int n, const Rational& mu,
                         const CertificateStore& store, bool use_mu_prime = false);

// epsilon^2 >= (L^2/n) (1 - 1/(n mu)).  Emitted when the hypothesis rows
// pass (with any enumerated m = -k = 1 classes additionally killed -- the
// row set does not cover them), or when every enumerated obstruction
// class at delta = (mu - 1/n)^{-1} is killed by a certificate outright.
// The audit lists each examined family and each kill.
BoundOutcome bound_thm_b(const SurfaceData& s, int n, const Rational& mu,
                         const CertificateStore& store, const EnumOptions& opts = {});

// Closed-form plane bound for n >= 16: the better of the two built-in
// certificate families, max over
//   (1/n)(1 - 1/(n(1 + floor(sqrt n)(floor(sqrt n)-3)/2)))  and
//   (1/n)(1 - 1/(21 n)).
BoundResult cor13_bound(long long n);

// Exact value from a realized abnormal class on a rank-one surface.
BoundResult exact_epsilon_result(const SurfaceData& s, const CandidateClass& c);

struct AmpleDecision {
  bool ample = false;
  std::string reason;
};

// Sufficient ampleness criterion for t L - m (E_1 + ... + E_n) on the
// blowup of the plane at n >= 16 general points: ample when t^2 > m^2 n
// strictly and m^2 < floor(sqrt n)(floor(sqrt n)-3)/2 + 1 - 1/n.  Never
// asserts non-ampleness; failures report UNKNOWN with the reason.
AmpleDecision ample_check(long long n, long long t, long long m);

// Dimension-count sufficient condition: with alpha = alpha_deg * L^2,
//   alpha (alpha - L.K) / (2 L^2) + p_a >= n m (m+1) / 2,
// evaluated exactly.
bool ah_condition(const SurfaceData& s, long long n, long long m, long long alpha_deg);

}  // namespace seshadri
