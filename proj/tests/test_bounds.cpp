#include <doctest.h>

#include "seshadri/bounds.hpp"

using namespace seshadri;

namespace {

SurfaceData p2 = SurfaceData::p2();

const AuditEntry* find_candidate(const BoundResult& r, long long m, long long k, long long t) {
  for (const auto& e : r.audit)
    if (e.m == m && e.k == k && e.degree && *e.degree == t &&
        (e.status == AuditStatus::Killed || e.status == AuditStatus::Unkilled))
      return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("first theorem bound: strict, needs only uniform alpha rows") {
  // Vacuous hypothesis set at mu = 1.
  BoundOutcome out = bound_thm_a(p2, 10, Rational(1), CertificateStore());
  REQUIRE(out.ok());
  CHECK(out.bound->epsilon_lower_sq == Rational(Int(7), Int(80)));
  CHECK(out.bound->strict);
  CHECK(out.bound->method == BoundMethod::ThmA);

  CertificateStore hr;
  hr.add_all(builtin_hr(16));
  BoundOutcome out16 = bound_thm_a(p2, 16, Rational(3), hr);
  REQUIRE(out16.ok());
  CHECK(out16.bound->epsilon_lower_sq == Rational(Int(41), Int(672)));

  CHECK_THROWS_AS(bound_thm_a(p2, 2, Rational(2), CertificateStore()), std::domain_error);

  // The mu' variant is strictly stronger where it applies.
  BoundOutcome prime = bound_thm_a(p2, 16, Rational(3), hr, /*use_mu_prime=*/true);
  REQUIRE(prime.ok());
  CHECK(prime.bound->epsilon_lower_sq > out16.bound->epsilon_lower_sq);
  CHECK_FALSE(prime.bound->strict);
  // mu' = 3 * 15/17 = 45/17: bound (1/16)(1 - 17/720) = 703/11520.
  CHECK(prime.bound->epsilon_lower_sq == Rational(Int(703), Int(11520)));
}

TEST_CASE("second theorem bound at n=16, mu=21") {
  BoundOutcome out = bound_thm_b(p2, 16, Rational(21), CertificateStore::p2_builtins(16));
  REQUIRE(out.ok());
  CHECK(out.bound->epsilon_lower_sq == Rational(Int(335), Int(5376)));
  CHECK_FALSE(out.bound->strict);
  // No candidate survives any window at square n.
  for (const auto& e : out.bound->audit) {
    CHECK(e.status != AuditStatus::Killed);
    CHECK(e.status != AuditStatus::Unkilled);
  }
}

TEST_CASE("second theorem bound at n=10, mu=21 rides on candidate kills") {
  // The hypothesis row (2,1) is out of certificate reach, but all three
  // enumerated classes die against the uniform family, so the bound is
  // still certified through the obstruction set itself.
  CertificateStore ccmo;
  ccmo.add_all(builtin_ccmo(10));
  BoundOutcome out = bound_thm_b(p2, 10, Rational(21), ccmo);
  REQUIRE(out.ok());
  CHECK(out.bound->epsilon_lower_sq == Rational(Int(209), Int(2100)));

  const AuditEntry* cubic = find_candidate(*out.bound, 1, 0, 3);
  REQUIRE(cubic);
  CHECK(cubic->status == AuditStatus::Killed);
  CHECK(cubic->cert_bound_sq == Rational(16));  // tightened 10 -> 16, alpha >= 4 kills t = 3
  CHECK(cubic->certificate.find("ccmo") != std::string::npos);
  CHECK(cubic->certificate.find("tightened 10 -> 16") != std::string::npos);

  const AuditEntry* deg22 = find_candidate(*out.bound, 7, 0, 22);
  REQUIRE(deg22);
  CHECK(deg22->status == AuditStatus::Killed);
  CHECK(deg22->cert_bound_sq == Rational(529));  // 490 -> 23^2 > 484

  const AuditEntry* deg41 = find_candidate(*out.bound, 13, 0, 41);
  REQUIRE(deg41);
  CHECK(deg41->status == AuditStatus::Killed);
  CHECK(deg41->cert_bound_sq == Rational(1764));  // 1690 -> 42^2 > 1681
}

TEST_CASE("second theorem bound fails closed without certificates") {
  BoundOutcome out = bound_thm_b(p2, 10, Rational(21), CertificateStore());
  CHECK_FALSE(out.ok());
  CHECK_FALSE(out.report.passed());
  bool any_unkilled = false;
  for (const auto& e : out.audit)
    if (e.status == AuditStatus::Unkilled) any_unkilled = true;
  CHECK(any_unkilled);
}

TEST_CASE("the degree-4 class through 17 of 18 points is killed by rotation transfer") {
  BoundOutcome out = bound_thm_b(p2, 18, Rational(21), CertificateStore::p2_builtins(18));
  REQUIRE(out.ok());
  CHECK(out.bound->epsilon_lower_sq == Rational(Int(377), Int(6804)));
  const AuditEntry* quartic = find_candidate(*out.bound, 1, -1, 4);
  REQUIRE(quartic);
  CHECK(quartic->status == AuditStatus::Killed);
  // alpha(17^[18]) >= sqrt(5202), tightened to 73^2, transferred by 1/18:
  // 5329/324 > 16 = t^2.
  CHECK(quartic->cert_bound_sq == Rational(Int(5329), Int(324)));

  // The class already lives at mu = 17, below the k != 0 row range; the
  // kill is what licenses the bound there.
  BoundOutcome mid = bound_thm_b(p2, 18, Rational(17), CertificateStore::p2_builtins(18));
  REQUIRE(mid.ok());
  CHECK(mid.bound->epsilon_lower_sq == Rational(Int(305), Int(5508)));
  REQUIRE(find_candidate(*mid.bound, 1, -1, 4));
  CHECK(find_candidate(*mid.bound, 1, -1, 4)->status == AuditStatus::Killed);

  // The hypothesis rows do not mention this class, so passing rows alone
  // must not emit the bound while it is alive.  Swap the m=17 uniform
  // bound for an alpha0-kind one: the row still passes (alpha0 serves
  // alpha0 rows) but the rotation transfer needs an alpha-kind input, so
  // the quartic stays unkilled and the bound is withheld.
  CertificateStore swapped;
  for (const auto& c : CertificateStore::p2_builtins(18).certificates()) {
    const auto* u = std::get_if<UniformPattern>(&c.pattern);
    if (u && u->m == 17 && c.kind == CertKind::Alpha) continue;
    swapped.add(c);
  }
  swapped.add({CertKind::Alpha0, UniformPattern{17, 18}, Rational(5202), "test"});
  BoundOutcome blocked = bound_thm_b(p2, 18, Rational(21), swapped);
  CHECK(blocked.report.passed());
  CHECK_FALSE(blocked.ok());
  const AuditEntry* alive = nullptr;
  for (const auto& e : blocked.audit)
    if (e.status == AuditStatus::Unkilled) alive = &e;
  REQUIRE(alive);
  CHECK(alive->m == 1);
  CHECK(alive->k == -1);
}

TEST_CASE("closed-form plane bound") {
  BoundResult b16 = cor13_bound(16);
  CHECK(b16.epsilon_lower_sq == Rational(Int(335), Int(5376)));
  CHECK(b16.method == BoundMethod::Cor13);
  BoundResult b100 = cor13_bound(100);
  CHECK(b100.epsilon_lower_sq == Rational(Int(3599), Int(360000)));
  CHECK_THROWS_AS(cor13_bound(15), std::domain_error);
}

TEST_CASE("closed form equals the better of the two certificate pipelines, 16 <= n <= 1000") {
  for (long long n = 16; n <= 1000; ++n) {
    Int q = isqrt_floor(Int(n));
    Rational mu_hr(1 + q * (q - 3) / 2);
    CertificateStore hr;
    hr.add_all(builtin_hr(static_cast<int>(n)));
    BoundOutcome via_hr = bound_thm_b(p2, static_cast<int>(n), mu_hr, hr);
    REQUIRE(via_hr.ok());

    CertificateStore ccmo_dp;
    ccmo_dp.add_all(builtin_ccmo(static_cast<int>(n)));
    if (auto dp = builtin_doublepoint(static_cast<int>(n))) ccmo_dp.add(*dp);
    BoundOutcome via_ccmo = bound_thm_b(p2, static_cast<int>(n), Rational(21), ccmo_dp);
    REQUIRE(via_ccmo.ok());

    Rational best = std::max(via_hr.bound->epsilon_lower_sq, via_ccmo.bound->epsilon_lower_sq);
    CAPTURE(n);
    CHECK(cor13_bound(n).epsilon_lower_sq == best);
  }
}

TEST_CASE("bounds never reach the trivial limit and grow with mu") {
  for (int n : {10, 16, 20, 50}) {
    CertificateStore store = CertificateStore::p2_builtins(n);
    Rational prev(0);
    for (long long mu : {2, 5, 13, 21}) {
      BoundOutcome out = bound_thm_b(p2, n, Rational(mu), store);
      REQUIRE(out.ok());
      CHECK(out.bound->epsilon_lower_sq < Rational(Int(1), Int(n)));
      CHECK(out.bound->epsilon_lower_sq > prev);
      prev = out.bound->epsilon_lower_sq;
    }
  }
}

TEST_CASE("exact values from realized abnormal classes") {
  BoundResult line = exact_epsilon_result(p2, CandidateClass::make(p2, 2, 1, 1, 0));
  CHECK(line.epsilon_lower_sq == Rational(Int(1), Int(4)));
  CHECK(line.exact);
  CHECK(line.method == BoundMethod::ExactRank1);
  BoundResult conic = exact_epsilon_result(p2, CandidateClass::make(p2, 5, 2, 1, 0));
  CHECK(conic.epsilon_lower_sq == Rational(Int(4), Int(25)));
  // The same line realizes epsilon(3) = 1/2 through its (1,1,0) class.
  BoundResult line3 = exact_epsilon_result(p2, CandidateClass::make(p2, 3, 1, 1, -1));
  CHECK(line3.epsilon_lower_sq == Rational(Int(1), Int(4)));
}

TEST_CASE("a realizable skew class withholds the bound it would falsify") {
  // At (n, mu) = (3, 2) the uniform row alpha0(1^[3]) >= sqrt(5/2) is
  // honestly satisfiable (no line passes through 3 general points), yet
  // the enumerated (1,1,0) line class is real and pins epsilon(3) at 1/2,
  // below the schema value sqrt(5/18).  No honest certificate can kill a
  // class realized by an existing curve, so the engine must refuse.
  CertificateStore store;
  store.add({CertKind::Alpha0, UniformPattern{1, 3}, Rational(4), "fixture"});
  BoundOutcome out = bound_thm_b(p2, 3, Rational(2), store);
  CHECK(out.report.passed());
  CHECK_FALSE(out.ok());
  bool line_alive = false;
  for (const auto& e : out.audit)
    if (e.status == AuditStatus::Unkilled && e.m == 1 && e.k == -1) line_alive = true;
  CHECK(line_alive);
}

TEST_CASE("ampleness criterion") {
  CHECK(ample_check(16, 5, 1).ample);
  CHECK_FALSE(ample_check(16, 4, 1).ample);  // t^2 = m^2 n, not strict
  CHECK(ample_check(36, 19, 3).ample);
  CHECK_FALSE(ample_check(16, 9, 2).ample);  // m^2 = 4 >= 47/16
  AmpleDecision small = ample_check(15, 5, 1);
  CHECK_FALSE(small.ample);
  CHECK(small.reason.find("n >= 16") != std::string::npos);
  CHECK_THROWS_AS(ample_check(16, 0, 1), std::invalid_argument);
}

TEST_CASE("known ampleness ranges: m = 1, 2, 3") {
  auto isqrt_ll = [](long long v) {
    long long q = 0;
    while ((q + 1) * (q + 1) <= v) ++q;
    return q;
  };
  for (long long n = 16; n <= 200; ++n) {
    CHECK(ample_check(n, isqrt_ll(n) + 1, 1).ample);
    if (n >= 25) CHECK(ample_check(n, isqrt_ll(4 * n) + 1, 2).ample);
    if (n >= 36) CHECK(ample_check(n, isqrt_ll(9 * n) + 1, 3).ample);
  }
}

TEST_CASE("dimension-count condition") {
  CHECK(ah_condition(p2, 10, 1, 4));        // 4*7/2 = 14 >= 10
  CHECK_FALSE(ah_condition(p2, 10, 1, 3));  // 3*6/2 = 9 < 10
  CHECK(ah_condition(p2, 10, 0, 1));        // nothing to impose
}
