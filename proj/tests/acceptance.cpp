// Acceptance suite: one line per criterion, every comparison exact.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "seshadri/bounds.hpp"
#include "seshadri/certificates.hpp"
#include "seshadri/enumerate.hpp"
#include "seshadri/surface.hpp"

using namespace seshadri;

namespace {

int failures = 0;
std::vector<std::string> notes;

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(int number, const char* title, bool ok, double elapsed) {
  std::printf("[%s] %2d. %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, title, elapsed);
  if (!ok) ++failures;
  for (const auto& n : notes) std::printf("       - %s\n", n.c_str());
  notes.clear();
}

void note(std::string s) { notes.push_back(std::move(s)); }

struct SimpleFraction {
  long long num = 0;
  long long den = 1;
};

// Second, independent evaluation of the closed-form plane bound using only
// 64/128-bit integer arithmetic: max of (n*mu1 - 1)/(n^2*mu1) with
// mu1 = 1 + isqrt(n)(isqrt(n)-3)/2, and (21n - 1)/(21 n^2).
SimpleFraction closed_form_reference(long long n) {
  long long q = 0;
  while ((q + 1) * (q + 1) <= n) ++q;
  long long mu1 = 1 + q * (q - 3) / 2;
  __int128 a_num = static_cast<__int128>(n) * mu1 - 1;
  __int128 a_den = static_cast<__int128>(n) * n * mu1;
  __int128 b_num = 21 * static_cast<__int128>(n) - 1;
  __int128 b_den = 21 * static_cast<__int128>(n) * n;
  bool a_wins = a_num * b_den >= b_num * a_den;
  __int128 num = a_wins ? a_num : b_num;
  __int128 den = a_wins ? a_den : b_den;
  auto g = [](__int128 x, __int128 y) {
    while (y) {
      __int128 t = x % y;
      x = y;
      y = t;
    }
    return x;
  };
  __int128 d = g(num, den);
  return {static_cast<long long>(num / d), static_cast<long long>(den / d)};
}

SurfaceData p2 = SurfaceData::p2();

bool equals(const Rational& r, const SimpleFraction& f) {
  return r.num() == f.num && r.den() == f.den;
}

void criterion1() {
  double t0 = now_seconds();
  bool ok = true;
  for (long long n = 16; n <= 1000; ++n) {
    BoundResult r = cor13_bound(n);
    if (!equals(r.epsilon_lower_sq, closed_form_reference(n))) {
      ok = false;
      note("mismatch at n=" + std::to_string(n) + ": got " + r.epsilon_lower_sq.str());
      break;
    }
  }
  double elapsed = now_seconds() - t0;
  if (elapsed >= 1.0) {
    ok = false;
    note("runtime budget exceeded (>= 1s)");
  }
  report(1, "closed-form bound matches an independent integer evaluation, 16 <= n <= 1000", ok,
         elapsed);
}

void criterion2() {
  double t0 = now_seconds();
  bool ok = cor13_bound(16).epsilon_lower_sq == Rational(Int(335), Int(5376)) &&
            cor13_bound(100).epsilon_lower_sq == Rational(Int(3599), Int(360000));
  report(2, "spot values: 335/5376 at n=16 and 3599/360000 at n=100", ok, now_seconds() - t0);
}

void criterion3() {
  double t0 = now_seconds();
  bool ok = true;
  for (int n = 2; n <= 30 && ok; ++n) {
    for (long long mu : {2, 3, 5, 21}) {
      EnumParams p = EnumParams::from_mu(Rational(mu), n);
      auto fast = oracle::triples_of(enumerate_homogeneous(p2, n, p));
      auto slow = oracle::enumerate(p2, n, p);
      if (fast != slow) {
        ok = false;
        note("divergence at n=" + std::to_string(n) + ", mu=" + std::to_string(mu));
        break;
      }
    }
  }
  double elapsed = now_seconds() - t0;
  if (elapsed >= 10.0) {
    ok = false;
    note("runtime budget exceeded (>= 10s)");
  }
  report(3, "pruned enumerator equals the brute-force oracle, 2 <= n <= 30, mu in {2,3,5,21}", ok,
         elapsed);
}

void criterion4() {
  double t0 = now_seconds();
  bool ok = true;
  std::mt19937_64 rng(0x0bef);
  std::uniform_int_distribution<long long> d(1, 3000);
  // 20 random deltas, sorted decreasing.
  std::vector<Rational> deltas;
  while (deltas.size() < 20) {
    Rational delta(Int(d(rng)), Int(d(rng) * 7));
    deltas.push_back(delta);
  }
  std::sort(deltas.begin(), deltas.end(), [](const Rational& a, const Rational& b) { return b < a; });
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  std::vector<Rational> prev_ratios;
  for (const auto& delta : deltas) {
    CandidateSet cs = enumerate_homogeneous(p2, 10, EnumParams::from_delta(delta, 10));
    std::set<Rational> cur(cs.ratios.begin(), cs.ratios.end());
    if (!prev_ratios.empty()) {
      Rational prev_max = prev_ratios.back();
      std::set<Rational> prev_set(prev_ratios.begin(), prev_ratios.end());
      for (const auto& r : cur)
        if (!prev_set.count(r) && !(r > prev_max)) {
          ok = false;
          note("new ratio " + r.str() + " does not exceed " + prev_max.str());
        }
    }
    if (!cs.ratios.empty()) prev_ratios = cs.ratios;
  }
  report(4, "discreteness: along 20 decreasing deltas at n=10, new ratios exceed all old ones",
         ok, now_seconds() - t0);
}

void criterion5() {
  double t0 = now_seconds();
  // Realized abnormal curves, supplied as fixtures: the line through two
  // general points and the conic through five.
  CandidateClass line = CandidateClass::make(p2, 2, 1, 1, 0);
  CandidateClass conic = CandidateClass::make(p2, 5, 2, 1, 0);
  bool ok = exact_epsilon_rank1(p2, line) == Rational(Int(1), Int(2)) &&
            exact_epsilon_rank1(p2, conic) == Rational(Int(2), Int(5));
  // Both classes are produced by the enumeration at mu = 2.
  auto at2 = oracle::triples_of(enumerate_homogeneous(p2, 2, EnumParams::from_mu(Rational(2), 2)));
  auto at5 = oracle::triples_of(enumerate_homogeneous(p2, 5, EnumParams::from_mu(Rational(2), 5)));
  ok = ok && at2 == std::vector<oracle::Triple>{{1, 0, 1}} &&
       at5 == std::vector<oracle::Triple>{{1, 0, 2}};
  report(5, "exact small-n values: epsilon(2) = 1/2 and epsilon(5) = 2/5", ok,
         now_seconds() - t0);
}

void criterion6() {
  double t0 = now_seconds();
  bool ok = true;
  EnumParams p = EnumParams::from_mu(Rational(21), 10);
  CandidateSet cs = enumerate_homogeneous(p2, 10, p);
  auto got = oracle::triples_of(cs);
  auto expect = oracle::enumerate(p2, 10, p);
  if (got != expect) {
    ok = false;
    note("enumeration disagrees with the oracle");
  }
  // Frozen oracle output: the cubic through ten simple points plus the two
  // deeper near-threshold classes, all of which the m <= 20 uniform family
  // kills.  (22/7 and 41/13 are the next convergents toward 1/sqrt(10).)
  std::vector<oracle::Triple> frozen{{1, 0, 3}, {7, 0, 22}, {13, 0, 41}};
  if (got != frozen) {
    ok = false;
    note("candidate set is not the frozen oracle set");
  }
  CertificateStore ccmo;
  ccmo.add_all(builtin_ccmo(10));
  BoundOutcome out = bound_thm_b(p2, 10, Rational(21), ccmo);
  if (!out.ok() || out.bound->epsilon_lower_sq != Rational(Int(209), Int(2100))) {
    ok = false;
    note("bound at (10, 21) is not 209/2100");
  } else {
    bool cubic_kill = false;
    int kills = 0;
    for (const auto& e : out.bound->audit) {
      if (e.status == AuditStatus::Killed) ++kills;
      if (e.status == AuditStatus::Killed && e.m == 1 && e.k == 0 && e.degree && *e.degree == 3 &&
          e.cert_bound_sq == Rational(16) &&
          e.certificate.find("tightened 10 -> 16") != std::string::npos)
        cubic_kill = true;
    }
    if (!cubic_kill) {
      ok = false;
      note("audit does not show the tightened kill alpha >= 4 > 3");
    }
    if (kills != 3) {
      ok = false;
      note("expected all three candidates killed");
    }
  }
  report(6, "n=10 candidate structure and the certified 209/2100 bound with its audit", ok,
         now_seconds() - t0);
}

void criterion7() {
  double t0 = now_seconds();
  bool ok = ample_check(16, 5, 1).ample && ample_check(36, 19, 3).ample &&
            !ample_check(16, 4, 1).ample;
  for (long long n = 16; n <= 400 && ok; ++n) {
    long long q = 0;
    while ((q + 1) * (q + 1) <= n) ++q;
    long long t = q + 1;  // smallest t with t^2 > n for m = 1
    if (!ample_check(n, t, 1).ample) {
      ok = false;
      note("not ample at n=" + std::to_string(n) + ", t=" + std::to_string(t) + ", m=1");
    }
    if (q * q == n && ample_check(n, q, 1).ample) {
      ok = false;
      note("boundary t^2 = n wrongly ample at n=" + std::to_string(n));
    }
  }
  // Boundary cases t^2 = m^2 n for larger m in the grid.
  for (long long m = 1; m <= 4 && ok; ++m)
    for (long long n = 16; n <= 400; ++n) {
      long long q = 0;
      while ((q + 1) * (q + 1) <= n) ++q;
      if (q * q == n && ample_check(n, m * q, m).ample) {
        ok = false;
        note("boundary t^2 = m^2 n wrongly ample at n=" + std::to_string(n) +
             ", m=" + std::to_string(m));
      }
    }
  double elapsed = now_seconds() - t0;
  if (elapsed >= 1.0) {
    ok = false;
    note("runtime budget exceeded (>= 1s)");
  }
  report(7, "ampleness regression over n in [16,400] plus the worked cases and boundaries", ok,
         elapsed);
}

void criterion8() {
  double t0 = now_seconds();
  bool ok = true;
  for (int n = 2; n <= 50 && ok; ++n) {
    // mu past (n-1)^2 opens every k != 0 family with m < n.
    Rational mu(Int(n - 1) * (n - 1) + 1);
    EnumParams p = EnumParams::from_mu(mu, n);
    CandidateSet with = enumerate_homogeneous_serial(p2, n, p, {.parity_fastpath = true});
    CandidateSet without = enumerate_homogeneous_serial(p2, n, p, {.parity_fastpath = false});
    if (!same_candidates(with, without)) {
      ok = false;
      note("parity shortcut changed the set at n=" + std::to_string(n));
    }
  }
  for (int n = 2; n <= 50 && ok; ++n) {
    EnumParams p = EnumParams::from_mu(Rational(21), n);
    CandidateSet with = enumerate_homogeneous_serial(p2, n, p, {.parity_fastpath = true});
    CandidateSet without = enumerate_homogeneous_serial(p2, n, p, {.parity_fastpath = false});
    if (!same_candidates(with, without)) {
      ok = false;
      note("parity shortcut changed the set at n=" + std::to_string(n) + ", mu=21");
    }
  }
  report(8, "parity shortcut on/off leaves every candidate set unchanged, n <= 50", ok,
         now_seconds() - t0);
}

void criterion9() {
  double t0 = now_seconds();
  bool ok = ah_condition(p2, 10, 1, 4) && !ah_condition(p2, 10, 1, 3);
  report(9, "dimension-count check: degree 4 passes and degree 3 fails at (n,m) = (10,1)", ok,
         now_seconds() - t0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
