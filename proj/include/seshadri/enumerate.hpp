#pragma once

// Finite obstruction-set enumeration.  For a test divisor F(delta) with
// F(delta)^2 = delta > 0 on the blowup at n general points, the classes
// that could pair negatively against it form a finite set cut out by
// exact integer inequalities: a family gate on (m, k), a degree window,
// a genus (adjunction) filter where C^2 is determined, and the strict
// pairing condition ratio < sqrt(L^2/(l^2 + delta)).
//
// Two interchangeable homogeneous kernels are provided: a serial
// reference implementation and an OpenMP kernel that partitions the
// m-range across threads and merges deterministically (re-sort and
// dedupe).  They must produce identical sets; tests and the benchmark
// target compare them.

#include <optional>
#include <utility>
#include <vector>

#include "seshadri/surface.hpp"

namespace seshadri {

enum class RejectReason { WindowEmpty, Adjunction };

// Trace of an examined family or degree that produced no candidate.
// Diagnostic only: set equality between kernels / option settings is on
// candidates and ratios, not on this trace.
struct RejectedFamily {
  Int m;
  Int k;
  std::optional<Int> degree;  // set for per-degree rejections (adjunction)
  RejectReason reason = RejectReason::WindowEmpty;
};

struct EnumOptions {
  bool parity_fastpath = true;  // parity shortcut for k != 0, m < n families
  bool parallel = true;         // use the OpenMP kernel when available
};

inline constexpr long long kDefaultGeneralCap = 1000000;  // cap on sum h_i^2

struct CandidateSet {
  int n = 0;
  EnumParams params;
  std::vector<CandidateClass> classes;    // homogeneous enumeration output
  std::vector<GeneralCandidate> general;  // general-weight enumeration output
  std::vector<Rational> ratios;           // sorted, deduplicated
  Rational limit_sq;                      // L^2 / l^2, square of the unique limit point
  bool truncated = false;                 // general mode hit the explicit cap
  std::vector<RejectedFamily> rejections;
};

// Candidate/ratio equality (the enumeration trace is ignored).
bool same_candidates(const CandidateSet& a, const CandidateSet& b);

// All almost uniform classes (t, m, k) that survive every filter at the
// given delta, for homogeneous weights.  Requires a mode in which C^2 is
// determined by the degree (P2 or RANK1).  n = 1 is allowed; it forces
// k = 0.  Finiteness needs no cap: mu bounds m, the family gate bounds k
// and the degree window bounds t.
CandidateSet enumerate_homogeneous(const SurfaceData& s, int n, const EnumParams& p,
                                   const EnumOptions& opts = {});
CandidateSet enumerate_homogeneous_serial(const SurfaceData& s, int n, const EnumParams& p,
                                          const EnumOptions& opts = {});
CandidateSet enumerate_homogeneous_parallel(const SurfaceData& s, int n, const EnumParams& p,
                                            const EnumOptions& opts = {});

// General-weight enumeration over full multiplicity vectors h.  The outer
// norm bound is instantiated with gamma = 1 (the weakest case) and each
// vector is re-checked with its true gamma.  `cap` bounds sum h_i^2; when
// it bites, the result is flagged truncated, never silently cut.
CandidateSet enumerate_general(const SurfaceData& s, const WeightVector& w,
                               const Rational& delta, const Int& cap,
                               const EnumOptions& opts = {});

// Parity shortcut for k != 0 families with m < n on a rank-one surface
// with square L^2 = r^2: at most one (degree, k) can carry an abnormal
// class, pinned by (tr)^2 = m^2 n + 2mk and the parity of m^2 n.  Returns
// the degree in units of g together with the forced k (k may come out 0,
// meaning no k != 0 class is possible for this m), or nothing when no
// integer qualifies.  Throws std::invalid_argument when L^2 is not a
// perfect square or the surface is not rank one or m is out of range.
std::optional<std::pair<Int, Int>> parity_filter(const SurfaceData& s, int n, const Int& m);

// Sorted deduplicated ratio list of a candidate set.
std::vector<Rational> o_values(const CandidateSet& cs);

// Smallest ratio in the candidate set strictly greater than b, or nullopt
// when none exists below sqrt(L^2/n) at this delta -- in which case the
// certified bound jumps all the way to sqrt(L^2/(n + delta)).  Requires
// b^2 < L^2/n (checked through cmp_sq).
std::optional<Rational> next_threshold(const SurfaceData& s, int n, const EnumParams& p,
                                       const Rational& b, const EnumOptions& opts = {});

}  // namespace seshadri
