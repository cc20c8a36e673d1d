#pragma once

// Domain model for the polarized surface (X, L), weight vectors, the
// one-parameter test divisors F_t and F(delta) on the blowup at n general
// points, and the candidate obstruction classes compared against them.
//
// Classes are numerical data only: a candidate records intersection
// numbers, never an actual curve or point configuration.

#include <optional>
#include <string>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

enum class SurfaceMode { P2, Rank1, Interval };

// (X, L) as the enumeration sees it: L^2, L.K_X, the arithmetic genus,
// the unit g of the degree semigroup (every effective C has C.L a
// positive multiple of g; the semigroup is over-approximated by g*Z+,
// which only enlarges candidate sets and so keeps lower bounds sound),
// and whether numerical equivalence is generated by a single ample class.
struct SurfaceData {
  Int l2 = 1;
  Int lk = -3;
  Int pa = 0;
  Int degree_unit = 1;
  bool rank1 = true;
  SurfaceMode mode = SurfaceMode::P2;

  static SurfaceData p2();
  void validate() const;  // throws std::invalid_argument

  // True when C^2 and C.K are determined by C.L (single generator).
  bool degrees_determine_classes() const {
    return mode == SurfaceMode::P2 || mode == SurfaceMode::Rank1;
  }
};

// Nonnegative weights l_1..l_n, not all zero.  norm_sq caches sum(l_i^2).
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);
  static WeightVector homogeneous(int n);

  int n() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& norm_sq() const { return norm_sq_; }
  bool is_homogeneous() const;

 private:
  std::vector<Rational> weights_;
  Rational norm_sq_;
};

// delta = F(delta)^2 > 0 and mu >= 1, linked by delta = (mu - 1/n)^{-1}
// in the homogeneous setting.  The implicit scale d = sqrt(l^2/L^2) is
// never materialized; everything compares through cmp_sq.
struct EnumParams {
  Rational delta;
  Rational mu;

  static EnumParams from_mu(const Rational& mu, int n);
  static EnumParams from_delta(const Rational& delta, int n);
};

// Almost uniform class: degree t (in units of g) with multiplicity m at
// every point and m+k at one unspecified point.  Which point carries the
// extra k is not stored: general position makes all choices equivalent,
// which dedupes the candidate set by symmetry.
struct CandidateClass {
  Int degree;  // C.L in units of g
  Int m;
  Int k;
  int n = 0;
  Rational ratio;               // degree*g / (m*n + k)
  std::optional<Rational> c_sq;  // C^2 when the surface mode determines it

  static CandidateClass make(const SurfaceData& s, int n, Int degree, Int m, Int k);

  friend bool operator==(const CandidateClass& a, const CandidateClass& b) {
    return a.degree == b.degree && a.m == b.m && a.k == b.k && a.n == b.n;
  }
  // Enumeration order: by family (m, k), then degree.
  friend bool operator<(const CandidateClass& a, const CandidateClass& b);
};

// General-weight candidate: degree t and a full multiplicity vector h.
struct GeneralCandidate {
  Int degree;          // C.L in units of g
  std::vector<Int> h;  // nonnegative, not all zero
  int gamma = 0;       // number of nonzero h_i
  Int a;               // minimum positive h_i
  Rational ratio;      // degree*g / sum(l_i h_i)

  static GeneralCandidate make(const SurfaceData& s, const WeightVector& w,
                               Int degree, std::vector<Int> h);

  friend bool operator==(const GeneralCandidate& a, const GeneralCandidate& b) {
    return a.degree == b.degree && a.h == b.h;
  }
  friend bool operator<(const GeneralCandidate& a, const GeneralCandidate& b);
};

enum class PairingSign { Negative, Zero, Positive };

// Sign of F(delta).H, computed exactly as cmp_sq(ratio, L^2/(l^2+delta)).
// Negative pairing (the abnormality condition) holds iff the candidate's
// ratio lies strictly below sqrt(L^2/(l^2+delta)).
PairingSign pairing_sign(const SurfaceData& s, const WeightVector& w,
                         const EnumParams& p, const Rational& ratio);
PairingSign pairing_sign(const SurfaceData& s, const WeightVector& w,
                         const EnumParams& p, const CandidateClass& c);
PairingSign pairing_sign(const SurfaceData& s, const WeightVector& w,
                         const EnumParams& p, const GeneralCandidate& c);

// (L.C) / (sum l_i h_i): an upper bound for the largest s with F_s nef
// whenever the class is realized by an abnormal curve.  Throws
// std::domain_error when the weighted multiplicity sum vanishes.
Rational nef_threshold_upper(const SurfaceData& s, const WeightVector& w,
                             const Int& degree, const std::vector<Int>& h);
Rational nef_threshold_upper(const WeightVector& w, const CandidateClass& c);
Rational nef_threshold_upper(const WeightVector& w, const GeneralCandidate& c);

// When every R-divisor class is a real multiple of L and the caller
// certifies that c is realized by an abnormal curve through n general
// points, the nef threshold is not merely bounded by ratio(c): it equals
// it, so this returns the multi-point Seshadri constant exactly.
// Throws std::invalid_argument when the surface is not rank one.
Rational exact_epsilon_rank1(const SurfaceData& s, const CandidateClass& c);

std::string to_string(SurfaceMode m);
SurfaceMode surface_mode_from_string(const std::string& s);

}  // namespace seshadri
