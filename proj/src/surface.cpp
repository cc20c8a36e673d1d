#include "seshadri/surface.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace seshadri {

SurfaceData SurfaceData::p2() {
  SurfaceData s;
  s.l2 = 1;
  s.lk = -3;
  s.pa = 0;
  s.degree_unit = 1;
  s.rank1 = true;
  s.mode = SurfaceMode::P2;
  return s;
}

void SurfaceData::validate() const {
  if (l2 < 1) throw std::invalid_argument("SurfaceData: L^2 must be >= 1");
  if (degree_unit < 1) throw std::invalid_argument("SurfaceData: degree_unit must be >= 1");
  if (mode == SurfaceMode::P2) {
    if (l2 != 1 || lk != -3 || pa != 0 || degree_unit != 1 || !rank1)
      throw std::invalid_argument("SurfaceData: P2 mode requires L2=1, LK=-3, pa=0, degree_unit=1, rank1");
  }
  if (mode == SurfaceMode::Rank1 && !rank1)
    throw std::invalid_argument("SurfaceData: RANK1 mode requires rank1 = true");
}

WeightVector::WeightVector(std::vector<Rational> weights)
    : weights_(std::move(weights)), norm_sq_(0) {
  if (weights_.empty()) throw std::invalid_argument("WeightVector: n must be >= 1");
  bool any = false;
  for (const auto& l : weights_) {
    if (l.is_negative()) throw std::invalid_argument("WeightVector: weights must be nonnegative");
    if (!l.is_zero()) any = true;
    norm_sq_ += l.squared();
  }
  if (!any) throw std::invalid_argument("WeightVector: weights must not all be zero");
}

WeightVector WeightVector::homogeneous(int n) {
  if (n < 1) throw std::invalid_argument("WeightVector: n must be >= 1");
  return WeightVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

bool WeightVector::is_homogeneous() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& l) { return l == Rational(1); });
}

EnumParams EnumParams::from_mu(const Rational& mu, int n) {
  if (n < 1) throw std::invalid_argument("EnumParams: n must be >= 1");
  Rational inv_n = Rational(1, n);
  if (mu <= inv_n) throw std::domain_error("EnumParams: mu must exceed 1/n");
  EnumParams p;
  p.mu = mu;
  p.delta = (mu - inv_n).reciprocal();
  return p;
}

EnumParams EnumParams::from_delta(const Rational& delta, int n) {
  if (n < 1) throw std::invalid_argument("EnumParams: n must be >= 1");
  if (!delta.is_positive()) throw std::domain_error("EnumParams: delta must be positive");
  EnumParams p;
  p.delta = delta;
  p.mu = delta.reciprocal() + Rational(1, n);
  return p;
}

CandidateClass CandidateClass::make(const SurfaceData& s, int n, Int degree, Int m, Int k) {
  if (n < 1) throw std::invalid_argument("CandidateClass: n must be >= 1");
  if (degree < 1) throw std::invalid_argument("CandidateClass: degree must be positive");
  if (m < 1) throw std::invalid_argument("CandidateClass: m must be positive");
  if (n == 1 && k != 0) throw std::invalid_argument("CandidateClass: k = 0 required when n = 1");
  if (k <= -m && !(m == 1 && k == -1))
    throw std::invalid_argument("CandidateClass: need k > -m or (m, k) = (1, -1)");
  Int weighted = m * n + k;
  CandidateClass c;
  c.degree = std::move(degree);
  c.m = std::move(m);
  c.k = std::move(k);
  c.n = n;
  c.ratio = Rational(c.degree * s.degree_unit, weighted);
  if (!c.ratio.is_positive()) throw std::invalid_argument("CandidateClass: ratio must be positive");
  if (s.degrees_determine_classes()) {
    Int dl = c.degree * s.degree_unit;
    c.c_sq = Rational(dl * dl, s.l2);
  }
  return c;
}

bool operator<(const CandidateClass& a, const CandidateClass& b) {
  if (a.m != b.m) return a.m < b.m;
  if (a.k != b.k) return a.k < b.k;
  return a.degree < b.degree;
}

GeneralCandidate GeneralCandidate::make(const SurfaceData& s, const WeightVector& w,
                                        Int degree, std::vector<Int> h) {
  if (degree < 1) throw std::invalid_argument("GeneralCandidate: degree must be positive");
  if (static_cast<int>(h.size()) != w.n())
    throw std::invalid_argument("GeneralCandidate: h length must equal n");
  GeneralCandidate c;
  c.degree = std::move(degree);
  c.h = std::move(h);
  c.gamma = 0;
  Rational weighted(0);
  for (int i = 0; i < w.n(); ++i) {
    const Int& hi = c.h[static_cast<std::size_t>(i)];
    if (hi < 0) throw std::invalid_argument("GeneralCandidate: multiplicities must be nonnegative");
    if (hi > 0) {
      if (c.gamma == 0 || hi < c.a) c.a = hi;
      ++c.gamma;
    }
    weighted += w.weights()[static_cast<std::size_t>(i)] * Rational(hi);
  }
  if (c.gamma == 0) throw std::invalid_argument("GeneralCandidate: h must not be zero");
  if (!weighted.is_positive())
    throw std::domain_error("GeneralCandidate: weighted multiplicity sum vanishes");
  c.ratio = Rational(c.degree * s.degree_unit) / weighted;
  return c;
}

bool operator<(const GeneralCandidate& a, const GeneralCandidate& b) {
  if (a.h != b.h) return a.h < b.h;
  return a.degree < b.degree;
}

PairingSign pairing_sign(const SurfaceData& s, const WeightVector& w,
                         const EnumParams& p, const Rational& ratio) {
  if (!p.delta.is_positive()) throw std::domain_error("pairing_sign: delta must be positive");
  Rational threshold_sq = Rational(s.l2) / (w.norm_sq() + p.delta);
  auto ord = cmp_sq(ratio, threshold_sq);
  if (ord == std::strong_ordering::less) return PairingSign::Negative;
  if (ord == std::strong_ordering::greater) return PairingSign::Positive;
  return PairingSign::Zero;
}

PairingSign pairing_sign(const SurfaceData& s, const WeightVector& w,
                         const EnumParams& p, const CandidateClass& c) {
  return pairing_sign(s, w, p, c.ratio);
}

PairingSign pairing_sign(const SurfaceData& s, const WeightVector& w,
                         const EnumParams& p, const GeneralCandidate& c) {
  return pairing_sign(s, w, p, c.ratio);
}

Rational nef_threshold_upper(const SurfaceData& s, const WeightVector& w,
                             const Int& degree, const std::vector<Int>& h) {
  if (static_cast<int>(h.size()) != w.n())
    throw std::invalid_argument("nef_threshold_upper: h length must equal n");
  Rational weighted(0);
  for (int i = 0; i < w.n(); ++i)
    weighted += w.weights()[static_cast<std::size_t>(i)] * Rational(h[static_cast<std::size_t>(i)]);
  if (!weighted.is_positive())
    throw std::domain_error("nef_threshold_upper: weighted multiplicity sum vanishes");
  return Rational(degree * s.degree_unit) / weighted;
}

Rational nef_threshold_upper(const WeightVector& w, const CandidateClass& c) {
  if (!w.is_homogeneous())
    throw std::invalid_argument("nef_threshold_upper: almost uniform classes carry homogeneous weights");
  return c.ratio;
}

Rational nef_threshold_upper(const WeightVector& w, const GeneralCandidate& c) {
  (void)w;
  return c.ratio;
}

Rational exact_epsilon_rank1(const SurfaceData& s, const CandidateClass& c) {
  if (!s.rank1)
    throw std::invalid_argument(
        "exact_epsilon_rank1: requires every R-divisor class to be a real multiple of L");
  return c.ratio;
}

std::string to_string(SurfaceMode m) {
  switch (m) {
    case SurfaceMode::P2: return "P2";
    case SurfaceMode::Rank1: return "RANK1";
    case SurfaceMode::Interval: return "INTERVAL";
  }
  throw std::logic_error("to_string: bad SurfaceMode");
}

SurfaceMode surface_mode_from_string(const std::string& s) {
  if (s == "P2" || s == "p2") return SurfaceMode::P2;
  if (s == "RANK1" || s == "rank1") return SurfaceMode::Rank1;
  if (s == "INTERVAL" || s == "interval") return SurfaceMode::Interval;
  throw std::invalid_argument("unknown surface mode: " + s);
}

}  // namespace seshadri
