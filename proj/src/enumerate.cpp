#include "seshadri/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seshadri {

namespace {

long long to_ll_checked(const Int& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error(std::string(what) + ": value out of range");
  return v.convert_to<long long>();
}

// Largest integer m with m < mu, clamped at 0.
Int max_m_below(const Rational& mu) {
  if (!mu.is_positive()) return 0;
  Int m = (mu.num() - 1) / mu.den();  // floor, since the numerator is >= 1
  return m < 0 ? Int(0) : m;
}

// Smallest t >= 1 with (t*g)^2 >= lower (lower may be <= 0).
Int degree_window_lo(const Int& lower, const Int& g) {
  if (lower <= 0) return 1;
  Int g2 = g * g;
  Int t = isqrt_floor(lower / g2);
  while (t * t * g2 < lower) ++t;
  while (t > 1 && (t - 1) * (t - 1) * g2 >= lower) --t;
  return t < 1 ? Int(1) : t;
}

// Largest t >= 0 with (t*g)^2 * b < a (strict); 0 means empty.
Int degree_window_hi(const Int& a, const Int& b, const Int& g) {
  if (a <= 0) return 0;
  Int denom = b * g * g;
  return isqrt_floor((a - 1) / denom);
}

struct EnumOutput {
  std::vector<CandidateClass> classes;
  std::vector<RejectedFamily> rejections;

  void append(EnumOutput&& o) {
    classes.insert(classes.end(), std::make_move_iterator(o.classes.begin()),
                   std::make_move_iterator(o.classes.end()));
    rejections.insert(rejections.end(), std::make_move_iterator(o.rejections.begin()),
                      std::make_move_iterator(o.rejections.end()));
  }
};

class HomogeneousEnumerator {
 public:
  HomogeneousEnumerator(const SurfaceData& s, int n, const EnumParams& p,
                        const EnumOptions& opts)
      : s_(s), n_(n), p_(p), opts_(opts) {
    s.validate();
    if (n < 1) throw std::invalid_argument("enumerate_homogeneous: n must be >= 1");
    if (!p.delta.is_positive())
      throw std::domain_error("enumerate_homogeneous: delta must be positive");
    if (!s.degrees_determine_classes())
      throw std::invalid_argument(
          "enumerate_homogeneous: needs a mode where C^2 is determined (P2 or RANK1)");
    g_ = s.degree_unit;
    // Pairing bound in integer form: (t g)^2 (n q + p) < (m n + k)^2 L^2 q
    // for delta = p/q.
    pairing_den_ = Int(n) * p.delta.den() + p.delta.num();
    pairing_q_ = p.delta.den();
    if (s.rank1) {
      Int r = isqrt_floor(s.l2);
      if (r * r == s.l2) sqrt_l2_ = r;
    }
  }

  Int m_max() const { return max_m_below(p_.mu); }

  // All families for one value of m.
  void families_for_m(const Int& m, EnumOutput& out) const {
    family(m, 0, std::nullopt, out);
    if (n_ < 2) return;  // k = 0 is forced when n = 1
    // The m = -k = 1 family is not covered by the mu gate below (that
    // gate's derivation needs k > -m); its degree window [n-2, ...) is
    // self-gating, collapsing to empty whenever delta (n-2) >= 1.
    if (m == 1) family_one_minus_one(out);
    if (!(Rational(m * (n_ - 1)) < p_.mu)) return;
    bool fastpath = opts_.parity_fastpath && sqrt_l2_.has_value() && m < n_;
    if (fastpath) {
      parity_families(m, out);
    } else {
      for (Int k = 1; k * k * (n_ - 1) < Int(n_) * m; ++k)
        family(m, k, std::nullopt, out);
      for (Int j = 1; j < m && j * j * (n_ - 1) < Int(n_) * (m - j); ++j)
        family(m, -j, std::nullopt, out);
    }
  }

 private:
  // Lower end of the degree window, as an integer multiple of L^2:
  // (t g)^2 >= lower * L^2.
  Int window_lower(const Int& m, const Int& k) const {
    if (k == 0) return m * m * n_ - m;
    if (k == -m) return (n_ - 1) * m * m - m;  // only reached as (1, -1)
    Int base = m * m * n_ + 2 * m * k;
    Int xu1 = k * k - m;
    Int xu2 = k * k - (m + k);
    Int extra = std::max(std::max(xu1, xu2), Int(0));
    return base + extra;
  }

  // Genus filter: a reduced irreducible curve of this class needs
  // (t g)^2 + (t g) L.K >= L^2 ((m+k)^2 + (n-1) m^2 - m n - k - 2).
  bool adjunction_ok(const Int& t, const Int& m, const Int& k) const {
    Int tg = t * g_;
    Int rhs = s_.l2 * ((m + k) * (m + k) + Int(n_ - 1) * m * m - m * Int(n_) - k - 2);
    return tg * tg + tg * s_.lk >= rhs;
  }

  void family(const Int& m, const Int& k, const std::optional<Int>& only_degree,
              EnumOutput& out) const {
    Int lower = window_lower(m, k) * s_.l2;
    Int sum = m * n_ + k;
    Int a = sum * sum * s_.l2 * pairing_q_;
    Int t_lo = degree_window_lo(lower, g_);
    Int t_hi = degree_window_hi(a, pairing_den_, g_);
    if (only_degree) {
      if (*only_degree < t_lo || *only_degree > t_hi) {
        out.rejections.push_back({m, k, std::nullopt, RejectReason::WindowEmpty});
        return;
      }
      t_lo = t_hi = *only_degree;
    }
    if (t_lo > t_hi) {
      out.rejections.push_back({m, k, std::nullopt, RejectReason::WindowEmpty});
      return;
    }
    for (Int t = t_lo; t <= t_hi; ++t) {
      if (!adjunction_ok(t, m, k)) {
        out.rejections.push_back({m, k, t, RejectReason::Adjunction});
        continue;
      }
      out.classes.push_back(CandidateClass::make(s_, n_, t, m, k));
    }
  }

  // The m = -k = 1 class: multiplicity one at n-1 of the n points.  Its
  // window comes from the general lemma with a = 1 and n-1 active points.
  void family_one_minus_one(EnumOutput& out) const { family(1, -1, std::nullopt, out); }

  // k != 0 via the parity shortcut: at most one (degree, k) is possible.
  void parity_families(const Int& m, EnumOutput& out) const {
    auto hit = parity_filter(s_, n_, m);
    if (!hit) return;
    const auto& [t, k] = *hit;
    if (k == 0 || k <= -m) return;  // no genuine k != 0 class for this m
    if (!(k * k * (n_ - 1) < Int(n_) * std::min(m, m + k))) return;
    family(m, k, t, out);
  }

  const SurfaceData& s_;
  int n_;
  const EnumParams& p_;
  const EnumOptions& opts_;
  Int g_;
  Int pairing_den_;
  Int pairing_q_;
  std::optional<Int> sqrt_l2_;
};

CandidateSet finalize_homogeneous(const SurfaceData& s, int n, const EnumParams& p,
                                  EnumOutput&& out) {
  CandidateSet cs;
  cs.n = n;
  cs.params = p;
  cs.limit_sq = Rational(s.l2, n);
  cs.classes = std::move(out.classes);
  cs.rejections = std::move(out.rejections);
  std::sort(cs.classes.begin(), cs.classes.end());
  std::sort(cs.rejections.begin(), cs.rejections.end(),
            [](const RejectedFamily& x, const RejectedFamily& y) {
              if (x.m != y.m) return x.m < y.m;
              if (x.k != y.k) return x.k < y.k;
              return x.degree.value_or(0) < y.degree.value_or(0);
            });
  cs.ratios.reserve(cs.classes.size());
  for (const auto& c : cs.classes) cs.ratios.push_back(c.ratio);
  std::sort(cs.ratios.begin(), cs.ratios.end());
  cs.ratios.erase(std::unique(cs.ratios.begin(), cs.ratios.end()), cs.ratios.end());
  return cs;
}

}  // namespace

bool same_candidates(const CandidateSet& a, const CandidateSet& b) {
  return a.n == b.n && a.classes == b.classes && a.general == b.general &&
         a.ratios == b.ratios && a.truncated == b.truncated;
}

CandidateSet enumerate_homogeneous_serial(const SurfaceData& s, int n, const EnumParams& p,
                                          const EnumOptions& opts) {
  HomogeneousEnumerator e(s, n, p, opts);
  EnumOutput out;
  const Int m_max = e.m_max();
  for (Int m = 1; m <= m_max; ++m) e.families_for_m(m, out);
  return finalize_homogeneous(s, n, p, std::move(out));
}

CandidateSet enumerate_homogeneous_parallel(const SurfaceData& s, int n, const EnumParams& p,
                                            const EnumOptions& opts) {
#ifdef _OPENMP
  HomogeneousEnumerator e(s, n, p, opts);
  long long m_max = to_ll_checked(e.m_max(), "enumerate_homogeneous: mu");
  EnumOutput merged;
#pragma omp parallel
  {
    EnumOutput local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long m = 1; m <= m_max; ++m) e.families_for_m(Int(m), local);
#pragma omp critical(seshadri_enum_merge)
    merged.append(std::move(local));
  }
  return finalize_homogeneous(s, n, p, std::move(merged));
#else
  return enumerate_homogeneous_serial(s, n, p, opts);
#endif
}

CandidateSet enumerate_homogeneous(const SurfaceData& s, int n, const EnumParams& p,
                                   const EnumOptions& opts) {
#ifdef _OPENMP
  if (opts.parallel && max_m_below(p.mu) >= 64)
    return enumerate_homogeneous_parallel(s, n, p, opts);
#endif
  return enumerate_homogeneous_serial(s, n, p, opts);
}

std::optional<std::pair<Int, Int>> parity_filter(const SurfaceData& s, int n, const Int& m) {
  s.validate();
  if (!s.rank1) throw std::invalid_argument("parity_filter: requires a rank one surface");
  Int r = isqrt_floor(s.l2);
  if (r * r != s.l2)
    throw std::invalid_argument("parity_filter: requires L^2 to be a perfect square");
  if (n < 2) throw std::invalid_argument("parity_filter: n must be >= 2");
  if (m < 1 || m >= n) throw std::invalid_argument("parity_filter: requires 1 <= m < n");

  // The open interval (m sqrt(n) - 1, m sqrt(n) + 1) contains either the
  // exact value m sqrt(n) (n a perfect square) or two consecutive
  // integers, of which exactly one matches the parity of m^2 n.
  Int target = m * m * n;
  Int s0 = isqrt_floor(target);
  Int sr;
  if (s0 * s0 == target) {
    sr = s0;
  } else {
    sr = ((s0 * s0 - target) % 2 == 0) ? s0 : s0 + 1;
  }
  Int knum = sr * sr - target;
  if (knum % (2 * m) != 0) return std::nullopt;
  Int k = knum / (2 * m);
  Int tg = sr * r;  // C.L = sqrt(C^2 L^2)
  if (tg % s.degree_unit != 0) return std::nullopt;
  return std::make_pair(tg / s.degree_unit, k);
}

CandidateSet enumerate_general(const SurfaceData& s, const WeightVector& w,
                               const Rational& delta, const Int& cap,
                               const EnumOptions& opts) {
  (void)opts;
  s.validate();
  if (!delta.is_positive()) throw std::domain_error("enumerate_general: delta must be positive");
  if (cap < 1) throw std::invalid_argument("enumerate_general: cap must be >= 1");
  const int n = w.n();
  const Rational& ell_sq = w.norm_sq();
  Rational bound_a = (Rational(1) + ell_sq / delta).squared();

  CandidateSet cs;
  cs.n = n;
  cs.params = EnumParams::from_delta(delta, n);
  cs.limit_sq = Rational(s.l2) / ell_sq;

  Int max_hsq = bound_a.ceil() - 1;  // largest integer strictly below bound_a
  if (max_hsq > cap) {
    cs.truncated = true;
    max_hsq = cap;
  }
  if (max_hsq < 1) return cs;

  // Within maximal runs of equal weights the points are interchangeable,
  // so multiplicities are canonicalized to nonincreasing order there --
  // but only when the weight vector itself is nonincreasing, so that the
  // canonical form is well defined.
  bool canonical = true;
  for (int i = 1; i < n; ++i)
    if (w.weights()[static_cast<std::size_t>(i)] > w.weights()[static_cast<std::size_t>(i - 1)]) {
      canonical = false;
      break;
    }

  std::vector<Int> h(static_cast<std::size_t>(n), Int(0));
  Rational pairing_upper_den = ell_sq + delta;

  auto emit = [&](const std::vector<Int>& hv) {
    Int hsq = 0;
    Int a = 0;
    int gamma = 0;
    for (const auto& hi : hv) {
      hsq += hi * hi;
      if (hi > 0) {
        if (gamma == 0 || hi < a) a = hi;
        ++gamma;
      }
    }
    if (gamma == 0) return;
    // Re-check the norm bound with the true gamma.
    if (!(Rational(hsq * gamma) < bound_a)) return;
    Rational weighted(0);
    for (int i = 0; i < n; ++i)
      weighted += w.weights()[static_cast<std::size_t>(i)] * Rational(hv[static_cast<std::size_t>(i)]);
    if (!weighted.is_positive()) return;

    Int lower = (hsq - a) * s.l2;
    Int t_lo = degree_window_lo(lower, s.degree_unit);
    // (t g)^2 (l^2 + delta) < weighted^2 L^2, cross-multiplied to integers.
    Int a_int = weighted.num() * weighted.num() * s.l2 * pairing_upper_den.den();
    Int b_int = pairing_upper_den.num() * weighted.den() * weighted.den();
    Int t_hi = degree_window_hi(a_int, b_int, s.degree_unit);
    for (Int t = t_lo; t <= t_hi; ++t)
      cs.general.push_back(GeneralCandidate::make(s, w, t, hv));
  };

  // DFS over multiplicity vectors with sum of squares <= max_hsq.
  auto dfs = [&](auto&& self, int pos, Int budget) -> void {
    if (pos == n) {
      emit(h);
      return;
    }
    Int hi_max = isqrt_floor(budget);
    if (canonical && pos > 0 &&
        w.weights()[static_cast<std::size_t>(pos)] == w.weights()[static_cast<std::size_t>(pos - 1)] &&
        h[static_cast<std::size_t>(pos - 1)] < hi_max)
      hi_max = h[static_cast<std::size_t>(pos - 1)];
    for (Int v = hi_max; v >= 0; --v) {
      h[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, budget - v * v);
    }
    h[static_cast<std::size_t>(pos)] = 0;
  };
  dfs(dfs, 0, max_hsq);

  std::sort(cs.general.begin(), cs.general.end());
  cs.ratios.reserve(cs.general.size());
  for (const auto& c : cs.general) cs.ratios.push_back(c.ratio);
  std::sort(cs.ratios.begin(), cs.ratios.end());
  cs.ratios.erase(std::unique(cs.ratios.begin(), cs.ratios.end()), cs.ratios.end());
  return cs;
}

std::vector<Rational> o_values(const CandidateSet& cs) { return cs.ratios; }

std::optional<Rational> next_threshold(const SurfaceData& s, int n, const EnumParams& p,
                                       const Rational& b, const EnumOptions& opts) {
  if (n < 1) throw std::invalid_argument("next_threshold: n must be >= 1");
  Rational limit_sq(s.l2, n);
  if (cmp_sq(b, limit_sq) != std::strong_ordering::less)
    throw std::domain_error("next_threshold: b must lie strictly below sqrt(L^2/n)");
  CandidateSet cs = enumerate_homogeneous(s, n, p, opts);
  for (const auto& r : cs.ratios)
    if (r > b) return r;
  return std::nullopt;
}

}  // namespace seshadri
