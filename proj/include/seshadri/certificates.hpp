#pragma once

// Lower-bound certificates for the minimal degree alpha (any curve with
// the given multiplicity pattern) and alpha0 (irreducible curve with
// exactly that pattern), plus the hypothesis checks that turn a
// certificate store into a certified Seshadri bound.
//
// Certificates are facts, never derived: the engine only compares an
// asserted bound_sq against required thresholds.  The two sanctioned
// manipulations are integer tightening (degrees are multiples of g on a
// rank-one surface, so a non-square bound rounds up to the next usable
// square) and the uniform-to-almost-uniform transfer
// alpha0((m^[n-1], m+k)) >= alpha((nm+k)^[n]) / n, which holds because
// the n rotations of such a curve through general points sum to a curve
// with multiplicity nm+k everywhere.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seshadri/surface.hpp"

namespace seshadri {

enum class CertKind { Alpha, Alpha0 };

struct UniformPattern {
  Int m;
  int n = 0;
  friend bool operator==(const UniformPattern&, const UniformPattern&) = default;
};

// Multiplicity vector (m^[n-1], m+k).
struct AlmostUniformPattern {
  Int m;
  Int k;
  int n = 0;
  friend bool operator==(const AlmostUniformPattern&, const AlmostUniformPattern&) = default;
};

using Pattern = std::variant<UniformPattern, AlmostUniformPattern>;

std::string to_string(const Pattern& p);

struct AlphaCertificate {
  CertKind kind = CertKind::Alpha;
  Pattern pattern;
  Rational bound_sq;       // (asserted lower bound on alpha)^2, in units of g^2
  std::string provenance;  // "hr", "ccmo", "doublepoint" or "user:<file>:<line>"
};

// Built-in uniform facts for n general points of the projective plane:
// alpha(m^[n]) >= m sqrt(n) for n >= 10, in two ranges of m.
std::vector<AlphaCertificate> builtin_hr(int n);    // m <= floor(sqrt n)(floor(sqrt n)-3)/2
std::vector<AlphaCertificate> builtin_ccmo(int n);  // m <= 20

// Built-in irreducibility fact for one double point among general simple
// points of the plane, valid for n >= 16:
// alpha0((1^[n-1], 2)) >= (n+1)/sqrt(n), stored as bound_sq = (n+1)^2/n.
std::optional<AlphaCertificate> builtin_doublepoint(int n);

// Raised when a certificate file has malformed lines; every offending
// line is reported, not just the first.
class CertificateParseError : public std::runtime_error {
 public:
  CertificateParseError(const std::string& path, std::vector<std::pair<int, std::string>> errors);
  const std::vector<std::pair<int, std::string>>& errors() const { return errors_; }

 private:
  std::vector<std::pair<int, std::string>> errors_;
};

// One certificate per line: "<alpha|alpha0> <uniform|almost> key=value...".
// Keys m, n (and k for almost) are integers; bound_sq is "p/q" or "p".
// '#' starts a comment.  Provenance records file and line verbatim.
std::vector<AlphaCertificate> load_certificates(const std::string& path);

// Write-once store, read-only shared afterwards.
class CertificateStore {
 public:
  struct Lookup {
    Rational bound_sq;   // usable value after any tightening / transfer
    std::string source;  // provenance plus how the value was obtained
  };

  void add(AlphaCertificate cert) { certs_.push_back(std::move(cert)); }
  void add_all(std::vector<AlphaCertificate> certs);
  const std::vector<AlphaCertificate>& certificates() const { return certs_; }

  // All built-in plane facts applicable at n.
  static CertificateStore p2_builtins(int n);

  // Strongest usable bound for a uniform pattern.  Alpha0 certificates
  // may serve alpha0 queries only; an alpha bound serves both, since any
  // irreducible curve with the exact pattern is in particular a curve
  // with at least that pattern.
  std::optional<Lookup> best_uniform(const SurfaceData& s, const Int& m, int n,
                                     bool for_alpha0) const;

  // Strongest usable alpha0 bound for (m^[n-1], m+k): direct alpha0
  // certificates for the pattern, or uniform alpha certificates for
  // (nm+k)^[n] transferred by the 1/n rotation argument.
  std::optional<Lookup> best_almost_uniform(const SurfaceData& s, const Int& m, const Int& k,
                                            int n) const;

 private:
  std::vector<AlphaCertificate> certs_;
};

// When degrees are integer multiples of g, alpha >= sqrt(b) sharpens to
// the least multiple of g whose square is >= b.  Returns the sharpened
// square (equal to b when b is already a usable square or the mode does
// not determine degrees).
Rational tightened_bound_sq(const SurfaceData& s, const Rational& bound_sq);

enum class TheoremId { A, B };
enum class RowStatus { Pass, Fail, Missing };

struct HypothesisRow {
  Pattern pattern;
  Rational required_sq;
  std::optional<Rational> supplied_sq;
  std::string source;
  RowStatus status = RowStatus::Missing;
};

struct HypothesisReport {
  TheoremId theorem = TheoremId::B;
  Rational mu;
  int n = 0;
  std::vector<HypothesisRow> rows;
  bool passed() const;
};

// Hypothesis set of the two bound theorems at (n, mu).
//   A: an alpha certificate with bound_sq >= m^2 L^2 (n - 1/mu) for every
//      integer 1 <= m < mu.  Requires n >= 3.
//   B: the same rows against alpha0 (alpha accepted as a fallback for the
//      uniform patterns), plus for every 1 <= m < mu/(n-1) and every
//      k != 0 with k^2 < (n/(n-1)) min(m, m+k) an alpha0 certificate for
//      (m^[n-1], m+k) with bound_sq >= ((mn+k)/n)^2 L^2 (n - 1/mu).
// Required thresholds are expressed in units of g^2, like bound_sq.
// Missing certificates produce failing rows, never a silent pass.
HypothesisReport check_hypotheses(TheoremId theorem, const SurfaceData& s, int n,
                                  const Rational& mu, const CertificateStore& store);

}  // namespace seshadri
