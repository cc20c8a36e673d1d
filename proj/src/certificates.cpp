#include "seshadri/certificates.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

namespace seshadri {

std::string to_string(const Pattern& p) {
  if (const auto* u = std::get_if<UniformPattern>(&p)) {
    return u->m.str() + "^[" + std::to_string(u->n) + "]";
  }
  const auto& a = std::get<AlmostUniformPattern>(p);
  return "(" + a.m.str() + "^[" + std::to_string(a.n - 1) + "]," + (a.m + a.k).str() + ")";
}

std::vector<AlphaCertificate> builtin_hr(int n) {
  std::vector<AlphaCertificate> out;
  if (n < 10) return out;
  Int q = isqrt_floor(Int(n));
  Int m_max = q * (q - 3) / 2;
  for (Int m = 1; m <= m_max; ++m)
    out.push_back({CertKind::Alpha, UniformPattern{m, n}, Rational(m * m * n), "hr"});
  return out;
}

std::vector<AlphaCertificate> builtin_ccmo(int n) {
  std::vector<AlphaCertificate> out;
  if (n < 10) return out;
  for (Int m = 1; m <= 20; ++m)
    out.push_back({CertKind::Alpha, UniformPattern{m, n}, Rational(m * m * n), "ccmo"});
  return out;
}

std::optional<AlphaCertificate> builtin_doublepoint(int n) {
  if (n < 16) return std::nullopt;
  Int np1 = Int(n) + 1;
  return AlphaCertificate{CertKind::Alpha0, AlmostUniformPattern{1, 1, n},
                          Rational(np1 * np1, n), "doublepoint"};
}

CertificateParseError::CertificateParseError(const std::string& path,
                                             std::vector<std::pair<int, std::string>> errors)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << path << ": " << errors.size() << " malformed certificate line(s)";
        for (const auto& [line, msg] : errors) os << "\n  line " << line << ": " << msg;
        return os.str();
      }()),
      errors_(std::move(errors)) {}

namespace {

AlphaCertificate parse_certificate_line(const std::string& line, const std::string& path,
                                        int lineno) {
  std::istringstream is(line);
  std::string kind_tok, pattern_tok;
  if (!(is >> kind_tok >> pattern_tok))
    throw std::invalid_argument("expected '<alpha|alpha0> <uniform|almost> key=value...'");

  AlphaCertificate cert;
  if (kind_tok == "alpha") cert.kind = CertKind::Alpha;
  else if (kind_tok == "alpha0") cert.kind = CertKind::Alpha0;
  else throw std::invalid_argument("unknown kind '" + kind_tok + "' (want alpha or alpha0)");

  bool almost;
  if (pattern_tok == "uniform") almost = false;
  else if (pattern_tok == "almost") almost = true;
  else throw std::invalid_argument("unknown pattern '" + pattern_tok + "' (want uniform or almost)");

  std::optional<Int> m, k;
  std::optional<int> n;
  std::optional<Rational> bound_sq;
  std::string field;
  while (is >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("field '" + field + "' is not key=value");
    std::string key = field.substr(0, eq);
    std::string val = field.substr(eq + 1);
    Rational parsed = Rational::parse(val);
    if (key != "bound_sq" && !parsed.is_integer())
      throw std::invalid_argument("key '" + key + "' must be an integer");
    if (key == "m") m = parsed.num();
    else if (key == "k") k = parsed.num();
    else if (key == "n") {
      if (parsed.num() < 1 || parsed.num() > 1000000000)
        throw std::invalid_argument("n out of range");
      n = static_cast<int>(parsed.num().convert_to<long long>());
    } else if (key == "bound_sq") bound_sq = parsed;
    else throw std::invalid_argument("unknown key '" + key + "'");
  }
  if (!m || !n || !bound_sq) throw std::invalid_argument("missing required field (m, n, bound_sq)");
  if (almost && !k) throw std::invalid_argument("almost pattern needs k");
  if (!almost && k) throw std::invalid_argument("uniform pattern does not take k");
  if (*m < 1) throw std::invalid_argument("m must be >= 1");
  if (*n < 1) throw std::invalid_argument("n must be >= 1");
  if (bound_sq->is_negative()) throw std::invalid_argument("bound_sq must be >= 0");
  if (almost && *m + *k < 0) throw std::invalid_argument("pattern multiplicities must be nonnegative");

  if (almost) cert.pattern = AlmostUniformPattern{*m, *k, *n};
  else cert.pattern = UniformPattern{*m, *n};
  cert.bound_sq = *bound_sq;
  cert.provenance = "user:" + path + ":" + std::to_string(lineno);
  return cert;
}

}  // namespace

std::vector<AlphaCertificate> load_certificates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file: " + path);
  std::vector<AlphaCertificate> out;
  std::vector<std::pair<int, std::string>> errors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      out.push_back(parse_certificate_line(line, path, lineno));
    } catch (const std::exception& e) {
      errors.emplace_back(lineno, e.what());
    }
  }
  if (!errors.empty()) throw CertificateParseError(path, std::move(errors));
  return out;
}

void CertificateStore::add_all(std::vector<AlphaCertificate> certs) {
  for (auto& c : certs) certs_.push_back(std::move(c));
}

CertificateStore CertificateStore::p2_builtins(int n) {
  CertificateStore store;
  store.add_all(builtin_hr(n));
  store.add_all(builtin_ccmo(n));
  if (auto dp = builtin_doublepoint(n)) store.add(std::move(*dp));
  return store;
}

Rational tightened_bound_sq(const SurfaceData& s, const Rational& bound_sq) {
  if (!s.degrees_determine_classes() || !bound_sq.is_positive()) return bound_sq;
  // Least c with (c g)^2 >= bound_sq; degrees live in g * Z+.
  const Int& g = s.degree_unit;
  Int g2 = g * g;
  Int c = isqrt_floor(bound_sq.num() / (bound_sq.den() * g2));
  while (Rational(c * c * g2) < bound_sq) ++c;
  while (c > 1 && Rational((c - 1) * (c - 1) * g2) >= bound_sq) --c;
  return Rational(c * c * g2);
}

namespace {

void consider(std::optional<CertificateStore::Lookup>& best, Rational value, std::string source) {
  if (!best || value > best->bound_sq)
    best = CertificateStore::Lookup{std::move(value), std::move(source)};
}

std::string tighten_note(const Rational& raw, const Rational& tight) {
  if (raw == tight) return "";
  return " [tightened " + raw.str() + " -> " + tight.str() + "]";
}

}  // namespace

std::optional<CertificateStore::Lookup> CertificateStore::best_uniform(const SurfaceData& s,
                                                                       const Int& m, int n,
                                                                       bool for_alpha0) const {
  std::optional<Lookup> best;
  for (const auto& cert : certs_) {
    const auto* u = std::get_if<UniformPattern>(&cert.pattern);
    if (!u || u->m != m || u->n != n) continue;
    if (cert.kind == CertKind::Alpha0 && !for_alpha0) continue;  // alpha0 never bounds alpha
    Rational tight = tightened_bound_sq(s, cert.bound_sq);
    consider(best, tight, cert.provenance + tighten_note(cert.bound_sq, tight));
  }
  return best;
}

std::optional<CertificateStore::Lookup> CertificateStore::best_almost_uniform(const SurfaceData& s,
                                                                              const Int& m,
                                                                              const Int& k,
                                                                              int n) const {
  std::optional<Lookup> best;
  Int rotated = m * n + k;
  // Direct pattern certificates first: on equal strength they win over a
  // transferred bound, so provenance stays as close to the fact as it can.
  for (const auto& cert : certs_) {
    const auto* a = std::get_if<AlmostUniformPattern>(&cert.pattern);
    if (!a || cert.kind != CertKind::Alpha0 || a->m != m || a->k != k || a->n != n) continue;
    consider(best, cert.bound_sq, cert.provenance);
  }
  for (const auto& cert : certs_) {
    const auto* u = std::get_if<UniformPattern>(&cert.pattern);
    if (!u || cert.kind != CertKind::Alpha || u->m != rotated || u->n != n) continue;
    Rational tight = tightened_bound_sq(s, cert.bound_sq);
    Rational transferred = tight / Rational(Int(n) * n);
    consider(best, transferred,
             cert.provenance + tighten_note(cert.bound_sq, tight) + " via alpha(" +
                 rotated.str() + "^[" + std::to_string(n) + "])/" + std::to_string(n));
  }
  return best;
}

bool HypothesisReport::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const HypothesisRow& r) { return r.status == RowStatus::Pass; });
}

HypothesisReport check_hypotheses(TheoremId theorem, const SurfaceData& s, int n,
                                  const Rational& mu, const CertificateStore& store) {
  s.validate();
  if (mu < Rational(1)) throw std::domain_error("check_hypotheses: mu must be >= 1");
  if (theorem == TheoremId::A && n < 3)
    throw std::domain_error("check_hypotheses: theorem A needs n >= 3");
  if (n < 2) throw std::domain_error("check_hypotheses: n must be >= 2");

  HypothesisReport report;
  report.theorem = theorem;
  report.mu = mu;
  report.n = n;

  // Thresholds compare against bound_sq, which is in units of g^2.
  Rational g_sq(s.degree_unit * s.degree_unit);
  Rational scale = Rational(s.l2) * (Rational(n) - mu.reciprocal()) / g_sq;

  auto add_row = [&](Pattern pattern, Rational required,
                     const std::optional<CertificateStore::Lookup>& found) {
    HypothesisRow row;
    row.pattern = std::move(pattern);
    row.required_sq = std::move(required);
    if (found) {
      row.supplied_sq = found->bound_sq;
      row.source = found->source;
      row.status = *row.supplied_sq >= row.required_sq ? RowStatus::Pass : RowStatus::Fail;
    } else {
      row.status = RowStatus::Missing;
    }
    report.rows.push_back(std::move(row));
  };

  for (Int m = 1; Rational(m) < mu; ++m) {
    Rational required = Rational(m * m) * scale;
    auto found = store.best_uniform(s, m, n, /*for_alpha0=*/theorem == TheoremId::B);
    add_row(UniformPattern{m, n}, std::move(required), found);
  }

  if (theorem == TheoremId::B) {
    for (Int m = 1; Rational(m * (n - 1)) < mu; ++m) {
      auto k_row = [&](const Int& k) {
        Int sum = m * n + k;
        Rational required = Rational(sum * sum, Int(n) * n) * scale;
        add_row(AlmostUniformPattern{m, k, n}, std::move(required),
                store.best_almost_uniform(s, m, k, n));
      };
      for (Int k = 1; k * k * (n - 1) < Int(n) * m; ++k) k_row(k);
      for (Int j = 1; j < m && j * j * (n - 1) < Int(n) * (m - j); ++j) k_row(-j);
    }
  }
  return report;
}

}  // namespace seshadri
