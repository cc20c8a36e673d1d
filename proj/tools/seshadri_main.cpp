// Command-line front end: certified Seshadri bounds, obstruction-set
// enumeration, ampleness checks and certificate-file validation, with
// deterministic machine-readable output.
//
// Exit codes: 0 success, 1 usage/config error, 2 hypothesis failure,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seshadri/bounds.hpp"
#include "seshadri/certificates.hpp"
#include "seshadri/enumerate.hpp"
#include "seshadri/json_io.hpp"
#include "seshadri/rational.hpp"
#include "seshadri/surface.hpp"

namespace {

using namespace seshadri;

constexpr long long kMaxRangeEntries = 1000000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HypothesisFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<long long, long long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      long long v = std::stoll(text);
      return {v, v};
    }
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range: " + text);
    if (hi - lo + 1 > kMaxRangeEntries)
      throw UsageError("range too large (limit " + std::to_string(kMaxRangeEntries) + " entries)");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse range '" + text + "' (want N or A..B)");
  } catch (const std::out_of_range&) {
    throw UsageError("range endpoint out of range in '" + text + "'");
  }
}

// Certificate files resolve against the working directory first, then
// against each directory in SESHADRI_CERT_PATH (colon-separated).
std::string resolve_cert_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (!fs::path(path).is_relative()) throw UsageError("certificate file not found: " + path);
  if (const char* env = std::getenv("SESHADRI_CERT_PATH")) {
    std::string dirs(env);
    std::size_t start = 0;
    while (start <= dirs.size()) {
      auto colon = dirs.find(':', start);
      std::string dir = dirs.substr(start, colon == std::string::npos ? std::string::npos
                                                                      : colon - start);
      if (!dir.empty()) {
        fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate)) return candidate.string();
      }
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
  }
  throw UsageError("certificate file not found: " + path);
}

struct SurfaceChoice {
  bool p2 = false;
  std::string config_path;

  SurfaceData resolve() const {
    if (p2 && !config_path.empty())
      throw UsageError("choose one of --p2 or --surface <path>, not both");
    if (!p2 && config_path.empty())
      throw UsageError("choose one of --p2 or --surface <path>");
    return p2 ? SurfaceData::p2() : load_surface(config_path);
  }
};

std::vector<AlphaCertificate> load_user_certs(const std::vector<std::string>& paths) {
  std::vector<AlphaCertificate> all;
  for (const auto& p : paths) {
    auto certs = load_certificates(resolve_cert_path(p));
    all.insert(all.end(), certs.begin(), certs.end());
  }
  return all;
}

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  if (f == "table") return Format::Table;
  throw UsageError("unknown format: " + f);
}

long long count_candidates(const BoundResult& r) {
  long long c = 0;
  for (const auto& e : r.audit)
    if (e.status == AuditStatus::Killed || e.status == AuditStatus::Unkilled ||
        e.status == AuditStatus::Realized)
      ++c;
  return c;
}

std::string bound_csv_row(const BoundResult& r) {
  std::ostringstream os;
  os << r.n << ',' << to_string(r.method) << ',' << r.epsilon_lower_sq.num() << ','
     << r.epsilon_lower_sq.den() << ',' << (r.strict ? "true" : "false") << ','
     << count_candidates(r);
  return os.str();
}

std::string bound_table_row(const BoundResult& r) {
  std::ostringstream os;
  os << r.n << '\t' << to_string(r.method) << '\t' << r.epsilon_lower_sq.str() << '\t'
     << sqrt_decimal(r.epsilon_lower_sq) << '\t' << (r.strict ? ">" : ">=") << '\t'
     << count_candidates(r);
  return os.str();
}

// ---------------------------------------------------------------------
// bound

struct BoundArgs {
  SurfaceChoice surface;
  std::string n_single;
  std::string n_range;
  std::string mu;
  std::string theorem = "b";
  bool mu_prime = false;
  bool no_builtins = false;
  std::vector<std::string> cert_paths;
  std::string format = "json";
  bool no_parallel = false;
};

int run_bound(const BoundArgs& args) {
  SurfaceData s = args.surface.resolve();
  if (args.n_single.empty() == args.n_range.empty())
    throw UsageError("choose exactly one of --n or --n-range");
  auto [n_lo, n_hi] = parse_range(args.n_single.empty() ? args.n_range : args.n_single);
  if (n_lo < 1) throw UsageError("n must be >= 1");
  Format format = parse_format(args.format);
  auto user_certs = load_user_certs(args.cert_paths);

  bool theorem_pipeline = !args.mu.empty();
  std::optional<Rational> mu;
  if (theorem_pipeline) mu = Rational::parse(args.mu);
  if (!theorem_pipeline && s.mode != SurfaceMode::P2)
    throw UsageError("the default closed-form pipeline is plane-only; pass --mu");
  if (!theorem_pipeline && n_lo < 16)
    throw UsageError("closed-form bound requires n >= 16; use --mu with certificates");
  bool theorem_a = args.theorem == "a" || args.theorem == "A";
  if (!theorem_a && !(args.theorem == "b" || args.theorem == "B"))
    throw UsageError("--theorem must be a or b");

  EnumOptions eopts;
  eopts.parallel = false;  // parallelism lives at the per-n fan-out here

  long long count = n_hi - n_lo + 1;
  std::vector<std::string> lines(static_cast<std::size_t>(count));
  std::vector<char> failed(static_cast<std::size_t>(count), 0);

  auto run_one = [&](long long n) -> std::pair<std::string, bool> {
    int ni = static_cast<int>(n);
    BoundOutcome outcome;
    if (!theorem_pipeline) {
      BoundResult r = cor13_bound(n);
      switch (format) {
        case Format::Json: return {render_json(bound_result_json(r)), false};
        case Format::Csv: return {bound_csv_row(r), false};
        case Format::Table: return {bound_table_row(r), false};
      }
    }
    CertificateStore store;
    if (s.mode == SurfaceMode::P2 && !args.no_builtins)
      store = CertificateStore::p2_builtins(ni);
    store.add_all(user_certs);
    outcome = theorem_a ? bound_thm_a(s, ni, *mu, store, args.mu_prime)
                        : bound_thm_b(s, ni, *mu, store, eopts);
    if (outcome.ok()) {
      const BoundResult& r = *outcome.bound;
      switch (format) {
        case Format::Json: return {render_json(bound_result_json(r)), false};
        case Format::Csv: return {bound_csv_row(r), false};
        case Format::Table: return {bound_table_row(r), false};
      }
    }
    OrderedJson j;
    j["n"] = ni;
    j["method"] = theorem_a ? "thm_a" : "thm_b";
    j["hypothesis_fail"] = true;
    j["report"] = hypothesis_report_json(outcome.report);
    return {render_json(j), true};
  };

  bool parallel = !args.no_parallel && count > 8;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      auto [line, fail] = run_one(n_lo + i);
      lines[static_cast<std::size_t>(i)] = std::move(line);
      failed[static_cast<std::size_t>(i)] = fail ? 1 : 0;
    }
  } else
#endif
  {
    for (long long i = 0; i < count; ++i) {
      auto [line, fail] = run_one(n_lo + i);
      lines[static_cast<std::size_t>(i)] = std::move(line);
      failed[static_cast<std::size_t>(i)] = fail ? 1 : 0;
    }
  }

  if (format == Format::Csv) std::cout << "n,method,eps_sq_num,eps_sq_den,strict,n_candidates\n";
  if (format == Format::Table) std::cout << "n\tmethod\teps_sq\teps_lower\trelation\tcandidates\n";
  bool any_failed = false;
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (failed[idx]) {
      any_failed = true;
      if (format == Format::Json) std::cout << lines[idx] << '\n';
      else std::cerr << "hypothesis failure at n=" << (n_lo + i) << "; rerun with --format json for the report\n";
    } else {
      std::cout << lines[idx] << '\n';
    }
  }
  if (any_failed) throw HypothesisFailure("one or more hypothesis sets failed");
  return 0;
}

// ---------------------------------------------------------------------
// candidates

struct CandidatesArgs {
  SurfaceChoice surface;
  long long n = 0;
  std::string mu;
  std::string delta;
  std::string weights;
  long long cap = 0;
  bool no_parity = false;
  bool no_parallel = false;
  std::string format = "json";
};

int run_candidates(const CandidatesArgs& args) {
  SurfaceData s = args.surface.resolve();
  if (args.n < 1) throw UsageError("--n must be >= 1");
  int n = static_cast<int>(args.n);
  if (args.mu.empty() == args.delta.empty())
    throw UsageError("choose exactly one of --mu or --delta");
  Format format = parse_format(args.format);

  EnumOptions opts;
  opts.parity_fastpath = !args.no_parity;
  opts.parallel = !args.no_parallel;

  CandidateSet cs;
  if (!args.weights.empty()) {
    if (args.cap <= 0)
      throw UsageError("general-weight enumeration needs an explicit --cap (sum of h_i^2)");
    std::vector<Rational> ws;
    std::stringstream ss(args.weights);
    std::string tok;
    while (std::getline(ss, tok, ',')) ws.push_back(Rational::parse(tok));
    WeightVector w(std::move(ws));
    if (w.n() != n) throw UsageError("--weights length must equal --n");
    Rational delta = args.delta.empty()
                         ? EnumParams::from_mu(Rational::parse(args.mu), n).delta
                         : Rational::parse(args.delta);
    cs = enumerate_general(s, w, delta, Int(args.cap), opts);
  } else {
    EnumParams p = args.delta.empty() ? EnumParams::from_mu(Rational::parse(args.mu), n)
                                      : EnumParams::from_delta(Rational::parse(args.delta), n);
    cs = enumerate_homogeneous(s, n, p, opts);
  }

  switch (format) {
    case Format::Json:
      std::cout << render_json(candidate_set_json(cs)) << '\n';
      break;
    case Format::Csv: {
      std::cout << "t,m,k,ratio\n";
      for (const auto& c : cs.classes)
        std::cout << c.degree << ',' << c.m << ',' << c.k << ',' << c.ratio.str() << '\n';
      for (const auto& c : cs.general) {
        std::cout << c.degree << ",,,\"" << c.ratio.str() << "\"\n";
      }
      break;
    }
    case Format::Table: {
      std::cout << "t\tm\tk\tratio\n";
      for (const auto& c : cs.classes)
        std::cout << c.degree << '\t' << c.m << '\t' << c.k << '\t' << c.ratio.str() << '\n';
      for (const auto& c : cs.general) {
        std::cout << c.degree << "\th=(";
        for (std::size_t i = 0; i < c.h.size(); ++i)
          std::cout << (i ? "," : "") << c.h[i];
        std::cout << ")\t\t" << c.ratio.str() << '\n';
      }
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------
// ample

struct AmpleArgs {
  std::string n_text, t_text, m_text;
  std::string format = "json";
};

int run_ample(const AmpleArgs& args) {
  auto [n_lo, n_hi] = parse_range(args.n_text);
  auto [t_lo, t_hi] = parse_range(args.t_text);
  auto [m_lo, m_hi] = parse_range(args.m_text);
  Format format = parse_format(args.format);
  if (format == Format::Csv) std::cout << "n,t,m,status\n";
  if (format == Format::Table) std::cout << "n\tt\tm\tstatus\treason\n";
  for (long long n = n_lo; n <= n_hi; ++n)
    for (long long t = t_lo; t <= t_hi; ++t)
      for (long long m = m_lo; m <= m_hi; ++m) {
        AmpleDecision d = ample_check(n, t, m);
        const char* status = d.ample ? "AMPLE" : "UNKNOWN";
        switch (format) {
          case Format::Json: {
            OrderedJson j;
            j["n"] = n;
            j["t"] = t;
            j["m"] = m;
            j["status"] = status;
            j["reason"] = d.reason;
            std::cout << render_json(j) << '\n';
            break;
          }
          case Format::Csv:
            std::cout << n << ',' << t << ',' << m << ',' << status << '\n';
            break;
          case Format::Table:
            std::cout << n << '\t' << t << '\t' << m << '\t' << status << '\t' << d.reason
                      << '\n';
            break;
        }
      }
  return 0;
}

// ---------------------------------------------------------------------
// certs

struct CertsArgs {
  std::vector<std::string> cert_paths;
  std::string format = "json";
};

int run_certs(const CertsArgs& args) {
  if (args.cert_paths.empty()) throw UsageError("pass at least one --certs <path>");
  Format format = parse_format(args.format);
  std::vector<AlphaCertificate> all = load_user_certs(args.cert_paths);
  if (format == Format::Json) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& c : all) arr.push_back(certificate_json(c));
    std::cout << render_json(arr) << '\n';
  } else {
    std::cout << "kind\tpattern\tbound_sq\tprovenance\n";
    for (const auto& c : all)
      std::cout << (c.kind == CertKind::Alpha ? "alpha" : "alpha0") << '\t'
                << to_string(c.pattern) << '\t' << c.bound_sq.str() << '\t' << c.provenance
                << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified lower bounds for multi-point Seshadri constants on surfaces"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "certified lower bound on epsilon^2");
  bound->add_flag("--p2", bound_args.surface.p2, "projective plane preset");
  bound->add_option("--surface", bound_args.surface.config_path, "surface config (JSON)");
  bound->add_option("--n", bound_args.n_single, "number of points");
  bound->add_option("--n-range", bound_args.n_range, "range A..B of point counts");
  bound->add_option("--mu", bound_args.mu, "mu as p/q: switch to the certificate pipeline");
  bound->add_option("--theorem", bound_args.theorem, "a or b (default b)");
  bound->add_flag("--mu-prime", bound_args.mu_prime, "report the stronger mu' variant of theorem a");
  bound->add_flag("--no-builtins", bound_args.no_builtins, "do not load built-in plane certificates");
  bound->add_option("--certs", bound_args.cert_paths, "certificate file (repeatable)");
  bound->add_option("--format", bound_args.format, "json|csv|table");
  bound->add_flag("--no-parallel", bound_args.no_parallel, "disable the worker pool");

  CandidatesArgs cand_args;
  auto* cands = app.add_subcommand("candidates", "enumerate the finite obstruction set");
  cands->add_flag("--p2", cand_args.surface.p2, "projective plane preset");
  cands->add_option("--surface", cand_args.surface.config_path, "surface config (JSON)");
  cands->add_option("--n", cand_args.n, "number of points")->required();
  cands->add_option("--mu", cand_args.mu, "mu as p/q");
  cands->add_option("--delta", cand_args.delta, "delta as p/q");
  cands->add_option("--weights", cand_args.weights, "comma list of weights: general mode");
  cands->add_option("--cap", cand_args.cap, "cap on sum h_i^2 (required in general mode)");
  cands->add_flag("--no-parity", cand_args.no_parity, "disable the parity shortcut");
  cands->add_flag("--no-parallel", cand_args.no_parallel, "serial enumeration kernel");
  cands->add_option("--format", cand_args.format, "json|csv|table");

  AmpleArgs ample_args;
  auto* ample = app.add_subcommand("ample", "sufficient ampleness check on the blown-up plane");
  ample->add_option("--n", ample_args.n_text, "number of points (N or A..B)")->required();
  ample->add_option("--t", ample_args.t_text, "degree (N or A..B)")->required();
  ample->add_option("--m", ample_args.m_text, "multiplicity (N or A..B)")->required();
  ample->add_option("--format", ample_args.format, "json|csv|table");

  CertsArgs certs_args;
  auto* certs = app.add_subcommand("certs", "validate and print certificate files");
  certs->add_option("--certs", certs_args.cert_paths, "certificate file (repeatable)");
  certs->add_option("--format", certs_args.format, "json|table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (bound->parsed()) return run_bound(bound_args);
    if (cands->parsed()) return run_candidates(cand_args);
    if (ample->parsed()) return run_ample(ample_args);
    if (certs->parsed()) return run_certs(certs_args);
    std::cerr << "no subcommand\n";
    return 1;
  } catch (const HypothesisFailure& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const CertificateParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
