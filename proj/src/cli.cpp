#include "tracesign/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "tracesign/certificate.hpp"
#include "tracesign/report_io.hpp"
#include "tracesign/sweep.hpp"
#include "tracesign/verify.hpp"

namespace tracesign::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caps protecting against 4^k growth; --unsafe-large raises them.
struct Cap {
  int normal;
  int unsafe;
};
constexpr Cap kComputeCap{10, kMaxPairs};
constexpr Cap kVerifyCap{6, kMaxDensePairs};
constexpr Cap kOracleCap{8, 12};
constexpr Cap kCertifyDepthCap{10, 11};
constexpr Cap kCertifyKCap{5, 7};
constexpr Cap kBenchCap{6, 8};

// Everything the subcommands can take; RunConfig plus command-specific extras.
struct Options {
  RunConfig cfg;
  std::string format = "json";
  std::string matrix_literal;
  std::string poly_text;
  std::string poly_json_path;
  std::string point;
  std::string backend = "parallel";
  std::vector<std::string> set_constants;
  std::vector<int> bench_jobs;
  int trials = 1000;
  int random_matrices = 50;
  bool per_sigma = false;
  bool bench_reference = false;
};

int default_jobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (const std::exception&) {
    }
  }
  return 0;
}

int require_k(const Options& o, int min, Cap cap) {
  if (!o.cfg.k) throw UsageError("--k is required");
  const int k = *o.cfg.k;
  if (k < min) throw UsageError("--k must be at least " + std::to_string(min) + ", got " + std::to_string(k));
  const int limit = o.cfg.unsafe_large ? cap.unsafe : cap.normal;
  if (k > limit)
    throw UsageError("--k " + std::to_string(k) + " exceeds the limit " + std::to_string(limit) +
                     (o.cfg.unsafe_large ? "" : " (pass --unsafe-large to raise it)"));
  return k;
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

std::string tag_line(const GoodnessReport& r) {
  std::ostringstream s;
  s << "counts: AllNonneg=" << r.count(SignTag::AllNonneg) << " AllNonpos=" << r.count(SignTag::AllNonpos)
    << " Zero=" << r.count(SignTag::Zero) << " Mixed=" << r.count(SignTag::Mixed) << "\n";
  return s.str();
}

std::string goodness_text(const GoodnessReport& r) {
  std::ostringstream s;
  s << "k = " << r.k << ", sign sequences = " << r.per_sigma.size() << ", terms = " << r.terms << "\n";
  s << "all_good = " << (r.all_good ? "true" : "false") << "\n";
  if (r.sign_formula_holds) s << "sign_formula_holds = " << (*r.sign_formula_holds ? "true" : "false") << "\n";
  s << tag_line(r);
  if (r.counterexample)
    s << "counterexample: sigma=" << r.counterexample->sigma.to_string()
      << " positive=" << r.counterexample->positive.to_string()
      << " negative=" << r.counterexample->negative.to_string() << "\n";
  if (r.formula_violation)
    s << "sign formula violated: sigma=" << r.formula_violation->sigma.to_string()
      << " observed=" << to_string(r.formula_violation->observed)
      << " expected_sign=" << r.formula_violation->expected << "\n";
  return s.str();
}

std::string goodness_csv(const GoodnessReport& r) {
  std::ostringstream s;
  s << "sigma_mask,sigma,pattern,positive_mask,negative_mask\n";
  for (std::uint32_t mask = 0; mask < r.per_sigma.size(); ++mask) {
    const SignPattern& p = r.per_sigma[mask];
    s << mask << ',' << SignSequence(r.k, mask).to_string() << ',' << to_string(p.tag) << ',';
    if (p.is_mixed()) s << p.positive_witness->mask << ',' << p.negative_witness->mask;
    else s << ',';
    s << '\n';
  }
  return s.str();
}

std::string render_goodness(const Options& o, const GoodnessReport& r, json extra = json::object()) {
  switch (o.cfg.format) {
    case Format::Text: return goodness_text(r);
    case Format::Csv: return goodness_csv(r);
    case Format::Json: break;
  }
  json j = json_value(r, o.per_sigma);
  for (auto& [key, value] : extra.items()) j[key] = value;
  return pretty(j);
}

SweepOptions sweep_options(const Options& o) {
  SweepOptions s;
  s.jobs = o.cfg.jobs;
  if (o.backend == "reference") s.backend = SweepBackend::Reference;
  else if (o.backend != "parallel") throw UsageError("--backend must be parallel or reference");
  return s;
}

// compute ------------------------------------------------------------------

int cmd_compute(const Options& o, std::string& out) {
  const int k = require_k(o, 0, kComputeCap);
  PolyMatrix2 F = compute_F(k);
  std::optional<SignSequence> sigma;
  if (o.cfg.sigma) {
    sigma = SignSequence::parse(*o.cfg.sigma);
    if (sigma->k() != k)
      throw UsageError("--sigma must have 2k = " + std::to_string(2 * k) + " signs, got " +
                       std::to_string(sigma->length()));
    F = substitute_signs(F, *sigma);
  }
  const MultilinearPoly p = F.trace();
  const std::vector<std::pair<std::string, const MultilinearPoly*>> entries = {
      {"f", &F.f}, {"h", &F.h}, {"t", &F.t}, {"g", &F.g}, {"p", &p}};
  switch (o.cfg.format) {
    case Format::Text: {
      const std::string suffix = sigma ? "^\xCF\x83" : "";  // ^sigma
      for (const auto& [name, poly] : entries) out += name + suffix + " = " + to_text(*poly) + "\n";
      break;
    }
    case Format::Csv: {
      out += "entry,mask,coeff\n";
      for (const auto& [name, poly] : entries)
        for (const Term& t : poly->terms()) out += name + "," + std::to_string(t.mono.mask) + "," + to_string(t.coeff) + "\n";
      break;
    }
    case Format::Json: {
      json j = {{"schema_version", kSchemaVersion}, {"kind", "compute"}, {"k", k}};
      j["sigma"] = sigma ? json(sigma->to_string()) : json(nullptr);
      for (const auto& [name, poly] : entries) j[name] = json_value(*poly);
      out += pretty(j);
      break;
    }
  }
  return kExitOk;
}

// goodness -----------------------------------------------------------------

int cmd_goodness(const Options& o, std::string& out) {
  MultilinearPoly p;
  if (!o.poly_text.empty() == !o.poly_json_path.empty())
    throw UsageError("goodness needs exactly one of --poly or --poly-json");
  if (!o.poly_text.empty()) {
    p = parse_text(o.poly_text, o.cfg.k);
  } else {
    std::ifstream in(o.poly_json_path);
    if (!in) throw UsageError("cannot open " + o.poly_json_path);
    std::stringstream buf;
    buf << in.rdbuf();
    p = parse_json(buf.str());
  }
  const int limit = o.cfg.unsafe_large ? kVerifyCap.unsafe : kVerifyCap.normal;
  if (p.k() > limit) throw UsageError("polynomial has k=" + std::to_string(p.k()) + " above the sweep limit");
  const GoodnessReport r = goodness(p, sweep_options(o));
  out += render_goodness(o, r, {{"polynomial", to_text(p)}});
  return r.all_good ? kExitOk : kExitFailure;
}

// verify -------------------------------------------------------------------

int cmd_verify(const Options& o, std::string& out) {
  const int k = require_k(o, 1, kVerifyCap);
  const SweepOptions sweep = sweep_options(o);
  if (o.cfg.matrix) {
    const GoodnessReport r = verify_comb_good(k, *o.cfg.matrix, sweep);
    out += render_goodness(o, r, {{"kind", "verify_comb"}, {"matrix", json_value(*o.cfg.matrix)}});
    return r.passed() ? kExitOk : kExitFailure;
  }
  const GoodnessReport r = verify_theorem(k, sweep);
  out += render_goodness(o, r, {{"kind", "verify_theorem"}});
  return r.passed() && r.count(SignTag::Zero) == 0 ? kExitOk : kExitFailure;
}

// certify ------------------------------------------------------------------

int cmd_certify(const Options& o, std::string& out) {
  const int depth = o.cfg.depth;
  if (depth < 1) throw UsageError("--depth must be at least 1");
  const int depth_limit = o.cfg.unsafe_large ? kCertifyDepthCap.unsafe : kCertifyDepthCap.normal;
  if (depth > depth_limit) throw UsageError("--depth exceeds " + std::to_string(depth_limit));
  Options with_k = o;
  if (!with_k.cfg.k) with_k.cfg.k = 3;
  const int k_max = require_k(with_k, 1, kCertifyKCap);

  CertificateOptions opts;
  opts.seed = o.cfg.seed;
  opts.jobs = o.cfg.jobs;
  opts.random_matrix_count = o.random_matrices;
  for (const std::string& assignment : o.set_constants) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw UsageError("--set-constant expects NAME=[[a,c],[b,d]]");
    opts.table.by_name(assignment.substr(0, eq)) = parse_matrix(assignment.substr(eq + 1));
  }
  const CertificateReport r = full_certificate(depth, k_max, opts);
  switch (o.cfg.format) {
    case Format::Csv: out += certificate_csv(r); break;
    case Format::Json: out += pretty(json_value(r)); break;
    case Format::Text: {
      auto line = [&out](const char* name, bool ok, std::size_t n, const char* unit = "checks") {
        out += std::string(name) + ": " + (ok ? "ok" : "FAILED") + " (" + std::to_string(n) + " " + unit + ")\n";
      };
      line("identities", r.identities_ok, r.identity_checks);
      line("recursion", r.recursion_ok, r.recursion_instances);
      line("base_case", r.base_case_ok, r.base_instances);
      line("cone", r.cone_ok, r.cone_checks);
      line("delta", r.delta_ok, r.delta_words, "words");
      for (const auto& f : r.failures) out += "failure [" + f.check + "] " + f.witness + ": " + f.detail + "\n";
      break;
    }
  }
  return r.all_ok() ? kExitOk : kExitFailure;
}

// oracle -------------------------------------------------------------------

std::vector<Int> parse_point(const std::string& text) {
  std::vector<Int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw UsageError("empty coordinate in --point");
    v.push_back(parse_int(item.substr(b, e - b + 1)));
  }
  return v;
}

int cmd_oracle(const Options& o, std::string& out) {
  const int k = require_k(o, 1, kOracleCap);
  if (!o.point.empty()) {
    const std::vector<Int> point = parse_point(o.point);
    if (static_cast<int>(point.size()) != 2 * k)
      throw UsageError("--point needs 2k = " + std::to_string(2 * k) + " coordinates");
    const Int lhs = numeric_oracle(k, point);
    const Int rhs = evaluate(trace_polynomial(k), point);
    if (o.cfg.format == Format::Text) {
      out += "oracle = " + to_string(lhs) + "\npolynomial = " + to_string(rhs) + "\n";
    } else if (o.cfg.format == Format::Csv) {
      out += "oracle,polynomial,agree\n" + to_string(lhs) + "," + to_string(rhs) + "," + (lhs == rhs ? "1" : "0") + "\n";
    } else {
      json pt = json::array();
      for (Int v : point) pt.push_back(to_string(v));
      out += pretty({{"schema_version", kSchemaVersion}, {"kind", "oracle_point"}, {"k", k}, {"point", pt},
                     {"oracle", to_string(lhs)}, {"polynomial", to_string(rhs)}, {"agree", lhs == rhs}});
    }
    return lhs == rhs ? kExitOk : kExitFailure;
  }
  if (o.trials < 1) throw UsageError("--trials must be positive");
  const OracleSummary s = run_oracle_trials(k, o.trials, o.cfg.seed);
  if (o.cfg.format == Format::Text) {
    out += "k=" + std::to_string(k) + " seed=" + std::to_string(s.seed) + ": " + std::to_string(s.agreements) + "/" +
           std::to_string(s.trials) + " agree\n";
  } else if (o.cfg.format == Format::Csv) {
    out += "k,seed,trials,agreements,mismatches\n" + std::to_string(k) + "," + std::to_string(s.seed) + "," +
           std::to_string(s.trials) + "," + std::to_string(s.agreements) + "," +
           std::to_string(s.mismatches.size()) + "\n";
  } else {
    out += pretty(json_value(s));
  }
  return s.mismatches.empty() ? kExitOk : kExitFailure;
}

// bench --------------------------------------------------------------------

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_bench(const Options& o, std::string& out) {
  Options with_k = o;
  if (!with_k.cfg.k) with_k.cfg.k = 6;
  const int k = require_k(with_k, 1, kBenchCap);
  std::vector<int> jobs_list = o.bench_jobs;
  if (jobs_list.empty()) {
    jobs_list.push_back(1);
    const int j = effective_jobs(o.cfg.jobs);
    if (j != 1) jobs_list.push_back(j);
  }

  json compute_rows = json::array();
  MultilinearPoly pk;
  for (int kk = 1; kk <= k; ++kk) {
    const double t = seconds([&] { pk = trace_polynomial(kk); });
    compute_rows.push_back({{"k", kk}, {"terms", pk.size()}, {"seconds", t}});
  }

  json sweeps = json::array();
  double serial = 0;
  for (int j : jobs_list) {
    if (j < 1) throw UsageError("bench jobs must be positive");
    const double t = seconds([&] { sign_sweep(pk, {.jobs = j, .backend = SweepBackend::Parallel}); });
    if (j == 1) serial = t;
    json row = {{"backend", "parallel"}, {"jobs", j}, {"seconds", t}};
    if (serial > 0) row["speedup_vs_1"] = serial / t;
    sweeps.push_back(std::move(row));
  }
  if (o.bench_reference) {
    const double t = seconds([&] { sign_sweep(pk, {.jobs = 1, .backend = SweepBackend::Reference}); });
    sweeps.push_back({{"backend", "reference"}, {"jobs", 1}, {"seconds", t}});
  }

  if (o.cfg.format == Format::Text) {
    for (const auto& r : compute_rows)
      out += "compute_F k=" + std::to_string(r["k"].get<int>()) + " terms(p)=" +
             std::to_string(r["terms"].get<std::size_t>()) + " " + std::to_string(r["seconds"].get<double>()) + " s\n";
    for (const auto& r : sweeps)
      out += "sweep " + r["backend"].get<std::string>() + " jobs=" + std::to_string(r["jobs"].get<int>()) + " " +
             std::to_string(r["seconds"].get<double>()) + " s\n";
  } else if (o.cfg.format == Format::Csv) {
    out += "phase,k,backend,jobs,terms,seconds\n";
    for (const auto& r : compute_rows)
      out += "compute_F," + std::to_string(r["k"].get<int>()) + ",,1," + std::to_string(r["terms"].get<std::size_t>()) +
             "," + std::to_string(r["seconds"].get<double>()) + "\n";
    for (const auto& r : sweeps)
      out += "sweep," + std::to_string(k) + "," + r["backend"].get<std::string>() + "," +
             std::to_string(r["jobs"].get<int>()) + "," + std::to_string(pk.size()) + "," +
             std::to_string(r["seconds"].get<double>()) + "\n";
  } else {
    out += pretty({{"schema_version", kSchemaVersion}, {"kind", "bench"}, {"k", k}, {"sigma_count", 1u << (2 * k)},
                   {"compute", compute_rows}, {"sweep", sweeps}});
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o, bool with_k = true) {
  if (with_k) sub->add_option("--k", o.cfg.k, "number of (x_j, y_j) variable pairs");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--jobs", o.cfg.jobs, "worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  sub->add_option("-o,--output", o.cfg.output, "write machine output to this file");
  sub->add_flag("--unsafe-large", o.cfg.unsafe_large, "raise the default size caps");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace polynomials of Gamma(2) words: computation, sign-coherence verification, certificates"};
  app.require_subcommand(1);
  Options o;
  o.cfg.jobs = default_jobs();
  o.cfg.seed = kDefaultSeed;

  auto* compute = app.add_subcommand("compute", "print F_k entries and p_k (or their sigma-substituted versions)");
  add_common(compute, o);
  compute->add_option("--sigma", o.cfg.sigma, "sign string of length 2k, e.g. \"+-\"");

  auto* good = app.add_subcommand("goodness", "sweep all sign sequences for a given polynomial");
  add_common(good, o);
  good->add_option("--poly", o.poly_text, "polynomial in canonical text form, e.g. \"2 - 4*x1*y1\"");
  good->add_option("--poly-json", o.poly_json_path, "file holding a polynomial in JSON form");
  good->add_option("--backend", o.backend, "parallel or reference");
  good->add_flag("--per-sigma", o.per_sigma, "include one JSON row per sign sequence");

  auto* verify = app.add_subcommand("verify", "exhaustively verify sign coherence of p_k or a trace combination");
  add_common(verify, o);
  verify->add_option("--matrix", o.matrix_literal, "row-major [[a,c],[b,d]]; checks a*f + b*h + c*t + d*g");
  verify->add_option("--backend", o.backend, "parallel or reference");
  verify->add_flag("--per-sigma", o.per_sigma, "include one JSON row per sign sequence");

  auto* certify = app.add_subcommand("certify", "check the finite facts behind the proof");
  add_common(certify, o);
  certify->add_option("--depth", o.cfg.depth, "word length bound for the generator set (default 8)");
  certify->add_option("--seed", o.cfg.seed, "seed for the random matrices");
  certify->add_option("--random-matrices", o.random_matrices, "random matrices in the recursion check")
      ->check(CLI::NonNegativeNumber);
  certify->add_option("--set-constant", o.set_constants, "override a constant, NAME=[[a,c],[b,d]] (negative controls)");

  auto* oracle = app.add_subcommand("oracle", "compare evaluate(p_k) with integer matrix traces");
  add_common(oracle, o);
  oracle->add_option("--seed", o.cfg.seed, "random seed");
  oracle->add_option("--trials", o.trials, "number of random exponent vectors");
  oracle->add_option("--point", o.point, "single comma-separated exponent vector m1,n1,...");

  auto* bench = app.add_subcommand("bench", "time compute_F and the sign sweep");
  add_common(bench, o);
  bench->add_option("--jobs-list", o.bench_jobs, "worker counts to time (default: 1 and --jobs)")->delimiter(',');
  bench->add_flag("--reference", o.bench_reference, "also time the serial reference sweep");

  std::vector<std::string> argv_storage{"tracesign"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  o.cfg.command = chosen->get_name();
  o.cfg.format = o.format == "csv" ? Format::Csv : o.format == "text" ? Format::Text : Format::Json;
  if (chosen == compute && compute->count("--format") == 0) o.cfg.format = Format::Text;

  std::string buffer;
  int code = kExitOk;
  try {
    if (!o.matrix_literal.empty()) o.cfg.matrix = parse_matrix(o.matrix_literal);
    if (chosen == compute) code = cmd_compute(o, buffer);
    else if (chosen == good) code = cmd_goodness(o, buffer);
    else if (chosen == verify) code = cmd_verify(o, buffer);
    else if (chosen == certify) code = cmd_certify(o, buffer);
    else if (chosen == oracle) code = cmd_oracle(o, buffer);
    else code = cmd_bench(o, buffer);
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.cfg.output.empty()) {
    out << buffer;
  } else {
    std::ofstream file(o.cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.cfg.output << "\n";
      return kExitUsage;
    }
    file << buffer;
  }
  return code;
}

}  // namespace tracesign::cli
