#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "critpoints/bench.hpp"
#include "critpoints/critsys.hpp"
#include "critpoints/fglm.hpp"
#include "critpoints/groebner.hpp"
#include "critpoints/hilbert.hpp"
#include "critpoints/text_format.hpp"
#include "critpoints/version.hpp"

using namespace critpoints;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int p = 0;
  int D = 0;
  std::uint64_t seed = 0;
  std::uint32_t field = PrimeField::kDefaultModulus;
  bool homogeneous = false;
  std::optional<int> degree_cap;
  int jobs = 1;
  std::string out;
  std::string config;
  std::string input;
  bool critical = false;
  double omega = 2.373;
};

void require_triple(const Options& o) {
  if (o.n < 2 || o.p < 1 || o.p > o.n - 1 || o.D < 2) {
    throw UsageError("need --n --p --D with 1 <= p <= n-1 and D >= 2");
  }
}

// Either the system read from a file (optionally wrapped into I(F,1)) or the
// critical-point system of a generated instance.
PolySystem load_system(const Options& o) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open " + o.input);
    PolyFile file = read_poly_file(in);
    PolySystem sys{file.ring, std::move(file.polys), {}};
    sys.meta.p = static_cast<int>(sys.generators.size());
    return o.critical ? build_critical_system(sys) : sys;
  }
  require_triple(o);
  const PrimeField field(o.field);
  return build_critical_system(gen_random_system(field, o.n, o.p, o.D, o.seed, o.homogeneous));
}

// Writes to --out when given, stdout otherwise.
template <class F>
void emit(const Options& o, F&& write) {
  if (o.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot write " + o.out);
  write(file);
}

std::string pct(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

int cmd_gen(const Options& o) {
  require_triple(o);
  const PrimeField field(o.field);
  PolySystem sys = gen_random_system(field, o.n, o.p, o.D, o.seed, o.homogeneous);
  if (o.critical) sys = build_critical_system(sys);
  emit(o, [&](std::ostream& os) { write_poly_file(os, sys.ring, sys.generators); });
  return kExitOk;
}

GroebnerBasis grevlex_basis(const Options& o, const PolySystem& sys) {
  GroebnerOptions opts;
  opts.degree_cap = o.degree_cap;
  return groebner_basis(sys, MonomialOrder::kGrevlex, opts);
}

int cmd_gb(const Options& o) {
  const PolySystem sys = load_system(o);
  const GroebnerBasis gb = grevlex_basis(o, sys);
  const bool zerodim = is_zero_dimensional(gb);
  emit(o, [&](std::ostream& os) { write_poly_file(os, gb.ring(), gb.basis()); });
  std::cout << "max_step_degree=" << gb.max_step_degree()
            << " deg=" << (zerodim ? std::to_string(staircase(gb).size()) : std::string("inf"))
            << " zerodim=" << (zerodim ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_fglm(const Options& o) {
  const PolySystem sys = load_system(o);
  const GroebnerBasis gb = grevlex_basis(o, sys);
  if (!is_zero_dimensional(gb)) {
    std::cerr << "critpoints: ideal is not zero-dimensional\n";
    return kExitFail;
  }
  const MultiplicationMatrices mats = multiplication_matrices(gb);
  const GroebnerBasis lex = fglm_lex(gb, mats);
  const SolutionSample sample = sample_solutions(lex);
  emit(o, [&](std::ostream& os) { write_poly_file(os, lex.ring(), lex.basis()); });
  const double d = mats.dim() > 0 ? density(mats, gb.ring().nvars - 1).density : 0.0;
  std::cout << "deg=" << mats.dim() << " density=" << pct(d)
            << " shape=" << (sample.shape_position ? "true" : "false")
            << " rational_points=" << sample.points.size() << '\n';
  return kExitOk;
}

int cmd_formulas(const Options& o) {
  require_triple(o);
  const std::int64_t dreg = dreg_formula(o.n, o.p, o.D);
  const PowerSeries hs = hs_unmixed(o.n, o.p, o.D, default_truncation(o.n, o.p, o.D));
  const ComplexityBound bound = complexity_bound(o.n, o.p, o.D, o.omega);
  std::string coeffs;
  for (int d = 0; d <= hs.degree(); ++d) {
    if (d) coeffs += ' ';
    coeffs += hs.coeff(d).str();
  }
  std::cout << "n,p,D,dreg,deg,ratio,log10_grevlex,log10_fglm,hs\n";
  std::cout << o.n << ',' << o.p << ',' << o.D << ',' << dreg << ','
            << deg_formula(o.n, o.p, o.D).str() << ',' << pct(complexity_ratio(o.n, o.p, o.D))
            << ',' << pct(bound.log10_grevlex) << ',' << pct(bound.log10_fglm) << ",\"" << coeffs
            << "\"\n";
  return kExitOk;
}

int cmd_formulas_table(const Options& o) {
  emit(o, [](std::ostream& os) {
    os << "n,p,D,ratio\n";
    for (const auto& r : ratio_table()) {
      os << r.n << ',' << r.p << ',' << r.D << ',' << pct(r.ratio) << '\n';
    }
  });
  return kExitOk;
}

int finish_report(const std::vector<RunRecord>& records) {
  const VerifySummary summary = verify_report(records);
  print_summary(std::cerr, records, summary);
  return summary.ok() ? kExitOk : kExitFail;
}

int cmd_bench(const Options& o, const CLI::App& app) {
  ExperimentConfig config;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw UsageError("cannot open " + o.config);
    std::stringstream text;
    text << in.rdbuf();
    try {
      config = parse_config(text.str());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    require_triple(o);
    config.triples = {{o.n, o.p, o.D}};
    config.seeds = {o.seed};
  }
  // Explicit flags override the config file.
  if (app.count("--field")) config.flags.field = o.field;
  if (app.count("--homogeneous")) config.flags.homogeneous = o.homogeneous;
  if (app.count("--degree-cap")) config.flags.degree_cap = o.degree_cap;
  if (app.count("--jobs")) config.jobs = o.jobs;
  if (app.count("--out")) config.output = o.out;
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto records = run_suite(config);
  if (config.output.empty()) write_csv(std::cout, records);
  return finish_report(records);
}

int cmd_verify(const Options& o) {
  const std::string path = !o.input.empty() ? o.input : o.out;
  if (path.empty()) throw UsageError("verify needs a CSV path");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<RunRecord> records;
  try {
    records = read_csv(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return finish_report(records);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-basis engine and benchmarks for critical-point ideals over GF(q)"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of variables");
    sub->add_option("--p", o.p, "number of polynomials");
    sub->add_option("--D", o.D, "degree of every polynomial");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--field", o.field, "prime modulus q")->check(CLI::Range(3u, 2147483647u));
    sub->add_flag("--homogeneous", o.homogeneous, "draw homogeneous polynomials");
    sub->add_option("--out", o.out, "output path (stdout when absent)");
  };

  auto* gen = app.add_subcommand("gen", "write a random system F (or I(F,1) with --critical)");
  add_instance(gen);
  gen->add_flag("--critical", o.critical, "append the maximal minors of the truncated Jacobian");

  auto* gb = app.add_subcommand("gb", "grevlex Groebner basis of I(F,1)");
  auto* fglm = app.add_subcommand("fglm", "lex basis of I(F,1) by change of order");
  for (auto* sub : {gb, fglm}) {
    add_instance(sub);
    sub->add_option("input", o.input, "polynomial file; its generators are used as given");
    sub->add_flag("--critical", o.critical, "treat the file as F and build I(F,1)");
    sub->add_option("--degree-cap", o.degree_cap, "refuse steps above this degree");
  }

  auto* formulas = app.add_subcommand("formulas", "closed-form dreg, DEG, Hilbert series, ratio");
  formulas->add_option("--n", o.n)->required();
  formulas->add_option("--p", o.p)->required();
  formulas->add_option("--D", o.D)->required();
  formulas->add_option("--omega", o.omega, "linear algebra exponent");

  auto* table = app.add_subcommand("formulas-table", "complexity ratio reference table");
  table->add_option("--out", o.out);

  auto* bench = app.add_subcommand("bench", "run a suite and check it against the formulas");
  add_instance(bench);
  bench->add_option("--degree-cap", o.degree_cap);
  bench->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--config", o.config, "JSON experiment config");

  auto* verify = app.add_subcommand("verify", "re-check a results CSV");
  verify->add_option("input", o.input, "results CSV");
  verify->add_option("--out", o.out, "results CSV (alternative to the positional path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*gb) return cmd_gb(o);
    if (*fglm) return cmd_fglm(o);
    if (*formulas) return cmd_formulas(o);
    if (*table) return cmd_formulas_table(o);
    if (*bench) return cmd_bench(o, *bench);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "critpoints: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "critpoints: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "critpoints: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
