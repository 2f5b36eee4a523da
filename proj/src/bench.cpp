#include "critpoints/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <tuple>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "critpoints/critsys.hpp"
#include "critpoints/fglm.hpp"
#include "critpoints/groebner.hpp"
#include "critpoints/hilbert.hpp"
#include "critpoints/kernels.hpp"
#include "critpoints/rng.hpp"
#include "critpoints/version.hpp"

namespace critpoints {

using nlohmann::json;

namespace {

double round_to(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(v * scale) / scale;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  const auto dt = std::chrono::steady_clock::now() - t0;
  return round_to(std::chrono::duration<double, std::milli>(dt).count(), 3);
}

std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

// Negative-control fibre seeds are derived from the cell seed.
constexpr std::uint64_t kControlSalt = 0xc0ffee5eedull;

}  // namespace

// --- config ----------------------------------------------------------------

void validate(const ExperimentConfig& config) {
  for (const auto& t : config.triples) {
    if (t.p < 1 || t.p > t.n - 1 || t.D < 2) {
      throw std::invalid_argument("triple (" + std::to_string(t.n) + "," + std::to_string(t.p) +
                                  "," + std::to_string(t.D) +
                                  ") must satisfy 1 <= p <= n-1 and D >= 2");
    }
    if (t.n > kMaxVariables) throw std::invalid_argument("too many variables");
  }
  if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (!is_prime(config.flags.field) || config.flags.field == 2) {
    throw std::invalid_argument("field must be an odd prime below 2^31");
  }
  if (config.flags.degree_cap && *config.flags.degree_cap < 1) {
    throw std::invalid_argument("degree cap must be positive");
  }
}

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  static const char* known[] = {"triples", "seeds",       "field",      "homogeneous", "run_fglm",
                                "run_density", "degree_cap", "output", "jobs"};
  for (const auto& [key, _] : j.items()) {
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) ==
        std::end(known)) {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  ExperimentConfig c;
  try {
    for (const auto& t : j.value("triples", json::array())) {
      if (t.is_array()) {
        if (t.size() != 3) throw std::invalid_argument("triple needs three entries");
        c.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
      } else {
        c.triples.push_back({t.at("n").get<int>(), t.at("p").get<int>(), t.at("D").get<int>()});
      }
    }
    if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    c.flags.field = j.value("field", c.flags.field);
    c.flags.homogeneous = j.value("homogeneous", c.flags.homogeneous);
    c.flags.run_fglm = j.value("run_fglm", c.flags.run_fglm);
    c.flags.run_density = j.value("run_density", c.flags.run_density);
    if (j.contains("degree_cap") && !j["degree_cap"].is_null()) {
      c.flags.degree_cap = j["degree_cap"].get<int>();
    }
    c.output = j.value("output", std::string());
    c.jobs = j.value("jobs", 1);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config field: ") + e.what());
  }
  validate(c);
  return c;
}

namespace {

json config_json(const ExperimentConfig& c) {
  json triples = json::array();
  for (const auto& t : c.triples) triples.push_back({t.n, t.p, t.D});
  json j = {{"triples", triples},
            {"seeds", c.seeds},
            {"field", c.flags.field},
            {"homogeneous", c.flags.homogeneous},
            {"run_fglm", c.flags.run_fglm},
            {"run_density", c.flags.run_density},
            {"degree_cap", nullptr},
            {"output", c.output},
            {"jobs", c.jobs}};
  if (c.flags.degree_cap) j["degree_cap"] = *c.flags.degree_cap;
  return j;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string config_to_json(const ExperimentConfig& config) { return config_json(config).dump(2); }

std::string status_name(RunStatus s) {
  switch (s) {
    case RunStatus::kOk:
      return "ok";
    case RunStatus::kDegenerate:
      return "degenerate";
    case RunStatus::kDegreeCapExceeded:
      return "degree_cap_exceeded";
  }
  return "unknown";
}

RunStatus parse_status(const std::string& s) {
  if (s == "ok") return RunStatus::kOk;
  if (s == "degenerate") return RunStatus::kDegenerate;
  if (s == "degree_cap_exceeded") return RunStatus::kDegreeCapExceeded;
  throw std::invalid_argument("unknown status: " + s);
}

// --- one cell ---------------------------------------------------------------

RunRecord run_instance(const Triple& t, std::uint64_t seed, const RunFlags& flags) {
  RunRecord r;
  r.n = t.n;
  r.p = t.p;
  r.D = t.D;
  r.seed = seed;
  r.field = flags.field;
  r.homogeneous = flags.homogeneous;
  r.dreg_pred = dreg_formula(t.n, t.p, t.D);
  r.deg_pred = deg_formula(t.n, t.p, t.D);

  const PrimeField field(flags.field);
  const PolySystem system = gen_random_system(field, t.n, t.p, t.D, seed, flags.homogeneous);
  const PolySystem critical = build_critical_system(system);

  GroebnerOptions options;
  options.degree_cap = flags.degree_cap;
  auto t0 = std::chrono::steady_clock::now();
  std::optional<GroebnerBasis> gb;
  try {
    gb.emplace(groebner_basis(critical, MonomialOrder::kGrevlex, options));
  } catch (const DegreeCapExceeded& e) {
    r.gb_ms = ms_since(t0);
    r.dreg_obs = e.degree();
    r.status = RunStatus::kDegreeCapExceeded;
    return r;
  }
  r.gb_ms = ms_since(t0);
  r.dreg_obs = gb->max_step_degree();
  if (!is_zero_dimensional(*gb)) {
    r.status = RunStatus::kDegenerate;
    return r;
  }
  if (!flags.run_fglm && !flags.run_density) {
    r.deg_obs = staircase(*gb).size();
    return r;
  }

  t0 = std::chrono::steady_clock::now();
  const MultiplicationMatrices mats = multiplication_matrices(*gb);
  r.deg_obs = mats.dim();
  if (flags.run_density && mats.dim() > 0) {
    r.density = round_to(density(mats, t.n - 1).density, 4);
    r.density_all = round_to(density(mats).density, 4);
  }
  r.fglm_ms = ms_since(t0);
  if (flags.run_fglm) {
    const GroebnerBasis lex = fglm_lex(*gb, mats);
    r.fglm_ms = ms_since(t0);
    const SolutionSample sample = sample_solutions(lex);
    r.shape_position = sample.shape_position;
    r.rational_points = sample.points.size();
    if (!sample.points.empty()) {
      bool all = true;
      const auto deficient = verify_rank_deficiency(system, sample.points);
      for (std::size_t k = 0; k < sample.points.size(); ++k) {
        all = all && deficient[k];
        for (const auto& g : critical.generators) {
          all = all && evaluate(g, sample.points[k]).value == 0;
        }
      }
      r.rank_deficiency_pass = all;
      if (auto point = sample_variety_point(system, seed ^ kControlSalt)) {
        r.negative_control_pass = truncated_jacobian_rank(system, *point) == t.p;
      }
    }
  }
  return r;
}

// --- suites -----------------------------------------------------------------

std::vector<RunRecord> run_suite(const ExperimentConfig& config) {
  validate(config);
  struct Cell {
    Triple t;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (const auto& t : config.triples) {
    for (std::uint64_t s : config.seeds) cells.push_back({t, s});
  }
  std::vector<RunRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= cells.size()) return;
      try {
        records[k] = run_instance(cells[k].t, cells[k].seed, config.flags);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int width = std::max(1, std::min<int>(config.jobs, static_cast<int>(cells.size())));
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < width; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  if (!config.output.empty()) {
    const auto parent = std::filesystem::path(config.output).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream csv(config.output);
    if (!csv) throw std::runtime_error("cannot write " + config.output);
    write_csv(csv, records);
    const std::string side = sidecar_path(config.output);
    std::ofstream js(side);
    if (!js) throw std::runtime_error("cannot write " + side);
    js << sidecar_json(config, records) << '\n';
  }
  return records;
}

// --- CSV --------------------------------------------------------------------

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << r.p << ',' << r.D << ',' << r.seed << ',' << r.dreg_pred << ',';
    if (r.dreg_obs) out << *r.dreg_obs;
    out << ',' << r.deg_pred.str() << ',';
    if (r.deg_obs) out << *r.deg_obs;
    out << ',';
    if (r.density) out << fixed(*r.density, 4);
    out << ',' << fixed(r.gb_ms, 3) << ',' << fixed(r.fglm_ms, 3) << ',' << status_name(r.status)
        << '\n';
  }
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::invalid_argument("unexpected CSV header: " + line);
  std::vector<RunRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 12) {
      throw std::invalid_argument("CSV line " + std::to_string(lineno) + ": expected 12 fields");
    }
    try {
      RunRecord r;
      r.n = std::stoi(f[0]);
      r.p = std::stoi(f[1]);
      r.D = std::stoi(f[2]);
      r.seed = std::stoull(f[3]);
      r.dreg_pred = std::stoll(f[4]);
      if (!f[5].empty()) r.dreg_obs = std::stoi(f[5]);
      r.deg_pred = BigInt(f[6]);
      if (!f[7].empty()) r.deg_obs = std::stoull(f[7]);
      if (!f[8].empty()) r.density = std::stod(f[8]);
      r.gb_ms = std::stod(f[9]);
      r.fglm_ms = std::stod(f[10]);
      r.status = parse_status(f[11]);
      out.push_back(std::move(r));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("CSV line " + std::to_string(lineno) + ": malformed field");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("CSV line " + std::to_string(lineno) + ": value out of range");
    }
  }
  return out;
}

std::string sidecar_path(const std::string& csv_path) {
  const auto slash = csv_path.find_last_of('/');
  const auto dot = csv_path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return csv_path.substr(0, dot) + ".json";
  }
  return csv_path + ".json";
}

std::string sidecar_json(const ExperimentConfig& config, const std::vector<RunRecord>& records) {
  json recs = json::array();
  for (const auto& r : records) {
    recs.push_back({{"n", r.n},
                    {"p", r.p},
                    {"D", r.D},
                    {"seed", r.seed},
                    {"field", r.field},
                    {"homogeneous", r.homogeneous},
                    {"dreg_pred", r.dreg_pred},
                    {"deg_pred", r.deg_pred.str()},
                    {"dreg_obs", opt(r.dreg_obs)},
                    {"deg_obs", opt(r.deg_obs)},
                    {"density_pct", opt(r.density)},
                    {"density_all_pct", opt(r.density_all)},
                    {"shape_position", opt(r.shape_position)},
                    {"rational_points", opt(r.rational_points)},
                    {"rank_deficiency_pass", opt(r.rank_deficiency_pass)},
                    {"negative_control_pass", opt(r.negative_control_pass)},
                    {"gb_ms", r.gb_ms},
                    {"fglm_ms", r.fglm_ms},
                    {"status", status_name(r.status)}});
  }
  json j = {{"config", config_json(config)},
            {"version", kVersion},
            {"rng", SplitMix64::kAlgorithmTag},
            {"kernels", std::string(kernels::isa_name(kernels::active_isa()))},
            {"records", recs}};
  return j.dump(2);
}

// --- verification -------------------------------------------------------------

std::optional<double> reference_density(int n, int p, int D) {
  static const std::map<std::tuple<int, int, int>, double> table = {
      {{15, 3, 2}, 36.86}, {{16, 3, 2}, 36.91}, {{17, 3, 2}, 36.96}, {{18, 3, 2}, 37.00},
      {{19, 3, 2}, 37.04}, {{20, 3, 2}, 37.07}, {{15, 4, 2}, 33.53}, {{16, 4, 2}, 33.78},
      {{17, 4, 2}, 34.00}, {{18, 4, 2}, 34.19}, {{19, 4, 2}, 34.35}, {{20, 4, 2}, 34.49},
      {{21, 4, 2}, 34.62}, {{9, 1, 3}, 22.45},  {{10, 1, 3}, 20.84}, {{11, 1, 3}, 20.59},
      {{12, 1, 3}, 19.32}, {{13, 1, 3}, 19.12}, {{14, 1, 3}, 18.08}, {{7, 2, 3}, 20.73},
      {{8, 2, 3}, 20.26},  {{9, 2, 3}, 19.47},  {{10, 2, 3}, 19.08}, {{6, 3, 3}, 17.52},
      {{7, 3, 3}, 17.39},  {{6, 4, 3}, 13.63},  {{7, 4, 3}, 14.55},  {{8, 4, 3}, 15.15},
      {{5, 2, 4}, 14.46},  {{6, 2, 4}, 14.11},  {{7, 2, 4}, 13.64},  {{8, 2, 4}, 13.26},
      {{5, 3, 4}, 11.36},  {{6, 3, 4}, 11.73},  {{7, 3, 4}, 11.83},
  };
  auto it = table.find({n, p, D});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

VerifySummary verify_report(const std::vector<RunRecord>& records) {
  VerifySummary s;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const RunRecord& r = records[k];
    RecordVerdict v;
    v.index = k;
    if (r.status == RunStatus::kDegenerate) {
      v.excluded = true;
      v.notes.push_back("degenerate draw (not zero-dimensional)");
      ++s.degenerate;
      s.verdicts.push_back(std::move(v));
      continue;
    }
    if (r.status == RunStatus::kDegreeCapExceeded) {
      ++s.capped;
      if (r.dreg_obs && *r.dreg_obs > r.dreg_pred) {
        v.hard_fail = true;
        v.notes.push_back("step degree " + std::to_string(*r.dreg_obs) + " exceeds dreg bound " +
                          std::to_string(r.dreg_pred));
      } else {
        v.excluded = true;
        v.notes.push_back("degree cap hit below the dreg bound");
      }
    } else {
      if (!r.deg_obs) {
        v.hard_fail = true;
        v.notes.push_back("missing DEG");
      } else if (BigInt(*r.deg_obs) != r.deg_pred) {
        v.hard_fail = true;
        v.notes.push_back("DEG " + std::to_string(*r.deg_obs) + " != " + r.deg_pred.str());
      }
      if (!r.dreg_obs || *r.dreg_obs > r.dreg_pred) {
        v.hard_fail = true;
        v.notes.push_back("max step degree " + (r.dreg_obs ? std::to_string(*r.dreg_obs) : "?") +
                          " > " + std::to_string(r.dreg_pred));
      } else if (*r.dreg_obs != r.dreg_pred) {
        v.soft_warning = true;
        v.notes.push_back("max step degree " + std::to_string(*r.dreg_obs) + " below " +
                          std::to_string(r.dreg_pred));
      }
      if (r.density && !r.homogeneous) {
        if (auto ref = reference_density(r.n, r.p, r.D)) {
          if (std::abs(*r.density - *ref) > kDensityBand) {
            v.hard_fail = true;
            v.notes.push_back("density " + fixed(*r.density, 2) + " outside " + fixed(*ref, 2) +
                              " +- " + fixed(kDensityBand, 1));
          }
        }
      }
      if (r.rank_deficiency_pass && !*r.rank_deficiency_pass) {
        v.hard_fail = true;
        v.notes.push_back("a sampled solution is not a critical point");
      }
      if (r.negative_control_pass && !*r.negative_control_pass) {
        v.hard_fail = true;
        v.notes.push_back("negative control point is rank deficient");
      }
    }
    if (v.hard_fail) {
      ++s.hard_failures;
    } else if (!v.excluded) {
      ++s.passed;
    }
    if (v.soft_warning) ++s.soft_warnings;
    s.verdicts.push_back(std::move(v));
  }
  return s;
}

void print_summary(std::ostream& out, const std::vector<RunRecord>& records,
                   const VerifySummary& summary) {
  for (const auto& v : summary.verdicts) {
    const RunRecord& r = records[v.index];
    const char* tag = v.hard_fail ? "FAIL" : v.excluded ? "SKIP" : v.soft_warning ? "WARN" : "PASS";
    out << tag << " (" << r.n << ',' << r.p << ',' << r.D << ") seed=" << r.seed;
    for (const auto& note : v.notes) out << "  " << note;
    out << '\n';
  }
  out << "passed=" << summary.passed << " hard_failures=" << summary.hard_failures
      << " soft_warnings=" << summary.soft_warnings << " degenerate=" << summary.degenerate
      << " capped=" << summary.capped << '\n';
}

std::vector<RatioRow> ratio_table() {
  static const long long rows[][3] = {{5, 4, 3},        {10, 4, 3},   {100, 4, 3},
                                      {10000, 4, 3},    {10000, 9999, 3}, {30000, 29999, 3},
                                      {1000, 500, 3},   {20000, 2, 3}, {500, 250, 1000},
                                      {500, 2, 10000}};
  std::vector<RatioRow> out;
  for (const auto& r : rows) out.push_back({r[0], r[1], r[2], complexity_ratio(r[0], r[1], r[2])});
  return out;
}

}  // namespace critpoints
