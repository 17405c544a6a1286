#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fibspec/cli.hpp"
#include "fibspec/errors.hpp"
#include "fibspec/hamiltonian.hpp"
#include "fibspec/periodic.hpp"
#include "fibspec/spectrum.hpp"
#include "fibspec/sumset.hpp"

namespace fibspec::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommandResult {
  Json config;
  Json result;
  Json caveats = Json::array();
  std::string csv;  // empty when the command has no CSV form
};

Json to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const auto& iv : s.intervals()) out.push_back(Json::array({iv.lo, iv.hi}));
  return out;
}

Json to_json(const Point3& p) { return Json::array({p.x, p.y, p.z}); }

Json to_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json to_json(const DimensionEstimate& d) {
  Json out;
  out["value"] = d.value;
  out["slope_stderr"] = d.slope_stderr;
  out["levels_used"] = d.levels_used;
  out["method"] = std::string(to_string(d.method));
  out["degenerate"] = d.degenerate;
  out["approximate"] = d.approximate;
  return out;
}

Json set_summary(const IntervalSet& s) {
  Json out;
  out["components"] = s.size();
  out["total_length"] = s.total_length();
  const auto h = s.hull();
  out["hull"] = Json::array({h.lo, h.hi});
  out["single_interval"] = s.size() == 1;
  return out;
}

void append_csv(std::ostringstream& csv, const std::string& name, const IntervalSet& s) {
  for (const auto& iv : s.intervals()) {
    csv << name << ',' << iv.lo << ',' << iv.hi << '\n';
  }
}

std::ostringstream csv_stream() {
  std::ostringstream csv;
  csv.precision(17);
  return csv;
}

double first_lambda(const RunConfig& c) {
  if (c.lambdas.empty()) throw std::invalid_argument("a coupling (--lambda) is required");
  return c.lambdas.front();
}

CommandResult run_spectrum(const RunConfig& c) {
  const double lambda = first_lambda(c);
  const auto cover = spectrum_cover(Coupling(lambda), c.level, c.tol);
  CommandResult r;
  r.config["lambda"] = lambda;
  r.config["k"] = c.level;
  r.config["tol"] = c.tol;
  r.result["lambda"] = lambda;
  r.result["k"] = c.level;
  r.result["expected_band_counts"] =
      Json::array({fibonacci_degree(c.level), fibonacci_degree(c.level + 1)});
  r.result["sigma_k"] = to_json(cover.sigma_k);
  r.result["sigma_k1"] = to_json(cover.sigma_k1);
  r.result["cover"] = to_json(cover.cover);
  r.result["cover_components"] = cover.cover.size();
  r.result["cover_length"] = cover.cover.total_length();
  if (lambda < 5.0) r.caveats.push_back("below lambda = 5 touching bands may be reported merged");
  auto csv = csv_stream();
  csv << "set,lo,hi\n";
  append_csv(csv, "sigma_k", cover.sigma_k);
  append_csv(csv, "sigma_k1", cover.sigma_k1);
  append_csv(csv, "cover", cover.cover);
  r.csv = csv.str();
  return r;
}

CommandResult run_oracle(const RunConfig& c) {
  const double lambda = first_lambda(c);
  const FibonacciPotential potential(lambda, c.omega0);
  const auto eig = eigenvalues(truncated_hamiltonian(potential, c.truncation), c.tol);
  const auto cover = spectrum_cover(Coupling(lambda), c.cover_level, c.tol).cover.dilated(c.dilation);
  std::size_t inside = 0;
  for (const double e : eig) inside += cover.contains(e) ? 1 : 0;

  CommandResult r;
  r.config["lambda"] = lambda;
  r.config["n"] = c.truncation;
  r.config["omega0"] = c.omega0;
  r.config["cover_level"] = c.cover_level;
  r.config["dilation"] = c.dilation;
  r.config["tol"] = c.tol;
  r.result["lambda"] = lambda;
  r.result["n"] = c.truncation;
  r.result["boundary"] = "dirichlet";
  r.result["eigenvalues"] = eig;
  r.result["inside_cover"] = inside;
  r.result["fraction_inside"] = static_cast<double>(inside) / static_cast<double>(eig.size());
  if (eig.size() <= kSquareSampleCap / eig.size()) {
    const auto square = square_eigenvalue_sample(eig, eig);
    Json sq;
    sq["size"] = square.size();
    sq["min"] = square.front();
    sq["max"] = square.back();
    r.result["square_sample"] = sq;
  } else {
    r.caveats.push_back("square-operator sample skipped: n^2 exceeds the 4e6 cap");
  }
  r.caveats.push_back("Dirichlet truncation: edge states may fall outside the cover");
  return r;
}

CommandResult run_dim(const RunConfig& c) {
  const double lambda = first_lambda(c);
  if (c.k_min < 0 || c.level - c.k_min < 2) {
    throw std::invalid_argument("dim needs at least three levels (k - k_min >= 2)");
  }
  const auto sigmas = band_hierarchy(Coupling(lambda), c.level + 1, c.tol);
  std::vector<ScaledCover> covers;
  Json scales = Json::array();
  for (int j = c.k_min; j <= c.level; ++j) {
    const auto cover = cover_from_hierarchy(lambda, sigmas, j);
    covers.push_back({j, nominal_scale(cover), cover.cover});
    scales.push_back(covers.back().eps);
  }
  CommandResult r;
  r.config["lambda"] = lambda;
  r.config["k"] = c.level;
  r.config["k_min"] = c.k_min;
  r.config["tol"] = c.tol;
  r.result["lambda"] = lambda;
  r.result["box"] = to_json(box_dim_regression(covers));
  r.result["scales"] = scales;
  auto moran = moran_dim(covers.back().set);
  moran.approximate = true;
  r.result["moran"] = to_json(moran);
  r.caveats.push_back("moran estimate uses fixed-level bands of a set that is not exactly self-similar");
  return r;
}

CommandResult run_sum(const RunConfig& c) {
  const double l1 = first_lambda(c);
  const double l2 = c.lambdas.size() > 1 ? c.lambdas[1] : l1;
  const auto report = check_theorem_rect(l1, l2, c.level, c.tol);
  CommandResult r;
  r.config["lambda1"] = l1;
  r.config["lambda2"] = l2;
  r.config["k"] = c.level;
  r.config["tol"] = c.tol;
  auto& out = r.result;
  out["lambda1"] = report.lambda1;
  out["lambda2"] = report.lambda2;
  out["k"] = report.level;
  out["levels"] = report.levels;
  out["hd1_est"] = to_json(report.hd1_est);
  out["hd2_est"] = to_json(report.hd2_est);
  out["moran1_est"] = to_json(report.moran1_est);
  out["moran2_est"] = to_json(report.moran2_est);
  out["sum_dim_est"] = to_json(report.sum_dim_est);
  out["rhs"] = report.rhs;
  out["gap"] = report.gap;
  out["scales"] = report.scales;
  out["sum_cover"] = set_summary(report.sum_cover);
  if (c.emit_sets) {
    out["cover1"] = to_json(report.cover1);
    out["cover2"] = to_json(report.cover2);
    out["sum_cover_intervals"] = to_json(report.sum_cover);
  }
  for (const auto& note : report.caveats) r.caveats.push_back(note);
  auto csv = csv_stream();
  csv << "set,lo,hi\n";
  append_csv(csv, "sum_cover", report.sum_cover);
  r.csv = csv.str();
  return r;
}

Json to_json(const PeriodicPointInfo& info) {
  Json out;
  out["point"] = to_json(info.point);
  out["period"] = info.period;
  out["multiplier_closed"] = info.multiplier_closed;
  out["multiplier_numeric"] = info.multiplier_numeric;
  out["restricted_determinant"] = info.restricted_determinant;
  out["tangent_frame"] = Json::array({to_json(info.tangent_frame[0]), to_json(info.tangent_frame[1])});
  out["unstable_direction"] = to_json(info.unstable_direction);
  out["invariant"] = invariant(info.point);
  return out;
}

CommandResult run_periodic(const RunConfig& c) {
  CommandResult r;
  r.config["a"] = c.a;
  r.result["a"] = c.a;
  r.result["lambda"] = 2.0 * std::sqrt(c.a);
  r.result["g_p"] = g_p(c.a);
  r.result["g_q"] = g_q(c.a);
  r.result["p"] = to_json(periodic_info_p(c.a));
  r.result["q"] = to_json(periodic_info_q(c.a));
  r.result["log_ratio"] = log_ratio(c.a);
  if (c.scan) {
    const auto& s = *c.scan;
    r.config["scan"] = {{"a_min", s.a_min}, {"a_max", s.a_max}, {"grid", s.grid}, {"qmax", s.qmax}};
    Json hits = Json::array();
    for (const auto& hit : scan_exceptional(s.a_min, s.a_max, s.grid, s.qmax)) {
      hits.push_back({{"a", hit.a},
                      {"lambda", hit.lambda},
                      {"log_ratio", hit.log_ratio},
                      {"p", hit.nearest.num},
                      {"q", hit.nearest.den},
                      {"error", hit.error}});
    }
    r.result["exceptional_candidates"] = hits;
  }
  r.caveats.push_back("the points lie on the surface invariant = a, i.e. coupling lambda = 2 sqrt(a)");
  return r;
}

CommandResult run_ifs(const RunConfig& c) {
  CommandResult r;
  if (c.demo) {
    const auto quarters = LinearIFS::quarters();
    r.config["demo"] = *c.demo;
    Json& out = r.result;
    out["demo"] = *c.demo;
    if (*c.demo == "resonant") {
      const auto est = sum_box_dim(quarters, quarters, 4, 10);
      out["sets"] = "quarters + quarters";
      out["estimate"] = to_json(est);
      out["expected"] = std::log(3.0) / std::log(4.0);
      out["naive_bound"] = std::min(2.0 * similarity_dim(quarters), 1.0);
    } else if (*c.demo == "nonresonant") {
      const auto thirds = LinearIFS::middle_thirds();
      const auto est = sum_box_dim(thirds, quarters, 4, 12);
      out["sets"] = "middle thirds + quarters";
      out["estimate"] = to_json(est);
      out["expected"] = std::min(similarity_dim(thirds) + similarity_dim(quarters), 1.0);
    } else {
      throw std::invalid_argument("unknown demo '" + *c.demo + "'");
    }
    return r;
  }
  const LinearIFS ifs = c.maps.empty() ? LinearIFS::middle_thirds() : LinearIFS(c.maps, c.hull);
  Json maps = Json::array();
  for (const auto& m : ifs.maps()) maps.push_back(Json::array({m.ratio, m.translation}));
  r.config["maps"] = maps;
  r.config["hull"] = Json::array({ifs.hull().lo, ifs.hull().hi});
  r.config["depth_min"] = c.depth_min;
  r.config["depth"] = c.depth;
  const auto cover = attractor_cover(ifs, c.depth);
  r.result["similarity_dim"] = similarity_dim(ifs);
  r.result["box_dim"] = to_json(attractor_box_dim(ifs, c.depth_min, c.depth));
  r.result["cover"] = set_summary(cover);
  if (c.emit_sets) r.result["cover_intervals"] = to_json(cover);
  if (c.resonance) {
    const auto& q = *c.resonance;
    r.config["resonance"] = {{"r1", q.r1}, {"r2", q.r2}, {"qmax", q.qmax}};
    const auto v = log_ratio_resonance(q.r1, q.r2, q.qmax);
    r.result["resonance"] = {{"log_ratio", v.log_ratio},
                             {"p", v.best.num},
                             {"q", v.best.den},
                             {"error", v.error},
                             {"resonant", v.resonant}};
  }
  auto csv = csv_stream();
  csv << "set,lo,hi\n";
  append_csv(csv, "cover", cover);
  r.csv = csv.str();
  return r;
}

CommandResult run_single(const RunConfig& c);

// Scalar columns per swept command, for the CSV table.
std::vector<std::pair<std::string, Json::json_pointer>> sweep_columns(Command of) {
  using P = Json::json_pointer;
  switch (of) {
    case Command::spectrum:
      return {{"cover_components", P("/cover_components")}, {"cover_length", P("/cover_length")}};
    case Command::dim:
      return {{"box", P("/box/value")}, {"moran", P("/moran/value")}};
    case Command::sum:
      return {{"hd1", P("/hd1_est/value")}, {"hd2", P("/hd2_est/value")},
              {"sum_dim", P("/sum_dim_est/value")}, {"rhs", P("/rhs")}, {"gap", P("/gap")}};
    case Command::periodic:
      return {{"multiplier_p", P("/p/multiplier_numeric")}, {"multiplier_q", P("/q/multiplier_numeric")},
              {"log_ratio", P("/log_ratio")}};
    case Command::oracle:
      return {{"fraction_inside", P("/fraction_inside")}};
    default:
      return {};
  }
}

CommandResult run_sweep(const RunConfig& c) {
  if (c.sweep_of == Command::sweep) throw std::invalid_argument("cannot sweep a sweep");
  if (c.sweep_points < 1) throw std::invalid_argument("sweep needs at least one grid point");
  const bool over_a = c.sweep_param == "a";
  if (!over_a && c.sweep_param != "lambda") throw std::invalid_argument("sweep param must be lambda or a");
  if (over_a != (c.sweep_of == Command::periodic)) {
    throw std::invalid_argument("periodic sweeps run over a, all others over lambda");
  }
  std::vector<double> grid;
  for (int i = 0; i < c.sweep_points; ++i) {
    grid.push_back(c.sweep_points == 1 || i == c.sweep_points - 1
                       ? (i == 0 ? c.sweep_from : c.sweep_to)
                       : c.sweep_from + (c.sweep_to - c.sweep_from) * i / (c.sweep_points - 1));
  }

  std::vector<CommandResult> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      RunConfig task = c;
      task.command = c.sweep_of;
      if (over_a) {
        task.a = grid[i];
      } else {
        task.lambdas = {grid[i]};
      }
      try {
        results[i] = run_single(task);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(c.threads, static_cast<unsigned>(grid.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CommandResult r;
  r.config["of"] = to_string(c.sweep_of);
  r.config["param"] = c.sweep_param;
  r.config["from"] = c.sweep_from;
  r.config["to"] = c.sweep_to;
  r.config["points"] = c.sweep_points;
  r.config["base"] = results.front().config;
  r.result["grid"] = grid;
  Json rows = Json::array();
  for (const auto& res : results) rows.push_back(res.result);
  r.result["results"] = rows;
  for (const auto& res : results) {
    for (const auto& note : res.caveats) {
      if (std::find(r.caveats.begin(), r.caveats.end(), note) == r.caveats.end()) r.caveats.push_back(note);
    }
  }
  const auto columns = sweep_columns(c.sweep_of);
  auto csv = csv_stream();
  csv << c.sweep_param;
  for (const auto& col : columns) csv << ',' << col.first;
  csv << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv << grid[i];
    for (const auto& col : columns) csv << ',' << results[i].result.at(col.second).get<double>();
    csv << '\n';
  }
  r.csv = csv.str();
  return r;
}

CommandResult run_single(const RunConfig& c) {
  switch (c.command) {
    case Command::spectrum: return run_spectrum(c);
    case Command::oracle: return run_oracle(c);
    case Command::dim: return run_dim(c);
    case Command::sum: return run_sum(c);
    case Command::periodic: return run_periodic(c);
    case Command::ifs: return run_ifs(c);
    case Command::sweep: return run_sweep(c);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::oracle: return "oracle";
    case Command::dim: return "dim";
    case Command::sum: return "sum";
    case Command::periodic: return "periodic";
    case Command::ifs: return "ifs";
    case Command::sweep: return "sweep";
  }
  return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
  for (auto c : {Command::spectrum, Command::oracle, Command::dim, Command::sum, Command::periodic,
                 Command::ifs, Command::sweep}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

unsigned default_threads() {
  if (const char* env = std::getenv("FIBSPEC_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!(config.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    auto res = run_single(config);
    if (config.format == OutputFormat::csv) {
      if (res.csv.empty()) {
        throw std::invalid_argument("command '" + to_string(config.command) + "' has no CSV form");
      }
      outcome.document = std::move(res.csv);
      return outcome;
    }
    Json doc;
    doc["command"] = to_string(config.command);
    doc["config"] = std::move(res.config);
    doc["result"] = std::move(res.result);
    doc["caveats"] = std::move(res.caveats);
    if (config.timing) {
      doc["runtime_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    } else {
      doc["runtime_ms"] = nullptr;
    }
    outcome.document = to_json_text(doc);
  } catch (const SizeCapExceeded& e) {
    outcome.exit_code = kSizeCapExceeded;
    outcome.error = e.what();
  } catch (const NumericFailure& e) {
    outcome.exit_code = kNumericFailure;
    outcome.error = e.what();
  } catch (const std::invalid_argument& e) {
    outcome.exit_code = kInvalidArguments;
    outcome.error = e.what();
  } catch (const std::exception& e) {
    outcome.exit_code = kNumericFailure;
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace fibspec::cli
