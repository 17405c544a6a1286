#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fibspec/cli.hpp"

namespace fibspec::cli {

namespace {

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "r:t,r:t,..."
std::vector<Similarity> parse_maps(const std::string& text) {
  std::vector<Similarity> maps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("map must be ratio:translation");
    maps.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
  }
  return maps;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Fibonacci Hamiltonian spectra, dimensions and sum sets"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = default_threads();
  std::string format = "json";
  std::string lambdas;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", cfg.output_path, "write to this file (atomically)");
    sub->add_option("--tol", cfg.tol, "root / eigenvalue tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", cfg.timing, "fill in runtime_ms");
    sub->add_flag("--emit-sets", cfg.emit_sets, "include full interval lists");
  };
  auto coupling = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--lambda", lambdas, "coupling(s), comma separated");
    if (required) opt->required();
  };

  auto* spectrum = app.add_subcommand("spectrum", "band cover sigma_k U sigma_{k+1}");
  coupling(spectrum, true);
  spectrum->add_option("--k", cfg.level, "level")->check(CLI::Range(0, 40));
  common(spectrum);

  auto* oracle = app.add_subcommand("oracle", "eigenvalues of a finite truncation");
  coupling(oracle, true);
  oracle->add_option("--n", cfg.truncation, "truncation size")->check(CLI::Range(1, 100000));
  oracle->add_option("--omega0", cfg.omega0, "phase in [0, 1)");
  oracle->add_option("--k", cfg.cover_level, "cover level for the consistency check")->check(CLI::Range(0, 30));
  oracle->add_option("--dilation", cfg.dilation, "cover dilation")->check(CLI::NonNegativeNumber);
  common(oracle);

  auto* dim = app.add_subcommand("dim", "box and Moran dimension estimates");
  coupling(dim, true);
  dim->add_option("--k", cfg.level, "finest level")->check(CLI::Range(2, 30));
  dim->add_option("--k-min", cfg.k_min, "coarsest level in the regression")->check(CLI::Range(0, 30));
  common(dim);

  auto* sum = app.add_subcommand("sum", "sum-set dimension check");
  coupling(sum, true);
  sum->add_option("--k", cfg.level, "finest level")->check(CLI::Range(2, 16));
  common(sum);

  auto* periodic = app.add_subcommand("periodic", "explicit periodic orbits and multipliers");
  periodic->add_option("--a", cfg.a, "surface parameter")->check(CLI::NonNegativeNumber);
  ScanRequest scan;
  auto* scan_min = periodic->add_option("--scan-min", scan.a_min, "scan range start");
  periodic->add_option("--scan-max", scan.a_max, "scan range end");
  periodic->add_option("--grid", scan.grid, "scan grid points")->check(CLI::Range(2, 10000000));
  periodic->add_option("--qmax", scan.qmax, "largest denominator")->check(CLI::Range(1, 1 << 30));
  common(periodic);

  auto* ifs = app.add_subcommand("ifs", "linear IFS attractors and resonance");
  std::string maps;
  std::string hull;
  std::string resonance;
  std::int64_t res_qmax = 1'000'000;
  std::string demo;
  ifs->add_option("--maps", maps, "ratio:translation,... (default middle thirds)");
  ifs->add_option("--hull", hull, "lo,hi (default 0,1)");
  ifs->add_option("--depth", cfg.depth, "finest depth")->check(CLI::Range(2, 60));
  ifs->add_option("--depth-min", cfg.depth_min, "coarsest depth")->check(CLI::Range(0, 60));
  ifs->add_option("--resonance", resonance, "r1,r2: test log r1 / log r2 for rationality");
  ifs->add_option("--qmax", res_qmax, "largest denominator")->check(CLI::Range(1, 1 << 30));
  ifs->add_option("--demo", demo, "resonant or nonresonant")->check(CLI::IsMember({"resonant", "nonresonant"}));
  common(ifs);

  auto* sweep = app.add_subcommand("sweep", "map a command over a parameter grid");
  std::string of = "spectrum";
  sweep->add_option("--of", of, "command to sweep")
      ->check(CLI::IsMember({"spectrum", "oracle", "dim", "sum", "periodic"}));
  sweep->add_option("--param", cfg.sweep_param, "lambda or a")->check(CLI::IsMember({"lambda", "a"}));
  sweep->add_option("--from", cfg.sweep_from, "grid start")->required();
  sweep->add_option("--to", cfg.sweep_to, "grid end")->required();
  sweep->add_option("--points", cfg.sweep_points, "grid points")->check(CLI::Range(1, 100000));
  sweep->add_option("--threads", cfg.threads, "workers (default FIBSPEC_THREADS or all cores)")
      ->check(CLI::Range(1, 1024));
  sweep->add_option("--k", cfg.level, "level passed to the swept command")->check(CLI::Range(0, 30));
  sweep->add_option("--k-min", cfg.k_min, "dim: coarsest level")->check(CLI::Range(0, 30));
  sweep->add_option("--n", cfg.truncation, "oracle: truncation size")->check(CLI::Range(1, 100000));
  common(sweep);

  try {
    app.parse(argc, argv);
    auto* chosen = app.get_subcommands().front();
    cfg.command = *parse_command(chosen->get_name());
    cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!lambdas.empty()) cfg.lambdas = parse_doubles(lambdas);
    if (cfg.command == Command::sum && cfg.lambdas.size() > 2) {
      throw std::invalid_argument("sum takes one or two couplings");
    }
    if (cfg.command == Command::periodic && scan_min->count() > 0) cfg.scan = scan;
    if (!maps.empty()) cfg.maps = parse_maps(maps);
    if (!hull.empty()) {
      const auto h = parse_doubles(hull);
      if (h.size() != 2) throw std::invalid_argument("--hull takes lo,hi");
      cfg.hull = {h[0], h[1]};
    }
    if (!resonance.empty()) {
      const auto r = parse_doubles(resonance);
      if (r.size() != 2) throw std::invalid_argument("--resonance takes r1,r2");
      cfg.resonance = ResonanceRequest{r[0], r[1], res_qmax};
    }
    if (!demo.empty()) cfg.demo = demo;
    if (cfg.command == Command::sweep) {
      cfg.sweep_of = *parse_command(of);
      if (!sweep->get_option("--param")->count()) {
        cfg.sweep_param = cfg.sweep_of == Command::periodic ? "a" : "lambda";
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInvalidArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }

  const auto outcome = run(cfg);
  if (outcome.exit_code != kSuccess) {
    std::cerr << "error: " << outcome.error << '\n';
    return outcome.exit_code;
  }
  try {
    if (cfg.output_path.empty()) {
      std::cout << outcome.document;
    } else {
      write_atomically(cfg.output_path, outcome.document);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }
  return kSuccess;
}

}  // namespace fibspec::cli
