#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "xlab/driver.hpp"

namespace drv = xlab::driver;

namespace {

std::pair<std::string, std::string> split_assignment(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0)
    throw drv::usage_error("expected key=value, got '" + arg + "' (only the experiment id is positional)");
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

int run(int argc, char** argv) {
  CLI::App app{"xlab: numerical experiments on summability, smoothness, positive definiteness and dyadic analysis"};
  std::vector<std::string> positional;
  std::string out_path, format = "csv", config_path;
  std::uint64_t seed = 0;
  bool list = false;
  app.add_option("args", positional, "experiment id followed by key=value parameters");
  app.add_option("--out", out_path, "output file (default: standard output)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "random seed");
  app.add_option("--config", config_path, "file of 'key = value' lines; command-line keys take precedence");
  app.add_flag("--list", list, "print the experiment registry");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list || (!positional.empty() && positional.front() == "list")) {
    drv::print_registry(std::cout);
    return 0;
  }
  if (positional.empty()) throw drv::usage_error("missing experiment id (try --list)");

  drv::ExperimentConfig config;
  config.experiment = positional.front();
  if (!config_path.empty()) config.params = drv::read_config_file(config_path);
  for (std::size_t i = 1; i < positional.size(); ++i) {
    auto [key, value] = split_assignment(positional[i]);
    config.params[key] = value;
  }
  config.seed = seed;
  config.out_path = out_path;
  config.format = format == "json" ? drv::Format::json : drv::Format::csv;
  config.threads = drv::threads_from_env();

  const auto report = drv::run(config);
  auto emit = [&](std::ostream& os) {
    if (config.format == drv::Format::json)
      drv::write_json(report, os);
    else
      drv::write_csv(report, os);
  };
  if (out_path.empty()) {
    emit(std::cout);
  } else {
    std::ofstream file(out_path);
    if (!file) throw drv::usage_error("cannot write '" + out_path + "'");
    emit(file);
  }
  std::cerr << report.experiment << ": " << report.table.rows.size() << " rows, " << report.failures.size()
            << " failures, " << report.wall_seconds << " s, config " << report.config_hash << "\n";
  for (const auto& f : report.failures) std::cerr << "  " << f << "\n";
  return report.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const drv::usage_error& e) {
    std::cerr << "xlab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "xlab: internal error: " << e.what() << "\n";
    return 1;
  }
}
