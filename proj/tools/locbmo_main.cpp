#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "locbmo/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Localized BMO/BLO norm laboratory on discretized doubling spaces"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  int threads = 1;
  std::optional<std::uint64_t> seed;

  for (const auto& name : locbmo::known_commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "experiment config (JSON)")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads (>= 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option_function<std::uint64_t>(
        "--seed", [&seed](std::uint64_t v) { seed = v; },
        "override the config seeds for randomized suite members");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto cfg = locbmo::Config::parse(locbmo::Config::from_file(config_path).raw);
    const auto files = locbmo::run_command(command, cfg, out_dir, seed);
    for (const auto& f : files) std::printf("wrote %s\n", f.c_str());
    return 0;
  } catch (const locbmo::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 2;
  }
}
