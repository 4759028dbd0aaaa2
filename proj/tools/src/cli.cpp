#include "nskernel_cli/cli.hpp"

#include <cstdlib>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "nskernel/errors.hpp"
#include "nskernel/parallel.hpp"

namespace nskernel::cli {

namespace {

void setup_logging() {
  auto logger = spdlog::get("nskernel");
  if (!logger) logger = spdlog::stderr_color_mt("nskernel");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("NSKERNEL_LOG");
  const std::string level = env ? env : "info";
  if (level == "quiet") {
    spdlog::set_level(spdlog::level::off);
  } else if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    spdlog::set_level(spdlog::level::info);
    if (level != "info") spdlog::warn("NSKERNEL_LOG={} not recognised, using info", level);
  }
}

}  // namespace

int main_entry(int argc, char** argv) {
  CLI::App app{"Weighted Bergman kernels and their Kähler metrics on model domains"};
  std::string command;
  std::string config_path;
  std::string out_dir;
  std::string model_path;
  int threads = 0;
  bool serial = false;
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--threads", threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
  app.add_flag("--serial", serial, "Single-threaded, fixed summation order");
  app.add_option("--model", model_path, "Saved model file to use instead of building one")
      ->check(CLI::ExistingFile);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitContract;
  }

  setup_logging();
  try {
    const RunConfig cfg = load_config(config_path);
    CommandContext ctx;
    ctx.threads = serial ? 1 : threads;
    if (ctx.threads > 0) set_default_threads(ctx.threads);
    ctx.model_path = model_path;
    ctx.out_dir = !out_dir.empty() ? out_dir : cfg.raw.value("output", std::string("."));
    run_command(command, cfg, ctx);
    return kExitOk;
  } catch (const NumericalError& e) {
    spdlog::error("numerical failure: {}", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitContract;
  }
}

}  // namespace nskernel::cli
