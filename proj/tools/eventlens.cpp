// eventlens: news-volume event detection and FX event studies.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>

#include "eventlens/config.hpp"
#include "eventlens/error.hpp"
#include "eventlens/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStageFailure = 1;
constexpr int kExitConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect major news events and measure their effect on exchange rates"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  app.add_option("--config", config_path, "Run configuration file (falls back to $EVENTLENS_CONFIG)");
  app.add_option("--out", out_dir, "Output directory");

  std::map<std::string, std::string> overrides;
  for (const auto& key : eventlens::config_keys()) {
    const std::string name(key.name);
    app.add_option_function<std::string>(
           "--" + name, [&overrides, name](const std::string& v) { overrides[name] = v; },
           std::string(key.help))
        ->group("Config overrides");
  }

  const std::vector<std::pair<std::string, eventlens::Command>> commands = {
      {"ingest", eventlens::Command::Ingest},
      {"correlate", eventlens::Command::Correlate},
      {"detect-events", eventlens::Command::DetectEvents},
      {"event-study", eventlens::Command::EventStudy},
      {"topics", eventlens::Command::Topics},
      {"run-all", eventlens::Command::RunAll},
      {"fetch-rates", eventlens::Command::FetchRates},
  };
  const std::map<std::string, std::string> descriptions = {
      {"ingest", "Load news and rates; write daily series"},
      {"correlate", "Overall, cumulative and window correlations"},
      {"detect-events", "Window-correlation and top-quantile event dates"},
      {"event-study", "Abnormal-return panels, reports and numeraire verdicts"},
      {"topics", "LDA topics per event window and the tracked-word timeline"},
      {"run-all", "Every stage"},
      {"fetch-rates", "Download rate CSVs over HTTP into the raw directory"},
  };
  for (const auto& [name, cmd] : commands) app.add_subcommand(name, descriptions.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  if (config_path.empty()) {
    if (const char* env = std::getenv("EVENTLENS_CONFIG")) config_path = env;
  }
  if (config_path.empty()) {
    std::cerr << "error: --config is required (or set EVENTLENS_CONFIG)\n";
    return kExitConfigError;
  }

  eventlens::RunConfig cfg;
  try {
    cfg = eventlens::load_config(config_path);
    for (const auto& [key, value] : overrides) eventlens::apply_config_value(cfg, key, value);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    eventlens::validate(cfg);
  } catch (const eventlens::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  auto command = eventlens::Command::RunAll;
  for (const auto& [name, cmd] : commands) {
    if (app.got_subcommand(name)) command = cmd;
  }

  try {
    const auto result = eventlens::run_pipeline(cfg, command, std::cerr);
    return result.exit_code == 0 ? kExitOk : kExitStageFailure;
  } catch (const eventlens::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == eventlens::ErrorCode::ConfigError ? kExitConfigError : kExitStageFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStageFailure;
  }
}
