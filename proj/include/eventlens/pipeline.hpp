#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eventlens/config.hpp"

namespace eventlens {

enum class Command { Ingest, Correlate, DetectEvents, EventStudy, Topics, RunAll, FetchRates };

enum class StageState { Ok, Failed, Skipped };

struct StageStatus {
  std::string stage;
  StageState state = StageState::Ok;
  std::string message;
};

struct PipelineResult {
  int exit_code = 0;  // 0 success, 1 stage failure
  std::vector<StageStatus> stages;
  std::vector<std::string> files;  // relative to the output (or raw) directory
  std::string manifest;
};

std::string_view to_string(StageState state);

/// Runs every stage the command needs, writing outputs beneath cfg.out_dir
/// together with stages.csv and manifest.txt. A failed stage skips the
/// stages that depend on it; independent stages still run.
PipelineResult run_pipeline(const RunConfig& cfg, Command command, std::ostream& log);

/// Downloads cfg.fetch_pairs into cfg.raw_dir and checks each body parses
/// as a rate CSV.
PipelineResult fetch_rates(const RunConfig& cfg, std::ostream& log);

}  // namespace eventlens
