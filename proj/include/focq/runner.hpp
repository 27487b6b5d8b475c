#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "focq/microprover.hpp"
#include "focq/prover_result.hpp"

namespace focq::runner {

struct ProblemFile {
  std::string cq_id;
  std::filesystem::path path;
};

struct RunnerConfig {
  enum class Backend { External, Builtin };

  Backend backend = Backend::External;
  // Run through /bin/sh; "{problem}" and "{timeout}" are substituted
  // (the problem path shell-quoted, the timeout in whole seconds, rounded up).
  std::string command_template;
  double timeout_seconds = 600.0;
  // Extra time granted to the builtin backend beyond its own deadline before
  // a run is considered overdue; also the documented upper slack on wall time.
  double grace_seconds = 2.0;
  int max_parallel = 1;
  // Raw prover output is archived here as "<cq_id>.out".
  std::filesystem::path output_dir = "runs";
  // Line-delimited JSON; ids already present are not run again. Empty: no journal.
  std::filesystem::path journal;
  microprover::ProverOptions builtin;

  // Throws focq::Error("ConfigError").
  void validate() const;
};

struct RunRecord {
  std::string cq_id;
  ProverResult result;
};

struct RunSummary {
  // One per input problem (journaled ones included), ordered by cq id.
  std::vector<RunRecord> results;
  long skipped = 0;   // already journaled
  long executed = 0;
  int peak_parallel = 0;
};

RunSummary run_corpus(std::span<const ProblemFile> problems, const RunnerConfig& config);

// Runs a single problem without journaling.
ProverResult run_one(const ProblemFile& problem, const RunnerConfig& config);

// "*.p" files of a directory, sorted by id (the file stem).
std::vector<ProblemFile> discover(const std::filesystem::path& dir);

// Journal records in file order. A malformed final line (a write cut short by
// a crash) is ignored; malformed lines elsewhere throw MalformedLine.
std::vector<RunRecord> read_journal(const std::filesystem::path& path);

// Journal line layout: {schema_version, cq_id, szs, wall_seconds,
// prover_seconds, used_axioms, output_file}.
nlohmann::json to_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& j);

std::string expand_command(const std::string& command_template, const std::filesystem::path& problem,
                           double timeout_seconds);

}  // namespace focq::runner
