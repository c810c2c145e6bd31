#pragma once

// Job execution behind the novikov-knot command line.

#include "nk/bounds.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nk {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,         // parse errors, bad arguments, missing files
  kExitVerification = 2,  // representation fails the relators, no representation, undefined invariant
  kExitInternal = 3,      // chain-law or other invariant violations
};

// Thrown for input problems; carries the exit code.
class JobError : public std::runtime_error {
 public:
  JobError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

// "k=5 class=3cycle limit=10"
SearchOptions parse_search_spec(const std::vector<std::string>& tokens);

struct JobSpec {
  std::string name;
  std::string presentation_path;
  std::string braid;
  std::string rep_path;
  bool trivial_rep = false;
  std::vector<std::string> search;  // tokens; empty = no search
  Convention convention = Convention::kAsGiven;
  bool alexander = true;
  bool novikov = true;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::optional<std::size_t> drop_gen;  // 0-based
  std::optional<std::size_t> drop_rel;  // 0-based
  std::size_t copies = 1;
  std::optional<UpperBound> upper;
  bool reduction = true;
};

struct JobResult {
  ExitCode code = kExitOk;
  std::string error;
  Report report;
};

Presentation load_job_presentation(const JobSpec& job);
JobResult run_job(const JobSpec& job);

// Manifest: JSON array of objects with keys name, presentation | braid,
// rep | trivial_rep | search, and optional ops, primes, drop_gen, drop_rel,
// copies, upper. Relative paths resolve against base_dir.
std::vector<JobSpec> parse_manifest(const std::string& text, const std::string& base_dir);

struct BatchRow {
  std::string name;
  ExitCode code = kExitOk;
  std::string error;
  std::optional<int> b1;
  int q1_lower = 0;
  long mn_lower = 0;
  std::optional<bool> monic;
  std::size_t representations = 0;
};

// Runs jobs on `workers` threads; rows follow manifest order.
std::vector<BatchRow> run_batch(const std::vector<JobSpec>& jobs, std::size_t workers);
nlohmann::json to_json(const std::vector<BatchRow>& rows);
std::string to_text(const std::vector<BatchRow>& rows);

// Worker count from NOVIKOV_KNOT_WORKERS, else hardware concurrency.
std::size_t default_workers();

// Full command line; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nk
