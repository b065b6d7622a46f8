#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace xlab::driver {

// Bad command line, unknown experiment or key, malformed value: exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct ExperimentConfig {
  std::string experiment;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::string out_path;  // empty: standard output
  Format format = Format::csv;
  unsigned threads = 1;
};

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct RunReport {
  std::string experiment;
  std::string config_hash;  // git blob hash of the canonical config text
  std::map<std::string, std::string> params;  // resolved, defaults included
  std::uint64_t seed = 0;
  Table table;
  std::vector<std::string> failures;
  double wall_seconds = 0.0;
};

struct ParamSpec {
  std::string name;
  std::string default_value;
  std::string help;
};

struct ExperimentInfo {
  std::string id;
  std::string description;
  std::string paper_refs;
  std::vector<ParamSpec> params;
};

const std::vector<ExperimentInfo>& list_experiments();

// Validates the config against the registry and runs the experiment.
RunReport run(const ExperimentConfig& config);

// Canonical "key=value" text (experiment, seed, then parameters sorted by key).
std::string canonical_config(const std::string& experiment, const std::map<std::string, std::string>& params,
                             std::uint64_t seed);
// SHA-1 of "blob <size>\0<text>", hex encoded.
std::string git_blob_hash(const std::string& text);

// One "key = value" per line; '#' starts a comment; blank lines ignored.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);

// Reads XLAB_THREADS (positive integer) capped by the hardware concurrency.
unsigned threads_from_env();

// The first line is a timestamp comment; everything after it is deterministic.
void write_csv(const RunReport& report, std::ostream& os);
void write_json(const RunReport& report, std::ostream& os);
std::string format_double(double v);

void print_registry(std::ostream& os);

}  // namespace xlab::driver
