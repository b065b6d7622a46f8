#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "xlab/driver.hpp"

namespace xlab::driver::detail {

// Resolved parameters with typed, validated access.
class Params {
 public:
  explicit Params(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  const std::string& get_string(const std::string& key) const;
  long long get_int(const std::string& key) const;
  double get_double(const std::string& key) const;
  // Integer constrained to [lo, hi].
  int get_int_in(const std::string& key, long long lo, long long hi) const;

 private:
  std::map<std::string, std::string> values_;
};

struct Context {
  const Params& params;
  std::uint64_t seed;
  unsigned threads;
};

using ExperimentFn = std::function<Table(const Context&)>;

struct Entry {
  ExperimentInfo info;
  ExperimentFn fn;
};

const std::vector<Entry>& registry();

// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write
// results into slot i, so output order never depends on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

// "ok" or a short failure description; the status column is always last.
std::string status_of(const std::exception& e);

}  // namespace xlab::driver::detail
