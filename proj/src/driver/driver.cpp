#include "xlab/driver.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <locale>
#include <mutex>
#include "json.hpp"
#include <openssl/evp.h>
#include <sstream>
#include <thread>

#include "experiments.hpp"
#include "xlab/errors.hpp"

namespace xlab::driver {

namespace detail {

const std::string& Params::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw internal_error("parameter not declared: " + key);
  return it->second;
}

long long Params::get_int(const std::string& key) const {
  const auto& s = get_string(key);
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size())
    throw usage_error("parameter " + key + " expects an integer, got '" + s + "'");
  return v;
}

double Params::get_double(const std::string& key) const {
  const auto& s = get_string(key);
  if (s == "inf" || s == "infinity") return INFINITY;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || std::isnan(v))
    throw usage_error("parameter " + key + " expects a number, got '" + s + "'");
  return v;
}

int Params::get_int_in(const std::string& key, long long lo, long long hi) const {
  const long long v = get_int(key);
  if (v < lo || v > hi)
    throw usage_error("parameter " + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          const std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string status_of(const std::exception& e) {
  std::string what = e.what();
  std::replace(what.begin(), what.end(), '\n', ' ');
  if (dynamic_cast<const convergence_failure*>(&e)) return "convergence_failure: " + what;
  if (dynamic_cast<const not_found*>(&e)) return "not_found: " + what;
  if (dynamic_cast<const internal_error*>(&e)) return "internal_error: " + what;
  return "error: " + what;
}

}  // namespace detail

namespace {

const detail::Entry& find_entry(const std::string& id) {
  for (const auto& e : detail::registry())
    if (e.info.id == id) return e;
  throw usage_error("unknown experiment '" + id + "' (run 'xlab list' for the registry)");
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      c);
}

}  // namespace

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const auto& e : detail::registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

void print_registry(std::ostream& os) {
  std::size_t width = 0;
  for (const auto& e : list_experiments()) width = std::max(width, e.id.size());
  for (const auto& e : list_experiments()) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << e.id << e.description << "  [" << e.paper_refs
       << "]\n";
    for (const auto& p : e.params) os << "    " << p.name << "=" << p.default_value << "  " << p.help << "\n";
  }
}

std::string canonical_config(const std::string& experiment, const std::map<std::string, std::string>& params,
                             std::uint64_t seed) {
  std::ostringstream os;
  os << "experiment=" << experiment << "\n" << "seed=" << seed << "\n";
  for (const auto& [k, v] : params) os << k << "=" << v << "\n";
  return os.str();
}

std::string git_blob_hash(const std::string& text) {
  const std::string blob = "blob " + std::to_string(text.size()) + std::string(1, '\0') + text;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(blob.data(), blob.size(), digest, &len, EVP_sha1(), nullptr) != 1)
    throw internal_error("git_blob_hash: SHA-1 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line " + std::to_string(number) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw usage_error("config line " + std::to_string(number) + ": empty key");
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

unsigned threads_from_env() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("XLAB_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  unsigned v = 0;
  const std::string s(env);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v == 0)
    throw usage_error("XLAB_THREADS must be a positive integer");
  return std::min(v, hw);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << v;
  return os.str();
}

RunReport run(const ExperimentConfig& config) {
  const auto& entry = find_entry(config.experiment);
  std::map<std::string, std::string> resolved;
  for (const auto& p : entry.info.params) resolved[p.name] = p.default_value;
  for (const auto& [k, v] : config.params) {
    if (!resolved.count(k)) throw usage_error("experiment " + config.experiment + " has no parameter '" + k + "'");
    resolved[k] = v;
  }
  RunReport report;
  report.experiment = config.experiment;
  report.params = resolved;
  report.seed = config.seed;
  report.config_hash = git_blob_hash(canonical_config(config.experiment, resolved, config.seed));

  const auto start = std::chrono::steady_clock::now();
  const detail::Params params(resolved);
  report.table = entry.fn(detail::Context{params, config.seed, std::max(1u, config.threads)});
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto& cols = report.table.columns;
  if (cols.empty() || cols.back() != "status") throw internal_error("experiment table lacks a status column");
  for (std::size_t i = 0; i < report.table.rows.size(); ++i) {
    const auto& row = report.table.rows[i];
    if (row.size() != cols.size()) throw internal_error("experiment row width mismatch");
    const auto status = cell_text(row.back());
    if (status != "ok") report.failures.push_back("row " + std::to_string(i + 1) + ": " + status);
  }
  return report;
}

void write_csv(const RunReport& report, std::ostream& os) {
  os << "# xlab generated " << timestamp() << "\n";
  os << "# experiment=" << report.experiment << " config=" << report.config_hash << " seed=" << report.seed;
  for (const auto& [k, v] : report.params) os << " " << k << "=" << v;
  os << "\n";
  const auto& t = report.table;
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_field(t.columns[c]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(row[c]));
    os << "\n";
  }
}

void write_json(const RunReport& report, std::ostream& os) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["generated"] = timestamp();
  doc["experiment"] = report.experiment;
  doc["config_hash"] = report.config_hash;
  doc["seed"] = report.seed;
  doc["parameters"] = report.params;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.table.rows) {
    ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& name = report.table.columns[c];
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v))
                obj[name] = v;
              else
                obj[name] = format_double(v);
            } else {
              obj[name] = v;
            }
          },
          row[c]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["failures"] = report.failures;
  // "generated" sits alone on the second line, the only non-deterministic one
  os << doc.dump(1) << "\n";
}

}  // namespace xlab::driver
