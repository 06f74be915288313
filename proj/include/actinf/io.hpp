#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "actinf/baselines.hpp"
#include "actinf/influence.hpp"
#include "actinf/model.hpp"
#include "actinf/optimizer.hpp"
#include "actinf/simulator.hpp"

namespace actinf::io {

/// Bad user input (malformed files, unknown keys, out-of-range references).
/// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- primitive formatting ------------------------------------------------

/// Shortest round-trippable decimal form; used for every emitted double so
/// outputs are byte-stable and re-ingestible without loss.
std::string format_double(double value);

/// Parses a time field: either a plain day offset or an ISO-8601 timestamp
/// (YYYY-MM-DD[THH:MM:SS[.fff]][Z]). ISO values are returned as seconds
/// since the civil epoch; is_absolute tells the caller to rebase.
struct ParsedTime {
  double value = 0.0;
  bool is_absolute = false;
};
ParsedTime parse_time(const std::string& text);

// ---- event / network / label files ---------------------------------------

struct EventFile {
  EventLog log;
  /// Day-zero offset subtracted from absolute timestamps, if any.
  std::optional<double> epoch_seconds;
};

/// Reads `time,account,topic,kind,target` (header required, 1-based ids).
/// ISO-8601 times are rebased to day offsets from the earliest event.
/// account_count caps the valid account range; pass 0 to infer it.
EventFile read_events_csv(const std::string& path, int account_count = 0);
void write_events_csv(const std::string& path, const EventLog& log);

/// Reads `influencer,follower` edges (header required, 1-based ids), plus
/// an optional `id,label` file. Network size is max id seen unless
/// account_count forces it.
FollowersNetwork read_network_csv(const std::string& path,
                                  const std::string& labels_path = "",
                                  int account_count = 0);
void write_network_csv(const std::string& path, const FollowersNetwork& network);
void write_labels_csv(const std::string& path, const FollowersNetwork& network);

// ---- parameters / scores / traces ----------------------------------------

ParamVector read_params_csv(const std::string& path);
void write_params_csv(const std::string& path, const ParamVector& params);

void write_scores_csv(const std::string& path,
                      const std::vector<RankedAccount>& ranking);
LabeledScores read_labeled_scores_csv(const std::string& path);
LabeledTable read_labeled_table_csv(const std::string& path);

void write_trace_csv(const std::string& path,
                     const std::vector<IterationRecord>& trace);

void write_experiment_csv(const std::string& path,
                          const std::vector<ExperimentReport>& reports);
void write_experiment_json(const std::string& path,
                           const std::vector<ExperimentReport>& reports);

void write_comparison_csv(const std::string& r2_path,
                          const std::string& coefficients_path,
                          const MeasureComparison& comparison);

// ---- flat key=value config -----------------------------------------------

class Config {
 public:
  Config() = default;
  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text);

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string get_string(const std::string& key);
  double get_double(const std::string& key);
  int get_int(const std::string& key);
  std::uint64_t get_u64(const std::string& key);
  std::vector<int> get_int_list(const std::string& key);

  std::string get_string_or(const std::string& key, const std::string& fallback);
  double get_double_or(const std::string& key, double fallback);
  int get_int_or(const std::string& key, int fallback);
  std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback);
  std::vector<int> get_int_list_or(const std::string& key,
                                   const std::vector<int>& fallback);

  /// Throws InputError listing any key never consumed by a getter.
  void reject_unknown_keys() const;

 private:
  std::map<std::string, std::string> values_;
  mutable std::map<std::string, bool> consumed_;
};

NewtonConfig newton_config_from(Config& config);
SimConfig sim_config_from(Config& config, bool require_size);

// ---- run manifest ----------------------------------------------------------

/// 64-bit FNV-1a over the file bytes, as zero-padded hex.
std::string file_digest(const std::string& path);

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config_values;
  std::vector<std::pair<std::string, std::string>> input_digests;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string tool_version;
  std::string started;
  std::string finished;
  std::vector<std::string> outputs;
};

/// Current UTC time, ISO-8601. Honors SOURCE_DATE_EPOCH so runs can be
/// made byte-reproducible.
std::string timestamp_utc();

void write_manifest(const std::string& path, const RunManifest& manifest);

}  // namespace actinf::io
