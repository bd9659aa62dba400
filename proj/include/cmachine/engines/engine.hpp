#pragma once

// Level-by-level counting engines: common interface, run driver and JSON
// checkpoints.
//
// Checkpoint file (plain JSON):
//   {"format": "cmachine-checkpoint", "version": 1, "engine": "<name>",
//    "n_max": N, "level": L, "terms": ["1", ...], "level_mass": [...],
//    "states": [[i0, i1, ..., "count"], ...]}
// `level` is the output level the states belong to; terms holds a_0..a_L.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmachine/count_series.hpp"

namespace cmachine::engines {

using nlohmann::json;

/// One serialized DP entry: tuple coordinates plus its count.
struct StateEntry {
  std::vector<int> key;
  BigInt count;
};

class Engine {
 public:
  virtual ~Engine() = default;
  virtual std::string name() const = 0;
  /// Resets to output level 0 for a run that will stop at n_max.
  virtual void start(int n_max) = 0;
  /// Moves every state forward by one emitted symbol.
  virtual void advance() = 0;
  virtual int level() const = 0;
  virtual int n_max() const = 0;
  /// a_level: walks back at the empty container.
  virtual BigInt term() const = 0;
  /// Total weight of live states at this level, when the engine has states.
  virtual std::optional<BigInt> mass() const { return std::nullopt; }
  virtual std::vector<StateEntry> export_states() const = 0;
  /// Replaces the state at `level` (a run must already be started with the same n_max).
  virtual void import_states(int level, const std::vector<StateEntry>& states) = 0;
};

struct EngineRun {
  CountSeries counts;
  std::vector<BigInt> level_mass;
};

struct RunOptions {
  std::string checkpoint_path;  // empty: no checkpointing
  int checkpoint_every = 50;    // levels between checkpoint writes
  std::function<void(int, const BigInt&)> on_term;
};

namespace detail {

inline json strings_of(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

inline std::vector<BigInt> bigints_of(const json& arr) {
  std::vector<BigInt> out;
  for (const auto& s : arr) out.emplace_back(s.get<std::string>());
  return out;
}

}  // namespace detail

inline void write_checkpoint(const std::string& path, const Engine& engine, const EngineRun& run) {
  json doc;
  doc["format"] = "cmachine-checkpoint";
  doc["version"] = 1;
  doc["engine"] = engine.name();
  doc["n_max"] = engine.n_max();
  doc["level"] = engine.level();
  doc["terms"] = detail::strings_of(run.counts.coeffs);
  doc["level_mass"] = detail::strings_of(run.level_mass);
  json states = json::array();
  for (const auto& e : engine.export_states()) {
    json row = json::array();
    for (int k : e.key) row.push_back(k);
    row.push_back(e.count.get_str());
    states.push_back(std::move(row));
  }
  doc["states"] = std::move(states);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

/// Loads a checkpoint into a started engine; returns the recorded prefix.
inline EngineRun read_checkpoint(const std::string& path, Engine& engine) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  const json doc = json::parse(in);
  if (doc.value("format", "") != "cmachine-checkpoint") throw std::runtime_error(path + ": not a checkpoint file");
  if (doc.at("engine").get<std::string>() != engine.name())
    throw std::runtime_error(path + ": checkpoint belongs to engine " + doc.at("engine").get<std::string>());
  if (doc.at("n_max").get<int>() != engine.n_max())
    throw std::runtime_error(path + ": checkpoint was taken with n_max " + std::to_string(doc.at("n_max").get<int>()));
  EngineRun run;
  run.counts.coeffs = detail::bigints_of(doc.at("terms"));
  run.level_mass = detail::bigints_of(doc.at("level_mass"));
  const int level = doc.at("level").get<int>();
  if (static_cast<int>(run.counts.size()) != level + 1) throw std::runtime_error(path + ": inconsistent term count");
  std::vector<StateEntry> states;
  for (const auto& row : doc.at("states")) {
    StateEntry e;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) e.key.push_back(row[i].get<int>());
    e.count = BigInt(row.back().get<std::string>());
    states.push_back(std::move(e));
  }
  engine.import_states(level, states);
  return run;
}

/// Runs `engine` through level n_max, resuming from (and periodically
/// refreshing) the checkpoint file when one is configured.
inline EngineRun run_engine(Engine& engine, int n_max, const RunOptions& options = {}) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  engine.start(n_max);
  EngineRun run;
  const bool checkpointing = !options.checkpoint_path.empty();
  if (checkpointing && std::filesystem::exists(options.checkpoint_path)) {
    run = read_checkpoint(options.checkpoint_path, engine);
  } else {
    run.counts.coeffs.push_back(engine.term());
    if (auto m = engine.mass()) run.level_mass.push_back(*m);
  }
  if (options.on_term) {
    for (std::size_t n = 0; n < run.counts.size(); ++n) options.on_term(static_cast<int>(n), run.counts.coeffs[n]);
  }
  while (engine.level() < n_max) {
    engine.advance();
    run.counts.coeffs.push_back(engine.term());
    if (auto m = engine.mass()) run.level_mass.push_back(*m);
    if (options.on_term) options.on_term(engine.level(), run.counts.coeffs.back());
    if (checkpointing && options.checkpoint_every > 0 && engine.level() % options.checkpoint_every == 0 &&
        engine.level() < n_max) {
      write_checkpoint(options.checkpoint_path, engine, run);
    }
  }
  if (checkpointing) write_checkpoint(options.checkpoint_path, engine, run);
  return run;
}

}  // namespace cmachine::engines
