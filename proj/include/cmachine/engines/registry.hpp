#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmachine/engines/engine.hpp"
#include "cmachine/engines/fibonacci.hpp"
#include "cmachine/engines/layered.hpp"
#include "cmachine/permutation.hpp"

namespace cmachine::engines {

struct EngineInfo {
  std::string name;
  PatternSet container;  // the machine's container class C = Av(container)
  std::function<std::unique_ptr<Engine>()> make;
  PatternSet generated() const { return one_skew_basis(container); }
};

inline const std::vector<EngineInfo>& registry() {
  static const std::vector<EngineInfo> engines = {
      {"fib-plus", PatternSet::parse({"231", "312", "321"}), [] { return std::make_unique<FibPlus>(); }},
      {"fib-minus", PatternSet::parse({"123", "132", "213"}), [] { return std::make_unique<FibMinus>(); }},
      {"av4123-4231-4312", PatternSet::parse({"123", "231", "312"}),
       [] { return std::make_unique<Av4123_4231_4312>(); }},
      {"av4123-4231", PatternSet::parse({"123", "231"}), [] { return std::make_unique<Av4123_4231>(); }},
      {"av4123-4312", PatternSet::parse({"123", "312"}), [] { return std::make_unique<Av4123_4312>(); }},
      {"av4231-4321", PatternSet::parse({"231", "321"}), [] { return std::make_unique<Av4231_4321>(); }},
  };
  return engines;
}

inline const EngineInfo& find_engine(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  std::string known;
  for (const auto& e : registry()) known += (known.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown engine '" + name + "' (known: " + known + ")");
}

inline EngineRun run_named(const std::string& name, int n_max, const RunOptions& options = {}) {
  auto engine = find_engine(name).make();
  return run_engine(*engine, n_max, options);
}

inline CountSeries engine_counts(const std::string& name, int n_max) { return run_named(name, n_max).counts; }

inline CountSeries fib_plus_counts(int n_max) { return engine_counts("fib-plus", n_max); }
inline CountSeries fib_minus_counts(int n_max) { return engine_counts("fib-minus", n_max); }
inline CountSeries av4123_4231_4312_counts(int n_max) { return engine_counts("av4123-4231-4312", n_max); }
inline CountSeries av4123_4231_counts(int n_max) { return engine_counts("av4123-4231", n_max); }
inline CountSeries av4123_4312_counts(int n_max) { return engine_counts("av4123-4312", n_max); }
inline CountSeries av4231_4321_counts(int n_max) { return engine_counts("av4231-4321", n_max); }

}  // namespace cmachine::engines
