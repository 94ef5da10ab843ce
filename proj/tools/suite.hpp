#pragma once

// The property suite behind `minkprob verify` and the acceptance test: twelve
// criteria, each with its own tolerances and runtime budget.

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace minkprob::suite {

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double budget = 0.0;  // seconds
  std::string detail;
  nlohmann::json data;
};

/// Runs the selected criteria (all when empty), printing one line per
/// criterion to `log` as it finishes.
std::vector<Outcome> run(const std::vector<int>& which, std::uint64_t seed, std::ostream* log);

std::string format_line(const Outcome& o);
nlohmann::json to_json(const std::vector<Outcome>& outcomes);

}  // namespace minkprob::suite
