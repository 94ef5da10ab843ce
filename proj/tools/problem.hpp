#pragma once

// Problem specs for the command-line tool: JSON documents or embedded
// presets, turned into solver inputs.  Any malformed field raises
// SpecError naming the field.

#include "minkprob/dirichlet.hpp"
#include "minkprob/equivariant.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace minkprob::cli {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reads a JSON file; parse errors carry the line and column.
nlohmann::json load_json(const std::string& path);

struct DirichletProblem {
  std::string name;
  GridPtr grid;
  BoundaryData boundary;
  DiscreteMeasureB measure;
  double tol = 1e-3;
  std::optional<BallFunction> exact;  // known solution, when there is one
};

/// Without `require_measure` a missing "measure" field means μ = 0.
DirichletProblem dirichlet_problem(const nlohmann::json& spec, const std::string& base_dir,
                                   bool require_measure = true);
nlohmann::json dirichlet_preset(const std::string& name);

struct EquivariantProblem {
  std::string name;
  DomainPtr domain;
  InvariantMeasure measure;
  double tol = 1e-6;
  std::optional<MinkVector> coboundary;  // t0 when τ_γ = γt0 - t0
  std::optional<double> curvature;       // t when μ = t² · cells
};

EquivariantProblem equivariant_problem(const nlohmann::json& spec, const std::string& base_dir, std::uint64_t seed);
nlohmann::json equivariant_preset(const std::string& name);

bool is_dirichlet_preset(const std::string& name);
bool is_equivariant_preset(const std::string& name);

}  // namespace minkprob::cli
