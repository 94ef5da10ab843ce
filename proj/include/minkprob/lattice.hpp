#pragma once

// Uniform lattices in SO+(2,1), translation cocycles and the resulting affine
// groups Γ_τ.  Words are sequences of signed letters: +k is generator k-1,
// -k its inverse.

#include "minkprob/minkowski.hpp"

#include <json.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace minkprob {

using Word = std::vector<int>;

/// Letter names: generator k is the k-th lowercase letter, its inverse the
/// uppercase one ("a", "A", "b", ...).
Word parse_word(const std::vector<std::string>& letters, std::size_t generator_count);
Word parse_word(const std::string& compact, std::size_t generator_count);
std::string format_word(const Word& w);
Word inverse_word(const Word& w);

struct Lattice {
  std::vector<Mat3> generators;
  std::vector<Word> relators;
  std::optional<std::string> preset_name;

  std::size_t rank() const { return generators.size(); }

  /// Linear part of a word.
  Mat3 evaluate(const Word& w) const;

  /// Largest deviation from the identity over all relators, relative to the
  /// size of the partial products.
  double relator_defect() const;

  /// Throws std::invalid_argument when a generator is not a future Lorentz
  /// matrix or a relator fails to close.
  void validate(const Tolerances& tol = {}) const;
};

/// Genus-2 surface group generated by the side pairings of the regular
/// hyperbolic octagon with interior angles π/4; relator [a,b][c,d].
Lattice genus2_lattice();

/// Inradius r of the regular octagon (cosh r = 1 + √2).
double genus2_inradius();

struct Cocycle {
  std::vector<MinkVector> vectors;  // one per generator

  static Cocycle zero(std::size_t rank);
  /// τ_γ = γ t0 - t0.
  static Cocycle coboundary(const Lattice& lattice, const MinkVector& t0);
  /// Random element of Z^1 with each generator vector of norm at most `scale`
  /// (before projection onto the relator constraints).
  static Cocycle random(const Lattice& lattice, double scale, std::mt19937_64& rng);

  double max_norm() const;
};

/// Affine isometry of a word under Γ_τ (the linear part with τ_w).
Isometry affine_word(const Lattice& lattice, const Cocycle& cocycle, const Word& w);

/// τ_w following τ_{αβ} = τ_α + α τ_β and τ_{γ^{-1}} = -γ^{-1} τ_γ.
MinkVector cocycle_extend(const Lattice& lattice, const Cocycle& cocycle, const Word& w);

/// Largest translation left over by a relator.
double cocycle_defect(const Lattice& lattice, const Cocycle& cocycle);

/// Throws std::invalid_argument when the cocycle does not close on the relators.
void validate_cocycle(const Lattice& lattice, const Cocycle& cocycle, const Tolerances& tol = {});

/// Linear constraint matrix whose null space is Z^1(Γ, R^3).
Eigen::MatrixXd cocycle_constraints(const Lattice& lattice);

struct GroupElement {
  Word word;
  Isometry isometry;
};

/// Distinct elements of Γ_τ reachable by reduced words of length <= depth,
/// breadth first; the identity comes first.
std::vector<GroupElement> enumerate_elements(const Lattice& lattice, const Cocycle& cocycle,
                                             int depth, const Tolerances& tol = {});

/// Distinct images γ_τ(p) for reduced words of length <= depth.
std::vector<MinkVector> orbit(const Lattice& lattice, const Cocycle& cocycle, const MinkVector& p,
                              int depth, const Tolerances& tol = {});

struct LatticeSpec {
  Lattice lattice;
  Cocycle cocycle;
};

/// {"generators": [[9 numbers] | [[3],[3],[3]] ...], "relators": [["a","b",...]],
///  "cocycle": [[3 numbers] per generator]}.  "lattice": "genus2" selects the preset.
LatticeSpec lattice_from_json(const nlohmann::json& doc, const Tolerances& tol = {});
nlohmann::json lattice_to_json(const Lattice& lattice, const Cocycle& cocycle);

}  // namespace minkprob
