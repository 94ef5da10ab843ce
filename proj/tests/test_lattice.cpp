#include "minkprob/lattice.hpp"

#include <doctest.h>

#include <cmath>

using namespace minkprob;

TEST_CASE("genus-2 lattice closes its relator") {
  const Lattice l = genus2_lattice();
  CHECK(l.rank() == 4);
  CHECK(l.relator_defect() < 1e-9);
  CHECK_NOTHROW(l.validate());
  CHECK(std::cosh(genus2_inradius()) == doctest::Approx(1.0 + std::sqrt(2.0)));
}

TEST_CASE("word parsing") {
  const Word w = parse_word(std::string("abAB"), 4);
  CHECK(w == Word{1, 2, -1, -2});
  CHECK(format_word(w) == "abAB");
  CHECK(inverse_word(w) == Word{2, 1, -2, -1});
  CHECK_THROWS_AS(parse_word(std::string("ax"), 4), std::invalid_argument);
  const Lattice l = genus2_lattice();
  CHECK((l.evaluate(w) * l.evaluate(inverse_word(w)) - Mat3::Identity()).norm() < 1e-9);
}

TEST_CASE("cocycles") {
  const Lattice l = genus2_lattice();
  const MinkVector t0(0.3, -0.2, 0.5);
  const Cocycle cob = Cocycle::coboundary(l, t0);
  CHECK(cocycle_defect(l, cob) < 1e-9);
  const Word w = parse_word(std::string("abCd"), 4);
  const Mat3 g = l.evaluate(w);
  CHECK((cocycle_extend(l, cob, w) - (g * t0 - t0)).norm() < 1e-9);

  std::mt19937_64 rng(11);
  const Cocycle rnd = Cocycle::random(l, 1.0, rng);
  CHECK(cocycle_defect(l, rnd) < 1e-8);
  CHECK(rnd.max_norm() > 0.01);
  CHECK_NOTHROW(validate_cocycle(l, rnd));
  // the constraint space has dimension 3(2g - 1) = 9 for genus 2
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cocycle_constraints(l));
  const auto sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) rank += sv[i] > 1e-8 * sv[0];
  CHECK(12 - rank == 9);

  Cocycle broken = cob;
  broken.vectors[0] += MinkVector(0.5, 0, 0);
  CHECK_THROWS_AS(validate_cocycle(l, broken), std::invalid_argument);
}

TEST_CASE("orbit enumeration") {
  const Lattice l = genus2_lattice();
  const auto elems = enumerate_elements(l, Cocycle::zero(4), 2);
  // reduced words of length <= 2 over 8 letters: 1 + 8 + 8*7 = 65, all distinct
  CHECK(elems.size() == 65);
  const auto pts = orbit(l, Cocycle::zero(4), MinkVector(0, 0, 1), 3);
  for (const auto& p : pts) CHECK(std::abs(mink_inner(p, p) + 1.0) < 1e-12 * p[2] * p[2]);
  CHECK(pts.size() == 1 + 8 + 56 + 392);

  const auto spec = lattice_from_json(nlohmann::json::parse(R"({"lattice":"genus2"})"));
  CHECK(spec.lattice.rank() == 4);
  const auto round = lattice_from_json(lattice_to_json(spec.lattice, spec.cocycle));
  CHECK((round.lattice.generators[2] - spec.lattice.generators[2]).norm() < 1e-12);
}
