#include "minkprob/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace minkprob {

namespace {

int letter_from_char(char c, std::size_t generator_count) {
  const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
  const int k = std::tolower(static_cast<unsigned char>(c)) - 'a';
  if (k < 0 || static_cast<std::size_t>(k) >= generator_count) {
    throw std::invalid_argument(std::string("unknown generator symbol '") + c + "'");
  }
  return inverse ? -(k + 1) : (k + 1);
}

Mat3 letter_matrix(const Lattice& lattice, int letter) {
  const Mat3& g = lattice.generators.at(static_cast<std::size_t>(std::abs(letter) - 1));
  return letter > 0 ? g : lorentz_inverse(g);
}

Isometry letter_isometry(const Lattice& lattice, const Cocycle& cocycle, int letter) {
  const std::size_t k = static_cast<std::size_t>(std::abs(letter) - 1);
  if (k >= lattice.rank() || k >= cocycle.vectors.size()) {
    throw std::invalid_argument("word letter outside the generator range");
  }
  Isometry g{lattice.generators[k], cocycle.vectors[k]};
  return letter > 0 ? g : g.inverse();
}

// A generic probe vector keeps symmetric lattices from producing many equal keys.
const MinkVector kProbe{0.1234, 0.0567, 1.0};

double matrix_scale(const Mat3& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

}  // namespace

Word parse_word(const std::vector<std::string>& letters, std::size_t generator_count) {
  Word w;
  w.reserve(letters.size());
  for (const auto& s : letters) {
    if (s.size() != 1) throw std::invalid_argument("word letters must be single characters: '" + s + "'");
    w.push_back(letter_from_char(s[0], generator_count));
  }
  return w;
}

Word parse_word(const std::string& compact, std::size_t generator_count) {
  Word w;
  for (char c : compact) w.push_back(letter_from_char(c, generator_count));
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (int l : w) {
    const char c = static_cast<char>('a' + std::abs(l) - 1);
    s.push_back(l > 0 ? c : static_cast<char>(std::toupper(c)));
  }
  return s;
}

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Mat3 Lattice::evaluate(const Word& w) const {
  Mat3 m = Mat3::Identity();
  for (int l : w) m = m * letter_matrix(*this, l);
  return m;
}

double Lattice::relator_defect() const {
  double worst = 0.0;
  for (const Word& r : relators) {
    Mat3 m = Mat3::Identity();
    double scale = 1.0;
    for (int l : r) {
      m = m * letter_matrix(*this, l);
      scale = std::max(scale, matrix_scale(m));
    }
    worst = std::max(worst, (m - Mat3::Identity()).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

void Lattice::validate(const Tolerances& tol) const {
  if (generators.empty()) throw std::invalid_argument("lattice has no generators");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!Isometry{generators[i], MinkVector::Zero()}.is_future_lorentz(tol.matrix)) {
      throw std::invalid_argument("generator " + format_word({static_cast<int>(i + 1)}) +
                                  " is not in SO+(2,1)");
    }
  }
  for (const Word& r : relators) {
    for (int l : r) {
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > generators.size()) {
        throw std::invalid_argument("relator uses an unknown generator");
      }
    }
  }
  const double defect = relator_defect();
  if (defect > tol.matrix) {
    throw std::invalid_argument("relator does not evaluate to the identity (defect " +
                                std::to_string(defect) + ")");
  }
}

double genus2_inradius() { return std::acosh(1.0 + std::numbers::sqrt2); }

Lattice genus2_lattice() {
  const double r = genus2_inradius();
  const double q = std::numbers::pi / 4.0;
  // Maps side j of the octagon onto side i; side k has its midpoint in
  // direction kπ/4.
  auto pairing = [&](int i, int j) {
    return Mat3(rotation(i * q) * boost(2.0 * r) * rotation(std::numbers::pi - j * q));
  };
  Lattice lat;
  lat.generators = {pairing(0, 2), lorentz_inverse(pairing(1, 3)), pairing(4, 6),
                    lorentz_inverse(pairing(5, 7))};
  lat.relators = {parse_word("abABcdCD", 4)};
  lat.preset_name = "genus2";
  return lat;
}

Cocycle Cocycle::zero(std::size_t rank) {
  return Cocycle{std::vector<MinkVector>(rank, MinkVector::Zero())};
}

Cocycle Cocycle::coboundary(const Lattice& lattice, const MinkVector& t0) {
  Cocycle c;
  for (const Mat3& g : lattice.generators) c.vectors.push_back(g * t0 - t0);
  return c;
}

Eigen::MatrixXd cocycle_constraints(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  Eigen::MatrixXd a(3 * lattice.relators.size(), 3 * n);
  for (std::size_t col = 0; col < 3 * n; ++col) {
    Cocycle basis = Cocycle::zero(n);
    basis.vectors[col / 3][static_cast<Eigen::Index>(col % 3)] = 1.0;
    for (std::size_t r = 0; r < lattice.relators.size(); ++r) {
      a.block<3, 1>(static_cast<Eigen::Index>(3 * r), static_cast<Eigen::Index>(col)) =
          cocycle_extend(lattice, basis, lattice.relators[r]);
    }
  }
  return a;
}

Cocycle Cocycle::random(const Lattice& lattice, double scale, std::mt19937_64& rng) {
  const Eigen::MatrixXd a = cocycle_constraints(lattice);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::Index rank = svd.rank();
  const Eigen::MatrixXd null = svd.matrixV().rightCols(a.cols() - rank);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd coeff(null.cols());
  for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff[i] = normal(rng);
  Eigen::VectorXd v = null * coeff;
  Cocycle c = zero(lattice.rank());
  double biggest = 0.0;
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    c.vectors[k] = v.segment<3>(static_cast<Eigen::Index>(3 * k));
    biggest = std::max(biggest, c.vectors[k].norm());
  }
  if (biggest > 0.0) {
    for (auto& t : c.vectors) t *= scale / biggest;
  }
  return c;
}

double Cocycle::max_norm() const {
  double m = 0.0;
  for (const auto& t : vectors) m = std::max(m, t.norm());
  return m;
}

Isometry affine_word(const Lattice& lattice, const Cocycle& cocycle, const Word& w) {
  Isometry g;
  for (int l : w) g = g.compose(letter_isometry(lattice, cocycle, l));
  return g;
}

MinkVector cocycle_extend(const Lattice& lattice, const Cocycle& cocycle, const Word& w) {
  return affine_word(lattice, cocycle, w).translation;
}

double cocycle_defect(const Lattice& lattice, const Cocycle& cocycle) {
  double worst = 0.0;
  for (const Word& r : lattice.relators) {
    Isometry g;
    double scale = 1.0;
    for (int l : r) {
      g = g.compose(letter_isometry(lattice, cocycle, l));
      scale = std::max({scale, matrix_scale(g.linear), g.translation.cwiseAbs().maxCoeff()});
    }
    worst = std::max(worst, g.translation.cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

void validate_cocycle(const Lattice& lattice, const Cocycle& cocycle, const Tolerances& tol) {
  if (cocycle.vectors.size() != lattice.rank()) {
    throw std::invalid_argument("cocycle needs one vector per generator");
  }
  const double defect = cocycle_defect(lattice, cocycle);
  if (defect > tol.matrix) {
    throw std::invalid_argument("cocycle violates a relator (defect " + std::to_string(defect) + ")");
  }
}

std::vector<GroupElement> enumerate_elements(const Lattice& lattice, const Cocycle& cocycle,
                                             int depth, const Tolerances& tol) {
  std::vector<GroupElement> out;
  std::multimap<double, std::size_t> index;  // keyed by the probe's time coordinate

  auto insert_if_new = [&](GroupElement&& e) {
    const double key = (e.isometry.linear * kProbe)[2];
    const double slack = tol.dedup * std::max(1.0, key) * 10.0;
    const double scale = matrix_scale(e.isometry.linear);
    for (auto it = index.lower_bound(key - slack); it != index.end() && it->first <= key + slack; ++it) {
      const GroupElement& other = out[it->second];
      const double diff = (other.isometry.linear - e.isometry.linear).cwiseAbs().maxCoeff();
      if (diff <= tol.dedup * scale) return false;
    }
    index.emplace(key, out.size());
    out.push_back(std::move(e));
    return true;
  };

  insert_if_new({{}, Isometry::identity()});
  std::size_t level_begin = 0;
  for (int level = 1; level <= depth; ++level) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t k = 1; k <= lattice.rank(); ++k) {
        for (int sign : {1, -1}) {
          const int letter = sign * static_cast<int>(k);
          const Word& w = out[i].word;
          if (!w.empty() && w.back() == -letter) continue;
          GroupElement e{w, out[i].isometry.compose(letter_isometry(lattice, cocycle, letter))};
          e.word.push_back(letter);
          insert_if_new(std::move(e));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<MinkVector> orbit(const Lattice& lattice, const Cocycle& cocycle, const MinkVector& p,
                              int depth, const Tolerances& tol) {
  if (depth < 0) throw std::invalid_argument("orbit depth must be non-negative");
  const auto elements = enumerate_elements(lattice, cocycle, depth, tol);
  std::vector<MinkVector> pts;
  pts.reserve(elements.size());
  for (const auto& e : elements) pts.push_back(e.isometry.apply(p));

  // Deduplicate coincident images (p fixed by part of the group).
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a][2] < pts[b][2]; });
  std::vector<bool> dup(pts.size(), false);
  for (std::size_t a = 0; a < order.size(); ++a) {
    if (dup[order[a]]) continue;
    const MinkVector& pa = pts[order[a]];
    const double scale = std::max(1.0, pa.cwiseAbs().maxCoeff());
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const MinkVector& pb = pts[order[b]];
      if (pb[2] - pa[2] > tol.dedup * scale) break;
      if ((pa - pb).cwiseAbs().maxCoeff() <= tol.dedup * scale) dup[order[b]] = true;
    }
  }
  std::vector<MinkVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!dup[i]) out.push_back(pts[i]);
  }
  return out;
}

namespace {

Mat3 matrix_from_json(const nlohmann::json& j) {
  Mat3 m;
  if (j.is_array() && j.size() == 9) {
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = j.at(static_cast<std::size_t>(i)).get<double>();
    return m;
  }
  if (j.is_array() && j.size() == 3) {
    for (int r = 0; r < 3; ++r) {
      const auto& row = j.at(static_cast<std::size_t>(r));
      if (!row.is_array() || row.size() != 3) break;
      for (int c = 0; c < 3; ++c) m(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
      if (r == 2) return m;
    }
  }
  throw std::invalid_argument("generator must be 9 row-major numbers or a 3x3 array");
}

}  // namespace

LatticeSpec lattice_from_json(const nlohmann::json& doc, const Tolerances& tol) {
  LatticeSpec spec;
  const auto lat_field = doc.find("lattice");
  if (lat_field != doc.end() && lat_field->is_string()) {
    if (lat_field->get<std::string>() != "genus2") {
      throw std::invalid_argument("unknown lattice preset '" + lat_field->get<std::string>() + "'");
    }
    spec.lattice = genus2_lattice();
  } else {
    const auto& gens = doc.at("generators");
    if (!gens.is_array() || gens.empty()) throw std::invalid_argument("\"generators\" must be a non-empty array");
    for (const auto& g : gens) spec.lattice.generators.push_back(matrix_from_json(g));
    if (doc.contains("relators")) {
      for (const auto& r : doc.at("relators")) {
        if (r.is_string()) {
          spec.lattice.relators.push_back(parse_word(r.get<std::string>(), spec.lattice.rank()));
        } else {
          spec.lattice.relators.push_back(parse_word(r.get<std::vector<std::string>>(), spec.lattice.rank()));
        }
      }
    }
  }
  spec.lattice.validate(tol);
  spec.cocycle = Cocycle::zero(spec.lattice.rank());
  if (doc.contains("cocycle")) {
    const auto& c = doc.at("cocycle");
    if (!c.is_array() || c.size() != spec.lattice.rank()) {
      throw std::invalid_argument("\"cocycle\" needs one 3-vector per generator");
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto v = c[k].get<std::vector<double>>();
      if (v.size() != 3) throw std::invalid_argument("cocycle vectors must have 3 entries");
      spec.cocycle.vectors[k] = MinkVector(v[0], v[1], v[2]);
    }
    validate_cocycle(spec.lattice, spec.cocycle, tol);
  }
  return spec;
}

nlohmann::json lattice_to_json(const Lattice& lattice, const Cocycle& cocycle) {
  nlohmann::json doc;
  doc["generators"] = nlohmann::json::array();
  for (const Mat3& g : lattice.generators) {
    std::vector<double> flat;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) flat.push_back(g(r, c));
    doc["generators"].push_back(flat);
  }
  doc["relators"] = nlohmann::json::array();
  for (const Word& w : lattice.relators) {
    std::vector<std::string> letters;
    for (char ch : format_word(w)) letters.emplace_back(1, ch);
    doc["relators"].push_back(letters);
  }
  doc["cocycle"] = nlohmann::json::array();
  for (const auto& t : cocycle.vectors) doc["cocycle"].push_back({t[0], t[1], t[2]});
  return doc;
}

}  // namespace minkprob
