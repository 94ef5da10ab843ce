#include "problem.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <set>

namespace minkprob::cli {
namespace {

using nlohmann::json;

std::string resolve(const std::string& base, const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute() || base.empty()) return path;
  return (std::filesystem::path(base) / p).string();
}

void only_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw SpecError(where + (where.empty() ? "" : ".") + k + ": unknown field");
}

const json& object_at(const json& parent, const std::string& key, const std::string& path) {
  const json& j = parent.at(key);
  if (!j.is_object()) throw SpecError(path + ": expected an object");
  return j;
}

double number(const json& parent, const std::string& key, const std::string& path, double fallback) {
  if (!parent.contains(key)) return fallback;
  const json& j = parent.at(key);
  if (!j.is_number()) throw SpecError(path + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SpecError(path + ": not finite");
  return v;
}

int integer(const json& parent, const std::string& key, const std::string& path, int fallback, int lo) {
  if (!parent.contains(key)) return fallback;
  const json& j = parent.at(key);
  if (!j.is_number_integer()) throw SpecError(path + ": expected an integer");
  const int v = j.get<int>();
  if (v < lo) throw SpecError(path + ": must be >= " + std::to_string(lo));
  return v;
}

std::string string_at(const json& parent, const std::string& key, const std::string& path) {
  const json& j = parent.at(key);
  if (!j.is_string()) throw SpecError(path + ": expected a string");
  return j.get<std::string>();
}

std::ifstream open_input(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw SpecError(field + ": cannot open '" + path + "'");
  return in;
}

const BallFunction half_norm2 = [](const BallPoint& x) { return 0.5 * x.squaredNorm(); };
const BallFunction anisotropic = [](const BallPoint& x) { return 0.5 * (x[0] * x[0] + 4.0 * x[1] * x[1]); };

BoundaryData boundary_from(const json& b, const BallGrid& grid, const std::string& base) {
  only_keys(b, "boundary", {"preset", "samples", "csv", "height", "value", "count"});
  const int modes = int(b.contains("preset")) + int(b.contains("samples")) + int(b.contains("csv"));
  if (modes != 1) throw SpecError("boundary: give exactly one of \"preset\", \"samples\", \"csv\"");
  const double rho = grid.rho_max();
  if (b.contains("preset")) {
    const std::string p = string_at(b, "preset", "boundary.preset");
    const int count = integer(b, "count", "boundary.count", grid.angular(), 3);
    auto trace = [&](const BallFunction& f) {
      return BoundaryData::from_function([&](double a) { return f(BallPoint(rho * std::cos(a), rho * std::sin(a))); },
                                         count);
    };
    if (p == "zero") return BoundaryData::from_function([](double) { return 0.0; }, count);
    if (p == "quadratic") return trace(half_norm2);
    if (p == "anisotropic") return trace(anisotropic);
    if (p == "tent") return tent_boundary(number(b, "height", "boundary.height", 0.5), count);
    if (p == "constant") {
      const double v = number(b, "value", "boundary.value", 0.0);
      return BoundaryData::from_function([v](double) { return v; }, count);
    }
    throw SpecError("boundary.preset: unknown preset '" + p + "' (zero, quadratic, anisotropic, tent, constant)");
  }
  if (b.contains("csv")) {
    const std::string path = resolve(base, string_at(b, "csv", "boundary.csv"));
    auto in = open_input(path, "boundary.csv");
    try {
      return read_boundary_csv(in);
    } catch (const std::invalid_argument& e) {
      throw SpecError("boundary.csv (" + path + "): " + e.what());
    }
  }
  const json& s = b.at("samples");
  if (!s.is_array() || s.size() < 3) throw SpecError("boundary.samples: expected an array of at least 3 entries");
  BoundaryData g;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::string where = "boundary.samples[" + std::to_string(k) + "]";
    if (s[k].is_number()) {
      g.angles.push_back(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(s.size()));
      g.values.push_back(s[k].get<double>());
    } else if (s[k].is_array() && s[k].size() == 2 && s[k][0].is_number() && s[k][1].is_number()) {
      g.angles.push_back(s[k][0].get<double>());
      g.values.push_back(s[k][1].get<double>());
    } else {
      throw SpecError(where + ": expected a number or an [angle, value] pair");
    }
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("boundary.samples: ") + e.what());
  }
  return g;
}

DiscreteMeasureB measure_from(const json& m, GridPtr grid, const std::string& base) {
  only_keys(m, "measure", {"preset", "csv", "c0", "mass"});
  const int modes = int(m.contains("preset")) + int(m.contains("csv"));
  if (modes != 1) throw SpecError("measure: give exactly one of \"preset\", \"csv\"");
  DiscreteMeasureB mu;
  if (m.contains("csv")) {
    const std::string path = resolve(base, string_at(m, "csv", "measure.csv"));
    auto in = open_input(path, "measure.csv");
    try {
      mu = read_measure_csv(in, grid);
    } catch (const std::invalid_argument& e) {
      throw SpecError("measure.csv (" + path + "): " + e.what());
    }
  } else {
    const std::string p = string_at(m, "preset", "measure.preset");
    if (p == "zero") {
      mu = DiscreteMeasureB::zero(grid);
    } else if (p == "quadratic") {
      mu = ma_measure(PLFunctionB::sample(grid, half_norm2));
    } else if (p == "anisotropic") {
      mu = ma_measure(PLFunctionB::sample(grid, anisotropic));
    } else if (p == "dirac") {
      const double mass = number(m, "mass", "measure.mass", 1.0);
      if (mass < 0.0) throw SpecError("measure.mass: must be >= 0");
      mu = DiscreteMeasureB::zero(grid);
      mu.mass[0] = mass;
      mu.refresh_total();
    } else if (p == "constant") {
      const double c0 = number(m, "c0", "measure.c0", 1.0);
      if (c0 < 0.0) throw SpecError("measure.c0: must be >= 0");
      std::vector<double> mass(grid->size(), 0.0);
      for (std::size_t i : grid->interior_nodes()) mass[i] = c0 * grid->cell_area(i);
      mu = DiscreteMeasureB(grid, std::move(mass));
    } else {
      throw SpecError("measure.preset: unknown preset '" + p + "' (zero, quadratic, anisotropic, dirac, constant)");
    }
  }
  try {
    mu.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("measure: ") + e.what());
  }
  for (std::size_t i : grid->boundary_ring())
    if (mu.mass[i] != 0.0) throw SpecError("measure: mass on the boundary ring (node " + std::to_string(i) + ")");
  return mu;
}

MinkVector vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw SpecError(path + ": expected 3 numbers");
  for (const auto& v : j)
    if (!v.is_number()) throw SpecError(path + ": expected 3 numbers");
  return MinkVector(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(path + ": " + e.what());
  }
}

bool is_dirichlet_preset(const std::string& name) { return name == "quadratic" || name == "dirac"; }

bool is_equivariant_preset(const std::string& name) {
  return name == "fuchsian-t1" || name == "fuchsian-t2" || name == "coboundary";
}

json dirichlet_preset(const std::string& name) {
  if (name == "quadratic")
    return {{"name", "quadratic"},
            {"grid", {{"rings", 48}, {"angular", 96}, {"rho_max", 0.995}}},
            {"boundary", {{"preset", "quadratic"}}},
            {"measure", {{"preset", "quadratic"}}},
            {"tol", 1e-3}};
  if (name == "dirac")
    return {{"name", "dirac"},
            {"grid", {{"rings", 48}, {"angular", 96}, {"rho_max", 0.995}}},
            {"boundary", {{"preset", "zero"}}},
            {"measure", {{"preset", "dirac"}, {"mass", 1.0}}},
            {"tol", 1e-3}};
  throw SpecError("--preset: '" + name + "' is not a Dirichlet preset (quadratic, dirac)");
}

json equivariant_preset(const std::string& name) {
  json doc = {{"lattice", "genus2"}, {"orbit_depth", 6}, {"quad_order", 8}, {"mesh", 16}, {"tol", 1e-6}};
  doc["name"] = name;
  if (name == "fuchsian-t1" || name == "fuchsian-t2") {
    doc["cocycle"] = "zero";
    doc["measure"] = {{"preset", "constant_curvature"}, {"t", name == "fuchsian-t1" ? 1.0 : 2.0}};
    return doc;
  }
  if (name == "coboundary") {
    doc["cocycle"] = {{"coboundary", {0.1, -0.05, 0.02}}};
    doc["measure"] = {{"preset", "constant_curvature"}, {"t", 1.0}};
    return doc;
  }
  throw SpecError("--preset: '" + name + "' is not an equivariant preset (fuchsian-t1, fuchsian-t2, coboundary)");
}

DirichletProblem dirichlet_problem(const json& spec, const std::string& base, bool require_measure) {
  if (!spec.is_object()) throw SpecError("spec: expected a JSON object");
  only_keys(spec, "", {"name", "grid", "boundary", "measure", "tol"});
  DirichletProblem p;
  p.name = spec.contains("name") ? string_at(spec, "name", "name") : "dirichlet";
  int rings = 48, angular = 96;
  double rho = 0.995;
  if (spec.contains("grid")) {
    const json& g = object_at(spec, "grid", "grid");
    only_keys(g, "grid", {"rings", "angular", "rho_max"});
    rings = integer(g, "rings", "grid.rings", rings, 2);
    angular = integer(g, "angular", "grid.angular", angular, 3);
    rho = number(g, "rho_max", "grid.rho_max", rho);
    if (!(rho > 0.0 && rho < 1.0)) throw SpecError("grid.rho_max: must lie in (0, 1)");
  }
  p.grid = make_grid(rings, angular, rho);
  if (!spec.contains("boundary")) throw SpecError("boundary: missing");
  if (!spec.contains("measure") && require_measure) throw SpecError("measure: missing");
  p.boundary = boundary_from(object_at(spec, "boundary", "boundary"), *p.grid, base);
  p.measure = spec.contains("measure") ? measure_from(object_at(spec, "measure", "measure"), p.grid, base)
                                       : DiscreteMeasureB::zero(p.grid);
  p.tol = number(spec, "tol", "tol", 1e-3);
  if (!(p.tol > 0.0)) throw SpecError("tol: must be positive");
  const json& b = spec.at("boundary");
  const json m = spec.value("measure", json::object());
  if (b.contains("preset") && m.contains("preset") && b["preset"] == m["preset"]) {
    if (b["preset"] == "quadratic") p.exact = half_norm2;
    if (b["preset"] == "anisotropic") p.exact = anisotropic;
  }
  return p;
}

EquivariantProblem equivariant_problem(const json& spec, const std::string& base, std::uint64_t seed) {
  if (!spec.is_object()) throw SpecError("spec: expected a JSON object");
  only_keys(spec, "", {"name", "lattice", "cocycle", "orbit_depth", "quad_order", "mesh", "trace_samples", "measure", "tol"});
  EquivariantProblem p;
  p.name = spec.contains("name") ? string_at(spec, "name", "name") : "equivariant";

  LatticeSpec ls;
  std::optional<json> lattice_doc;
  if (!spec.contains("lattice") || (spec["lattice"].is_string() && spec["lattice"] == "genus2")) {
    lattice_doc = json{{"lattice", "genus2"}};
  } else if (spec["lattice"].is_string()) {
    lattice_doc = load_json(resolve(base, spec["lattice"].get<std::string>()));
  } else if (spec["lattice"].is_object()) {
    lattice_doc = spec["lattice"];
  } else {
    throw SpecError("lattice: expected \"genus2\", a file name or an object");
  }
  try {
    ls = lattice_from_json(*lattice_doc);
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(std::string("lattice: ") + e.what());
  }
  const std::size_t rank = ls.lattice.rank();

  Cocycle cocycle = ls.cocycle;
  if (spec.contains("cocycle")) {
    const json& c = spec["cocycle"];
    if (c.is_string()) {
      if (c != "zero") throw SpecError("cocycle: the only named cocycle is \"zero\"");
      cocycle = Cocycle::zero(rank);
    } else if (c.is_array()) {
      if (c.size() != rank) throw SpecError("cocycle: needs one 3-vector per generator (" + std::to_string(rank) + ")");
      cocycle = Cocycle::zero(rank);
      for (std::size_t k = 0; k < rank; ++k) cocycle.vectors[k] = vec3(c[k], "cocycle[" + std::to_string(k) + "]");
    } else if (c.is_object()) {
      only_keys(c, "cocycle", {"coboundary", "random"});
      if (c.contains("coboundary") == c.contains("random"))
        throw SpecError("cocycle: give exactly one of \"coboundary\", \"random\"");
      if (c.contains("coboundary")) {
        p.coboundary = vec3(c["coboundary"], "cocycle.coboundary");
        cocycle = Cocycle::coboundary(ls.lattice, *p.coboundary);
      } else {
        const double scale = number(c, "random", "cocycle.random", 0.0);
        if (!(scale >= 0.0)) throw SpecError("cocycle.random: must be >= 0");
        std::mt19937_64 rng(seed);
        cocycle = Cocycle::random(ls.lattice, scale, rng);
      }
    } else {
      throw SpecError("cocycle: expected \"zero\", an array or an object");
    }
    try {
      validate_cocycle(ls.lattice, cocycle);
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("cocycle: ") + e.what());
    }
  }

  EquivariantOptions opt;
  opt.orbit_depth = integer(spec, "orbit_depth", "orbit_depth", opt.orbit_depth, 1);
  opt.quad_order = integer(spec, "quad_order", "quad_order", opt.quad_order, 1);
  opt.mesh_subdivisions = integer(spec, "mesh", "mesh", opt.mesh_subdivisions, 2);
  opt.trace_samples = integer(spec, "trace_samples", "trace_samples", opt.trace_samples, 16);
  p.tol = number(spec, "tol", "tol", p.tol);
  if (!(p.tol > 0.0)) throw SpecError("tol: must be positive");
  try {
    p.domain = EquivariantDomain::build(ls.lattice, cocycle, opt);
  } catch (const DomainError& e) {
    throw SpecError(std::string("lattice: ") + e.what());
  }

  json m = spec.contains("measure") ? spec["measure"] : json{{"preset", "constant_curvature"}, {"t", 1.0}};
  if (!m.is_object()) throw SpecError("measure: expected an object");
  only_keys(m, "measure", {"preset", "t", "csv"});
  if (m.contains("preset") == m.contains("csv")) throw SpecError("measure: give exactly one of \"preset\", \"csv\"");
  if (m.contains("preset")) {
    const std::string name = string_at(m, "preset", "measure.preset");
    if (name != "constant_curvature") throw SpecError("measure.preset: unknown preset '" + name + "' (constant_curvature)");
    const double t = number(m, "t", "measure.t", 1.0);
    if (!(t > 0.0)) throw SpecError("measure.t: must be positive");
    p.curvature = t;
    p.measure = InvariantMeasure::constant_curvature(p.domain, t);
  } else {
    const std::string path = resolve(base, string_at(m, "csv", "measure.csv"));
    auto in = open_input(path, "measure.csv");
    std::vector<std::vector<double>> rows;
    try {
      rows = read_numeric_csv(in, 2);
    } catch (const std::invalid_argument& e) {
      throw SpecError("measure.csv (" + path + "): " + e.what());
    }
    if (rows.size() != p.domain->size())
      throw SpecError("measure.csv: expected " + std::to_string(p.domain->size()) + " rows (one per representative)");
    p.measure = InvariantMeasure{p.domain, std::vector<double>(rows.size())};
    for (const auto& r : rows) {
      const auto k = static_cast<long>(std::lround(r[0]));
      if (k < 0 || static_cast<std::size_t>(k) >= rows.size()) throw SpecError("measure.csv: bad representative index");
      p.measure.mass[static_cast<std::size_t>(k)] = r[1];
    }
  }
  try {
    p.measure.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("measure: ") + e.what());
  }
  return p;
}

}  // namespace minkprob::cli
