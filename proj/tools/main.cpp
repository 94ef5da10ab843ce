#include "problem.hpp"
#include "suite.hpp"
#include "svg.hpp"

#include "minkprob/dirichlet.hpp"
#include "minkprob/equivariant.hpp"
#include "minkprob/pogorelov.hpp"
#include "minkprob/smoothing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace minkprob;
using namespace minkprob::cli;

namespace {

constexpr int kValidation = 2;
constexpr int kNonConvergence = 3;

struct Common {
  std::string spec, preset, input;
  std::string out = "out";
  std::optional<double> tol;
  std::uint64_t seed = 1;
  bool plots = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_input) {
  cmd->add_option("--spec", c.spec, "problem spec (JSON)");
  cmd->add_option("--preset", c.preset, "embedded problem");
  cmd->add_option("--out", c.out, "output directory")->capture_default_str();
  cmd->add_option("--tol", c.tol, "solver tolerance");
  cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
  cmd->add_flag("--plots", c.plots, "also write SVG heat maps");
  if (with_input) cmd->add_option("--input", c.input, "function CSV (ring,angle,x1,x2,value)");
}

std::string out_path(const Common& c, const std::string& name) {
  fs::create_directories(c.out);
  return (fs::path(c.out) / name).string();
}

void write_json(const Common& c, const std::string& name, const json& doc) {
  std::ofstream out(out_path(c, name));
  out << doc.dump(2) << '\n';
}

void write_function(const Common& c, const std::string& name, const PLFunctionB& h) {
  std::ofstream out(out_path(c, name));
  write_function_csv(out, h);
}

void write_measure(const Common& c, const std::string& name, const DiscreteMeasureB& m) {
  std::ofstream out(out_path(c, name));
  write_measure_csv(out, m);
}

std::vector<BallPoint> ring_outline(const BallGrid& g) {
  std::vector<BallPoint> pts;
  for (std::size_t i : g.boundary_ring()) pts.push_back(g.node(i));
  return pts;
}

void plot_function(const Common& c, const std::string& name, const std::string& title, const PLFunctionB& h) {
  if (!c.plots) return;
  write_svg(out_path(c, name), {title, h.grid->nodes(), h.grid->triangles(), h.values, ring_outline(*h.grid)});
}

void plot_density(const Common& c, const std::string& name, const std::string& title, const DiscreteMeasureB& m) {
  if (!c.plots) return;
  std::vector<double> dens(m.mass.size());
  for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = m.mass[i] / m.grid->cell_area(i);
  write_svg(out_path(c, name), {title, m.grid->nodes(), m.grid->triangles(), dens, ring_outline(*m.grid)});
}

void plot_quotient(const Common& c, const std::string& name, const std::string& title, const EquivariantSupport& h) {
  if (!c.plots) return;
  const auto& mesh = h.domain->mesh;
  HeatMap map{title, {}, mesh.triangles, {}, h.domain->polygon.vertices()};
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    map.points.push_back(mesh.nodes[i].x);
    map.values.push_back(h.node_hbar(i));
  }
  write_svg(out_path(c, name), map);
}

std::string base_dir(const Common& c) { return c.spec.empty() ? "" : fs::path(c.spec).parent_path().string(); }

PLFunctionB input_function(const Common& c) {
  if (!c.input.empty()) {
    std::ifstream in(c.input);
    if (!in) throw SpecError("--input: cannot open '" + c.input + "'");
    try {
      return read_function_csv(in);
    } catch (const std::invalid_argument& e) {
      throw SpecError("--input (" + c.input + "): " + e.what());
    }
  }
  if (c.preset == "quadratic")
    return PLFunctionB::sample(make_grid(), [](const BallPoint& x) { return 0.5 * x.squaredNorm(); });
  throw SpecError("give --input <function.csv> or --preset quadratic");
}

PLFunctionB convex_input(const Common& c) {
  PLFunctionB h = input_function(c);
  const double defect = convexity_defect(h);
  if (check_convex(h, c.tol.value_or(1e-9)) == ConvexFlag::failed)
    throw SpecError("--input: function is not convex on the grid (a node sits " + format_double(defect) +
                    " above the lower hull)");
  return h;
}

json dirichlet_spec(const Common& c) {
  if (!c.spec.empty() && !c.preset.empty()) throw SpecError("give either --spec or --preset, not both");
  if (!c.spec.empty()) return load_json(c.spec);
  if (!c.preset.empty()) return dirichlet_preset(c.preset);
  throw SpecError("give --spec <file> or --preset (quadratic, dirac)");
}

json equivariant_spec(const Common& c) {
  if (!c.spec.empty() && !c.preset.empty()) throw SpecError("give either --spec or --preset, not both");
  if (!c.spec.empty()) return load_json(c.spec);
  if (!c.preset.empty()) return equivariant_preset(c.preset);
  throw SpecError("give --spec <file> or --preset (fuchsian-t1, fuchsian-t2, coboundary)");
}

int cmd_ma(const Common& c) {
  const auto h = convex_input(c);
  const auto m = ma_measure(h);
  write_measure(c, "ma.csv", m);
  write_json(c, "report.json", {{"command", "ma"}, {"nodes", h.size()}, {"total", m.total()}});
  plot_density(c, "ma.svg", "Monge-Ampere density", m);
  return 0;
}

int cmd_area(const Common& c, int resolution) {
  const auto h = convex_input(c);
  const auto a = area_measure(h);
  std::vector<bool> omega(h.size(), false);
  for (std::size_t i : h.grid->interior_nodes()) omega[i] = true;
  const auto g = area_from_graph(legendre(h, resolution), omega);
  write_measure(c, "area.csv", a);
  write_json(c, "report.json",
             {{"command", "area"},
              {"total", a.total()},
              {"graph_total", g.area},
              {"graph_resolution", resolution},
              {"relative_gap", std::abs(a.total() - g.area) / std::max(g.area, 1e-300)}});
  plot_density(c, "area.svg", "area measure density", a);
  return 0;
}

int cmd_legendre(const Common& c, int resolution) {
  const auto h = convex_input(c);
  const auto u = legendre(h, resolution);
  {
    std::ofstream out(out_path(c, "legendre.csv"));
    out << "i,j,p1,p2,value,argmax\n";
    for (int i = 0; i < u.n; ++i)
      for (int j = 0; j < u.n; ++j) {
        const Vec2 p = u.center(i, j);
        const std::size_t k = static_cast<std::size_t>(i) * u.n + j;
        out << i << ',' << j << ',' << format_double(p[0]) << ',' << format_double(p[1]) << ','
            << format_double(u.values[k]) << ',' << u.argmax[k] << '\n';
      }
  }
  const auto back = legendre_inverse(u);
  double gap = 0.0;
  for (std::size_t i : h.grid->interior_nodes()) gap = std::max(gap, std::abs(back.values[i] - h.values[i]));
  write_json(c, "report.json",
             {{"command", "legendre"},
              {"resolution", u.n},
              {"half_width", u.half_width},
              {"max_gradient_norm", u.max_gradient_norm()},
              {"inverse_sup_gap", gap}});
  return 0;
}

int cmd_envelope(Common c, const std::string& boundary_csv) {
  json spec;
  if (!boundary_csv.empty()) {
    spec = {{"boundary", {{"csv", fs::absolute(boundary_csv).string()}}}};
  } else {
    spec = dirichlet_spec(c);
  }
  const auto p = dirichlet_problem(spec, base_dir(c), false);
  const auto h = convex_envelope_boundary(p.boundary, p.grid);
  write_function(c, "envelope.csv", h);
  write_json(c, "report.json",
             {{"command", "envelope"},
              {"nodes", h.size()},
              {"min", *std::min_element(h.values.begin(), h.values.end())},
              {"max", *std::max_element(h.values.begin(), h.values.end())},
              {"convexity_defect", convexity_defect(h)}});
  plot_function(c, "envelope.svg", "boundary envelope", h);
  return 0;
}

int cmd_solve(const Common& c) {
  const auto p = dirichlet_problem(dirichlet_spec(c), base_dir(c));
  DirichletOptions opt;
  opt.tol = c.tol.value_or(p.tol);
  DirichletResult r;
  bool converged = true;
  std::string failure;
  try {
    r = solve_dirichlet(p.measure, p.boundary, opt);
  } catch (const NonConvergence& e) {
    r = e.result;
    converged = false;
    failure = e.what();
  }
  json rep = {{"command", "solve"},
              {"name", p.name},
              {"converged", converged},
              {"tol", opt.tol},
              {"max_residual", r.max_residual},
              {"newton_steps", r.newton_steps},
              {"sweeps", r.sweeps},
              {"residual_history", r.residual_history},
              {"h_center", r.h.values[0]},
              {"measure_total", p.measure.total()}};
  if (!failure.empty()) rep["failure"] = failure;
  if (p.exact) {
    double err = 0.0;
    for (std::size_t i = 0; i < r.h.size(); ++i) err = std::max(err, std::abs(r.h.values[i] - (*p.exact)(p.grid->node(i))));
    rep["sup_error"] = err;
  }
  if (p.name == "dirac") {
    // apex of the cone over the boundary polygon whose dual cell has area μ(0)
    const int n = p.grid->angular();
    const double rho = p.grid->rho_max();
    rep["apex_expected"] = -rho * std::sqrt(p.measure.mass[0] / (n * std::tan(std::numbers::pi / n)));
  }
  write_function(c, "solution.csv", r.h);
  write_measure(c, "ma.csv", r.ma);
  write_json(c, "report.json", rep);
  plot_function(c, "solution.svg", "solution h", r.h);
  plot_density(c, "ma.svg", "MA(h) density", r.ma);
  return converged ? 0 : kNonConvergence;
}

void write_fundamental_domain(const Common& c, const EquivariantSupport& h, const std::vector<double>& area,
                              const InvariantMeasure* mu) {
  const auto& d = *h.domain;
  std::ofstream out(out_path(c, "fundamental_domain.csv"));
  out << "rep,x1,x2,hbar,h,area,mu\n";
  for (std::size_t i = 0; i < d.size(); ++i)
    out << i << ',' << format_double(d.rep_x[i][0]) << ',' << format_double(d.rep_x[i][1]) << ','
        << format_double(h.hbar[i]) << ',' << format_double(h.hbar[i] * d.rep_lambda[i]) << ','
        << format_double(area[i]) << ',' << format_double(mu ? mu->mass[i] : 0.0) << '\n';
  std::ofstream poly(out_path(c, "polygon.csv"));
  poly << "vertex,x1,x2,side_word\n";
  for (std::size_t k = 0; k < d.polygon.size(); ++k)
    poly << k << ',' << format_double(d.polygon.vertices()[k][0]) << ',' << format_double(d.polygon.vertices()[k][1])
         << ',' << format_word(d.polygon.sides()[k].word) << '\n';
}

void write_gtau(const Common& c, const EquivariantDomain& d) {
  std::ofstream out(out_path(c, "gtau.csv"));
  write_boundary_csv(out, d.g_tau);
}

json domain_report(const EquivariantDomain& d) {
  return {{"representatives", d.size()},
          {"mesh_nodes", d.mesh.nodes.size()},
          {"polygon_sides", d.polygon.size()},
          {"polygon_area", d.polygon.area()},
          {"orbit_depth", d.options.orbit_depth},
          {"trace_gaps", d.trace_gaps},
          {"fuchsian", d.fuchsian()},
          {"cocycle", lattice_to_json(d.lattice, d.cocycle)["cocycle"]}};
}

int cmd_solve_eq(const Common& c) {
  const auto p = equivariant_problem(equivariant_spec(c), base_dir(c), c.seed);
  EquivariantSolveOptions opt;
  opt.tol = c.tol.value_or(p.tol);
  EquivariantResult r;
  bool converged = true;
  std::string failure;
  try {
    r = solve_equivariant(p.measure, opt);
  } catch (const EquivariantNonConvergence& e) {
    r = e.result;
    converged = false;
    failure = e.what();
  }
  const auto& d = *p.domain;
  const int q = d.options.quad_order;
  const auto [tmin, tmax] = tmin_tmax(r.h);
  json rep = {{"command", "solve-eq"},
              {"name", p.name},
              {"converged", converged},
              {"tol", opt.tol},
              {"max_residual", r.max_residual},
              {"newton_steps", r.newton_steps},
              {"residual_history", r.residual_history},
              {"touches_h_tau", r.touches_h_tau},
              {"covol", covolume(r.h, q)},
              {"L_mu", L_mu(r.h, p.measure, q)},
              {"T_min", tmin},
              {"T_max", tmax},
              {"total_area", std::accumulate(r.area.begin(), r.area.end(), 0.0)},
              {"measure_total", p.measure.total()},
              {"convexity_defect", local_convexity_defect(r.h)},
              {"domain", domain_report(d)}};
  if (!failure.empty()) rep["failure"] = failure;
  if (d.fuchsian()) rep["covol_fuchsian"] = covol_fuchsian(r.h);
  if (p.curvature && (d.fuchsian() || p.coboundary)) {
    // reference solution: h̄ = -t, translated by t0 for a coboundary
    const double t = *p.curvature;
    double err = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double shift = p.coboundary ? mink_inner(d.rep_X[i], *p.coboundary) : 0.0;
      err = std::max(err, std::abs(r.h.hbar[i] + t + shift) / t);
    }
    rep["reference_relative_sup_error"] = err;
  }
  write_fundamental_domain(c, r.h, r.area, &p.measure);
  write_gtau(c, d);
  write_json(c, "report.json", rep);
  plot_quotient(c, "fundamental_domain.svg", "h-bar on the fundamental domain", r.h);
  return converged ? 0 : kNonConvergence;
}

int cmd_gtau(const Common& c) {
  const auto p = equivariant_problem(equivariant_spec(c), base_dir(c), c.seed);
  const auto& d = *p.domain;
  write_gtau(c, d);
  const auto ht = EquivariantSupport::h_tau(p.domain);
  write_fundamental_domain(c, ht, area_masses(ht), nullptr);
  const auto [lo, hi] = std::minmax_element(d.g_tau.values.begin(), d.g_tau.values.end());
  write_json(c, "report.json",
             {{"command", "gtau"},
              {"name", p.name},
              {"samples", d.g_tau.size()},
              {"min", *lo},
              {"max", *hi},
              {"domain", domain_report(d)}});
  plot_quotient(c, "h_tau.svg", "h-bar of the domain of dependence", ht);
  return 0;
}

int cmd_covol(const Common& c, std::optional<double> constant) {
  const auto p = equivariant_problem(equivariant_spec(c), base_dir(c), c.seed);
  const auto& d = *p.domain;
  EquivariantSupport h{p.domain, {}};
  std::string source;
  if (!c.input.empty()) {
    std::ifstream in(c.input);
    if (!in) throw SpecError("--input: cannot open '" + c.input + "'");
    std::vector<std::vector<double>> rows;
    try {
      rows = read_numeric_csv(in, 7);
    } catch (const std::invalid_argument& e) {
      throw SpecError("--input (" + c.input + "): " + e.what());
    }
    if (rows.size() != d.size())
      throw SpecError("--input: expected " + std::to_string(d.size()) + " representatives, got " + std::to_string(rows.size()));
    h.hbar.assign(d.size(), 0.0);
    for (const auto& r : rows) {
      const auto k = static_cast<long>(std::lround(r[0]));
      if (k < 0 || static_cast<std::size_t>(k) >= d.size()) throw SpecError("--input: bad representative index");
      h.hbar[static_cast<std::size_t>(k)] = r[3];
    }
    source = "input";
  } else if (constant) {
    h = EquivariantSupport::constant(p.domain, *constant);
    source = "constant";
  } else {
    EquivariantSolveOptions opt;
    opt.tol = c.tol.value_or(p.tol);
    try {
      h = solve_equivariant(p.measure, opt).h;
    } catch (const EquivariantNonConvergence& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kNonConvergence;
    }
    source = "solution";
  }
  const int q = d.options.quad_order;
  json rep = {{"command", "covol"},
              {"name", p.name},
              {"source", source},
              {"quad_order", q},
              {"covol", covolume(h, q)},
              {"L_mu", L_mu(h, p.measure, q)},
              {"total_area", total_area(h)}};
  if (d.fuchsian()) rep["covol_fuchsian"] = covol_fuchsian(h);
  write_json(c, "report.json", rep);
  return 0;
}

int cmd_smooth(const Common& c, double r, double c_safety) {
  if (!(r > 0.0)) throw SpecError("--r: must be positive");
  const auto h = convex_input(c);
  const BallGrid& g = *h.grid;
  // Keep every averaging disc inside the inscribed disc of the boundary ring.
  const double inner = std::atanh(g.rho_max() * std::cos(std::numbers::pi / g.angular())) * (1.0 - 1e-9);
  if (inner <= r) throw SpecError("--r: averaging radius exceeds the grid (hyperbolic radius " + format_double(inner) + ")");
  const double patch_radius = std::tanh(inner - r);
  const BallFunction ball = h.evaluator();
  const HyperboloidFunction hbar = [ball](const MinkVector& X) {
    const BallPoint x(X[0] / X[2], X[1] / X[2]);
    return ball(x) * X[2];
  };
  Patch patch;
  patch.radius = patch_radius;
  patch.rings = std::min(g.rings(), 16);
  patch.angular = std::min(g.angular(), 48);
  CorrectedFunction corr;
  json cert = {{"command", "smooth"}, {"r", r}, {"patch_radius", patch_radius}};
  try {
    corr = support_correction(hbar, r, patch, c_safety);
  } catch (const std::runtime_error& e) {
    cert["passed"] = false;
    cert["failure"] = e.what();
    write_json(c, "certificate.json", cert);
    return kNonConvergence;
  }
  const auto out_grid = make_grid(g.rings(), g.angular(), patch_radius);
  PLFunctionB s = PLFunctionB::sample(out_grid, [&](const BallPoint& x) {
    const MinkVector X = radial_map(x);
    return corr.function(X) / X[2];
  });
  const auto& rep = corr.report;
  cert.update({{"passed", rep.passed},
               {"C_safety", rep.C_safety},
               {"lipschitz", rep.lipschitz},
               {"C", rep.C},
               {"attempts", rep.attempts},
               {"patch_convexity_defect", rep.convexity_defect},
               {"sup_average_gap", rep.sup_average_gap},
               {"sup_corrected_gap", rep.sup_corrected_gap},
               {"output_grid_convexity_defect", convexity_defect(s)}});
  write_function(c, "smoothed.csv", s);
  write_json(c, "certificate.json", cert);
  plot_function(c, "smoothed.svg", "corrected average", s);
  return 0;
}

json c1_json(const C1Report& c1) {
  return {{"radii", c1.radii}, {"radial_derivative", c1.radial_derivative}, {"tangential_derivative", c1.tangential_derivative}};
}

int cmd_pogorelov(const Common& c, int d, int k, std::size_t samples, const std::string& form, double c0) {
  if (!c.preset.empty()) {
    if (c.preset != "pogorelov-d3k2") throw SpecError("--preset: unknown preset '" + c.preset + "' (pogorelov-d3k2)");
    const auto rep = sharpness_contrast(samples);
    json doc = to_json(rep);
    doc["command"] = "pogorelov";
    write_json(c, "report.json", doc);
    return rep.rescaled.found ? 0 : kNonConvergence;
  }
  PogorelovForm f;
  if (form == "rescaled") f = PogorelovForm::rescaled;
  else if (form == "literal") f = PogorelovForm::literal;
  else throw SpecError("--form: expected rescaled or literal");
  PogorelovFn probe(d, k, 1.0, f);  // validates d and k
  const auto search = search_beta(d, k, f, c0, samples);
  json doc = {{"command", "pogorelov"}, {"d", d}, {"k", k}, {"form", form}, {"search", to_json(search)}};
  doc["c1"] = c1_json(c1_check(PogorelovFn(d, k, search.found ? search.beta : 1.0, f)));
  write_json(c, "report.json", doc);
  return search.found ? 0 : kNonConvergence;
}

int cmd_verify(const Common& c, const std::vector<int>& only) {
  const auto outcomes = suite::run(only, c.seed, &std::cout);
  int failed = 0;
  for (const auto& o : outcomes) failed += o.passed ? 0 : 1;
  write_json(c, "verify.json", {{"seed", c.seed}, {"criteria", suite::to_json(outcomes)}, {"failed", failed}});
  std::cout << outcomes.size() - failed << "/" << outcomes.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski problems in the ball and on closed hyperbolic surfaces"};
  app.require_subcommand(1);
  Common c;

  auto* ma = app.add_subcommand("ma", "Monge-Ampere measure of a function CSV");
  add_common(ma, c, true);
  auto* area = app.add_subcommand("area", "area measure and its graph-side check");
  add_common(area, c, true);
  int resolution = 256;
  area->add_option("--resolution", resolution, "graph grid resolution")->capture_default_str()->check(CLI::Range(2, 4096));
  auto* leg = app.add_subcommand("legendre", "Legendre transform on a square grid");
  add_common(leg, c, true);
  leg->add_option("--resolution", resolution, "graph grid resolution")->capture_default_str()->check(CLI::Range(2, 4096));
  auto* env = app.add_subcommand("envelope", "convex envelope of boundary data");
  add_common(env, c, false);
  std::string boundary_csv;
  env->add_option("--boundary", boundary_csv, "boundary CSV (angle,value) on the default grid");
  auto* solve = app.add_subcommand("solve", "Dirichlet problem MA(h) = mu");
  add_common(solve, c, false);
  auto* solve_eq = app.add_subcommand("solve-eq", "equivariant Minkowski problem on a closed surface");
  add_common(solve_eq, c, false);
  auto* gtau = app.add_subcommand("gtau", "invariant boundary trace and its envelope");
  add_common(gtau, c, false);
  auto* covol = app.add_subcommand("covol", "covolume of an equivariant support function");
  add_common(covol, c, true);
  std::optional<double> constant;
  covol->add_option("--constant", constant, "use the constant h-bar = value");
  auto* smooth = app.add_subcommand("smooth", "hyperbolic averaging with support correction");
  add_common(smooth, c, true);
  double radius = 0.1, c_safety = 4.0;
  smooth->add_option("--r", radius, "averaging radius")->capture_default_str();
  smooth->add_option("--c-safety", c_safety, "safety factor on the Lipschitz constant")->capture_default_str();
  auto* pogo = app.add_subcommand("pogorelov", "Pogorelov-type flat convex functions");
  add_common(pogo, c, false);
  int dim = 3, k = 2;
  std::size_t samples = 100000;
  std::string form = "rescaled";
  double c0 = 0.0;
  pogo->add_option("--d", dim, "dimension")->capture_default_str();
  pogo->add_option("--k", k, "codimension of the flat set")->capture_default_str();
  pogo->add_option("--samples", samples, "Halton samples")->capture_default_str();
  pogo->add_option("--form", form, "rescaled or literal")->capture_default_str();
  pogo->add_option("--c0", c0, "required lower bound on det Hess")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run the property suite");
  add_common(verify, c, false);
  std::vector<int> only;
  verify->add_option("--only", only, "criterion numbers to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*ma) return cmd_ma(c);
    if (*area) return cmd_area(c, resolution);
    if (*leg) return cmd_legendre(c, resolution);
    if (*env) return cmd_envelope(c, boundary_csv);
    if (*solve) return cmd_solve(c);
    if (*solve_eq) return cmd_solve_eq(c);
    if (*gtau) return cmd_gtau(c);
    if (*covol) return cmd_covol(c, constant);
    if (*smooth) return cmd_smooth(c, radius, c_safety);
    if (*pogo) return cmd_pogorelov(c, dim, k, samples, form, c0);
    if (*verify) return cmd_verify(c, only);
  } catch (const SpecError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
