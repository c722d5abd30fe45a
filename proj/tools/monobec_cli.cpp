// Command-line front end: solves single parameter points, sweeps branches,
// locates folds, and writes every result as csv or json files with
// byte-stable content. Exit codes: 0 success, 2 usage, 3 no solution at the
// requested parameters, 4 solver failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <monobec/monobec.hpp>

#include "serialize.hpp"

namespace mb = monobec;
using mbtool::fmt;
using mbtool::JsonObj;

namespace {

struct Common {
  double c = 0.0, g = 0.0;
  double N = 0.0, a_over_au = 0.0, gamma = 0.0;
  std::string solver = "shooting";
  std::string branch = "lower";
  std::string format = "csv";
  std::string out_dir;
  double r_max = 0.0;
  std::size_t nodes = 0;
  double fold_tol = 1e-6;
  int scf_max_iter = 800;
};

struct PhysicalMode {
  double N = 0.0, a_over_au = 0.0, gamma = 0.0;
};

void add_model_options(CLI::App* sub, Common& k) {
  sub->add_option("--c", k.c, "contact coupling, scaled units");
  sub->add_option("--g", k.g, "trap strength, scaled units (>= 0)");
  sub->add_option("--N", k.N, "particle number (physical mode)");
  sub->add_option("--a-over-au", k.a_over_au,
                  "scattering length over its gravitational unit (physical mode)");
  sub->add_option("--gamma", k.gamma, "bare trap ratio (physical mode)");
}

void add_common_options(CLI::App* sub, Common& k) {
  sub->add_option("--solver", k.solver, "shooting | scf")
      ->check(CLI::IsMember({"shooting", "scf"}));
  sub->add_option("--branch", k.branch, "lower | upper")
      ->check(CLI::IsMember({"lower", "upper"}));
  sub->add_option("--format", k.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out-dir", k.out_dir,
                  "output directory (default: $MONOBEC_OUT, else current dir)");
  sub->add_option("--r-max", k.r_max, "grid extent override (with --nodes)");
  sub->add_option("--nodes", k.nodes, "grid node count override (with --r-max)");
  sub->add_option("--fold-tol", k.fold_tol, "stop width on c in fold refinement");
  sub->add_option("--scf-max-iter", k.scf_max_iter, "iteration budget for scf");
}

bool given(const CLI::App* sub, const std::string& name) {
  return sub->count(name) > 0;
}

mb::ModelParams resolve_params(const Common& k, const CLI::App* sub,
                               bool allow_physical, bool require_c,
                               std::optional<PhysicalMode>& phys) {
  const bool any_phys =
      given(sub, "--N") || given(sub, "--a-over-au") || given(sub, "--gamma");
  if (any_phys) {
    if (!allow_physical)
      throw std::invalid_argument(
          "physical mode (--N/--a-over-au/--gamma) is only available for solve "
          "and compare");
    if (!(given(sub, "--N") && given(sub, "--a-over-au") && given(sub, "--gamma")))
      throw std::invalid_argument(
          "physical mode needs all of --N, --a-over-au, --gamma");
    if (given(sub, "--c") || given(sub, "--g"))
      throw std::invalid_argument(
          "give either --c/--g or the physical triple, not both");
    if (!(k.N > 0.0)) throw std::invalid_argument("--N must be positive");
    phys = PhysicalMode{k.N, k.a_over_au, k.gamma};
    return mb::to_scaled(k.N, k.a_over_au, k.gamma);
  }
  if (require_c && !given(sub, "--c"))
    throw std::invalid_argument("--c is required (or use physical mode)");
  return mb::ModelParams{k.c, k.g};
}

std::optional<mb::RadialGrid> resolve_grid(const Common& k, const CLI::App* sub) {
  const bool has_rmax = given(sub, "--r-max");
  const bool has_nodes = given(sub, "--nodes");
  if (has_rmax != has_nodes)
    throw std::invalid_argument("--r-max and --nodes go together");
  if (!has_rmax) return std::nullopt;
  mb::RadialGrid grid{k.r_max, k.nodes};
  grid.validate();
  return grid;
}

mb::Tolerances resolve_tol(const Common& k) {
  mb::Tolerances t;
  t.fold_c = k.fold_tol;
  t.scf_max_iter = k.scf_max_iter;
  return t;
}

std::filesystem::path resolve_out_dir(const Common& k) {
  std::string dir = k.out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("MONOBEC_OUT")) dir = env;
  }
  if (dir.empty()) dir = ".";
  std::filesystem::create_directories(dir);
  return dir;
}

void emit(const std::filesystem::path& dir, const std::string& name,
          const std::string& content) {
  const std::string path = (dir / name).string();
  mbtool::write_text_file(path, content);
  std::cout << "wrote " << path << "\n";
}

mb::Branch branch_of(const Common& k) {
  return k.branch == "upper" ? mb::Branch::upper : mb::Branch::lower;
}

std::string phys_obs_json(const PhysicalMode& p, const mb::ScaledObservables& o) {
  const mb::ScaledObservables r = mb::rescale_observables(o, p.N);
  JsonObj j;
  j.num("N", p.N)
      .num("a_over_au", p.a_over_au)
      .num("gamma", p.gamma)
      .num("energy", r.energy)
      .num("chemical_potential", r.chemical_potential)
      .num("kinetic", r.kinetic)
      .num("trap", r.trap)
      .num("contact", r.contact)
      .num("gravity", r.gravity)
      .num("rms_radius", r.rms_radius)
      .num("peak_density", r.peak_density);
  return j.text();
}

int cmd_solve(const Common& k, const CLI::App* sub) {
  std::optional<PhysicalMode> phys;
  const mb::ModelParams params = resolve_params(k, sub, true, true, phys);
  const auto grid_opt = resolve_grid(k, sub);
  const mb::Tolerances tol = resolve_tol(k);
  const mb::Branch br = branch_of(k);

  const mb::RadialSolution sol = k.solver == "scf"
                                     ? mb::solve_scf(params, br, tol, grid_opt)
                                     : mb::solve_shooting(params, br, tol, grid_opt);
  const mb::ScaledObservables obs = mb::compute_observables(sol);
  const mb::ConsistencyReport rep = mb::consistency_report(sol, tol);

  const auto dir = resolve_out_dir(k);
  const std::size_t n = sol.grid.n;

  if (k.format == "csv") {
    std::string prof = mbtool::csv_line({"r", "psi", "v_gravity"});
    for (std::size_t i = 0; i < n; ++i)
      prof += mbtool::csv_line(
          {fmt(sol.grid.r(i)), fmt(sol.psi[i]), fmt(sol.v_gravity[i])});
    emit(dir, "solve_profile.csv", prof);

    std::vector<std::string> head = {
        "c",       "g",        "branch",       "solver",
        "r_max",   "nodes",    "energy",       "chemical_potential",
        "kinetic", "trap",     "contact",      "gravity",
        "rms_radius", "peak_density", "norm",  "chem_identity_rel",
        "virial_rel", "residual_rel", "tail_rel", "certified"};
    std::vector<std::string> row = {
        fmt(sol.params.c), fmt(sol.params.g), mb::to_string(sol.branch),
        mb::to_string(sol.solver), fmt(sol.grid.r_max),
        std::to_string(n), fmt(obs.energy), fmt(obs.chemical_potential),
        fmt(obs.kinetic), fmt(obs.trap), fmt(obs.contact), fmt(obs.gravity),
        fmt(obs.rms_radius), fmt(obs.peak_density), fmt(rep.norm),
        fmt(rep.chem_identity_rel), fmt(rep.virial_rel), fmt(rep.residual_rel),
        fmt(rep.tail_rel), rep.certified ? "true" : "false"};
    if (phys) {
      const mb::ScaledObservables r = mb::rescale_observables(obs, phys->N);
      for (const char* h :
           {"N", "a_over_au", "gamma", "phys_energy", "phys_chemical_potential",
            "phys_kinetic", "phys_trap", "phys_contact", "phys_gravity",
            "phys_rms_radius", "phys_peak_density"})
        head.push_back(h);
      for (double v : {phys->N, phys->a_over_au, phys->gamma, r.energy,
                       r.chemical_potential, r.kinetic, r.trap, r.contact,
                       r.gravity, r.rms_radius, r.peak_density})
        row.push_back(fmt(v));
    }
    emit(dir, "solve_report.csv", mbtool::csv_line(head) + mbtool::csv_line(row));
  } else {
    std::vector<double> rs(n);
    for (std::size_t i = 0; i < n; ++i) rs[i] = sol.grid.r(i);
    JsonObj prof;
    prof.str("command", "solve")
        .num("c", sol.params.c)
        .num("g", sol.params.g)
        .raw("r", mbtool::jnum_array(rs))
        .raw("psi", mbtool::jnum_array(sol.psi.values))
        .raw("v_gravity", mbtool::jnum_array(sol.v_gravity.values));
    emit(dir, "solve_profile.json", prof.text() + "\n");

    JsonObj scaled;
    scaled.num("energy", obs.energy)
        .num("chemical_potential", obs.chemical_potential)
        .num("kinetic", obs.kinetic)
        .num("trap", obs.trap)
        .num("contact", obs.contact)
        .num("gravity", obs.gravity)
        .num("rms_radius", obs.rms_radius)
        .num("peak_density", obs.peak_density);
    JsonObj cons;
    cons.num("norm", rep.norm)
        .num("chem_identity_rel", rep.chem_identity_rel)
        .num("virial_rel", rep.virial_rel)
        .num("residual_rel", rep.residual_rel)
        .num("tail_rel", rep.tail_rel)
        .boolean("certified", rep.certified);
    JsonObj grid;
    grid.num("r_max", sol.grid.r_max).num("nodes", static_cast<double>(n));
    JsonObj root;
    root.str("command", "solve")
        .num("c", sol.params.c)
        .num("g", sol.params.g)
        .str("branch", mb::to_string(sol.branch))
        .str("solver", mb::to_string(sol.solver))
        .raw("grid", grid.text())
        .raw("scaled", scaled.text())
        .raw("consistency", cons.text())
        .raw("physical", phys ? phys_obs_json(*phys, obs) : "null");
    emit(dir, "solve_report.json", root.text() + "\n");
  }

  std::cout << "c=" << fmt(sol.params.c) << " g=" << fmt(sol.params.g)
            << " eps=" << fmt(sol.eps) << " energy=" << fmt(obs.energy)
            << " certified=" << (rep.certified ? "true" : "false") << "\n";
  return 0;
}

int cmd_branch(const Common& k, const CLI::App* sub, double psi0_from,
               double psi0_to, std::size_t steps, double ray) {
  std::optional<PhysicalMode> phys;
  const mb::ModelParams params = resolve_params(k, sub, false, false, phys);
  const auto grid_opt = resolve_grid(k, sub);
  const mb::Tolerances tol = resolve_tol(k);

  const mb::BranchDiagram d =
      mb::trace_branch(params.g, psi0_from, psi0_to, steps, ray, tol, grid_opt);

  const auto dir = resolve_out_dir(k);

  if (k.format == "csv") {
    std::string pts = mbtool::csv_line({"psi0", "c", "branch", "ok", "certified",
                                        "energy", "chemical_potential",
                                        "rms_radius", "peak_density", "error"});
    for (const mb::BranchPoint& p : d.points) {
      if (p.ok) {
        pts += mbtool::csv_line(
            {fmt(p.psi0), fmt(p.c), mb::to_string(p.branch), "true",
             p.certified ? "true" : "false", fmt(p.obs.energy),
             fmt(p.obs.chemical_potential), fmt(p.obs.rms_radius),
             fmt(p.obs.peak_density), ""});
      } else {
        pts += mbtool::csv_line({fmt(p.psi0), "", mb::to_string(p.branch),
                                 "false", "false", "", "", "", "", p.error});
      }
    }
    emit(dir, "branch_points.csv", pts);

    std::string fold =
        mbtool::csv_line({"g", "c_star", "eps_star", "amplitude_star"});
    if (d.fold)
      fold += mbtool::csv_line({fmt(d.g), fmt(d.fold->c_star),
                                fmt(d.fold->eps_star),
                                fmt(d.fold->amplitude_star)});
    emit(dir, "branch_fold.csv", fold);
  } else {
    std::vector<std::string> pts;
    for (const mb::BranchPoint& p : d.points) {
      JsonObj j;
      j.num("psi0", p.psi0);
      if (p.ok) {
        j.num("c", p.c)
            .str("branch", mb::to_string(p.branch))
            .boolean("ok", true)
            .boolean("certified", p.certified)
            .num("energy", p.obs.energy)
            .num("chemical_potential", p.obs.chemical_potential)
            .num("rms_radius", p.obs.rms_radius)
            .num("peak_density", p.obs.peak_density);
      } else {
        j.raw("c", "null")
            .str("branch", mb::to_string(p.branch))
            .boolean("ok", false)
            .str("error", p.error);
      }
      pts.push_back(j.text());
    }
    std::string fold = "null";
    if (d.fold) {
      JsonObj f;
      f.num("c_star", d.fold->c_star)
          .num("eps_star", d.fold->eps_star)
          .num("amplitude_star", d.fold->amplitude_star);
      fold = f.text();
    }
    JsonObj root;
    root.str("command", "branch")
        .num("g", d.g)
        .raw("points", mbtool::jarray(pts))
        .raw("fold", fold);
    emit(dir, "branch_diagram.json", root.text() + "\n");
  }

  std::cout << "g=" << fmt(d.g) << " points=" << d.points.size() << " fold="
            << (d.fold ? fmt(d.fold->c_star) : std::string("none")) << "\n";
  return 0;
}

int cmd_fold(const Common& k, const CLI::App* sub) {
  std::optional<PhysicalMode> phys;
  const mb::ModelParams params = resolve_params(k, sub, false, false, phys);
  const auto grid_opt = resolve_grid(k, sub);
  const mb::Tolerances tol = resolve_tol(k);

  const mb::FoldPoint f = mb::locate_fold(params.g, tol, grid_opt);
  const auto dir = resolve_out_dir(k);

  if (k.format == "csv") {
    emit(dir, "fold.csv",
         mbtool::csv_line({"g", "c_star", "eps_star", "amplitude_star"}) +
             mbtool::csv_line({fmt(params.g), fmt(f.c_star), fmt(f.eps_star),
                               fmt(f.amplitude_star)}));
  } else {
    JsonObj root;
    root.str("command", "fold")
        .num("g", params.g)
        .num("c_star", f.c_star)
        .num("eps_star", f.eps_star)
        .num("amplitude_star", f.amplitude_star);
    emit(dir, "fold.json", root.text() + "\n");
  }

  std::cout << "g=" << fmt(params.g) << " c_star=" << fmt(f.c_star)
            << " eps_star=" << fmt(f.eps_star) << "\n";
  return 0;
}

int cmd_foldcurve(const Common& k, const CLI::App* sub,
                  const std::vector<double>& g_values) {
  if (g_values.empty())
    throw std::invalid_argument("foldcurve needs at least one --g-values entry");
  const auto grid_opt = resolve_grid(k, sub);
  const mb::Tolerances tol = resolve_tol(k);

  const std::vector<mb::FoldCurvePoint> rows =
      mb::fold_curve(g_values, tol, grid_opt);
  const auto dir = resolve_out_dir(k);

  if (k.format == "csv") {
    std::string t = mbtool::csv_line(
        {"g", "ok", "c_star", "eps_star", "amplitude_star",
         "c_star_variational", "eps_star_variational", "sigma_star_variational",
         "error"});
    for (const mb::FoldCurvePoint& r : rows) {
      if (r.ok) {
        t += mbtool::csv_line(
            {fmt(r.g), "true", fmt(r.numeric.c_star), fmt(r.numeric.eps_star),
             fmt(r.numeric.amplitude_star), fmt(r.variational.c_star),
             fmt(r.variational.eps_star), fmt(r.variational.amplitude_star), ""});
      } else {
        t += mbtool::csv_line(
            {fmt(r.g), "false", "", "", "", "", "", "", r.error});
      }
    }
    emit(dir, "foldcurve.csv", t);
  } else {
    std::vector<std::string> items;
    for (const mb::FoldCurvePoint& r : rows) {
      JsonObj j;
      j.num("g", r.g).boolean("ok", r.ok);
      if (r.ok) {
        JsonObj num;
        num.num("c_star", r.numeric.c_star)
            .num("eps_star", r.numeric.eps_star)
            .num("amplitude_star", r.numeric.amplitude_star);
        JsonObj var;
        var.num("c_star", r.variational.c_star)
            .num("eps_star", r.variational.eps_star)
            .num("sigma_star", r.variational.amplitude_star);
        j.raw("numeric", num.text()).raw("variational", var.text());
      } else {
        j.str("error", r.error);
      }
      items.push_back(j.text());
    }
    JsonObj root;
    root.str("command", "foldcurve").raw("rows", mbtool::jarray(items));
    emit(dir, "foldcurve.json", root.text() + "\n");
  }

  std::cout << "foldcurve rows=" << rows.size() << "\n";
  return 0;
}

int cmd_variational(const Common& k, const CLI::App* sub) {
  std::optional<PhysicalMode> phys;
  const mb::ModelParams params = resolve_params(k, sub, false, true, phys);
  const std::vector<mb::VariationalPoint> pts =
      mb::gaussian_stationary_points(params.c, params.g);
  const auto dir = resolve_out_dir(k);

  if (k.format == "csv") {
    std::string t = mbtool::csv_line({"sigma", "kind", "energy",
                                      "chemical_potential", "rms_radius",
                                      "peak_density"});
    for (const mb::VariationalPoint& p : pts) {
      const mb::ScaledObservables o =
          mb::variational_observables(params.c, params.g, p.sigma);
      t += mbtool::csv_line(
          {fmt(p.sigma),
           p.kind == mb::StationaryKind::minimum ? "minimum" : "maximum",
           fmt(o.energy), fmt(o.chemical_potential), fmt(o.rms_radius),
           fmt(o.peak_density)});
    }
    emit(dir, "variational.csv", t);
  } else {
    std::vector<std::string> items;
    for (const mb::VariationalPoint& p : pts) {
      const mb::ScaledObservables o =
          mb::variational_observables(params.c, params.g, p.sigma);
      JsonObj j;
      j.num("sigma", p.sigma)
          .str("kind",
               p.kind == mb::StationaryKind::minimum ? "minimum" : "maximum")
          .num("energy", o.energy)
          .num("chemical_potential", o.chemical_potential)
          .num("rms_radius", o.rms_radius)
          .num("peak_density", o.peak_density);
      items.push_back(j.text());
    }
    JsonObj root;
    root.str("command", "variational")
        .num("c", params.c)
        .num("g", params.g)
        .raw("stationary_points", mbtool::jarray(items));
    emit(dir, "variational.json", root.text() + "\n");
  }

  std::cout << "stationary_points=" << pts.size() << "\n";
  return 0;
}

int cmd_compare(const Common& k, const CLI::App* sub) {
  std::optional<PhysicalMode> phys;
  const mb::ModelParams params = resolve_params(k, sub, true, true, phys);
  const auto grid_opt = resolve_grid(k, sub);
  const mb::Tolerances tol = resolve_tol(k);
  const mb::Branch br = branch_of(k);

  const mb::RadialSolution sol = k.solver == "scf"
                                     ? mb::solve_scf(params, br, tol, grid_opt)
                                     : mb::solve_shooting(params, br, tol, grid_opt);
  const mb::ScaledObservables num = mb::compute_observables(sol);

  const mb::StationaryKind want = br == mb::Branch::lower
                                      ? mb::StationaryKind::minimum
                                      : mb::StationaryKind::maximum;
  std::optional<mb::ScaledObservables> var;
  for (const mb::VariationalPoint& p :
       mb::gaussian_stationary_points(params.c, params.g)) {
    if (p.kind == want)
      var = mb::variational_observables(params.c, params.g, p.sigma);
  }
  if (!var) {
    const double reachable = mb::locate_fold_variational(params.g).c_star;
    throw mb::no_solution_error(
        "Gaussian model has no stationary point of the requested kind here",
        params.c, params.g, reachable);
  }

  struct RowDef {
    const char* name;
    double n, v;
  };
  const RowDef defs[] = {
      {"energy", num.energy, var->energy},
      {"chemical_potential", num.chemical_potential, var->chemical_potential},
      {"rms_radius", num.rms_radius, var->rms_radius},
      {"peak_density", num.peak_density, var->peak_density}};

  const auto dir = resolve_out_dir(k);
  if (k.format == "csv") {
    std::string t =
        mbtool::csv_line({"quantity", "numeric", "variational", "rel_deviation"});
    for (const RowDef& d : defs) {
      const double dev = std::abs(d.n - d.v) /
                         std::max({std::abs(d.n), std::abs(d.v), 1e-300});
      t += mbtool::csv_line({d.name, fmt(d.n), fmt(d.v), fmt(dev)});
    }
    emit(dir, "compare.csv", t);
  } else {
    std::vector<std::string> items;
    for (const RowDef& d : defs) {
      const double dev = std::abs(d.n - d.v) /
                         std::max({std::abs(d.n), std::abs(d.v), 1e-300});
      JsonObj j;
      j.str("quantity", d.name)
          .num("numeric", d.n)
          .num("variational", d.v)
          .num("rel_deviation", dev);
      items.push_back(j.text());
    }
    JsonObj root;
    root.str("command", "compare")
        .num("c", params.c)
        .num("g", params.g)
        .str("branch", mb::to_string(sol.branch))
        .raw("rows", mbtool::jarray(items));
    emit(dir, "compare.json", root.text() + "\n");
  }

  std::cout << "compare rows=4\n";
  return 0;
}

void write_error_file(const Common& k, const std::string& line) {
  try {
    const auto dir = resolve_out_dir(k);
    mbtool::write_text_file((dir / "error.json").string(), line);
  } catch (...) {
    // stderr already carries the reason
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "monobec: ground states of a condensate bound by laser-induced 1/r "
      "attraction"};
  app.require_subcommand(1);

  Common k;
  double b_from = 0.02, b_to = 1.0, b_ray = -1.0;
  std::size_t b_steps = 25;
  std::vector<double> g_values;

  CLI::App* s_solve =
      app.add_subcommand("solve", "ground state at one parameter point");
  CLI::App* s_branch =
      app.add_subcommand("branch", "sweep the family over center amplitude");
  CLI::App* s_fold = app.add_subcommand("fold", "locate the fold in c at fixed g");
  CLI::App* s_foldcurve =
      app.add_subcommand("foldcurve", "fold location across trap strengths");
  CLI::App* s_var =
      app.add_subcommand("variational", "Gaussian-model stationary points");
  CLI::App* s_cmp =
      app.add_subcommand("compare", "numeric vs Gaussian-model observables");

  for (CLI::App* sub : {s_solve, s_branch, s_fold, s_foldcurve, s_var, s_cmp}) {
    add_model_options(sub, k);
    add_common_options(sub, k);
  }
  s_branch->add_option("--psi0-from", b_from, "sweep start amplitude");
  s_branch->add_option("--psi0-to", b_to, "sweep end amplitude");
  s_branch->add_option("--steps", b_steps, "number of sweep points");
  s_branch->add_option("--ray", b_ray, "contact ray sign for g = 0 (-1 or +1)");
  s_foldcurve->add_option("--g-values", g_values, "trap strengths to scan")
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*s_solve) return cmd_solve(k, s_solve);
    if (*s_branch) return cmd_branch(k, s_branch, b_from, b_to, b_steps, b_ray);
    if (*s_fold) return cmd_fold(k, s_fold);
    if (*s_foldcurve) return cmd_foldcurve(k, s_foldcurve, g_values);
    if (*s_var) return cmd_variational(k, s_var);
    if (*s_cmp) return cmd_compare(k, s_cmp);
    std::cerr << "no command given\n";
    return 2;
  } catch (const mb::no_solution_error& e) {
    JsonObj o;
    o.str("error", "no_solution")
        .str("message", e.what())
        .num("c_requested", e.c_requested)
        .num("g", e.g)
        .num("c_reachable", e.c_reachable);
    const std::string line = o.text() + "\n";
    std::cerr << line;
    write_error_file(k, line);
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const mb::error& e) {
    JsonObj o;
    o.str("error", "solver_failure").str("message", e.what());
    const std::string line = o.text() + "\n";
    std::cerr << line;
    write_error_file(k, line);
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
