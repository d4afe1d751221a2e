// memscat: command-line front end for the multipole scattering library.
//
// Exit codes: 0 success, 1 invalid scene or arguments, 2 numerical failure,
// 3 I/O failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mem/analysis.hpp"
#include "mem/assembly.hpp"
#include "mem/errors.hpp"
#include "mem/field.hpp"
#include "mem/parallel.hpp"
#include "mem/presets.hpp"
#include "mem/report_io.hpp"
#include "mem/scene_io.hpp"
#include "mem/selftest.hpp"
#include "mem/solver.hpp"

namespace fs = std::filesystem;
using namespace mem;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kNumerical = 2, kIo = 3 };

struct SceneArgs {
  std::string path;
  std::string preset;
};

void add_scene_args(CLI::App* cmd, SceneArgs& args) {
  auto* file = cmd->add_option("scene", args.path, "scene JSON file");
  auto* preset = cmd->add_option("--preset", args.preset, "named scene: close, moderate, far");
  file->excludes(preset);
}

Scene resolve_scene(const SceneArgs& args) {
  if (!args.preset.empty()) return preset_scene(parse_preset(args.preset));
  if (args.path.empty()) throw FormatError("give a scene file or --preset");
  return load_scene(args.path);
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  return out;
}

std::string k_tag(double k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", k);
  return buf;
}

std::vector<int> n_range(int lo, int hi) {
  if (lo < 0 || hi < lo) throw DimensionError("N range must satisfy 0 <= n-min <= n-max");
  std::vector<int> ns;
  for (int n = lo; n <= hi; ++n) ns.push_back(n);
  return ns;
}

SequenceNorm parse_norm(const std::string& s) {
  if (s == "l0") return SequenceNorm::l0;
  if (s == "lhalf") return SequenceNorm::l_minus_half;
  throw FormatError("unknown norm '" + s + "'");
}

void print_report(const ValidationReport& r) {
  for (const auto& v : r.violations) std::cout << "violation " << v.code << ": " << v.message << "\n";
  for (const auto& w : r.warnings) std::cout << "warning " << w.code << ": " << w.message << "\n";
  if (r.ok()) std::cout << "ok\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipole expansion solver for Dirichlet scattering by disjoint circular cylinders"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  // validate
  SceneArgs validate_args;
  bool echo = false;
  auto* validate = app.add_subcommand("validate", "check a scene and print the report");
  add_scene_args(validate, validate_args);
  validate->add_flag("--echo", echo, "print the normalised scene document");

  // solve
  SceneArgs solve_args;
  int solve_n = 10;
  std::string backend_str = "dense";
  std::string solve_out = "coefficients.csv";
  std::optional<double> solve_k;
  auto* solve_cmd = app.add_subcommand("solve", "solve at one truncation and write p,m,re,im");
  add_scene_args(solve_cmd, solve_args);
  solve_cmd->add_option("-N,--truncation", solve_n, "truncation N");
  solve_cmd->add_option("--backend", backend_str, "dense, gmres, reflections, first-order")
      ->check(CLI::IsMember({"dense", "gmres", "reflections", "first-order"}));
  solve_cmd->add_option("-k,--wavenumber", solve_k, "override the scene wavenumber");
  solve_cmd->add_option("-o,--out", solve_out, "output CSV");

  // sweep
  SceneArgs sweep_args;
  int sweep_lo = 1, sweep_hi = 25;
  std::string norm_str = "l0";
  std::string out_dir = "out";
  std::vector<double> sweep_k;
  bool with_surrogate = false;
  bool allow_floor = false;
  auto* sweep = app.add_subcommand("sweep", "E(N), gamma1 and gamma2 for a range of N");
  add_scene_args(sweep, sweep_args);
  sweep->add_option("--n-min", sweep_lo, "smallest N");
  sweep->add_option("--n-max", sweep_hi, "largest N (reference at n-max + 5)");
  sweep->add_option("--norm", norm_str, "l0 or lhalf")->check(CLI::IsMember({"l0", "lhalf"}));
  sweep->add_option("-k,--wavenumbers", sweep_k, "wavenumber list; default: the scene's own");
  sweep->add_flag("--preset-k", "use k = 0.6, 3, 15");
  sweep->add_flag("--first-order", with_surrogate, "add the first-order surrogate column");
  sweep->add_flag("--allow-roundoff-floor", allow_floor,
                  "run k >= 15 on the far preset, where E(N) hits the round-off floor early");
  sweep->add_option("-o,--out-dir", out_dir, "output directory");

  // bounds
  SceneArgs bounds_args;
  int bounds_lo = 0, bounds_hi = 25;
  std::string bounds_out = "bounds.csv";
  auto* bounds = app.add_subcommand("bounds", "gamma1 and gamma2 without solving");
  add_scene_args(bounds, bounds_args);
  bounds->add_option("--n-min", bounds_lo, "smallest N");
  bounds->add_option("--n-max", bounds_hi, "largest N");
  bounds->add_option("-o,--out", bounds_out, "output CSV");

  // field
  SceneArgs field_args;
  int field_n = 15;
  std::vector<double> origin{-10.0, -10.0};
  std::vector<double> spacing{0.25, 0.25};
  std::vector<int> counts{81, 81};
  std::string field_out = "field.csv";
  auto* field = app.add_subcommand("field", "total field on a rectangular grid");
  add_scene_args(field, field_args);
  field->add_option("-N,--truncation", field_n, "truncation N");
  field->add_option("--origin", origin, "grid origin x y")->expected(2);
  field->add_option("--spacing", spacing, "grid spacing dx dy")->expected(2);
  field->add_option("--counts", counts, "grid size nx ny")->expected(2);
  field->add_option("-o,--out", field_out, "output CSV");

  auto* selftest = app.add_subcommand("selftest", "run the oracle suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  set_thread_count(threads);

  try {
    if (validate->parsed()) {
      const Scene s = resolve_scene(validate_args);
      const ValidationReport r = validate_scene(s);
      print_report(r);
      if (echo) std::cout << emit_scene(s);
      return r.ok() ? kOk : kInvalid;
    }

    if (solve_cmd->parsed()) {
      Scene s = resolve_scene(solve_args);
      if (solve_k) s.wavenumber = *solve_k;
      const MemSystem sys = assemble_system(s, solve_n);
      const SolveResult r = solve(sys, parse_backend(backend_str));
      auto out = open_output(solve_out);
      write_coefficients_csv(out, r.solution);
      std::cout << "backend " << backend_name(r.backend) << ", iterations " << r.iterations << ", residual "
                << r.residual << (r.converged ? "" : " (not converged)") << (r.diverged ? " (diverged)" : "")
                << "\n";
      return r.converged || r.backend == Backend::first_order ? kOk : kNumerical;
    }

    if (sweep->parsed()) {
      Scene base = resolve_scene(sweep_args);
      std::vector<double> ks = sweep_k;
      if (sweep->count("--preset-k")) ks.assign(kPresetWavenumbers.begin(), kPresetWavenumbers.end());
      if (ks.empty()) ks.push_back(base.wavenumber);
      const SequenceNorm norm = parse_norm(norm_str);
      const std::vector<int> ns = n_range(sweep_lo, sweep_hi);
      const bool far = sweep_args.preset == "far";
      for (double k : ks) {
        if (far && k >= 15.0) {
          if (!allow_floor) {
            std::cerr << "skipping k = " << k_tag(k)
                      << " on the far preset: E(N) reaches the round-off floor before the asymptotic regime "
                         "(pass --allow-roundoff-floor to run it anyway)\n";
            continue;
          }
          std::cerr << "warning: k = " << k_tag(k) << " on the far preset is dominated by round-off\n";
        }
        Scene s = base;
        s.wavenumber = k;
        const ConvergenceReport rep =
            with_surrogate ? first_order_error_sweep(s, ns, norm) : convergence_sweep(s, ns, norm);
        const std::string stem = (s.name.empty() ? "scene" : s.name) + "_k" + k_tag(k) + "_" + norm_str;
        const fs::path csv = fs::path(out_dir) / (stem + ".csv");
        auto out = open_output(csv);
        write_report_csv(out, rep);
        auto gp = open_output(fs::path(out_dir) / (stem + ".gp"));
        write_sweep_plot_script(gp, csv.filename().string(), stem, with_surrogate);
        std::cout << csv.string();
        try {
          const ReportRates rates = report_rates(rep);
          std::cout << ": slope E " << rates.error.slope << ", gamma1 " << rates.gamma1.slope << ", gamma2 "
                    << rates.gamma2.slope;
        } catch (const DomainError&) {
          std::cout << ": too few points in the fitting window for a rate";
        }
        std::cout << "\n";
      }
      return kOk;
    }

    if (bounds->parsed()) {
      const Scene s = resolve_scene(bounds_args);
      require_valid(s);
      const PairGeometry g = pairwise_geometry(s);
      const std::vector<int> ns = n_range(bounds_lo, bounds_hi);
      std::vector<double> g1, g2;
      for (int n : ns) {
        g1.push_back(gamma1(s, g, n));
        g2.push_back(gamma2(s, g, n));
      }
      if (gamma1_base(s, g).non_contractive())
        std::cerr << "warning: gamma1 base " << gamma1_base(s, g).value << " is not contractive\n";
      auto out = open_output(bounds_out);
      write_bounds_csv(out, ns, g1, g2);
      return kOk;
    }

    if (field->parsed()) {
      const Scene s = resolve_scene(field_args);
      const MemSystem sys = assemble_system(s, field_n);
      const SolveResult r = solve_dense(sys);
      const GridSpec grid{Point2(origin[0], origin[1]), spacing[0], spacing[1], counts[0], counts[1]};
      const auto samples = total_field_grid(s, r.solution, grid);
      auto out = open_output(field_out);
      write_grid_csv(out, samples);
      auto gp = open_output(fs::path(field_out).replace_extension(".gp"));
      write_field_plot_script(gp, fs::path(field_out).filename().string(), s.name);
      return kOk;
    }

    if (selftest->parsed()) return run_selftest(std::cout) ? kOk : kNumerical;
  } catch (const ValidationError& e) {
    std::cerr << "invalid scene: " << e.what() << "\n";
    return kInvalid;
  } catch (const FormatError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const DimensionError& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kOk;
}
