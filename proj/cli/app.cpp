#include "app.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "jobspec.hpp"
#include "hulthen/model.hpp"

namespace hulthen::cli {

namespace {

void add_output_flags(CLI::App* sub, OutputSpec* spec) {
  sub->add_option("--format", spec->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", spec->path,
                  "Output file path ('-' for stdout)");
}

void add_potential_flags(CLI::App* sub, EnergyOptions* opts) {
  sub->add_option("--V0", opts->v0, "Vector coupling strength")->required();
  sub->add_option("--S0", opts->s0, "Scalar coupling strength")->required();
  sub->add_option("--alpha", opts->alpha, "Screening parameter (> 0)");
  sub->add_option("--m0", opts->m0, "Rest mass (> 0)");
  sub->add_option("--m1", opts->m1, "Mass-perturbation strength");
  sub->add_option("--D", opts->d, "Spatial dimension (>= 1)");
  sub->add_option("--scheme", opts->scheme,
                  "Centrifugal scheme: matched, unshifted or custom");
  sub->add_option("--c0", opts->c0, "Shift constant for --scheme custom");
}

int run_job_file(const std::string& path, std::ostream& out,
                 std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open job file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const JobSpec job = parse_jobspec(buffer.str());
  return run(jobspec_to_argv(job), out, err);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bound states of the Klein-Gordon equation with screened "
               "Coulomb (Hulthen) couplings and a position-dependent mass"};
  app.name("hulthen-kg");
  app.require_subcommand(0, 1);

  std::string job_path;
  app.add_option("--job", job_path, "Run one command from a JSON job file");

  double shift_tolerance = 1e-12;
  OutputSpec shift_output;
  CLI::App* shift_cmd = app.add_subcommand(
      "shift-params", "Solve the barrier-approximation match constants");
  shift_cmd->add_option("--tolerance", shift_tolerance,
                        "Root-solve tolerance");
  add_output_flags(shift_cmd, &shift_output);

  EnergyOptions energy_opts;
  OutputSpec energy_output;
  CLI::App* energy_cmd = app.add_subcommand(
      "energy", "Closed-form energy pair for one (n, l, D) state");
  add_potential_flags(energy_cmd, &energy_opts);
  energy_cmd->add_option("--n", energy_opts.n, "Radial quantum number");
  energy_cmd->add_option("--l", energy_opts.l, "Orbital quantum number");
  add_output_flags(energy_cmd, &energy_output);

  std::string table_name;
  OutputSpec table_output;
  CLI::App* table_cmd = app.add_subcommand(
      "table", "Reproduce a reference spectrum table");
  table_cmd->add_option("--preset", table_name, "table1, table2 or table3")
      ->required();
  add_output_flags(table_cmd, &table_output);

  CentrifugalOptions centrifugal_opts;
  OutputSpec centrifugal_output;
  CLI::App* centrifugal_cmd = app.add_subcommand(
      "centrifugal", "Barrier approximation error profile over r");
  centrifugal_cmd->add_option("--alpha", centrifugal_opts.alphas,
                              "Comma-separated screening parameters");
  centrifugal_cmd->add_option("--r-min", centrifugal_opts.r_min,
                              "Window start (default 0.4/alpha)");
  centrifugal_cmd->add_option("--r-max", centrifugal_opts.r_max,
                              "Window end (default 1.2/alpha)");
  centrifugal_cmd->add_option("--samples", centrifugal_opts.samples,
                              "Sample count (>= 2)");
  centrifugal_cmd->add_option("--scheme", centrifugal_opts.scheme,
                              "matched, unshifted or custom");
  centrifugal_cmd->add_option("--c0", centrifugal_opts.c0,
                              "Shift constant for --scheme custom");
  add_output_flags(centrifugal_cmd, &centrifugal_output);

  EnumerateOptions enumerate_opts;
  OutputSpec enumerate_output;
  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "List every real bound state of a potential");
  add_potential_flags(enumerate_cmd, &enumerate_opts.phys);
  enumerate_cmd->add_option("--n-start", enumerate_opts.n_start,
                            "First radial quantum number (0 or 1)");
  enumerate_cmd->add_option("--n-max", enumerate_opts.n_max,
                            "Radial scan limit");
  enumerate_cmd->add_option("--l-max", enumerate_opts.l_max,
                            "Orbital scan limit");
  add_output_flags(enumerate_cmd, &enumerate_output);

  WavefunctionOptions wavefn_opts;
  OutputSpec wavefn_output;
  CLI::App* wavefn_cmd = app.add_subcommand(
      "wavefunction", "Sample the normalised radial wavefunction");
  add_potential_flags(wavefn_cmd, &wavefn_opts.phys);
  wavefn_cmd->add_option("--n", wavefn_opts.phys.n, "Radial quantum number");
  wavefn_cmd->add_option("--l", wavefn_opts.phys.l, "Orbital quantum number");
  wavefn_cmd->add_option("--branch", wavefn_opts.branch, "plus or minus");
  wavefn_cmd->add_option("--r-min", wavefn_opts.r_min,
                         "Grid start (default 1e-3/alpha)");
  wavefn_cmd->add_option("--r-max", wavefn_opts.r_max,
                         "Grid end (default 12/(epsilon*alpha))");
  wavefn_cmd->add_option("--samples", wavefn_opts.samples,
                         "Grid point count (>= 2)");
  add_output_flags(wavefn_cmd, &wavefn_output);

  VerifyOptions verify_opts;
  OutputSpec verify_output;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check closed forms against the shooting oracle");
  verify_cmd->add_option("--preset", verify_opts.preset,
                         "table1, table2 or table3");
  verify_cmd->add_option("--benchmark", verify_opts.benchmark,
                         "Benchmark name (nonrel-l1)");
  verify_cmd->add_option("--tolerance", verify_opts.tolerance,
                         "Pass threshold on |closed - oracle|");
  verify_cmd->add_option("--grid-points", verify_opts.grid_points,
                         "Oracle mesh size (>= 1001)");
  verify_cmd->add_option("--max-states", verify_opts.max_states,
                         "Verify only the first K states (-1 = all)");
  add_output_flags(verify_cmd, &verify_output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!job_path.empty()) {
      if (app.get_subcommands().empty())
        return run_job_file(job_path, out, err);
      throw InvalidInput("--job cannot be combined with a subcommand");
    }
    if (shift_cmd->parsed())
      return cmd_shift_params(shift_tolerance, shift_output, out, err);
    if (energy_cmd->parsed())
      return cmd_energy(energy_opts, energy_output, out, err);
    if (table_cmd->parsed())
      return cmd_table(table_name, table_output, out, err);
    if (centrifugal_cmd->parsed())
      return cmd_centrifugal(centrifugal_opts, centrifugal_output, out, err);
    if (enumerate_cmd->parsed())
      return cmd_enumerate(enumerate_opts, enumerate_output, out, err);
    if (wavefn_cmd->parsed())
      return cmd_wavefunction(wavefn_opts, wavefn_output, out, err);
    if (verify_cmd->parsed())
      return cmd_verify(verify_opts, verify_output, out, err);
    out << app.help();
    return 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotBound& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace hulthen::cli
