#pragma once

// One function per subcommand.  Each takes parsed options plus an output
// route, writes CSV or JSON, and returns the process exit code:
//   0 success, 1 no-real-state / failed verification, 2 invalid input.

#include <iosfwd>
#include <string>

#include "hulthen/model.hpp"

namespace hulthen::cli {

struct OutputSpec {
  std::string format = "csv"; // csv | json
  std::string path = "-";     // "-" = stdout
};

// throws hulthen::InvalidInput for an unknown name
hulthen::SchemeSelector parse_scheme(const std::string& name, double custom_c0);

struct EnergyOptions {
  double v0 = 0.0;
  double s0 = 0.0;
  double alpha = 1.0;
  double m0 = 1.0;
  double m1 = 0.0;
  int n = 1;
  int l = 0;
  int d = 3;
  std::string scheme = "matched";
  double c0 = 0.0; // used by scheme == custom
};

struct CentrifugalOptions {
  std::string alphas = "0.05,0.1,0.15,0.2,0.25"; // comma list
  double r_min = 0.0; // 0 selects 0.4/alpha
  double r_max = 0.0; // 0 selects 1.2/alpha
  int samples = 100;
  std::string scheme = "matched";
  double c0 = 0.0;
};

struct EnumerateOptions {
  EnergyOptions phys; // n and l ignored
  int n_start = 1;
  int n_max = 64;
  int l_max = 64;
};

struct WavefunctionOptions {
  EnergyOptions phys;
  std::string branch = "plus"; // plus | minus
  double r_min = 0.0;          // 0 selects 1e-3/alpha
  double r_max = 0.0;          // 0 selects 12/(epsilon*alpha)
  int samples = 400;
};

struct VerifyOptions {
  std::string preset;    // table1 | table2 | table3, empty = none
  std::string benchmark; // nonrel-l1, empty = none
  double tolerance = 5e-6;
  int grid_points = 20001;
  int max_states = -1; // cap on verified states, -1 = all
};

int cmd_shift_params(double tolerance, const OutputSpec& spec,
                     std::ostream& out, std::ostream& err);
int cmd_energy(const EnergyOptions& opts, const OutputSpec& spec,
               std::ostream& out, std::ostream& err);
int cmd_table(const std::string& preset, const OutputSpec& spec,
              std::ostream& out, std::ostream& err);
int cmd_centrifugal(const CentrifugalOptions& opts, const OutputSpec& spec,
                    std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& opts, const OutputSpec& spec,
                  std::ostream& out, std::ostream& err);
int cmd_wavefunction(const WavefunctionOptions& opts, const OutputSpec& spec,
                     std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, const OutputSpec& spec,
               std::ostream& out, std::ostream& err);

} // namespace hulthen::cli
