#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pqd/families.hpp"
#include "pqd/oracle.hpp"

namespace pqd::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Full command-line front end. Returns one of the exit codes above.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

/// `report`: prints every CorrelationReport field as key=value lines at 12
/// significant digits; with verify, appends the numeric discord, argmin
/// angles and tightness flag. Returns kExitVerifyFailed when verification
/// ran and S1 was not confirmed as the minimum.
int cmd_report(const FamilyPoint& p, bool verify, GridSpec grid,
               std::ostream& out);

/// `sweep`: one family parameter swept over an inclusive range, all
/// correlation measures per row, deterministic CSV.
struct SweepSpec {
    FamilyPoint base;  // fixed parameters; the swept one is overwritten
    std::string param; // "n", "N", "alpha", "delta" or "eta"
    double from = 0;
    double to = 0;
    double step = 1;
    std::filesystem::path out;
    bool force = false;
};

void cmd_sweep(const SweepSpec& spec);

/// `landscape`: long-format CSV of min_phi S_{A|B}(theta,phi) over
/// (family parameter, theta). The swept parameter is n for dicke, alpha
/// for superposition, eta for scs.
struct LandscapeSpec {
    std::string family; // "dicke", "superposition" or "scs"
    int n_qubits = 0;
    int n = 0;             // fixed excitation (superposition)
    double delta = 0;      // superposition phase
    Parity parity = Parity::even;
    int param_steps = 0;   // alpha/eta grid size; 0 picks the default
    int n_theta = 181;
    std::filesystem::path out;
    bool force = false;
};

void cmd_landscape(const LandscapeSpec& spec);

/// `figures <k>`: one CSV per panel, named fig<k>_<panel>.csv, written
/// under out_dir. Returns the paths written, in panel order.
std::vector<std::filesystem::path> cmd_figures(
    int figure_id, const std::filesystem::path& out_dir, bool force = false);

/// `verify`: tightness scan over a family grid. Prints a summary plus one
/// line per violation; returns the number of violations.
struct VerifySpec {
    std::string family;
    int n_max = 0; // 0 picks the family default (30 / 12 / 30)
    int alpha_steps = 17;
    int eta_steps = 21;
    GridSpec grid{181, 360};
    double tol = 1e-6;
};

std::size_t cmd_verify(const VerifySpec& spec, std::ostream& out);

} // namespace pqd::cli
