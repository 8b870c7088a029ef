#pragma once
// Orchestration: simulate, verify, fit.

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "ww/config.hpp"
#include "ww/diagnostics.hpp"
#include "ww/wavepacket.hpp"

namespace ww {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kOutputRootEnv = "WW_OUTPUT_ROOT";

// The environment variable wins over cfg.output_root.
std::string output_root(const RunConfig& cfg);

struct RunResult {
    std::string dir;
    std::vector<NormRecord> norms;
    GammaProfile profile;
    WaveState final_state;
};

// Initial state for a config (ignores cfg.resume).
WaveState initial_state(const RunConfig& cfg);

// Writes config.txt, manifest.json, norms.csv, gamma.csv and checkpoints/ under
// output_root(cfg)/cfg.name. Module errors are rethrown with the failing time
// after the state is dumped to failure.txt.
RunResult cmd_simulate(const RunConfig& cfg);

// Runs one acceptance suite (or "all"), one report line per criterion.
// Returns the process exit code; throws UsageError for an unknown suite.
int cmd_verify(const std::string& suite, int modes, std::ostream& os);

struct FitReport {
    FitResult fit;
    std::string data_path;  // two-column (t, value) file
};
// Fits over [t_lo, t_hi] (default: the whole series). Throws UsageError for an
// unknown norm, InsufficientSamples for short series.
FitReport cmd_fit(const std::string& run_dir, const std::string& norm_id, std::ostream& os, double t_lo = 0.0,
                  double t_hi = std::numeric_limits<double>::infinity());

}  // namespace ww
