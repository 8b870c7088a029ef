#pragma once
// Run configuration: flat "key = value" text with strict key checking.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ww/dynamics.hpp"
#include "ww/initial_data.hpp"

namespace ww {

enum class DataKind { packet, mode, zero };

struct RunConfig {
    GridSpec grid{};
    StepperConfig stepper{};

    DataKind data = DataKind::packet;
    PacketData packet{};
    int mode_index = -40;  // for DataKind::mode
    double sigma = 3.0;

    double t_end = 20.0;
    double norm_every = 1.0;
    double gamma_every = 1.0;
    double gamma_start = 10.0;  // profile sampling starts here (packets need t >= 4)
    int velocities = 33;
    double checkpoint_every = 10.0;
    bool weighted_norms = true;  // scaling fields are the expensive part
    bool sharp_norms = true;

    std::uint64_t seed = 20240101;
    std::string name = "run";
    std::string output_root = "runs";
    std::string resume;  // checkpoint path; empty for a fresh start

    // Throws ConfigError (or the module error) on anything a run would reject later.
    void validate() const;
    // Canonical text: every key, fixed order, round-trip exact.
    std::string to_text() const;
    std::uint64_t hash() const;  // FNV-1a of to_text()
};

// Throws ConfigError on unknown keys, duplicates, malformed values.
RunConfig parse_config(std::istream& is);
RunConfig load_config(const std::string& path);

}  // namespace ww
