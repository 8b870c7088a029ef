#include "ww/runner.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "ww/suites.hpp"

namespace fs = std::filesystem;

namespace ww {

std::string output_root(const RunConfig& cfg) {
    if (const char* env = std::getenv(kOutputRootEnv); env && *env) return env;
    return cfg.output_root;
}

WaveState initial_state(const RunConfig& cfg) {
    const GridSpec& g = cfg.grid;
    switch (cfg.data) {
        case DataKind::zero: return WaveState::make(0.0, HoloField(g), HoloField(g));
        case DataKind::mode: {
            auto [W, Q] = single_mode(g, cfg.mode_index, cfg.packet.eps);
            return WaveState::make(0.0, std::move(W), std::move(Q));
        }
        case DataKind::packet: break;
    }
    if (cfg.packet.eps == 0.0) return WaveState::make(0.0, HoloField(g), HoloField(g));
    auto [W, Q] = packet_data(g, cfg.packet);
    return WaveState::make(0.0, std::move(W), std::move(Q));
}

namespace {

// Step counts for a cadence; validate() guarantees divisibility.
long long steps_for(double every, double dt) { return std::llround(every / dt); }

std::string time_tag(double t) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << t;
    return os.str();
}

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream os(p);
    if (!os) throw Error(ErrorCode::IoError, "cannot write " + p.string());
    os << s;
}

}  // namespace

RunResult cmd_simulate(const RunConfig& cfg) {
    cfg.validate();
    RunResult res;
    const fs::path dir = fs::path(output_root(cfg)) / cfg.name;
    std::error_code ec;
    fs::create_directories(dir / "checkpoints", ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
    res.dir = dir.string();

    WaveState s = initial_state(cfg);
    if (!cfg.resume.empty()) {
        const Checkpoint c = read_checkpoint(cfg.resume);
        if (!(c.W.grid() == cfg.grid)) throw Error(ErrorCode::GridMismatch, "checkpoint grid differs from config");
        s = WaveState::make(c.t, c.W, c.Q);
    }
    const double t0 = s.t;

    write_text(dir / "config.txt", cfg.to_text());
    {
        nlohmann::json m;
        m["version"] = kVersion;
        std::ostringstream h;
        h << std::hex << std::setw(16) << std::setfill('0') << cfg.hash();
        m["config_hash"] = h.str();
        m["seed"] = cfg.seed;
        m["start_time"] = t0;
        m["resumed_from"] = cfg.resume;
        m["grid"] = {{"L", cfg.grid.L}, {"N", cfg.grid.N}, {"rho", cfg.grid.rho}};
        m["scheme"] = to_string(cfg.stepper.scheme);
        write_text(dir / "manifest.json", m.dump(2) + "\n");
    }

    NormOptions no;
    no.sigma = cfg.sigma;
    no.weighted = cfg.weighted_norms;
    no.sharp = cfg.sharp_norms;

    const double dt = cfg.stepper.dt;
    const long long n_norm = steps_for(cfg.norm_every, dt);
    const long long n_gamma = steps_for(cfg.gamma_every, dt);
    const long long n_ckpt = steps_for(cfg.checkpoint_every, dt);
    const long long n_total = std::llround((cfg.t_end - t0) / dt);
    // Cadences count from t = 0 so resumed runs sample at the same times.
    const long long n_offset = std::llround(t0 / dt);

    auto checkpoint = [&](const WaveState& st, const fs::path& p) {
        write_checkpoint(p.string(), Checkpoint{st.t, cfg.packet.eps, cfg.stepper.scheme, st.W, st.Q});
    };

    try {
        for (long long n = 0;; ++n) {
            const long long global = n + n_offset;
            if (global % n_norm == 0) res.norms.push_back(control_norms(s, no));
            if (global % n_gamma == 0 && s.t >= cfg.gamma_start - 1e-9) {
                if (res.profile.v.empty()) res.profile.v = velocity_grid(s.t, cfg.velocities);
                sample_profile(res.profile, s);
            }
            if (global % n_ckpt == 0) checkpoint(s, dir / "checkpoints" / ("t" + time_tag(s.t) + ".txt"));
            if (n == n_total) break;
            WaveState next = step(s, cfg.stepper);
            next.t = t0 + static_cast<double>(n + 1) * dt;  // no drift from repeated addition
            s = std::move(next);
        }
    } catch (const Error& e) {
        checkpoint(s, dir / "failure.txt");
        throw Error(e.code(), "at t=" + std::to_string(s.t) + " (state in " + (dir / "failure.txt").string() +
                                  "): " + e.what());
    }
    checkpoint(s, dir / "checkpoints" / "final.txt");

    {
        std::ofstream os(dir / "norms.csv");
        write_norms_csv(os, res.norms);
    }
    {
        std::ofstream os(dir / "gamma.csv");
        if (res.profile.times.size() >= 3) {
            const AsymptoticResidual ar = asymptotic_residual(res.profile);
            write_profile_csv(os, res.profile, &ar);
        } else {
            write_profile_csv(os, res.profile);
        }
    }
    res.final_state = std::move(s);
    return res;
}

int cmd_verify(const std::string& suite, int modes, std::ostream& os) {
    SuiteOptions o;
    if (modes > 0) o.grid.N = modes;
    o.grid.validate();
    const auto crit = run_suite(suite, o);
    print_report(os, crit);
    bool ok = true;
    for (const auto& c : crit) ok = ok && c.pass();
    return ok ? 0 : 1;
}

FitReport cmd_fit(const std::string& run_dir, const std::string& norm_id, std::ostream& os, double t_lo,
                  double t_hi) {
    const fs::path dir(run_dir);
    std::ifstream in(dir / "norms.csv");
    if (!in) throw Error(ErrorCode::IoError, "no norms.csv in " + run_dir);
    const auto recs = read_norms_csv(in);
    if (recs.empty()) throw Error(ErrorCode::InsufficientSamples, "empty norm series");
    // Validates the id before any fitting.
    (void)norm_value(recs.front(), norm_id);

    FitReport rep;
    rep.fit = decay_fit(recs, norm_id, t_lo, t_hi);
    rep.data_path = (dir / ("fit_" + norm_id + ".dat")).string();
    std::ofstream out(rep.data_path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + rep.data_path);
    out << "# t " << norm_id << "\n" << std::setprecision(17);
    for (const auto& r : recs) out << r.t << ' ' << norm_value(r, norm_id) << '\n';

    os << "norm=" << norm_id << " slope=" << rep.fit.slope << " stderr=" << rep.fit.stderr_slope
       << " samples=" << rep.fit.samples << " data=" << rep.data_path << "\n";
    return rep;
}

}  // namespace ww
