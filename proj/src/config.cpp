#include "ww/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace ww {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    double x = 0.0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || p != v.data() + v.size()) throw Error(ErrorCode::ConfigError, key + ": not a number: " + v);
    return x;
}

long long to_int(const std::string& key, const std::string& v) {
    long long x = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || p != v.data() + v.size()) throw Error(ErrorCode::ConfigError, key + ": not an integer: " + v);
    return x;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw Error(ErrorCode::ConfigError, key + ": not a boolean: " + v);
}

std::string kind_name(DataKind k) {
    switch (k) {
        case DataKind::packet: return "packet";
        case DataKind::mode: return "mode";
        case DataKind::zero: return "zero";
    }
    return "packet";
}

DataKind kind_from(const std::string& v) {
    if (v == "packet") return DataKind::packet;
    if (v == "mode") return DataKind::mode;
    if (v == "zero") return DataKind::zero;
    throw Error(ErrorCode::ConfigError, "data.kind: expected packet, mode or zero, got " + v);
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> m = {
        {"grid.L", [](RunConfig& c, const std::string& k, const std::string& v) { c.grid.L = to_double(k, v); }},
        {"grid.N", [](RunConfig& c, const std::string& k, const std::string& v) { c.grid.N = static_cast<int>(to_int(k, v)); }},
        {"grid.rho", [](RunConfig& c, const std::string& k, const std::string& v) { c.grid.rho = to_double(k, v); }},
        {"stepper.dt", [](RunConfig& c, const std::string& k, const std::string& v) { c.stepper.dt = to_double(k, v); }},
        {"stepper.scheme",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             try {
                 c.stepper.scheme = scheme_from_string(v);
             } catch (const Error&) {
                 throw Error(ErrorCode::ConfigError, k + ": unknown scheme " + v);
             }
         }},
        {"stepper.nonlinear", [](RunConfig& c, const std::string& k, const std::string& v) { c.stepper.nonlinear = to_bool(k, v); }},
        {"stepper.dealias", [](RunConfig& c, const std::string& k, const std::string& v) { c.stepper.dealias = to_bool(k, v); }},
        {"data.kind", [](RunConfig& c, const std::string&, const std::string& v) { c.data = kind_from(v); }},
        {"data.eps", [](RunConfig& c, const std::string& k, const std::string& v) { c.packet.eps = to_double(k, v); }},
        {"data.xi_lo", [](RunConfig& c, const std::string& k, const std::string& v) { c.packet.xi_lo = to_double(k, v); }},
        {"data.xi_hi", [](RunConfig& c, const std::string& k, const std::string& v) { c.packet.xi_hi = to_double(k, v); }},
        {"data.center", [](RunConfig& c, const std::string& k, const std::string& v) { c.packet.center = to_double(k, v); }},
        {"data.mode", [](RunConfig& c, const std::string& k, const std::string& v) { c.mode_index = static_cast<int>(to_int(k, v)); }},
        {"data.sigma", [](RunConfig& c, const std::string& k, const std::string& v) { c.sigma = to_double(k, v); }},
        {"run.t_end", [](RunConfig& c, const std::string& k, const std::string& v) { c.t_end = to_double(k, v); }},
        {"run.seed", [](RunConfig& c, const std::string& k, const std::string& v) { c.seed = static_cast<std::uint64_t>(to_int(k, v)); }},
        {"run.name", [](RunConfig& c, const std::string&, const std::string& v) { c.name = v; }},
        {"run.output_root", [](RunConfig& c, const std::string&, const std::string& v) { c.output_root = v; }},
        {"run.resume", [](RunConfig& c, const std::string&, const std::string& v) { c.resume = v; }},
        {"sampling.norm_every", [](RunConfig& c, const std::string& k, const std::string& v) { c.norm_every = to_double(k, v); }},
        {"sampling.gamma_every", [](RunConfig& c, const std::string& k, const std::string& v) { c.gamma_every = to_double(k, v); }},
        {"sampling.gamma_start", [](RunConfig& c, const std::string& k, const std::string& v) { c.gamma_start = to_double(k, v); }},
        {"sampling.velocities", [](RunConfig& c, const std::string& k, const std::string& v) { c.velocities = static_cast<int>(to_int(k, v)); }},
        {"sampling.checkpoint_every", [](RunConfig& c, const std::string& k, const std::string& v) { c.checkpoint_every = to_double(k, v); }},
        {"sampling.weighted_norms", [](RunConfig& c, const std::string& k, const std::string& v) { c.weighted_norms = to_bool(k, v); }},
        {"sampling.sharp_norms", [](RunConfig& c, const std::string& k, const std::string& v) { c.sharp_norms = to_bool(k, v); }},
    };
    return m;
}

// True when x is (up to rounding) a whole multiple of dt.
bool is_multiple(double x, double dt) {
    const double n = x / dt;
    return std::abs(n - std::round(n)) < 1e-9 * std::max(1.0, n);
}

}  // namespace

void RunConfig::validate() const {
    grid.validate();
    check_stability(grid, stepper);
    auto fail = [](const std::string& m) { throw Error(ErrorCode::ConfigError, m); };
    if (!(packet.eps >= 0.0)) fail("data.eps must be >= 0");
    if (!(packet.xi_lo > 0.0 && packet.xi_hi > packet.xi_lo)) fail("data.xi_lo/xi_hi must satisfy 0 < lo < hi");
    if (packet.xi_hi > grid.dk() * grid.keep_index()) fail("data.xi_hi exceeds the retained band");
    if (data == DataKind::mode && !(mode_index < 0 && -mode_index <= grid.keep_index()))
        fail("data.mode must be a retained negative index");
    if (!(sigma > 2.75)) fail("data.sigma must exceed 11/4");
    if (!(t_end > 0.0)) fail("run.t_end must be positive");
    for (const auto& [k, x] : {std::pair{"sampling.norm_every", norm_every}, std::pair{"sampling.gamma_every", gamma_every},
                               std::pair{"sampling.checkpoint_every", checkpoint_every}}) {
        if (!(x > 0.0)) fail(std::string(k) + " must be positive");
        if (!is_multiple(x, stepper.dt)) fail(std::string(k) + " must be a multiple of stepper.dt");
    }
    if (!(gamma_start >= 4.0)) fail("sampling.gamma_start must be >= 4");
    if (velocities < 1) fail("sampling.velocities must be >= 1");
    if (name.empty() || name.find('/') != std::string::npos) fail("run.name must be a plain directory name");
}

std::string RunConfig::to_text() const {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "grid.L = " << grid.L << "\n"
       << "grid.N = " << grid.N << "\n"
       << "grid.rho = " << grid.rho << "\n"
       << "stepper.dt = " << stepper.dt << "\n"
       << "stepper.scheme = " << to_string(stepper.scheme) << "\n"
       << "stepper.nonlinear = " << (stepper.nonlinear ? "true" : "false") << "\n"
       << "stepper.dealias = " << (stepper.dealias ? "true" : "false") << "\n"
       << "data.kind = " << kind_name(data) << "\n"
       << "data.eps = " << packet.eps << "\n"
       << "data.xi_lo = " << packet.xi_lo << "\n"
       << "data.xi_hi = " << packet.xi_hi << "\n"
       << "data.center = " << packet.center << "\n"
       << "data.mode = " << mode_index << "\n"
       << "data.sigma = " << sigma << "\n"
       << "run.t_end = " << t_end << "\n"
       << "run.seed = " << seed << "\n"
       << "run.name = " << name << "\n"
       << "run.output_root = " << output_root << "\n"
       << "run.resume = " << resume << "\n"
       << "sampling.norm_every = " << norm_every << "\n"
       << "sampling.gamma_every = " << gamma_every << "\n"
       << "sampling.gamma_start = " << gamma_start << "\n"
       << "sampling.velocities = " << velocities << "\n"
       << "sampling.checkpoint_every = " << checkpoint_every << "\n"
       << "sampling.weighted_norms = " << (weighted_norms ? "true" : "false") << "\n"
       << "sampling.sharp_norms = " << (sharp_norms ? "true" : "false") << "\n";
    return os.str();
}

std::uint64_t RunConfig::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : to_text()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

RunConfig parse_config(std::istream& is) {
    RunConfig c;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": unknown key " + key);
        if (!seen.insert(key).second) throw Error(ErrorCode::ConfigError, "duplicate key " + key);
        it->second(c, key, value);
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open config " + path);
    return parse_config(in);
}

}  // namespace ww
