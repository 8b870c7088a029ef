#include "ww/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ww/fft.hpp"

namespace ww {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativePowerOnMean: return "NegativePowerOnMean";
        case ErrorCode::OutOfBand: return "OutOfBand";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::DegenerateJacobian: return "DegenerateJacobian";
        case ErrorCode::StabilityViolation: return "StabilityViolation";
        case ErrorCode::InconsistentTimes: return "InconsistentTimes";
        case ErrorCode::TimeTooSmall: return "TimeTooSmall";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::WrapAround: return "WrapAround";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::UnknownTerm: return "UnknownTerm";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

void GridSpec::validate() const {
    if (N < 16 || N % 2 != 0) throw Error(ErrorCode::ConfigError, "N must be even and >= 16");
    if ((N & (N - 1)) != 0) throw Error(ErrorCode::ConfigError, "N must be a power of two");
    if (!(L > 0.0)) throw Error(ErrorCode::ConfigError, "L must be positive");
    if (!(rho > 0.0 && rho <= 1.0)) throw Error(ErrorCode::ConfigError, "rho must lie in (0,1]");
}

double GridSpec::dk() const { return 2.0 * std::numbers::pi / L; }

int GridSpec::keep_index() const { return static_cast<int>(std::floor(rho * (N / 2) + 1e-9)); }

Field::Field(const GridSpec& g) : grid_(g), c_(static_cast<size_t>(g.N), cplx{}) {}

void Field::check_same_grid(const Field& o) const {
    if (!(grid_ == o.grid_) || c_.size() != o.c_.size())
        throw Error(ErrorCode::GridMismatch, "fields live on different grids");
}

namespace {

// Sign (-1)^j from shifting the grid origin to -L/2.
inline double parity(int j) { return (j & 1) ? -1.0 : 1.0; }

}  // namespace

Field Field::from_physical(const GridSpec& g, std::span<const cplx> values) {
    Field f(g);
    const int n = g.N;
    std::vector<cplx> in(values.begin(), values.end());
    fft::forward(in.data(), f.c_.data(), n);
    const double inv = 1.0 / n;
    for (int i = 0; i < n; ++i) f.c_[i] *= inv * parity(f.index_of_slot(i));
    return f;
}

Field Field::from_function(const GridSpec& g, const std::function<cplx(double)>& fn) {
    std::vector<cplx> v(g.N);
    for (int n = 0; n < g.N; ++n) v[n] = fn(g.alpha(n));
    return from_physical(g, v);
}

Field Field::from_spectrum(const GridSpec& g, const std::function<cplx(double)>& symbol) {
    Field f(g);
    for (int i = 0; i < g.N; ++i) f.c_[i] = symbol(g.wavenumber(f.index_of_slot(i)));
    return f;
}

std::vector<cplx> Field::physical() const {
    const int n = grid_.N;
    std::vector<cplx> buf(n), out(n);
    for (int i = 0; i < n; ++i) buf[i] = c_[i] * parity(index_of_slot(i));
    fft::backward(buf.data(), out.data(), n);
    return out;
}

Phys Field::phys() const { return Phys(grid_, physical()); }

cplx Field::value_at(double alpha) const {
    cplx s{};
    for (int i = 0; i < grid_.N; ++i) {
        if (c_[i] == cplx{}) continue;
        s += c_[i] * std::exp(I * grid_.wavenumber(index_of_slot(i)) * alpha);
    }
    return s;
}

Field Field::conj() const {
    Field r(grid_);
    const int n = grid_.N;
    for (int i = 0; i < n; ++i) {
        const int j = index_of_slot(i);
        const int mj = (j == -n / 2) ? j : -j;
        r.c_[i] = std::conj(c_[slot(mj)]);
    }
    return r;
}

Field Field::re() const {
    Field r = conj();
    r += *this;
    r *= 0.5;
    return r;
}

Field Field::im() const {
    Field r = *this;
    r -= conj();
    r *= cplx(0.0, -0.5);
    return r;
}

Field Field::dx() const {
    Field r(grid_);
    for (int i = 0; i < grid_.N; ++i) r.c_[i] = I * grid_.wavenumber(index_of_slot(i)) * c_[i];
    return r;
}

Field Field::antiderivative() const {
    Field r(grid_);
    for (int i = 0; i < grid_.N; ++i) {
        const int j = index_of_slot(i);
        if (j != 0) r.c_[i] = c_[i] / (I * grid_.wavenumber(j));
    }
    return r;
}

Field Field::multiplier(const std::function<double(double)>& m) const {
    Field r(grid_);
    for (int i = 0; i < grid_.N; ++i) {
        if (c_[i] == cplx{}) continue;
        r.c_[i] = m(grid_.wavenumber(index_of_slot(i))) * c_[i];
    }
    return r;
}

Field Field::cmultiplier(const std::function<cplx(double)>& m) const {
    Field r(grid_);
    for (int i = 0; i < grid_.N; ++i) {
        if (c_[i] == cplx{}) continue;
        r.c_[i] = m(grid_.wavenumber(index_of_slot(i))) * c_[i];
    }
    return r;
}

Field Field::dealiased() const {
    Field r(*this);
    const int keep = grid_.keep_index();
    for (int i = 0; i < grid_.N; ++i)
        if (std::abs(index_of_slot(i)) > keep) r.c_[i] = 0.0;
    return r;
}

Field Field::without_mean() const {
    Field r(*this);
    r.c_[0] = 0.0;
    return r;
}

double Field::l2() const {
    double s = 0.0;
    for (const auto& c : c_) s += std::norm(c);
    return std::sqrt(grid_.L * s);
}

double Field::linf() const {
    double m = 0.0;
    for (const auto& v : physical()) m = std::max(m, std::abs(v));
    return m;
}

double Field::max_abs_coef() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c));
    return m;
}

Field& Field::operator+=(const Field& o) {
    check_same_grid(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Field& Field::operator-=(const Field& o) {
    check_same_grid(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Field& Field::operator*=(cplx s) {
    for (auto& c : c_) c *= s;
    return *this;
}

HoloField HoloField::checked(const Field& f, double tol) {
    const double scale = f.max_abs_coef();
    for (int i = 0; i < f.size(); ++i) {
        if (f.index_of_slot(i) >= 0 && std::abs(f.raw()[i]) > tol * scale)
            throw Error(ErrorCode::OutOfBand, "field has weight on non-negative wavenumbers");
    }
    return assume(f);
}

Field Phys::field() const { return field_raw().dealiased(); }

Field Phys::field_raw() const { return Field::from_physical(grid_, v_); }

Phys Phys::conj() const {
    Phys r(*this);
    for (auto& x : r.v_) x = std::conj(x);
    return r;
}

Phys& Phys::operator+=(const Phys& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}
Phys& Phys::operator-=(const Phys& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}
Phys& Phys::operator*=(const Phys& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] *= o.v_[i];
    return *this;
}
Phys& Phys::operator/=(const Phys& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] /= o.v_[i];
    return *this;
}
Phys& Phys::operator+=(cplx s) {
    for (auto& x : v_) x += s;
    return *this;
}
Phys& Phys::operator*=(cplx s) {
    for (auto& x : v_) x *= s;
    return *this;
}

double Phys::max_abs() const {
    double m = 0.0;
    for (const auto& x : v_) m = std::max(m, std::abs(x));
    return m;
}

double Phys::min_real() const {
    double m = v_.empty() ? 0.0 : v_[0].real();
    for (const auto& x : v_) m = std::min(m, x.real());
    return m;
}

Field mul(const Field& a, const Field& b) {
    a.check_same_grid(b);
    return (a.phys() * b.phys()).field();
}

Field mul(const Field& a, const Field& b, const Field& c) {
    a.check_same_grid(b);
    a.check_same_grid(c);
    return (a.phys() * b.phys() * c.phys()).field();
}

Field mul_raw(const Field& a, const Field& b) {
    a.check_same_grid(b);
    return (a.phys() * b.phys()).field_raw();
}

cplx inner(const Field& u, const Field& v) {
    u.check_same_grid(v);
    cplx s{};
    for (int i = 0; i < u.size(); ++i) s += u.raw()[i] * std::conj(v.raw()[i]);
    return u.grid().L * s;
}

cplx integral(const Field& u) { return u.grid().L * u.mean(); }

}  // namespace ww
