#include "ww/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace ww::fft {
namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

const PlanPair& plans_for(int n) {
    static std::map<int, PlanPair> cache;
    std::lock_guard lock(plan_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // FFTW_ESTIMATE keeps plans deterministic from run to run.
    auto* a = fftw_alloc_complex(n);
    auto* b = fftw_alloc_complex(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.fwd = fftw_plan_dft_1d(n, a, b, FFTW_FORWARD, flags);
    p.bwd = fftw_plan_dft_1d(n, a, b, FFTW_BACKWARD, flags);
    fftw_free(a);
    fftw_free(b);
    return cache.emplace(n, p).first->second;
}

fftw_complex* cast(const std::complex<double>* p) {
    return reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(p));
}

}  // namespace

void forward(const std::complex<double>* in, std::complex<double>* out, int n) {
    fftw_execute_dft(plans_for(n).fwd, cast(in), cast(out));
}

void backward(const std::complex<double>* in, std::complex<double>* out, int n) {
    fftw_execute_dft(plans_for(n).bwd, cast(in), cast(out));
}

}  // namespace ww::fft
