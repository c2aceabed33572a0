#include "spde/fft_backend.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <tuple>

namespace spde::fft {
namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct CachedPlan {
    fftw_plan plan = nullptr;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    std::size_t size = 0;

    CachedPlan() = default;
    CachedPlan(const CachedPlan&) = delete;
    CachedPlan& operator=(const CachedPlan&) = delete;

    void create(int dim, int n, int sign) {
        size = 1;
        int dims[3] = {n, n, n};
        for (int a = 0; a < dim; ++a) size *= static_cast<std::size_t>(n);
        std::lock_guard<std::mutex> lock(planner_mutex());
        in = fftw_alloc_complex(size);
        out = fftw_alloc_complex(size);
        plan = fftw_plan_dft(dim, dims, in, out,
                             sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
    }

    ~CachedPlan() {
        if (plan) {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fftw_destroy_plan(plan);
            fftw_free(in);
            fftw_free(out);
        }
    }
};

using Key = std::tuple<int, int, int>; // dim, n, sign

CachedPlan& plan_for(int dim, int n, int sign) {
    thread_local std::map<Key, CachedPlan> cache;
    auto& entry = cache[Key{dim, n, sign}];
    if (!entry.plan) entry.create(dim, n, sign);
    return entry;
}

} // namespace

void transform(int dim, int n, const std::complex<double>* in,
               std::complex<double>* out, int sign) {
    auto& p = plan_for(dim, n, sign);
    std::memcpy(p.in, in, p.size * sizeof(fftw_complex));
    fftw_execute(p.plan);
    std::memcpy(out, p.out, p.size * sizeof(fftw_complex));
}

} // namespace spde::fft
