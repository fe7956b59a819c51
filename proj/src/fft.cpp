#include "ersim/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace ersim::fft {

namespace {

// FFTW plan creation is not thread safe; execution through the new-array
// interface is. Plans are cached per (n, m, sign) and created under a lock
// with FFTW_UNALIGNED so they accept arbitrary caller buffers.
class PlanCache {
public:
    static fftw_plan get(const Grid& g, int sign) {
        static PlanCache cache;
        std::scoped_lock lock(cache.mutex_);
        auto key = std::make_tuple(g.n, g.m, sign);
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;

        std::vector<std::complex<double>> a(g.size()), b(g.size());
        int dims[3] = {g.m, g.m, g.m};
        fftw_plan plan = fftw_plan_dft(
            g.n, dims,
            reinterpret_cast<fftw_complex*>(a.data()),
            reinterpret_cast<fftw_complex*>(b.data()),
            sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache.plans_.emplace(key, plan);
        return plan;
    }

private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

} // namespace

void forward(const Grid& g, const std::complex<double>* in, std::complex<double>* out) {
    fftw_plan plan = PlanCache::get(g, FFTW_FORWARD);
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
    const double scale = 1.0 / static_cast<double>(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] *= scale;
}

void inverse(const Grid& g, const std::complex<double>* in, std::complex<double>* out) {
    fftw_plan plan = PlanCache::get(g, FFTW_BACKWARD);
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

std::vector<std::complex<double>> forward_real(const Grid& g, std::span<const double> values) {
    std::vector<std::complex<double>> in(g.size()), out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) in[i] = values[i];
    forward(g, in.data(), out.data());
    return out;
}

std::vector<double> inverse_to_real(const Grid& g, std::span<const std::complex<double>> coef) {
    std::vector<std::complex<double>> out(g.size());
    inverse(g, coef.data(), out.data());
    std::vector<double> values(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) values[i] = out[i].real();
    return values;
}

} // namespace ersim::fft
