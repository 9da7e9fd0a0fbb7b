#include "microvort/grid.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace mv {

namespace {
// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Grid::Grid(int n) : n_(n) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("grid size must be even and >= 8");

    std::lock_guard<std::mutex> lock(plan_mutex());
    std::vector<double> rbuf(static_cast<size_t>(n) * n);
    std::vector<std::complex<double>> cbuf(static_cast<size_t>(n) * (n / 2 + 1));
    // FFTW_UNALIGNED lets the new-array execute functions accept any heap buffer.
    plan_fwd_ = fftw_plan_dft_r2c_2d(n, n, rbuf.data(), reinterpret_cast<fftw_complex*>(cbuf.data()),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_bwd_ = fftw_plan_dft_c2r_2d(n, n, reinterpret_cast<fftw_complex*>(cbuf.data()), rbuf.data(),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("fftw plan creation failed");
}

Grid::~Grid() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

GridPtr Grid::make(int n) { return GridPtr(new Grid(n)); }

void Grid::forward(const double* phys, std::complex<double>* spec) const {
    // Out-of-place r2c preserves its input; normalize to series coefficients.
    std::vector<double> in(phys, phys + size());
    fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_fwd_), in.data(),
                         reinterpret_cast<fftw_complex*>(spec));
    const double scale = 1.0 / size();
    for (int m = 0; m < spectral_size(); ++m) spec[m] *= scale;
}

void Grid::backward(const std::complex<double>* spec, double* phys) const {
    // Multi-dimensional c2r destroys its input, so transform a copy.
    std::vector<std::complex<double>> in(spec, spec + spectral_size());
    fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_bwd_),
                         reinterpret_cast<fftw_complex*>(in.data()), phys);
}

}  // namespace mv
