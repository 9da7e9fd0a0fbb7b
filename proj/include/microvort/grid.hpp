#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace mv {

class Grid;
using GridPtr = std::shared_ptr<const Grid>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Uniform periodic box [0, 2pi)^2 with n points per axis and the FFT plans for
// it. Real fields are stored row-major with x1 as the slow index; spectral
// coefficients use the real-transform layout n x (n/2 + 1), normalized so that
// hat(k) is the Fourier-series coefficient of e^{i k.x} (grid mean = hat(0)).
//
// Plan creation is serialized internally; transforms themselves are safe to
// call concurrently on distinct buffers.
class Grid {
  public:
    static GridPtr make(int n);
    ~Grid();

    Grid(const Grid&) = delete;
    Grid& operator=(const Grid&) = delete;

    int n() const { return n_; }
    double length() const { return kTwoPi; }
    double h() const { return kTwoPi / n_; }
    int size() const { return n_ * n_; }
    int spectral_size() const { return n_ * (n_ / 2 + 1); }
    int spectral_cols() const { return n_ / 2 + 1; }

    double x1(int i) const { return kTwoPi * i / n_; }
    double x2(int j) const { return kTwoPi * j / n_; }

    // Signed integer wavenumber of row index i (k1 = i for i <= n/2, else i - n).
    int k1(int i) const { return i <= n_ / 2 ? i : i - n_; }
    int k2(int j) const { return j; }
    double k_squared(int i, int j) const {
        const double a = k1(i), b = j;
        return a * a + b * b;
    }

    // 2/3-rule mask: keep modes with max(|k1|, |k2|) <= n/3.
    bool dealias_keep(int i, int j) const {
        const int a = k1(i) < 0 ? -k1(i) : k1(i);
        return 3 * (a > j ? a : j) <= n_;
    }

    // Parseval weight of a stored column: interior columns stand for a
    // conjugate pair of modes.
    double conjugate_weight(int j) const { return (j == 0 || j == n_ / 2) ? 1.0 : 2.0; }

    // Forward: physical samples -> normalized coefficients (input preserved).
    void forward(const double* phys, std::complex<double>* spec) const;
    // Backward: normalized coefficients -> physical samples (input preserved).
    void backward(const std::complex<double>* spec, double* phys) const;

  private:
    explicit Grid(int n);

    int n_;
    void* plan_fwd_;  // fftw_plan, kept opaque to avoid leaking fftw3.h
    void* plan_bwd_;
};

}  // namespace mv
