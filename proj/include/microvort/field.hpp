#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "microvort/errors.hpp"
#include "microvort/grid.hpp"

namespace mv {

enum class Rep { Physical, Spectral };

// A real scalar field on a Grid, held either as point samples or as the
// conjugate-symmetric half-plane of Fourier coefficients.
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(GridPtr grid, Rep rep = Rep::Physical);

    template <class F>
    static ScalarField from_function(GridPtr grid, F&& f) {
        ScalarField out(grid, Rep::Physical);
        const int n = grid->n();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.ph_[i * n + j] = f(grid->x1(i), grid->x2(j));
        return out;
    }

    const GridPtr& grid() const { return grid_; }
    Rep rep() const { return rep_; }
    bool empty() const { return !grid_; }
    int n() const { return grid_->n(); }

    std::vector<double>& values() { return ph_; }
    const std::vector<double>& values() const { return ph_; }
    std::vector<std::complex<double>>& coeffs() { return sp_; }
    const std::vector<std::complex<double>>& coeffs() const { return sp_; }

    double& at(int i, int j) { return ph_[i * grid_->n() + j]; }
    double at(int i, int j) const { return ph_[i * grid_->n() + j]; }
    std::complex<double>& hat(int i, int j) { return sp_[i * grid_->spectral_cols() + j]; }
    std::complex<double> hat(int i, int j) const { return sp_[i * grid_->spectral_cols() + j]; }

    void to_spectral();
    void to_physical();
    void convert(Rep rep) { rep == Rep::Spectral ? to_spectral() : to_physical(); }
    ScalarField as(Rep rep) const {
        ScalarField out = *this;
        out.convert(rep);
        return out;
    }

    // Grid mean; exact in either representation.
    double mean() const;
    bool finite() const;

    ScalarField& operator+=(const ScalarField& other);
    ScalarField& operator-=(const ScalarField& other);
    ScalarField& operator*=(double c);
    // this += c * other (matching representations required).
    ScalarField& axpy(double c, const ScalarField& other);

    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(double c, ScalarField a) { return a *= c; }

  private:
    void check_same(const ScalarField& other, const char* context) const;

    GridPtr grid_;
    Rep rep_ = Rep::Physical;
    std::vector<double> ph_;
    std::vector<std::complex<double>> sp_;
};

// Two scalar components on one grid.
struct VectorField {
    ScalarField x;
    ScalarField y;

    VectorField() = default;
    VectorField(ScalarField cx, ScalarField cy) : x(std::move(cx)), y(std::move(cy)) {}
    explicit VectorField(GridPtr grid, Rep rep = Rep::Physical) : x(grid, rep), y(grid, rep) {}

    const GridPtr& grid() const { return x.grid(); }
    void convert(Rep rep) {
        x.convert(rep);
        y.convert(rep);
    }
    VectorField as(Rep rep) const {
        VectorField out = *this;
        out.convert(rep);
        return out;
    }
    VectorField& operator-=(const VectorField& other) {
        x -= other.x;
        y -= other.y;
        return *this;
    }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
};

}  // namespace mv
