#include "microvort/field.hpp"

#include <algorithm>

namespace mv {

ScalarField::ScalarField(GridPtr grid, Rep rep) : grid_(std::move(grid)), rep_(rep) {
    if (rep_ == Rep::Physical)
        ph_.assign(grid_->size(), 0.0);
    else
        sp_.assign(grid_->spectral_size(), {0.0, 0.0});
}

void ScalarField::to_spectral() {
    if (rep_ == Rep::Spectral) return;
    if (!finite()) throw NonFiniteError("transform input is not finite");
    sp_.resize(grid_->spectral_size());
    grid_->forward(ph_.data(), sp_.data());
    ph_.clear();
    rep_ = Rep::Spectral;
}

void ScalarField::to_physical() {
    if (rep_ == Rep::Physical) return;
    ph_.resize(grid_->size());
    grid_->backward(sp_.data(), ph_.data());
    sp_.clear();
    rep_ = Rep::Physical;
}

double ScalarField::mean() const {
    if (rep_ == Rep::Spectral) return sp_[0].real();
    double s = 0.0;
    for (double v : ph_) s += v;
    return s / grid_->size();
}

bool ScalarField::finite() const {
    if (rep_ == Rep::Physical)
        return std::all_of(ph_.begin(), ph_.end(), [](double v) { return std::isfinite(v); });
    return std::all_of(sp_.begin(), sp_.end(), [](const std::complex<double>& c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

void ScalarField::check_same(const ScalarField& other, const char* context) const {
    if (grid_ != other.grid_ || rep_ != other.rep_) throw GridMismatchError(context);
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
    check_same(other, "field addition");
    if (rep_ == Rep::Physical)
        for (size_t m = 0; m < ph_.size(); ++m) ph_[m] += other.ph_[m];
    else
        for (size_t m = 0; m < sp_.size(); ++m) sp_[m] += other.sp_[m];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
    check_same(other, "field subtraction");
    if (rep_ == Rep::Physical)
        for (size_t m = 0; m < ph_.size(); ++m) ph_[m] -= other.ph_[m];
    else
        for (size_t m = 0; m < sp_.size(); ++m) sp_[m] -= other.sp_[m];
    return *this;
}

ScalarField& ScalarField::operator*=(double c) {
    if (rep_ == Rep::Physical)
        for (double& v : ph_) v *= c;
    else
        for (auto& z : sp_) z *= c;
    return *this;
}

ScalarField& ScalarField::axpy(double c, const ScalarField& other) {
    check_same(other, "axpy");
    if (rep_ == Rep::Physical)
        for (size_t m = 0; m < ph_.size(); ++m) ph_[m] += c * other.ph_[m];
    else
        for (size_t m = 0; m < sp_.size(); ++m) sp_[m] += c * other.sp_[m];
    return *this;
}

}  // namespace mv
