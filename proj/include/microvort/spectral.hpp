#pragma once

#include <cstdint>
#include <limits>

#include "microvort/field.hpp"

namespace mv {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Spectral first derivatives. Odd derivatives zero the Nyquist row, which has
// no conjugate partner in the half-plane storage.
ScalarField deriv_x1(const ScalarField& f);
ScalarField deriv_x2(const ScalarField& f);
VectorField gradient(const ScalarField& f);
// perp gradient (-d2 f, d1 f).
VectorField perp_gradient(const ScalarField& f);
ScalarField laplacian(const ScalarField& f);

ScalarField divergence(const VectorField& v);
// curl(v) = d1 v2 - d2 v1.
ScalarField curl(const VectorField& v);

// Streamfunction solve: psi with -Lap psi = omega, hat(0) modes zeroed.
// Throws MeanNotZeroError unless |mean(omega)| <= 1e-12 * l2_norm(omega).
ScalarField invert_neg_laplacian(const ScalarField& omega);

// Velocity from vorticity: u = -perp_grad(inv(-Lap) omega); divergence-free by
// construction, curl(u) = omega to round-off.
VectorField biot_savart(const ScalarField& omega);

// Zero all modes with max(|k1|, |k2|) > n/3; output spectral.
ScalarField dealias(const ScalarField& f);

// Dealiased pseudo-spectral transport term u . grad(theta), returned spectral.
ScalarField advect(const VectorField& u, const ScalarField& theta);

// Rectangle-rule L^p norm over the box for p < inf, grid max for p = inf
// (a lower bound on the true sup). Vector fields use the pointwise magnitude.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& v, double p);
double l2_distance(const ScalarField& a, const ScalarField& b);
double l2_distance(const VectorField& a, const VectorField& b);

// Seeded band-limited test field: unit-variance Gaussian coefficients on the
// modes with 0 < max(|k1|,|k2|) <= band, conjugate symmetry enforced, rescaled
// to unit L2 norm. Mean-zero by construction.
ScalarField random_band_limited(GridPtr grid, int band, std::uint64_t seed);

}  // namespace mv
