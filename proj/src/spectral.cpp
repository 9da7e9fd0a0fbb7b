#include "microvort/spectral.hpp"

#include <cmath>
#include <random>

namespace mv {

namespace {

using Cx = std::complex<double>;
constexpr Cx kI{0.0, 1.0};

double l2_from_spectral(const ScalarField& f) {
    const Grid& g = *f.grid();
    double s = 0.0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.spectral_cols(); ++j) s += g.conjugate_weight(j) * std::norm(f.hat(i, j));
    return kTwoPi * std::sqrt(s);
}

}  // namespace

ScalarField deriv_x1(const ScalarField& f) {
    ScalarField out = f.as(Rep::Spectral);
    const Grid& g = *out.grid();
    for (int i = 0; i < g.n(); ++i) {
        const double k = (2 * i == g.n()) ? 0.0 : g.k1(i);
        for (int j = 0; j < g.spectral_cols(); ++j) out.hat(i, j) *= kI * k;
    }
    return out;
}

ScalarField deriv_x2(const ScalarField& f) {
    ScalarField out = f.as(Rep::Spectral);
    const Grid& g = *out.grid();
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.spectral_cols(); ++j) {
            const double k = (2 * j == g.n()) ? 0.0 : j;
            out.hat(i, j) *= kI * k;
        }
    return out;
}

VectorField gradient(const ScalarField& f) {
    const ScalarField fs = f.as(Rep::Spectral);
    return {deriv_x1(fs), deriv_x2(fs)};
}

VectorField perp_gradient(const ScalarField& f) {
    const ScalarField fs = f.as(Rep::Spectral);
    ScalarField mx = deriv_x2(fs);
    mx *= -1.0;
    return {std::move(mx), deriv_x1(fs)};
}

ScalarField laplacian(const ScalarField& f) {
    ScalarField out = f.as(Rep::Spectral);
    const Grid& g = *out.grid();
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.spectral_cols(); ++j) out.hat(i, j) *= -g.k_squared(i, j);
    return out;
}

ScalarField divergence(const VectorField& v) {
    ScalarField out = deriv_x1(v.x);
    out += deriv_x2(v.y);
    return out;
}

ScalarField curl(const VectorField& v) {
    ScalarField out = deriv_x1(v.y);
    out -= deriv_x2(v.x);
    return out;
}

ScalarField invert_neg_laplacian(const ScalarField& omega) {
    ScalarField out = omega.as(Rep::Spectral);
    const Grid& g = *out.grid();
    const double scale = l2_from_spectral(out);
    if (std::abs(out.hat(0, 0)) > 1e-12 * scale)
        throw MeanNotZeroError(std::abs(out.hat(0, 0)), scale);
    out.hat(0, 0) = 0.0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.spectral_cols(); ++j) {
            const double k2 = g.k_squared(i, j);
            if (k2 > 0.0) out.hat(i, j) /= k2;
        }
    return out;
}

VectorField biot_savart(const ScalarField& omega) {
    const ScalarField psi = invert_neg_laplacian(omega);
    VectorField u = perp_gradient(psi);
    u.x *= -1.0;
    u.y *= -1.0;
    return u;
}

ScalarField dealias(const ScalarField& f) {
    ScalarField out = f.as(Rep::Spectral);
    const Grid& g = *out.grid();
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.spectral_cols(); ++j)
            if (!g.dealias_keep(i, j)) out.hat(i, j) = 0.0;
    return out;
}

ScalarField advect(const VectorField& u, const ScalarField& theta) {
    if (u.grid() != theta.grid()) throw GridMismatchError("advect");
    const ScalarField td = dealias(theta);
    ScalarField tx = deriv_x1(td);
    ScalarField ty = deriv_x2(td);
    tx.to_physical();
    ty.to_physical();
    ScalarField ux = dealias(u.x);
    ScalarField uy = dealias(u.y);
    ux.to_physical();
    uy.to_physical();

    ScalarField prod(theta.grid(), Rep::Physical);
    auto& p = prod.values();
    for (size_t m = 0; m < p.size(); ++m)
        p[m] = ux.values()[m] * tx.values()[m] + uy.values()[m] * ty.values()[m];
    return dealias(prod);
}

double lp_norm(const ScalarField& f, double p) {
    if (p < 1.0) throw Error("lp_norm: p must be >= 1");
    const ScalarField fp = f.as(Rep::Physical);
    if (p == kInf) {
        double m = 0.0;
        for (double v : fp.values()) m = std::max(m, std::abs(v));
        return m;
    }
    const double h2 = fp.grid()->h() * fp.grid()->h();
    double s = 0.0;
    if (p == 2.0) {
        for (double v : fp.values()) s += v * v;
    } else {
        for (double v : fp.values()) s += std::pow(std::abs(v), p);
    }
    return std::pow(s * h2, 1.0 / p);
}

double lp_norm(const VectorField& v, double p) {
    if (p < 1.0) throw Error("lp_norm: p must be >= 1");
    const ScalarField vx = v.x.as(Rep::Physical);
    const ScalarField vy = v.y.as(Rep::Physical);
    if (p == kInf) {
        double m = 0.0;
        for (size_t i = 0; i < vx.values().size(); ++i)
            m = std::max(m, std::hypot(vx.values()[i], vy.values()[i]));
        return m;
    }
    const double h2 = vx.grid()->h() * vx.grid()->h();
    double s = 0.0;
    for (size_t i = 0; i < vx.values().size(); ++i) {
        const double mag2 = vx.values()[i] * vx.values()[i] + vy.values()[i] * vy.values()[i];
        s += (p == 2.0) ? mag2 : std::pow(mag2, 0.5 * p);
    }
    return std::pow(s * h2, 1.0 / p);
}

double l2_distance(const ScalarField& a, const ScalarField& b) {
    ScalarField d = a.as(Rep::Physical);
    d -= b.as(Rep::Physical);
    return lp_norm(d, 2.0);
}

double l2_distance(const VectorField& a, const VectorField& b) {
    return std::sqrt(std::pow(l2_distance(a.x, b.x), 2) + std::pow(l2_distance(a.y, b.y), 2));
}

ScalarField random_band_limited(GridPtr grid, int band, std::uint64_t seed) {
    if (band < 1 || 2 * band >= grid->n()) throw Error("random_band_limited: band out of range");
    ScalarField f(grid, Rep::Spectral);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = grid->n();
    for (int i = 0; i < n; ++i) {
        const int k1 = grid->k1(i);
        const int a1 = std::abs(k1);
        for (int j = 0; j <= band; ++j) {
            if (std::max(a1, j) == 0 || std::max(a1, j) > band) continue;
            if (j == 0 && k1 < 0) continue;  // fixed below by conjugate symmetry
            f.hat(i, j) = {gauss(rng), gauss(rng)};
        }
    }
    for (int k1 = 1; k1 <= band; ++k1) f.hat(n - k1, 0) = std::conj(f.hat(k1, 0));
    const double norm = lp_norm(f, 2.0);
    f *= 1.0 / norm;
    return f;
}

}  // namespace mv
