#pragma once

#include <string>

#include "microvort/params.hpp"
#include "microvort/spectral.hpp"

namespace mv {

// Which scalar the first prognostic slot holds. The gamma formulation evolves
// the combined tracer w/alpha + m/kappa, whose equation has no Laplacian and
// hence no derivative loss; the omega formulation evolves the vorticity itself.
enum class Formulation { Omega, Gamma };

std::string to_string(Formulation f);

// Time stamp plus the two prognostic fields. In omega form `w` is the
// (mean-zero) vorticity; in gamma form it is the combined tracer.
struct State {
    double t = 0.0;
    Formulation form = Formulation::Omega;
    ScalarField w;
    ScalarField m;

    bool finite() const { return w.finite() && m.finite(); }
};

// Combined tracer from an omega-form state: w/alpha + m/kappa.
ScalarField gamma_of(const State& state, const Params& params);

// Vorticity from the combined tracer: alpha * (gamma - m/kappa). Checks that
// the result is mean-zero.
ScalarField omega_of_gamma(const ScalarField& gamma, const ScalarField& m, const Params& params);

// Vorticity of a state in either formulation.
ScalarField vorticity_of(const State& state, const Params& params);

// Velocity of a state in either formulation (Biot-Savart on the vorticity).
VectorField velocity_of(const State& state, const Params& params);

// Change of prognostic variables, preserving time stamp.
State to_formulation(const State& state, Formulation target, const Params& params);

struct Rhs {
    ScalarField dw;  // spectral
    ScalarField dm;  // spectral
};

// Full right-hand side (advection plus linear coupling), all terms dealiased,
// returned in spectral representation. Matches the state's formulation.
Rhs full_rhs(const State& state, const Params& params);

// Advection-only part of the right-hand side (what the exponential propagator
// does not handle). Returns (-u.grad w, -u.grad m) in spectral representation.
Rhs advection_rhs(const State& state, const Params& params);

}  // namespace mv
