#pragma once

#include "microvort/errors.hpp"

namespace mv {

// Model constants. alpha couples the two prognostic fields, kappa is the
// diffusivity of the micro-rotation field; p0 in (1,2) is the integrability
// index of the data class and q0 the induced velocity index.
struct Params {
    double alpha = 1.0;
    double kappa = 1.0;
    double p0 = 1.5;

    double q0() const { return 2.0 * p0 / (2.0 - p0); }

    void validate() const {
        if (!(alpha > 0.0)) throw Error("params: alpha must be positive");
        if (!(kappa > 0.0)) throw Error("params: kappa must be positive");
        if (!(p0 > 1.0 && p0 < 2.0)) throw Error("params: p0 must lie in ]1,2[");
    }
};

}  // namespace mv
