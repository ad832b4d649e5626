#pragma once

#include <cstdint>

#include "reslat/lattice.hpp"

namespace reslat {

/// Perfect-lattice resistance R0(m, n) by adaptive 2-D quadrature of the
/// lattice Green-function integrand over the Brillouin zone.  Slow but
/// entirely independent of the exact recurrence providers; used to validate
/// them in tests.  Throws ConvergenceFailure when the absolute-error target
/// is not reached within the panel budget.
double quadrature_r0(LatticeKind kind, std::int64_t m, std::int64_t n,
                     double tol);

}  // namespace reslat
