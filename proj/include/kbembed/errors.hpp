#pragma once

#include <stdexcept>

namespace kbembed {

// Base class for every library failure.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation point too close to a pole of a Blaschke product.
struct PoleProximity : Error { using Error::Error; };
// reversed() called with a reflection order below the polynomial degree.
struct DegreeMismatch : Error { using Error::Error; };
// The circle root finder failed to converge or lost a branch.
struct RootFindingFailure : Error { using Error::Error; };
// Weight requested at a point that does not satisfy the support condition.
struct NotSupportPoint : Error { using Error::Error; };
// Schur parameter is not inner, so the measure has no finite support.
struct NotFinitelySupported : Error { using Error::Error; };
// Measure fails the analyticity constraints of the parameter recovery.
struct InconsistentMeasure : Error { using Error::Error; };
// Circle quadrature failed to stabilize within the sample budget.
struct QuadratureNonConvergence : Error { using Error::Error; };
// Construction defined only for products vanishing at the origin.
struct RequiresZeroAtOrigin : Error { using Error::Error; };
// Interpolation nodes coincide.
struct DuplicateNodes : Error { using Error::Error; };
// Interpolation problem is underdetermined (full-rank Pick matrix).
struct NotUnique : Error { using Error::Error; };
// Recovered candidate fails root-location or interpolation validation.
struct ValidationFailure : Error { using Error::Error; };
// No kernel direction of the boundary system yields a valid interpolant.
struct InterpolationFailure : Error { using Error::Error; };
// Measure does not implement the isometric embedding.
struct NotEmbedding : Error { using Error::Error; };
// Denominator of a theta product vanishes on the closed disk.
struct DenominatorVanishes : Error { using Error::Error; };

}  // namespace kbembed
