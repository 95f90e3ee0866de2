#ifndef TRACEZERO_FORMULAS_HPP
#define TRACEZERO_FORMULAS_HPP

#include <array>

#include "tracezero/line.hpp"
#include "tracezero/poly.hpp"

namespace tracezero {

/// Coefficients of S_{P,Q} = (a4 x^4 + ... + a0) + y (b3 x^3 + ... + b0),
/// defined up to a common nonzero scalar.
struct Spq {
    FqElem a4, a3, a2, a1, a0;
    FqElem b3, b2, b1, b0;

    PolyFq a_part() const { return PolyFq({a0, a1, a2, a3, a4}); }
    PolyFq b_part() const { return PolyFq({b0, b1, b2, b3}); }

    /// Copy rescaled so that b3 = 1; throws DivisionByZero when b3 = 0.
    Spq normalized_b3() const;
};

/// Evaluate the S_{P,Q} coefficient tables on two compressed lines.
/// Throws IdentityInput on identity lines.
Spq spq_coeffs(const Line& hp, const Line& hq, const Curve& cv);

/// Compressed doubling: the line of the class 2P from the line of P.
Line double_line(const Line& h, const Curve& cv);

/// Compressed tripling.
Line triple_line(const Line& h, const Curve& cv);

/// H_P = f - (alpha1 x + alpha0)^2, monic cubic.
PolyFq hp_poly(const Line& h, const Curve& cv);

/// Sigma_{P,Q} = f b_part^2 - a_part^2, degree <= 9.
PolyFq sigma_poly(const Spq& s, const Curve& cv);

/// The 3x2 augmented linear system of the line-recovery proposition, built
/// from a monic cubic H and an Spq that the caller has normalized (b3 = 1).
std::array<std::array<FqElem, 3>, 3> line_system_rows(const PolyFq& h, const Spq& s);

/// Solve for the line through the class whose cubic is H, given S_{P,Q}
/// (any scaling; normalized internally). Throws SingularSystem when no
/// nonsingular 2x2 minor exists or the remaining row is inconsistent.
Line solve_line_system(const PolyFq& h, const Spq& s);

}  // namespace tracezero

#endif
