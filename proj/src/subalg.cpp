#include "tracezero/subalg.hpp"

namespace tracezero {

namespace {

// Monic W with Sigma = const * W^2; Sigma here is -(a-part)^2 up to the
// curve relation, so the squarefree root is the wanted cubic.
PolyFq monic_sqrt(const PolyFq& sigma) {
    PolyFq w = poly_monic(gcd_monic(sigma, poly_derivative(sigma)));
    PolyFq quo = poly_divexact(sigma, poly_mul(w, w));
    if (quo.degree() != 0)
        throw InternalError("sigma is not a perfect square times a constant");
    return w;
}

}  // namespace

Line subalg(const Line& h_m1, const Line& h_m2, const Line& h_n1,
            const Line& h_n2, const Curve& cv, SubalgTrace* trace) {
    if (h_m1.is_identity() || h_m2.is_identity() || h_n1.is_identity() ||
        h_n2.is_identity())
        throw IdentityInput();

    if (h_m1 == h_m2) {
        if (trace) trace->branch = SubalgBranch::FirstPairEqual;
        return negate_line(h_m1);
    }
    if (h_n1 == h_n2) {
        if (trace) trace->branch = SubalgBranch::SecondPairEqual;
        return negate_line(h_n1);
    }

    Spq s1 = spq_coeffs(h_m1, h_m2, cv);
    Spq s2 = spq_coeffs(h_n1, h_n2, cv);

    if (h_m1 == negate_line(h_m2)) {
        // S1 reduces to a constant multiple of H_{mP}
        if (trace) trace->branch = SubalgBranch::FirstPairNegated;
        PolyFq w = monic_sqrt(sigma_poly(s1, cv));
        return solve_line_system(w, s2);
    }
    if (h_n1 == negate_line(h_n2)) {
        if (trace) trace->branch = SubalgBranch::SecondPairNegated;
        PolyFq w = monic_sqrt(sigma_poly(s2, cv));
        return solve_line_system(w, s1);
    }

    // a vanishing y-part past the branches above means a cross sum hit the
    // neutral element, which the input contract excludes
    if (s1.b3.is_zero() || s2.b3.is_zero())
        throw NoCandidate("degenerate S polynomial");

    PolyFq g = gcd_monic(sigma_poly(s1, cv), sigma_poly(s2, cv));
    std::vector<PolyFq> cands = deg3_irreducible_factors(g);
    PolyFq b1_monic = poly_monic(s1.b_part());
    PolyFq a2 = s2.a_part();
    PolyFq b2 = s2.b_part();
    for (const PolyFq& w : cands) {
        if (trace) ++trace->candidates_tried;
        if (w != b1_monic) {
            Line cand;
            try {
                cand = solve_line_system(w, s1);
            } catch (const SingularSystem&) {
                if (trace) ++trace->candidates_rejected;
                continue;  // not the wanted factor
            }
            PolyFq lin({cand.alpha0(), cand.alpha1()});
            PolyFq chk = poly_add(poly_mul(lin, b2), a2);
            if (poly_divrem(chk, w).second.is_zero()) {
                if (trace) trace->branch = SubalgBranch::FactorAccepted;
                return cand;
            }
            if (trace) ++trace->candidates_rejected;
        } else {
            if (trace) trace->branch = SubalgBranch::FactorFromSecond;
            return solve_line_system(w, s2);
        }
    }
    throw NoCandidate("no cubic factor passed the divisibility check");
}

}  // namespace tracezero
