#ifndef TRACEZERO_SUBALG_HPP
#define TRACEZERO_SUBALG_HPP

#include "tracezero/formulas.hpp"

namespace tracezero {

/// Which exit the subalgorithm took; used by tests and diagnostics.
enum class SubalgBranch {
    FirstPairEqual,    // h_{m1 P} = h_{m2 P}
    SecondPairEqual,   // h_{n1 P} = h_{n2 P}
    FirstPairNegated,  // h_{m1 P} = -h_{m2 P}(x, -y)
    SecondPairNegated,
    FactorAccepted,    // divisibility check passed on some cubic factor
    FactorFromSecond,  // W coincided with the y-part of S1; solved against S2
};

struct SubalgTrace {
    SubalgBranch branch = SubalgBranch::FactorAccepted;
    int candidates_tried = 0;
    int candidates_rejected = 0;
};

/// Recover h_{mP} from two additive splittings m = m1+m2 = n1+n2, given the
/// four constituent lines. Caller contract: the splittings share the target,
/// all four lines are non-identity, and the cross lines of the first
/// splitting avoid those of the second. Throws NoCandidate when the
/// contract is violated in a detectable way.
Line subalg(const Line& h_m1, const Line& h_m2, const Line& h_n1,
            const Line& h_n2, const Curve& cv, SubalgTrace* trace = nullptr);

}  // namespace tracezero

#endif
