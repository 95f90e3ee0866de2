#ifndef TRACEZERO_FROBRED_HPP
#define TRACEZERO_FROBRED_HPP

#include "tracezero/ladder.hpp"

namespace tracezero {

/// Write m = m0 + s*m1 (mod p) with |m0|, |m1| = O(sqrt(p)), via lattice
/// reduction of {(a,b) : a + s b = 0 mod p} and Babai rounding.
std::pair<Int, Int> decompose_scalar(const Int& m, const Subgroup& sub);

/// The Frobenius-reduction exception machinery: residue sets A1, A2, the
/// root set R of the fixed polynomial family, and the precomputed lines the
/// reduced algorithm falls back on.
struct ExceptionSets {
    std::set<Int> a1, a2;
    std::set<Int> roots;                        // R
    std::map<Int, Line> lines_m_one_minus_s;    // m in A1 u A2 -> h_{m(1-s)P}
    std::map<Int, Line> lines_s_plus_alpha;     // alpha in R  -> h_{(s+alpha)P}
    Line h_s_minus_1;                           // h_{(s-1)P}
};

ExceptionSets exception_sets(const LadderContext& ctx, CallStats* stats = nullptr);

/// Roots in F_p of the fixed polynomial family backing the rescue branch.
std::set<Int> reduction_root_family(const Int& p);

/// The residue sets A1 and A2 of the reduction lemma.
std::pair<std::set<Int>, std::set<Int>> reduction_a_sets(const Subgroup& sub);

/// The decomposition-dependent exception sets of the reduction lemma;
/// members whose denominators vanish are omitted. m0, m1 nonzero mod p.
std::pair<std::set<Int>, std::set<Int>> b_sets(const Int& m0, const Int& m1,
                                               const Subgroup& sub);

struct Algo2Trace {
    enum class Path {
        Identity,        // m = 0
        SingleLadderM1,  // m0 = 0
        SingleLadderM0,  // m1 = 0
        RescueAlpha,     // m0/m1 in R: ladder from the precomputed base
        RouteM0,         // stitch via h_{m0(1-s)P}
        RouteM1,         // stitch via h_{m1(s-1)P}
        SmallOrderFallback,
    };
    Path path = Path::Identity;
    bool precomputed_fetch = false;  // h_{k(1-s)P} came from the table
    bool negated_output = false;
    Int m0, m1;
};

/// Frobenius-reduced scalar multiplication; agrees with algorithm1 on every
/// scalar, for 0 <= m < p. Memoizes subalgorithm calls across its internal
/// ladders.
Line algorithm2(const LadderContext& ctx, const ExceptionSets& exc, const Int& m,
                CallStats* stats = nullptr, Algo2Trace* trace = nullptr);

/// Core of algorithm2 on an explicit decomposition m0 + s*m1 (signed);
/// negate_result applies the final line negation. Exposed for tests that
/// must force specific branches.
Line algorithm2_decomposed(const LadderContext& ctx, const ExceptionSets& exc,
                           const Int& m0, const Int& m1, bool negate_result,
                           CallStats* stats = nullptr, Algo2Trace* trace = nullptr);

}  // namespace tracezero

#endif
