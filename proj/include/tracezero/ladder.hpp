#ifndef TRACEZERO_LADDER_HPP
#define TRACEZERO_LADDER_HPP

#include <array>
#include <map>
#include <set>

#include "tracezero/subalg.hpp"

namespace tracezero {

/// Scalars for which the ladder's general subalgorithm input of type (a)
/// violates the exclusion condition; residues mod p.
std::set<Int> special_set_M(const Subgroup& sub);

/// The analogous exception set for type-(b) inputs with the given pattern;
/// (r1, r2) must be one of (-3,-7), (3,7), (-3,5), (3,-5).
std::set<Int> special_set_Mr(int r1, int r2, const Subgroup& sub);

struct CallStats {
    long subalg_calls = 0;
    long doublings = 0;
    long triplings = 0;
};

/// Memo of completed subalgorithm calls, shared across ladders of one
/// top-level scalar multiplication.
using SubalgMemo = std::map<std::array<Line, 4>, Line>;

/// Immutable per-base context of the ladder: the base line, the small odd
/// multiples (and negations) the special cases need, and the exception set.
class LadderContext {
public:
    LadderContext(SubgroupPtr params, Line h_base, CallStats* stats = nullptr);

    const Subgroup& params() const { return *params_; }
    SubgroupPtr params_ptr() const { return params_; }
    const Line& base() const { return small(1); }
    /// k in {1..7} u {-1,-3,-5,-7}.
    const Line& small(int k) const;
    const std::set<Int>& set_m() const { return m_; }
    const std::set<Int>& odd_set_m() const { return odd_m_; }

private:
    SubgroupPtr params_;
    std::map<int, Line> smalls_;
    std::set<Int> m_, odd_m_;
};

/// Ladder scalar multiplication on compressed lines: returns the pair
/// (h_{mP}, h_{(m+1)P}) for 0 < m < p. The second component is the identity
/// exactly when m = p-1. Throws InvalidScalar outside (0, p).
std::pair<Line, Line> algorithm1(const LadderContext& ctx, const Int& m,
                                 CallStats* stats = nullptr,
                                 SubalgMemo* memo = nullptr);

}  // namespace tracezero

#endif
