#ifndef TRACEZERO_REFCURVES_HPP
#define TRACEZERO_REFCURVES_HPP

#include "tracezero/line.hpp"

namespace tracezero::ref {

/// A bundled example curve with a documented base point of the trace-zero
/// subgroup; used by the known-answer selftest and the test suites.
struct RefCurve {
    SubgroupPtr sub;
    Point base_point;
    Line base_line;
};

/// q = 1021, z^3 = 5, y^2 = x^3 + 230x + 191; p = 1021381.
RefCurve curve1();

/// q = 1021, z^3 = 5, y^2 = x^3 + 71x + 529; p = 1009741.
RefCurve curve2();

}  // namespace tracezero::ref

#endif
