#ifndef TRACEZERO_TESTS_TESTUTIL_HPP
#define TRACEZERO_TESTS_TESTUTIL_HPP

#include <string>

#include "tracezero/frobred.hpp"
#include "tracezero/refcurves.hpp"

namespace tz = tracezero;

inline std::string line_str(const tz::Line& l) {
    if (l.is_identity()) return "inf";
    return l.alpha0().value().get_str() + "," + l.alpha1().value().get_str();
}

inline tz::Line line_of(const tz::Subgroup& sub, long a0, long a1) {
    const tz::Fq& f = sub.curve().base_field();
    return tz::Line::of(f.elem(a0), f.elem(a1));
}

/// h_{kP} through the oracle: full-coordinate multiply, then compress.
inline tz::Line oracle_line(const tz::ref::RefCurve& rc, const tz::Int& k) {
    return tz::compress(*rc.sub,
                        tz::oracle_scalar_mul(rc.sub->curve(), k, rc.base_point));
}

#endif
