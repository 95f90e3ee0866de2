#include "tracezero/refcurves.hpp"

#include <array>

namespace tracezero::ref {

namespace {

RefCurve make(long A, long B, std::array<long, 3> x, std::array<long, 3> y) {
    CurvePtr cv = Curve::create(Int(1021), Int(5), Int(A), Int(B));
    Rng rng(1);
    SubgroupPtr sub = Subgroup::derive(cv, rng);
    const Fq3& F = cv->ext_field();
    Point p = Point::affine(F.elem(Int(x[0]), Int(x[1]), Int(x[2])),
                            F.elem(Int(y[0]), Int(y[1]), Int(y[2])));
    if (!on_curve(*cv, p) || !trace(*cv, p).is_infinity())
        throw InternalError("bundled base point is invalid");
    return RefCurve{sub, p, compress(*sub, p)};
}

}  // namespace

RefCurve curve1() { return make(230, 191, {45, 802, 782}, {133, 299, 979}); }

RefCurve curve2() { return make(71, 529, {244, 995, 853}, {959, 927, 178}); }

}  // namespace tracezero::ref
