#include "tracezero/line.hpp"

#include "tracezero/formulas.hpp"

namespace tracezero {

Line compress(const Subgroup& sub, const Point& p) {
    const Curve& cv = sub.curve();
    if (p.is_infinity()) return Line::identity();
    if (!trace(cv, p).is_infinity()) throw NotTraceZero();
    Point pq = frobenius_point(cv, p);
    if (pq.x() == p.x()) throw DegenerateConjugates();
    Fq3Elem slope = (pq.y() - p.y()) * (pq.x() - p.x()).inv();
    Fq3Elem icept = p.y() - slope * p.x();
    // the line through the three conjugates is rational over F_q
    if (!slope.in_base() || !icept.in_base())
        throw InternalError("conjugate line has non-rational coefficients");
    return Line::of(icept.c0(), slope.c0());
}

Point decompress(const Subgroup& sub, const Line& l) {
    const Curve& cv = sub.curve();
    if (l.is_identity()) return Point::infinity();
    PolyFq h = hp_poly(l, cv);
    if (!is_irreducible_cubic(h))
        throw InvalidLine("line polynomial is not an irreducible cubic");
    Fq3Elem x = root_in_fq3(h, cv.ext_field());
    const Fq3& F = cv.ext_field();
    Fq3Elem y = F.embed(l.alpha1()) * x + F.embed(l.alpha0());
    Point p = Point::affine(std::move(x), std::move(y));
    if (!trace(cv, p).is_infinity())
        throw InvalidLine("recovered point is not trace zero");
    return p;
}

Line negate_line(const Line& l) {
    if (l.is_identity()) return l;
    return Line::of(-l.alpha0(), -l.alpha1());
}

bool validate_line(const Subgroup& sub, const Line& l) {
    if (l.is_identity()) return true;
    try {
        Point p = decompress(sub, l);
        return oracle_scalar_mul(sub.curve(), sub.order(), p).is_infinity();
    } catch (const Error&) {
        return false;
    }
}

}  // namespace tracezero
