#include <doctest.h>

#include "testutil.hpp"

using namespace tracezero;

TEST_CASE("compression of the bundled points") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    CHECK(compress(sub, Point::infinity()).is_identity());
    CHECK(rc.base_line == line_of(sub, 642, 987));
    CHECK_FALSE(line_of(sub, 642, 987) == line_of(sub, 642, 988));
}

TEST_CASE("compress rejects points outside the subgroup") {
    ref::RefCurve rc = ref::curve1();
    const Curve& cv = rc.sub->curve();
    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        Point r = random_curve_point(cv, rng);
        if (trace(cv, r).is_infinity()) continue;
        CHECK_THROWS_AS(compress(*rc.sub, r), NotTraceZero);
        break;
    }
}

TEST_CASE("decompression round trips") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    const Curve& cv = sub.curve();

    CHECK(decompress(sub, Line::identity()).is_infinity());
    Point back = decompress(sub, rc.base_line);
    CHECK(on_curve(cv, back));
    CHECK(compress(sub, back) == rc.base_line);

    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        Point r = random_t3_point(sub, rng);
        Line l = compress(sub, r);
        // the class representative may be any conjugate
        Point d = decompress(sub, l);
        bool conj = d == r || d == frobenius_point(cv, r) ||
                    d == frobenius_point(cv, frobenius_point(cv, r));
        CHECK(conj);
        CHECK(compress(sub, d) == l);
        // conjugation invariance of compression
        CHECK(compress(sub, frobenius_point(cv, r)) == l);
        CHECK(compress(sub, frobenius_point(cv, frobenius_point(cv, r))) == l);
        // negation commutes
        CHECK(compress(sub, point_neg(r)) == negate_line(l));
    }
}

TEST_CASE("line negation is an involution") {
    ref::RefCurve rc = ref::curve1();
    CHECK(negate_line(Line::identity()).is_identity());
    CHECK(negate_line(negate_line(rc.base_line)) == rc.base_line);
}

TEST_CASE("invalid lines are rejected") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    // x^3 + 230x + 191 has a rational root, so (0,0) is not a valid line
    CHECK_FALSE(validate_line(sub, line_of(sub, 0, 0)));
    CHECK_THROWS_AS(decompress(sub, line_of(sub, 0, 0)), InvalidLine);
    CHECK(validate_line(sub, Line::identity()));
    CHECK(validate_line(sub, rc.base_line));

    // hunt a line whose cubic is reducible and check the error path
    Rng rng(6);
    const Fq& f = sub.curve().base_field();
    for (int i = 0; i < 200; ++i) {
        Line cand = Line::of(f.random(rng), f.random(rng));
        if (is_irreducible_cubic(hp_poly(cand, sub.curve()))) continue;
        CHECK_THROWS_AS(decompress(sub, cand), InvalidLine);
        break;
    }
}

TEST_CASE("line cubic matches the conjugate roots") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    const Curve& cv = sub.curve();
    const Fq3& e = cv.ext_field();
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
        Point r = random_t3_point(sub, rng);
        PolyFq3 h = lift_to_ext(hp_poly(compress(sub, r), cv), e);
        Fq3Elem x = r.x();
        for (int k = 0; k < 3; ++k) {
            CHECK(poly_eval(h, x).is_zero());
            x = x.frobenius();
        }
    }
}
