#include <doctest.h>

#include <array>

#include "testutil.hpp"

using namespace tracezero;

namespace {
PolyFq random_poly(const Fq& f, int deg, Rng& rng) {
    std::vector<FqElem> c;
    for (int i = 0; i < deg; ++i) c.push_back(f.random(rng));
    c.push_back(f.elem(1 + rng.below(f.modulus() - 1)));
    return PolyFq(std::move(c));
}
}  // namespace

TEST_CASE("ring basics") {
    Fq f7(Int(7));
    CHECK(poly_monic(make_poly(f7, {6, 0, 3})) == make_poly(f7, {2, 0, 1}));
    Fq f(1021);
    auto [q, r] = poly_divrem(make_poly(f, {-1, 0, 0, 1}), make_poly(f, {-1, 1}));
    CHECK(q == make_poly(f, {1, 1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(poly_divrem(make_poly(f, {1}), PolyFq{}), DivisionByZero);
    CHECK(poly_eval(make_poly(f, {3, 2, 1}), f.elem(2)) == f.elem(11));
    CHECK(poly_derivative(make_poly(f, {5, 3, 4})) == make_poly(f, {3, 8}));
}

TEST_CASE("gcd properties") {
    Fq f(1021);
    Rng rng(5);
    PolyFq p = random_poly(f, 3, rng);
    CHECK(gcd_monic(p, PolyFq{}) == poly_monic(p));
    for (int i = 0; i < 50; ++i) {
        PolyFq a = random_poly(f, 2 + int(rng.u64() % 3), rng);
        PolyFq b = random_poly(f, 2 + int(rng.u64() % 3), rng);
        PolyFq g = random_poly(f, 1 + int(rng.u64() % 4), rng);
        PolyFq lhs = gcd_monic(poly_mul(a, g), poly_mul(b, g));
        PolyFq rhs = poly_mul(poly_monic(g), gcd_monic(a, b));
        CHECK(lhs == poly_monic(rhs));
        CHECK(poly_divrem(lhs, poly_monic(g)).second.is_zero());
    }
}

TEST_CASE("cubic irreducibility") {
    Fq f(1021);
    CHECK(is_irreducible_cubic(make_poly(f, {998, 123, 880, 1})));
    CHECK_FALSE(is_irreducible_cubic(make_poly(f, {0, 0, 0, 1})));
    CHECK_THROWS_AS(is_irreducible_cubic(make_poly(f, {1, 1})), DegreeMismatch);

    // against exhaustive root search on a small field
    Fq g(Int(101));
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        PolyFq w = random_poly(g, 3, rng);
        bool has_root = false;
        for (Int x = 0; x < g.modulus(); ++x)
            if (poly_eval(w, g.elem(x)).is_zero()) has_root = true;
        CHECK(is_irreducible_cubic(w) == !has_root);
    }
}

TEST_CASE("degree-3 factor extraction") {
    Fq f(1021);
    PolyFq g = make_poly(f, {68, 81, 455, 1});
    auto fs = deg3_irreducible_factors(g);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0] == g);

    CHECK(deg3_irreducible_factors(make_poly(f, {2, -3, 1})).empty());

    // deterministic under a fixed seed, product divides the input,
    // every factor is an irreducible cubic
    Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        PolyFq a = random_poly(f, 3, rng);
        PolyFq b = random_poly(f, 3, rng);
        PolyFq c = random_poly(f, 3, rng);
        PolyFq prod = poly_mul(a, poly_mul(b, c));
        auto f1 = deg3_irreducible_factors(prod, 99);
        auto f2 = deg3_irreducible_factors(prod, 99);
        CHECK(f1.size() == f2.size());
        for (std::size_t k = 0; k < f1.size(); ++k) CHECK(f1[k] == f2[k]);
        for (const PolyFq& w : f1) {
            CHECK(is_irreducible_cubic(w));
            CHECK(poly_divrem(prod, w).second.is_zero());
        }
        // sorted lexicographically by (c2, c1, c0)
        for (std::size_t k = 1; k < f1.size(); ++k) {
            auto key = [](const PolyFq& w) {
                return std::array<Int, 3>{w[2].value(), w[1].value(), w[0].value()};
            };
            CHECK(key(f1[k - 1]) < key(f1[k]));
        }
    }
}

TEST_CASE("root extraction in the cubic extension") {
    Fq f(1021);
    Fq3 e(f, f.elem(5));

    // minimal polynomial of the generator: x^3 - 5
    PolyFq w = make_poly(f, {-5, 0, 0, 1});
    Fq3Elem r = root_in_fq3(w, e);
    CHECK(r.c0().is_zero());
    CHECK(r.c2().is_zero());
    CHECK_FALSE(r.c1().is_zero());
    CHECK(poly_eval(lift_to_ext(w, e), r).is_zero());

    // the cubic attached to a compressed point recovers a conjugate of it
    ref::RefCurve rc = ref::curve1();
    PolyFq hp = hp_poly(rc.base_line, rc.sub->curve());
    Fq3Elem x = root_in_fq3(hp, e);
    Fq3Elem xp = rc.base_point.x();
    bool conj = x == xp || x == xp.frobenius() || x == xp.frobenius().frobenius();
    CHECK(conj);

    // symmetric functions of the three conjugate roots match the cubic
    Rng rng(19);
    for (int i = 0; i < 20; ++i) {
        PolyFq cand = random_poly(f, 3, rng);
        if (!is_irreducible_cubic(cand)) continue;
        PolyFq m = poly_monic(cand);
        Fq3Elem r0 = root_in_fq3(m, e);
        Fq3Elem r1 = r0.frobenius();
        Fq3Elem r2 = r1.frobenius();
        CHECK(r0 != r1);
        CHECK(poly_eval(lift_to_ext(m, e), r0).is_zero());
        Fq3Elem e1 = r0 + r1 + r2;
        Fq3Elem e2 = r0 * r1 + r0 * r2 + r1 * r2;
        Fq3Elem e3 = r0 * r1 * r2;
        CHECK(e1 == e.embed(-m[2]));
        CHECK(e2 == e.embed(m[1]));
        CHECK(e3 == e.embed(-m[0]));
    }

    CHECK_THROWS_AS(root_in_fq3(make_poly(f, {0, 0, 0, 1}), e), NotIrreducible);
}
