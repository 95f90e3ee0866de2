#include <doctest.h>

#include <set>

#include "testutil.hpp"

using namespace tracezero;

TEST_CASE("prime field basics at q = 1021") {
    Fq f(1021);
    CHECK(f.elem(2).inv().value() == 511);
    CHECK((f.elem(987) * f.elem(987)).value() == 135);
    CHECK((f.elem(-1) + f.elem(2)).value() == 1);
    CHECK_THROWS_AS(f.zero().inv(), DivisionByZero);
    CHECK_THROWS_AS(f.one() / f.zero(), DivisionByZero);

    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        FqElem a = f.random(rng);
        if (a.is_zero()) continue;
        CHECK(a.pow(f.modulus() - 1) == f.one());
        CHECK(a * a.inv() == f.one());
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Fq(Int(9)), Error);
    CHECK_THROWS_AS(Fq(Int(2)), Error);
    CHECK_THROWS_AS(Fq(Int(3)), Error);
    CHECK_NOTHROW(Fq(Int("1000003")));
}

TEST_CASE("field axioms on random triples") {
    Fq f(1021);
    Fq3 e(f, f.elem(5));
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        FqElem a = f.random(rng), b = f.random(rng), c = f.random(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        Fq3Elem x = e.random(rng), y = e.random(rng), z = e.random(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("cubic extension arithmetic") {
    Fq f(1021);
    Fq3 e(f, f.elem(5));
    Fq3Elem zeta = e.elem(Int(0), Int(1), Int(0));
    CHECK(zeta * zeta * zeta == e.embed(f.elem(5)));
    Fq3Elem zeta2 = e.elem(Int(0), Int(0), Int(1));
    CHECK(zeta * zeta2 == e.embed(f.elem(5)));

    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        Fq3Elem a = e.random(rng);
        if (a.is_zero()) continue;
        CHECK(a.inv() * a == e.one());
        CHECK(a.pow(e.order() - 1) == e.one());
    }
    CHECK_THROWS_AS(e.zero().inv(), DivisionByZero);
}

TEST_CASE("extension construction rejects bad parameters") {
    Fq f(1021);
    CHECK_THROWS_AS(Fq3(f, f.elem(8)), Error);  // 8 = 2^3 is a cube
    Fq f5(Int(5));
    CHECK_THROWS_AS(Fq3(f5, f5.elem(2)), Error);  // 3 does not divide q-1
}

TEST_CASE("frobenius of the extension") {
    Fq f(1021);
    Fq3 e(f, f.elem(5));
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Fq3Elem a = e.random(rng);
        Fq3Elem b = e.random(rng);
        CHECK(a.frobenius() == a.pow(f.modulus()));
        CHECK(a.frobenius().frobenius().frobenius() == a);
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
    Fq3Elem base = e.embed(f.elem(417));
    CHECK(base.frobenius() == base);
    // order exactly 3 outside the base field
    Fq3Elem z = e.elem(Int(1), Int(2), Int(3));
    CHECK(z.frobenius() != z);
}

TEST_CASE("cube detection against enumeration") {
    Fq f(1021);
    std::set<Int> cubes;
    for (Int x = 1; x < f.modulus(); ++x)
        cubes.insert(mod_pow(x, 3, f.modulus()));
    for (Int a = 1; a < f.modulus(); ++a)
        CHECK(is_cube_mod(a, f.modulus()) == (cubes.count(a) > 0));
    CHECK(is_cube_mod(1, f.modulus()));
    CHECK(is_cube_mod(8, f.modulus()));
    CHECK_FALSE(is_cube_mod(5, f.modulus()));
    CHECK(smallest_noncube(Int(1021)) == 5);
    // every element is a cube when 3 does not divide q-1
    CHECK(is_cube_mod(2, 5));
}

TEST_CASE("square roots") {
    Int q(1021);
    CHECK(*sqrt_mod(0, q) == 0);
    Int r4 = *sqrt_mod(4, q);
    CHECK((r4 == 2 || r4 == q - 2));
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        Int a = rng.below(q);
        auto r = sqrt_mod(a, q);
        bool qr = a == 0 || mod_pow(a, (q - 1) / 2, q) == 1;
        CHECK(r.has_value() == qr);
        if (r) CHECK(mod_floor(*r * *r, q) == a);
    }
    // a prime with q = 1 mod 4 to reach the full Tonelli-Shanks path
    Int q2(1021381);
    for (int i = 0; i < 50; ++i) {
        Int a = rng.below(q2);
        auto r = sqrt_mod(a, q2);
        if (r) CHECK(mod_floor(*r * *r, q2) == a);
    }
}
