#include <doctest.h>

#include "testutil.hpp"

using namespace tracezero;

TEST_CASE("scalar decomposition is short and congruent") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    CHECK(decompose_scalar(0, sub) == std::pair<Int, Int>(0, 0));
    Int bound = 2 * isqrt(p);
    Rng rng(51);
    for (int i = 0; i < 1000; ++i) {
        Int m = rng.below(p);
        auto [m0, m1] = decompose_scalar(m, sub);
        CHECK(mod_floor(m0 + s * m1 - m, p) == 0);
        CHECK(abs(m0) <= bound);
        CHECK(abs(m1) <= bound);
    }
}

TEST_CASE("exception table lines match the oracle") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    LadderContext ctx(rc.sub, rc.base_line);
    ExceptionSets exc = exception_sets(ctx);

    CHECK(exc.a1.count(mod_floor(-2, p)) == 1);
    CHECK(exc.a2.count(1) == 1);
    CHECK(exc.roots.size() <= 42);
    CHECK(exc.roots.count(1) == 1);
    CHECK(exc.roots.count(mod_floor(-1, p)) == 1);
    CHECK(exc.roots.count(mod_floor(s, p)) == 1);

    CHECK(exc.h_s_minus_1 == oracle_line(rc, mod_floor(s - 1, p)));
    for (const auto& [m, line] : exc.lines_m_one_minus_s)
        CHECK(line == oracle_line(rc, mod_floor(m * (1 - s), p)));
    for (const auto& [alpha, line] : exc.lines_s_plus_alpha)
        CHECK(line == oracle_line(rc, mod_floor(s + alpha, p)));
}

TEST_CASE("guard sets honor their side conditions") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    auto [b1, b2] = b_sets(Int(7), Int(7), sub);
    // m1 - m0 = 0 removes one member of each set
    CHECK(b1.size() <= 6);
    CHECK(b2.size() <= 5);
    CHECK_THROWS_AS(b_sets(Int(0), Int(3), sub), InvalidScalar);
}

TEST_CASE("rescue-root coverage on a small subgroup") {
    // whenever both stitch routes are blocked, the ratio m0/m1 must be a
    // root of the fixed polynomial family (exhaustive over the ratio)
    Rng rng(52);
    SubgroupPtr sub = search_subgroup(Int(60), Int(110), rng);
    const Int& p = sub->order();
    const Int& s = sub->eigenvalue();
    std::set<Int> roots = reduction_root_family(p);
    long blocked = 0;
    for (Int t = 1; t < p; ++t) {
        auto [b1, b2] = b_sets(t, Int(1), *sub);
        bool fail1 = b1.count(s) || mod_floor(2 * t + 1, p) == 0;
        bool fail2 = b2.count(s) || mod_floor(t + 2, p) == 0;
        if (fail1 && fail2) {
            ++blocked;
            CHECK(roots.count(t) == 1);
        }
    }
    CHECK(blocked >= 1);  // t = s and t = s^2 are always blocked
}

TEST_CASE("reduced multiplication agrees with the ladder and the oracle") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    const Int& p = sub.order();
    LadderContext ctx(rc.sub, rc.base_line);
    ExceptionSets exc = exception_sets(ctx);

    CHECK(algorithm2(ctx, exc, 0).is_identity());
    CHECK(algorithm2(ctx, exc, p - 1) == negate_line(rc.base_line));

    Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        Int m = rng.below(p);
        Line got = algorithm2(ctx, exc, m);
        Line expect = m == 0 ? Line::identity() : oracle_line(rc, m);
        CHECK(got == expect);
        CHECK(algorithm2(ctx, exc, mod_floor(-m, p)) == negate_line(got));
        if (m != 0) CHECK(algorithm1(ctx, m).first == got);
    }
}

TEST_CASE("reduction paths") {
    ref::RefCurve rc = ref::curve1();
    const Subgroup& sub = *rc.sub;
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    LadderContext ctx(rc.sub, rc.base_line);
    ExceptionSets exc = exception_sets(ctx);
    using Path = Algo2Trace::Path;

    auto run_decomposed = [&](const Int& m0, const Int& m1, Algo2Trace& tr) {
        Line got = algorithm2_decomposed(ctx, exc, m0, m1, false, nullptr, &tr);
        Int target = mod_floor(m0 + s * m1, p);
        CHECK(got == (target == 0 ? Line::identity() : oracle_line(rc, target)));
        return got;
    };

    Algo2Trace t1;
    run_decomposed(Int(0), Int(5), t1);
    CHECK(t1.path == Path::SingleLadderM1);
    Algo2Trace t2;
    run_decomposed(Int(5), Int(0), t2);
    CHECK(t2.path == Path::SingleLadderM0);

    // ratio in the rescue family: m0 = m1
    Algo2Trace t3;
    run_decomposed(Int(5), Int(5), t3);
    CHECK(t3.path == Path::RescueAlpha);
    // and through the full scalar interface
    Algo2Trace t4;
    algorithm2(ctx, exc, mod_floor(5 * (s + 1), p), nullptr, &t4);
    CHECK(t4.path == Path::RescueAlpha);

    // plain stitched route, table miss (the worked scalar decomposes freely)
    Algo2Trace t5;
    algorithm2(ctx, exc, Int("483925"), nullptr, &t5);
    CHECK(t5.path == Path::RouteM0);
    CHECK_FALSE(t5.precomputed_fetch);

    // stitched route with a table fetch: drive m0 into the exception set
    bool fetched = false;
    for (const Int& a : exc.a1) {
        Int m1(5);
        Int alpha = mod_div(a, m1, p);
        if (exc.roots.count(alpha)) continue;
        auto [b1, b2] = b_sets(a, m1, sub);
        if (b1.count(s) || mod_floor(2 * a + m1, p) == 0) continue;
        Algo2Trace t6;
        run_decomposed(a, m1, t6);
        CHECK(t6.path == Path::RouteM0);
        CHECK(t6.precomputed_fetch);
        fetched = true;
        break;
    }
    CHECK(fetched);

    // the mirrored route: choose m0 so the first guard set contains s
    Int m1(5);
    Int m0 = mod_div(m1 * (s - 1), Int(3), p);
    {
        auto [b1, b2] = b_sets(m0, m1, sub);
        REQUIRE(b1.count(s) == 1);
        Int alpha = mod_div(m0, m1, p);
        REQUIRE(exc.roots.count(alpha) == 0);
        Algo2Trace t7;
        run_decomposed(m0, m1, t7);
        CHECK(t7.path == Path::RouteM1);
    }
    // mirrored route with the table fetch on the m1 side (1 is in the set)
    {
        Int m0b = mod_div(Int(1) * (s - 1), Int(3), p);
        auto [b1, b2] = b_sets(m0b, Int(1), sub);
        if (b1.count(s) && !exc.roots.count(mod_div(m0b, Int(1), p))) {
            Algo2Trace t8;
            run_decomposed(m0b, Int(1), t8);
            CHECK(t8.path == Path::RouteM1);
            CHECK(t8.precomputed_fetch);
        }
    }

    // signed components
    Algo2Trace t9;
    run_decomposed(Int(7), Int(-3), t9);
    Algo2Trace t10;
    run_decomposed(Int(-7), Int(3), t10);
    CHECK(t10.negated_output);

    // small subgroups fall back to the plain ladder before consulting any
    // of the exception machinery
    Rng rng(54);
    CurvePtr toy = Curve::create(Int(7), Int(3), Int(5), Int(4));
    SubgroupPtr toysub = Subgroup::derive(toy, rng);
    LadderContext toyctx(toysub, compress(*toysub, toysub->generator()));
    ExceptionSets toyexc;  // never consulted on the fallback path
    Algo2Trace t11;
    Line toyline = algorithm2(toyctx, toyexc, Int(17), nullptr, &t11);
    CHECK(t11.path == Path::SmallOrderFallback);
    CHECK(toyline ==
          compress(*toysub, oracle_scalar_mul(toysub->curve(), 17,
                                              toysub->generator())));
}
