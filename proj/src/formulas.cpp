#include "tracezero/formulas.hpp"

#include <span>

#include "formulas_tables.hpp"

namespace tracezero {

namespace {

using detail::FormulaTerm;

// Powers of one value up to a small exponent bound.
struct PowCache {
    explicit PowCache(const FqElem& base, int maxe) {
        pows.reserve(maxe + 1);
        pows.push_back(base.field().one());
        for (int i = 1; i <= maxe; ++i) pows.push_back(pows.back() * base);
    }
    const FqElem& operator[](std::uint8_t e) const { return pows[e]; }
    std::vector<FqElem> pows;
};

FqElem eval_table(std::span<const FormulaTerm> terms, const PowCache& a1,
                  const PowCache& a0, const PowCache& b1, const PowCache& b0,
                  const PowCache& A, const PowCache& B, const Fq& f) {
    const FqElem inv3 = f.elem(3).inv();
    FqElem acc = f.zero();
    for (const FormulaTerm& t : terms) {
        FqElem m = f.elem(t.coeff);
        if (t.over3) m = m * inv3;
        m = m * a1[t.e_a1] * a0[t.e_a0] * b1[t.e_b1] * b0[t.e_b0] * A[t.e_A] * B[t.e_B];
        acc = acc + m;
    }
    return acc;
}

}  // namespace

Spq Spq::normalized_b3() const {
    FqElem k = b3.inv();
    return Spq{a4 * k, a3 * k, a2 * k, a1 * k, a0 * k,
               b3 * k, b2 * k, b1 * k, b0 * k};
}

Spq spq_coeffs(const Line& hp, const Line& hq, const Curve& cv) {
    if (hp.is_identity() || hq.is_identity()) throw IdentityInput();
    const Fq& f = cv.base_field();
    PowCache a1(hp.alpha1(), 3), a0(hp.alpha0(), 3);
    PowCache b1(hq.alpha1(), 3), b0(hq.alpha0(), 3);
    PowCache A(cv.coeff_a(), 4), B(cv.coeff_b(), 3);
    using namespace detail;
    auto ev = [&](const FormulaTerm* t, std::size_t n) {
        return eval_table({t, n}, a1, a0, b1, b0, A, B, f);
    };
    return Spq{ev(kSpqA4, kSpqA4Count), ev(kSpqA3, kSpqA3Count),
               ev(kSpqA2, kSpqA2Count), ev(kSpqA1, kSpqA1Count),
               ev(kSpqA0, kSpqA0Count), ev(kSpqB3, kSpqB3Count),
               ev(kSpqB2, kSpqB2Count), ev(kSpqB1, kSpqB1Count),
               ev(kSpqB0, kSpqB0Count)};
}

Line double_line(const Line& h, const Curve& cv) {
    if (h.is_identity()) throw IdentityInput();
    const Fq& f = cv.base_field();
    PowCache a1(h.alpha1(), 4), a0(h.alpha0(), 4);
    PowCache b1(f.zero(), 0), b0(f.zero(), 0);
    PowCache A(cv.coeff_a(), 3), B(cv.coeff_b(), 2);
    using namespace detail;
    FqElem u1 = eval_table({kDblU1, kDblU1Count}, a1, a0, b1, b0, A, B, f);
    FqElem u0 = eval_table({kDblU0, kDblU0Count}, a1, a0, b1, b0, A, B, f);
    FqElem c = eval_table({kDblC, kDblCCount}, a1, a0, b1, b0, A, B, f);
    if (c.is_zero()) throw DegenerateDoubling();
    FqElem ci = c.inv();
    return Line::of(u0 * ci, u1 * ci);
}

Line triple_line(const Line& h, const Curve& cv) {
    if (h.is_identity()) throw IdentityInput();
    const Fq& f = cv.base_field();
    PowCache a1(h.alpha1(), 9), a0(h.alpha0(), 9);
    PowCache b1(f.zero(), 0), b0(f.zero(), 0);
    PowCache A(cv.coeff_a(), 6), B(cv.coeff_b(), 4);
    using namespace detail;
    FqElem v1 = eval_table({kTplV1, kTplV1Count}, a1, a0, b1, b0, A, B, f);
    FqElem v0 = eval_table({kTplV0, kTplV0Count}, a1, a0, b1, b0, A, B, f);
    FqElem d = eval_table({kTplD, kTplDCount}, a1, a0, b1, b0, A, B, f);
    if (d.is_zero()) throw DegenerateTripling();
    FqElem di = d.inv();
    return Line::of(v0 * di, v1 * di);
}

PolyFq hp_poly(const Line& h, const Curve& cv) {
    if (h.is_identity()) throw IdentityInput();
    const Fq& f = cv.base_field();
    const FqElem& a0 = h.alpha0();
    const FqElem& a1 = h.alpha1();
    return PolyFq({cv.coeff_b() - a0 * a0,
                   cv.coeff_a() - f.elem(2) * a0 * a1,
                   -(a1 * a1), f.one()});
}

PolyFq sigma_poly(const Spq& s, const Curve& cv) {
    PolyFq b = s.b_part();
    PolyFq a = s.a_part();
    return poly_sub(poly_mul(cv.rhs(), poly_mul(b, b)), poly_mul(a, a));
}

std::array<std::array<FqElem, 3>, 3> line_system_rows(const PolyFq& h, const Spq& s) {
    if (h.degree() != 3) throw DegreeMismatch("line system needs a monic cubic");
    const FqElem& w0 = h[0];
    const FqElem& w1 = h[1];
    const FqElem& w2 = h[2];
    return {{{w0 * (w2 - s.b2), s.b0 - w0, w0 * s.a3 - s.a4 * w2 * w0 - s.a0},
             {w0 * (w1 - s.b1), s.b0 * w2 - w0 * s.b2,
              w0 * s.a2 - s.a4 * w1 * w0 - s.a0 * w2},
             {w0 * (w0 - s.b0), s.b0 * w1 - s.b1 * w0,
              w0 * s.a1 - s.a4 * w0 * w0 - s.a0 * w1}}};
}

Line solve_line_system(const PolyFq& h, const Spq& s) {
    // the printed system presumes a monic y-part
    if (s.b3.is_zero()) throw SingularSystem("S has vanishing b3");
    auto rows = line_system_rows(h, s.normalized_b3());
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        const auto& r1 = rows[i];
        const auto& r2 = rows[j];
        FqElem det = r1[0] * r2[1] - r1[1] * r2[0];
        if (det.is_zero()) continue;
        FqElem di = det.inv();
        FqElem g1 = (r1[2] * r2[1] - r1[1] * r2[2]) * di;
        FqElem g0 = (r1[0] * r2[2] - r1[2] * r2[0]) * di;
        const auto& rk = rows[3 - i - j];
        if (!(rk[0] * g1 + rk[1] * g0 - rk[2]).is_zero())
            throw SingularSystem("line system is inconsistent");
        return Line::of(g0, g1);
    }
    throw SingularSystem("no nonsingular minor");
}

}  // namespace tracezero
