#include "tracezero/ladder.hpp"

namespace tracezero {

namespace {

Int md(const Int& num, const Int& den, const Int& p) {
    return mod_div(mod_floor(num, p), den, p);
}

Line call_subalg(const Line& h1, const Line& h2, const Line& h3, const Line& h4,
                 const Curve& cv, CallStats* stats, SubalgMemo* memo) {
    if (memo) {
        std::array<Line, 4> key{h1, h2, h3, h4};
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
        Line r = subalg(h1, h2, h3, h4, cv);
        if (stats) ++stats->subalg_calls;
        memo->emplace(std::move(key), r);
        return r;
    }
    Line r = subalg(h1, h2, h3, h4, cv);
    if (stats) ++stats->subalg_calls;
    return r;
}

}  // namespace

std::set<Int> special_set_M(const Subgroup& sub) {
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    return {md(3, 2 * s + 1, p),      md(-3, 2 * s + 1, p),
            md(s - 4, 3 * s, p),      md(4 * s - 1, 2 * s + 1, p),
            md(s + 5, 3 * (s + 1), p), md(4 * s + 5, 2 * s + 1, p)};
}

std::set<Int> special_set_Mr(int r1, int r2, const Subgroup& sub) {
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    if (r1 == 3 && r2 == 7)
        return {md(17 * s + 4, 2 * s + 1, p),  md(-4 * s - 17, s - 1, p),
                md(10 * s + 11, 2 * s + 1, p), md(10 * s - 1, 2 * s + 1, p),
                md(4 * s - 13, -s - 2, p),     md(17 * s + 13, 2 * s + 1, p)};
    if (r1 == -3 && r2 == 5)
        return {md(7 * s + 8, 2 * s + 1, p),  md(-8 * s - 7, s - 1, p),
                md(2 * s + 13, 2 * s + 1, p), md(2 * s - 11, 2 * s + 1, p),
                md(8 * s + 1, -s - 2, p),     md(7 * s - 1, 2 * s + 1, p)};
    if ((r1 == -3 && r2 == -7) || (r1 == 3 && r2 == -5)) {
        std::set<Int> out;
        for (const Int& m : special_set_Mr(-r1, -r2, sub))
            out.insert(mod_floor(-m, p));
        return out;
    }
    throw Error("unsupported special-case pattern");
}

LadderContext::LadderContext(SubgroupPtr params, Line h_base, CallStats* stats)
    : params_(std::move(params)) {
    if (h_base.is_identity()) throw IdentityInput();
    const Curve& cv = params_->curve();
    Line h2 = double_line(h_base, cv);
    Line h3 = triple_line(h_base, cv);
    Line h4 = double_line(h2, cv);
    Line h6 = double_line(h3, cv);
    if (stats) {
        stats->doublings += 3;
        stats->triplings += 1;
    }
    Line h5 = call_subalg(h_base, h4, h2, h3, cv, stats, nullptr);
    Line h7 = call_subalg(h_base, h6, h3, h4, cv, stats, nullptr);
    smalls_ = {{1, h_base},          {2, h2},
               {3, h3},              {4, h4},
               {5, h5},              {6, h6},
               {7, h7},              {-1, negate_line(h_base)},
               {-3, negate_line(h3)}, {-5, negate_line(h5)},
               {-7, negate_line(h7)}};
    m_ = special_set_M(*params_);
    for (const Int& v : m_)
        if (mpz_odd_p(v.get_mpz_t())) odd_m_.insert(v);
}

const Line& LadderContext::small(int k) const {
    auto it = smalls_.find(k);
    if (it == smalls_.end()) throw InternalError("small multiple not in context");
    return it->second;
}

std::pair<Line, Line> algorithm1(const LadderContext& ctx, const Int& m,
                                 CallStats* stats, SubalgMemo* memo) {
    const Subgroup& sub = ctx.params();
    const Curve& cv = sub.curve();
    const Int& p = sub.order();
    if (m <= 0 || m >= p) throw InvalidScalar("ladder scalar must be in (0, p)");

    const std::size_t ell = mpz_sizeinbase(m.get_mpz_t(), 2);
    auto bit = [&](std::size_t i) { return mpz_tstbit(m.get_mpz_t(), i) != 0; };
    auto k_at = [&](std::size_t i) {
        Int k;
        mpz_tdiv_q_2exp(k.get_mpz_t(), m.get_mpz_t(), i);
        return k;
    };

    // steps whose target falls in the exception set and needs the
    // small-multiple rescue patterns
    std::set<std::size_t> special;
    for (std::size_t i = 0; i + 1 < ell; ++i) {
        Int k = k_at(i);
        if (ctx.odd_set_m().count(k) || ctx.odd_set_m().count(k + 1))
            special.insert(i);
    }

    auto dbl = [&](const Line& h) {
        if (stats) ++stats->doublings;
        return double_line(h, cv);
    };
    auto dbl2 = [&](const Line& h) { return dbl(dbl(h)); };
    auto dbl3 = [&](const Line& h) { return dbl(dbl(dbl(h))); };
    auto sub_call = [&](const Line& a, const Line& b, const Line& c, const Line& d) {
        return call_subalg(a, b, c, d, cv, stats, memo);
    };

    // rolling history of the last pairs, oldest first
    std::vector<std::pair<Line, Line>> hist;
    Line u = ctx.base();
    Line v = ctx.small(2);
    hist.emplace_back(u, v);
    if (ell == 1) return {u, v};
    if (bit(ell - 2)) {
        u = ctx.small(3);
        v = ctx.small(4);
    } else {
        u = ctx.small(2);
        v = ctx.small(3);
    }
    hist.emplace_back(u, v);
    if (ell == 2) return {u, v};

    for (std::size_t step = ell - 2; step-- > 0;) {
        const std::size_t i = step;
        Line h_exc;
        bool have_exc = false;
        if (special.count(i)) {
            if (hist.size() < 3)
                throw InternalError("special case too close to the top bits");
            const auto& l1 = hist[0];  // (u_{i+3}, v_{i+3})
            const auto& l2 = hist[1];  // (u_{i+2}, v_{i+2})
            if (bit(i + 1)) {
                if (bit(i + 2))
                    h_exc = sub_call(ctx.small(3), dbl2(l2.first), ctx.small(7),
                                     dbl3(l1.first));
                else
                    h_exc = sub_call(ctx.small(3), dbl3(l1.first), ctx.small(-5),
                                     dbl3(l1.second));
            } else {
                if (bit(i + 2))
                    h_exc = sub_call(ctx.small(-3), dbl3(l1.second), ctx.small(5),
                                     dbl3(l1.first));
                else
                    h_exc = sub_call(ctx.small(-3), dbl2(l2.second), ctx.small(-7),
                                     dbl3(l1.second));
            }
            have_exc = true;
        }
        if (hist.size() == 3) hist.erase(hist.begin());
        const Line prev_u = hist.back().first;
        const Line prev_v = hist.back().second;
        if (!bit(i)) {
            u = dbl(prev_u);
            if (have_exc)
                v = h_exc;
            else if (i == 0 && m == p - 1)
                v = Line::identity();  // v_0 = h_{pP}
            else
                v = sub_call(ctx.base(), u, prev_u, prev_v);
        } else {
            if (have_exc)
                u = h_exc;
            else
                u = sub_call(ctx.base(), dbl(prev_u), prev_u, prev_v);
            v = dbl(prev_v);
        }
        hist.emplace_back(u, v);
    }
    return hist.back();
}

}  // namespace tracezero
