#include "tracezero/frobred.hpp"

#include <array>
#include <iostream>
#include <tuple>

namespace tracezero {

namespace {

Int md(const Int& num, const Int& den, const Int& p) {
    return mod_div(mod_floor(num, p), den, p);
}

std::set<Int> set_a1(const Int& p, const Int& s) {
    return {mod_floor(-2, p),          mod_floor(s, p),
            md(-3 * (1 + s), 2 + s, p), md(-3, 2 + s, p),
            md(s + 2, s - 1, p),        md(-3, 2 * s + 1, p)};
}

std::set<Int> set_a2(const Int& p, const Int& s) {
    return {Int(1), mod_floor(s, p), md(s + 2, s - 1, p),
            md(2 * s + 1, -3, p), md(1 - s, 3 * s, p)};
}

// the fixed polynomial family whose roots form R; (a, b) = a t + b,
// (a, b, c) = a t^2 + b t + c, as printed (one quadratic repeats)
constexpr int kPolyFamily[][3] = {
    {0, 1, 1},  {0, 1, -1}, {0, 1, 2},  {0, 1, 3},  {0, 3, 1},
    {1, 0, 1},  {1, 1, 1},  {1, 4, 2},  {2, 1, 1},  {1, -1, -1},
    {2, 4, 1},  {1, 4, 1},  {1, 2, 2},  {1, 3, 1},  {1, 1, -1},
    {2, 2, 1},  {1, 3, 1},  {1, -2, -1}, {1, 2, -1}, {2, 3, -1},
    {2, 3, 1},
};

std::set<Int> root_family_impl(const Int& p) {
    std::set<Int> out;
    for (const auto& f : kPolyFamily) {
        Int a(f[0]), b(f[1]), c(f[2]);
        if (a == 0) {
            out.insert(md(-c, b, p));
            continue;
        }
        Int disc = mod_floor(b * b - 4 * a * c, p);
        auto r = sqrt_mod(disc, p);
        if (!r) continue;
        out.insert(md(-b + *r, 2 * a, p));
        out.insert(md(-b - *r, 2 * a, p));
    }
    return out;
}

}  // namespace

std::set<Int> reduction_root_family(const Int& p) { return root_family_impl(p); }

std::pair<std::set<Int>, std::set<Int>> reduction_a_sets(const Subgroup& sub) {
    return {set_a1(sub.order(), sub.eigenvalue()),
            set_a2(sub.order(), sub.eigenvalue())};
}

std::pair<Int, Int> decompose_scalar(const Int& m, const Subgroup& sub) {
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    Int mm = mod_floor(m, p);
    if (mm == 0) return {Int(0), Int(0)};
    // half-extended Euclid on (p, s): r_i = x_i p + y_i s, (r_i, -y_i) in L
    Int r0 = p, r1 = s, y0 = 0, y1 = 1;
    const Int lim = isqrt(p);
    std::vector<std::pair<Int, Int>> seq{{r0, y0}, {r1, y1}};
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        y0 = y1; y1 = y2;
        seq.emplace_back(r1, y1);
    }
    std::size_t k = 0;
    while (k + 1 < seq.size() && seq[k + 1].first > lim) ++k;
    auto vec = [&](std::size_t i) {
        return std::pair<Int, Int>(seq[i].first, -seq[i].second);
    };
    auto norm2 = [](const std::pair<Int, Int>& v) -> Int {
        return v.first * v.first + v.second * v.second;
    };
    auto v1 = vec(k + 1);
    auto va = vec(k);
    auto v2 = (k + 2 < seq.size() && norm2(vec(k + 2)) < norm2(va)) ? vec(k + 2) : va;
    Int det = v1.first * v2.second - v1.second * v2.first;
    if (det == 0) throw InternalError("degenerate reduction lattice");
    // Babai: round the coordinates of (m, 0) in the (v1, v2) basis
    auto round_div = [](const Int& num, const Int& den) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (2 * r >= den) ++q;
        return q;
    };
    Int dd = det < 0 ? -det : det;
    Int n1 = mm * v2.second, n2 = -mm * v1.second;
    if (det < 0) { n1 = -n1; n2 = -n2; }
    Int c1 = round_div(n1, dd);
    Int c2 = round_div(n2, dd);
    Int m0 = mm - c1 * v1.first - c2 * v2.first;
    Int m1 = -(c1 * v1.second + c2 * v2.second);
    if (mod_floor(m0 + s * m1 - mm, p) != 0)
        throw InternalError("scalar decomposition lost the congruence");
    return {m0, m1};
}

std::pair<std::set<Int>, std::set<Int>> b_sets(const Int& m0, const Int& m1,
                                               const Subgroup& sub) {
    const Int& p = sub.order();
    if (mod_floor(m0, p) == 0 || mod_floor(m1, p) == 0)
        throw InvalidScalar("b_sets needs m0, m1 nonzero mod p");
    auto add = [&](std::set<Int>& out, const Int& num, const Int& den) {
        if (mod_floor(den, p) != 0) out.insert(md(num, den, p));
    };
    std::set<Int> b1, b2;
    add(b1, 3 * m0 + m1, m1);
    add(b1, m1, 3 * m0 + m1);
    add(b1, m1 - m0, 2 * m0 + m1);
    add(b1, 2 * m0 + m1, m1 - m0);
    add(b1, m0 + 2 * m1, -(2 * m0 + m1));
    add(b1, 3 * m0 + 2 * m1, -(3 * m0 + m1));
    add(b1, 2 * m1, -(3 * m0 + m1));
    add(b2, m0 + 3 * m1, -(2 * m0 + 3 * m1));
    add(b2, -(2 * m0 + 3 * m1), m0 + 3 * m1);
    add(b2, m0 - m1, m0 + 2 * m1);
    add(b2, m0 + 2 * m1, m0 - m1);
    add(b2, 2 * m0 + 3 * m1, -m0);
    add(b2, m0 + 3 * m1, -2 * m0);
    return {std::move(b1), std::move(b2)};
}

ExceptionSets exception_sets(const LadderContext& ctx, CallStats* stats) {
    const Subgroup& sub = ctx.params();
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    ExceptionSets exc;
    std::tie(exc.a1, exc.a2) = reduction_a_sets(ctx.params());
    exc.roots = reduction_root_family(p);
    exc.h_s_minus_1 = algorithm1(ctx, mod_floor(s - 1, p), stats).first;
    // table lines via ladders from h_{(1-s)P}
    LadderContext ctx_1ms(ctx.params_ptr(), negate_line(exc.h_s_minus_1), stats);
    std::set<Int> a12 = exc.a1;
    a12.insert(exc.a2.begin(), exc.a2.end());
    for (const Int& m : a12)
        exc.lines_m_one_minus_s.emplace(m, algorithm1(ctx_1ms, m, stats).first);
    for (const Int& alpha : exc.roots) {
        Int t = mod_floor(s + alpha, p);
        if (t == 0) continue;  // h would be the identity; never consulted
        exc.lines_s_plus_alpha.emplace(alpha, algorithm1(ctx, t, stats).first);
    }
    return exc;
}

namespace {

class Algo2Run {
public:
    Algo2Run(const LadderContext& ctx, const ExceptionSets& exc, CallStats* stats)
        : ctx_(ctx), exc_(exc), stats_(stats) {}

    /// h_{kP} for a signed nonzero k.
    Line line_for(const Int& k) {
        if (k > 0) return algorithm1(ctx_, k, stats_, &memo_).first;
        return negate_line(algorithm1(ctx_, -k, stats_, &memo_).first);
    }

    /// h_{(k+1)P} for a signed k with k != 0, -1.
    Line line_for_succ(const Int& k) {
        if (k > 0) return algorithm1(ctx_, k, stats_, &memo_).second;
        return negate_line(algorithm1(ctx_, -k - 1, stats_, &memo_).first);
    }

    Line call(const Line& a, const Line& b, const Line& c, const Line& d) {
        std::array<Line, 4> key{a, b, c, d};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Line r = subalg(a, b, c, d, ctx_.params().curve());
        if (stats_) ++stats_->subalg_calls;
        memo_.emplace(std::move(key), r);
        return r;
    }

    /// h_{k(1-s)P} for signed nonzero k (hk = h_{kP}); precomputed when the
    /// residue of k is in A1 u A2, else stitched through h_{(k+s)P}.
    Line k_one_minus_s(const Int& k, const Line& hk, Algo2Trace* trace) {
        const Subgroup& sub = ctx_.params();
        const Int& p = sub.order();
        const Int& s = sub.eigenvalue();
        Int kr = mod_floor(k, p);
        auto pre = exc_.lines_m_one_minus_s.find(kr);
        if (pre != exc_.lines_m_one_minus_s.end()) {
            if (trace) trace->precomputed_fetch = true;
            return pre->second;
        }
        if (k == 1) return negate_line(exc_.h_s_minus_1);
        if (k == -1) return exc_.h_s_minus_1;
        if (mod_floor(k + s, p) == 0 || mod_floor(k + 1, p) == 0)
            throw InternalError("degenerate scalar in the reduction seam");
        Line hk1 = line_for_succ(k);
        Line h_kps = call(ctx_.base(), hk, hk1, exc_.h_s_minus_1);  // h_{(k+s)P}
        return call(hk, negate_line(hk), negate_line(hk1), h_kps);
    }

private:
    const LadderContext& ctx_;
    const ExceptionSets& exc_;
    CallStats* stats_;
    SubalgMemo memo_;
};

}  // namespace

Line algorithm2_decomposed(const LadderContext& ctx, const ExceptionSets& exc,
                           const Int& m0_in, const Int& m1_in, bool negate_result,
                           CallStats* stats, Algo2Trace* trace) {
    const Subgroup& sub = ctx.params();
    const Int& p = sub.order();
    const Int& s = sub.eigenvalue();
    Int m0 = m0_in, m1 = m1_in;
    bool neg = negate_result;
    if (m0 < 0) {  // normalize to m0 >= 1 (or 0); lines negate for free
        m0 = -m0;
        m1 = -m1;
        neg = !neg;
    }
    if (trace) {
        trace->m0 = m0;
        trace->m1 = m1;
        trace->negated_output = neg;
    }
    Algo2Run run(ctx, exc, stats);
    Line h;
    if (m0 == 0 && m1 == 0) {
        if (trace) trace->path = Algo2Trace::Path::Identity;
        return Line::identity();
    }
    if (m0 == 0) {
        if (trace) trace->path = Algo2Trace::Path::SingleLadderM1;
        h = run.line_for(m1);  // h_{s m1 P} = h_{m1 P}
    } else if (m1 == 0) {
        if (trace) trace->path = Algo2Trace::Path::SingleLadderM0;
        h = run.line_for(m0);
    } else {
        Int alpha = md(m0, m1, p);
        auto rescue = exc.lines_s_plus_alpha.find(alpha);
        if (exc.roots.count(alpha) && rescue != exc.lines_s_plus_alpha.end()) {
            // m = m1 (s + alpha): ladder from the precomputed base
            if (trace) trace->path = Algo2Trace::Path::RescueAlpha;
            LadderContext ctx_sa(ctx.params_ptr(), rescue->second, stats);
            h = m1 > 0 ? algorithm1(ctx_sa, m1, stats).first
                       : negate_line(algorithm1(ctx_sa, -m1, stats).first);
        } else {
            Line h_m0 = run.line_for(m0);
            Line h_m1 = run.line_for(m1);
            if (m0 + m1 == 0)
                throw InternalError("m0 = -m1 must take the rescue path");
            Line h_m0m1 = run.line_for(m0 + m1);
            auto [b1, b2] = b_sets(m0, m1, sub);
            if (!b1.count(s) && mod_floor(2 * m0 + m1, p) != 0) {
                if (trace) trace->path = Algo2Trace::Path::RouteM0;
                Line h_m0_1ms = run.k_one_minus_s(m0, h_m0, trace);
                h = run.call(h_m0, h_m1, h_m0m1, h_m0_1ms);
            } else {
                if (b2.count(s) || mod_floor(m0 + 2 * m1, p) == 0)
                    throw InternalError("both reduction routes blocked");
                if (trace) trace->path = Algo2Trace::Path::RouteM1;
                Line h_m1_1ms = run.k_one_minus_s(m1, h_m1, trace);
                h = run.call(h_m0, h_m1, h_m0m1, negate_line(h_m1_1ms));
            }
        }
    }
    return neg ? negate_line(h) : h;
}

Line algorithm2(const LadderContext& ctx, const ExceptionSets& exc, const Int& m,
                CallStats* stats, Algo2Trace* trace) {
    const Subgroup& sub = ctx.params();
    const Int& p = sub.order();
    Int mm = mod_floor(m, p);
    if (mm == 0) {
        if (trace) trace->path = Algo2Trace::Path::Identity;
        return Line::identity();
    }
    if (p < 10000) {
        // the exception-set disjointness arguments assume a large subgroup
        if (trace) trace->path = Algo2Trace::Path::SmallOrderFallback;
        static bool warned = false;
        if (!warned) {
            std::cerr << "warning: subgroup order below 10^4; using the plain "
                         "ladder instead of Frobenius reduction\n";
            warned = true;
        }
        return algorithm1(ctx, mm, stats).first;
    }
    bool neg = false;
    if (mm > (p - 1) / 2) {
        mm = p - mm;
        neg = true;
    }
    auto [m0, m1] = decompose_scalar(mm, sub);
    return algorithm2_decomposed(ctx, exc, m0, m1, neg, stats, trace);
}

}  // namespace tracezero
