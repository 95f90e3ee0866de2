#include "tracezero/poly.hpp"

#include <algorithm>
#include <array>

namespace tracezero {

PolyFq make_poly(const Fq& f, std::vector<Int> coeffs) {
    std::vector<FqElem> c;
    c.reserve(coeffs.size());
    for (const Int& v : coeffs) c.push_back(f.elem(v));
    return PolyFq(std::move(c));
}

PolyFq poly_x(const Fq& f) { return make_poly(f, {0, 1}); }

PolyFq squarefree_part(const PolyFq& a) {
    PolyFq d = poly_derivative(a);
    if (d.is_zero()) throw Error("inseparable polynomial");
    return poly_divexact(a, gcd_monic(a, d));
}

namespace {

std::uint64_t coeff_seed(const PolyFq& g) {
    std::string s;
    for (const FqElem& c : g.coeffs()) {
        s += c.value().get_str();
        s += ',';
    }
    return fnv1a(s);
}

PolyFq random_poly_below(const Fq& f, int deg_bound, Rng& rng) {
    std::vector<FqElem> c;
    c.reserve(deg_bound);
    for (int i = 0; i < deg_bound; ++i) c.push_back(f.random(rng));
    return PolyFq(std::move(c));
}

}  // namespace

bool is_irreducible_cubic(const PolyFq& w) {
    if (w.degree() != 3)
        throw DegreeMismatch("cubic irreducibility test needs degree 3");
    const Fq& f = w.leading().field();
    // a cubic is irreducible iff it has no root: gcd(w, x^q - x) = 1
    PolyFq xq = poly_powmod(poly_x(f), f.modulus(), w);
    PolyFq g = gcd_monic(w, poly_sub(xq, poly_x(f)));
    return g.degree() == 0;
}

std::vector<PolyFq> deg3_irreducible_factors(const PolyFq& g,
                                             std::optional<std::uint64_t> seed) {
    std::vector<PolyFq> out;
    if (g.degree() < 3) return out;
    const Fq& f = g.leading().field();
    const Int& q = f.modulus();

    PolyFq sf = poly_monic(squarefree_part(g));
    // strip factors of degree 1 and 2, keep the degree-3 part
    const PolyFq x = poly_x(f);
    PolyFq xq = poly_powmod(x, q, sf);
    PolyFq g1 = gcd_monic(sf, poly_sub(xq, x));
    sf = poly_divexact(sf, g1);
    if (sf.degree() < 3) return out;
    PolyFq xq2 = poly_powmod(x, q * q, sf);
    PolyFq g2 = gcd_monic(sf, poly_sub(xq2, x));
    sf = poly_divexact(sf, g2);
    if (sf.degree() < 3) return out;
    PolyFq xq3 = poly_powmod(x, q * q * q, sf);
    PolyFq g3 = gcd_monic(sf, poly_sub(xq3, x));

    // Cantor-Zassenhaus equal-degree splitting, d = 3
    Rng rng(seed ? *seed : coeff_seed(g));
    const Int edf_exp = (q * q * q - 1) / 2;
    std::vector<PolyFq> stack{g3};
    while (!stack.empty()) {
        PolyFq h = std::move(stack.back());
        stack.pop_back();
        if (h.degree() <= 0) continue;
        if (h.degree() == 3) {
            out.push_back(poly_monic(h));
            continue;
        }
        for (;;) {
            PolyFq a = random_poly_below(f, h.degree(), rng);
            if (a.is_zero()) continue;
            PolyFq t = poly_powmod(a, edf_exp, h);
            t = poly_sub(t, make_poly(f, {1}));
            if (t.is_zero()) continue;
            PolyFq w = gcd_monic(h, t);
            if (0 < w.degree() && w.degree() < h.degree()) {
                stack.push_back(poly_divexact(h, w));
                stack.push_back(std::move(w));
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFq& a, const PolyFq& b) {
        std::array<const Int*, 3> ka{&a[2].value(), &a[1].value(), &a[0].value()};
        std::array<const Int*, 3> kb{&b[2].value(), &b[1].value(), &b[0].value()};
        for (int i = 0; i < 3; ++i)
            if (*ka[i] != *kb[i]) return *ka[i] < *kb[i];
        return false;
    });
    return out;
}

PolyFq3 lift_to_ext(const PolyFq& a, const Fq3& ext) {
    std::vector<Fq3Elem> c;
    c.reserve(a.coeffs().size());
    for (const FqElem& v : a.coeffs()) c.push_back(ext.embed(v));
    return PolyFq3(std::move(c));
}

Fq3Elem root_in_fq3(const PolyFq& w, const Fq3& ext,
                    std::optional<std::uint64_t> seed) {
    if (w.degree() != 3 || !is_irreducible_cubic(w))
        throw NotIrreducible("root extraction needs a monic irreducible cubic");
    Rng rng(seed ? *seed : (coeff_seed(w) ^ 0x9e3779b97f4a7c15ULL));
    const Int edf_exp = (ext.order() - 1) / 2;
    // w splits into distinct linear factors over F_{q^3}
    PolyFq3 h = poly_monic(lift_to_ext(w, ext));
    while (h.degree() > 1) {
        PolyFq3 a(std::vector<Fq3Elem>{ext.random(rng), ext.one()});
        PolyFq3 t = poly_powmod(a, edf_exp, h);
        t = poly_sub(t, PolyFq3(std::vector<Fq3Elem>{ext.one()}));
        if (t.is_zero()) continue;
        PolyFq3 g = gcd_monic(h, t);
        if (0 < g.degree() && g.degree() < h.degree())
            h = g.degree() * 2 <= h.degree() ? g : poly_divexact(h, g);
    }
    return -h[0];
}

}  // namespace tracezero
