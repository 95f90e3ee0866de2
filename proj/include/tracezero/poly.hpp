#ifndef TRACEZERO_POLY_HPP
#define TRACEZERO_POLY_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tracezero/field.hpp"

namespace tracezero {

inline FqElem zero_like(const FqElem& a) { return a.field().zero(); }
inline Fq3Elem zero_like(const Fq3Elem& a) { return a.ext().zero(); }

/// Dense univariate polynomial; coeffs()[i] is the coefficient of x^i, the
/// leading coefficient is nonzero, and the zero polynomial has no
/// coefficients (degree -1).
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const T& leading() const { return c_.back(); }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<T> c_;
};

using PolyFq = Poly<FqElem>;
using PolyFq3 = Poly<Fq3Elem>;

template <class T>
Poly<T> poly_add(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<T> out;
    out.reserve(n);
    const T zero = zero_like(a.leading());
    for (std::size_t i = 0; i < n; ++i) {
        T x = i < a.coeffs().size() ? a[i] : zero;
        T y = i < b.coeffs().size() ? b[i] : zero;
        out.push_back(x + y);
    }
    return Poly<T>(std::move(out));
}

template <class T>
Poly<T> poly_neg(const Poly<T>& a) {
    std::vector<T> out;
    out.reserve(a.coeffs().size());
    for (const T& x : a.coeffs()) out.push_back(-x);
    return Poly<T>(std::move(out));
}

template <class T>
Poly<T> poly_sub(const Poly<T>& a, const Poly<T>& b) {
    return poly_add(a, poly_neg(b));
}

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const T zero = zero_like(a.leading());
    std::vector<T> out(a.coeffs().size() + b.coeffs().size() - 1, zero);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return Poly<T>(std::move(out));
}

template <class T>
Poly<T> poly_scale(const T& k, const Poly<T>& a) {
    std::vector<T> out;
    out.reserve(a.coeffs().size());
    for (const T& x : a.coeffs()) out.push_back(k * x);
    return Poly<T>(std::move(out));
}

template <class T>
std::pair<Poly<T>, Poly<T>> poly_divrem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Poly<T>{}, a};
    const T zero = zero_like(b.leading());
    const T binv = b.leading().inv();
    std::vector<T> rem = a.coeffs();
    std::vector<T> quo(a.coeffs().size() - b.coeffs().size() + 1, zero);
    for (int d = static_cast<int>(rem.size()) - b.degree() - 1; d >= 0; --d) {
        T k = rem[d + b.degree()] * binv;
        if (k.is_zero()) continue;
        quo[d] = k;
        for (std::size_t i = 0; i < b.coeffs().size(); ++i)
            rem[d + i] = rem[d + i] - k * b[i];
    }
    return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

/// Exact division; throws InternalError on a nonzero remainder.
template <class T>
Poly<T> poly_divexact(const Poly<T>& a, const Poly<T>& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
}

template <class T>
Poly<T> poly_monic(const Poly<T>& a) {
    if (a.is_zero()) return a;
    return poly_scale(a.leading().inv(), a);
}

template <class T>
T poly_eval(const Poly<T>& a, const T& x) {
    T r = zero_like(x);
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it)
        r = r * x + *it;
    return r;
}

template <class T>
Poly<T> poly_derivative(const Poly<T>& a) {
    if (a.degree() < 1) return {};
    std::vector<T> out;
    out.reserve(a.coeffs().size() - 1);
    T k = zero_like(a.leading());
    const T one = a.leading() * a.leading().inv();
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        k = k + one;
        out.push_back(k * a[i]);
    }
    return Poly<T>(std::move(out));
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) is an error.
template <class T>
Poly<T> gcd_monic(Poly<T> a, Poly<T> b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<T> r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

/// base^e mod m (e >= 0).
template <class T>
Poly<T> poly_powmod(const Poly<T>& base, const Int& e, const Poly<T>& m) {
    const T one_c = m.leading() * m.leading().inv();
    Poly<T> r(std::vector<T>{one_c});
    Poly<T> b = poly_divrem(base, m).second;
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_divrem(poly_mul(r, b), m).second;
        if (i + 1 < bits) b = poly_divrem(poly_mul(b, b), m).second;
    }
    return r;
}

PolyFq make_poly(const Fq& f, std::vector<Int> coeffs);

/// x viewed as a polynomial over f.
PolyFq poly_x(const Fq& f);

/// Largest squarefree divisor (char > degree inputs only).
PolyFq squarefree_part(const PolyFq& a);

/// True iff the monic-normalizable cubic w has no root in F_q.
/// Throws DegreeMismatch unless deg w == 3.
bool is_irreducible_cubic(const PolyFq& w);

/// Distinct monic irreducible cubic factors of g (deg g <= 9), sorted
/// lexicographically by (c2, c1, c0). Cantor-Zassenhaus with an RNG seeded
/// from the input coefficients unless a seed is supplied.
std::vector<PolyFq> deg3_irreducible_factors(const PolyFq& g,
                                             std::optional<std::uint64_t> seed = std::nullopt);

/// Lift a base-field polynomial to F_{q^3}[x].
PolyFq3 lift_to_ext(const PolyFq& a, const Fq3& ext);

/// One root in F_{q^3} of a monic irreducible cubic over F_q, by equal-degree
/// root extraction; throws NotIrreducible if the precondition fails.
Fq3Elem root_in_fq3(const PolyFq& w, const Fq3& ext,
                    std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace tracezero

#endif
