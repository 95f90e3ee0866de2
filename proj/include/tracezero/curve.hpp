#ifndef TRACEZERO_CURVE_HPP
#define TRACEZERO_CURVE_HPP

#include <memory>
#include <optional>
#include <utility>

#include "tracezero/poly.hpp"

namespace tracezero {

/// Short-Weierstrass curve y^2 = x^3 + Ax + B over F_q together with the
/// cubic extension the trace-zero subgroup lives in. Heap-only: elements and
/// points hold pointers into this context.
class Curve {
public:
    static std::shared_ptr<const Curve> create(Int q, Int c, Int A, Int B);
    /// Picks the smallest non-cube as the extension constant.
    static std::shared_ptr<const Curve> create(Int q, Int A, Int B);

    const Fq& base_field() const { return fq_; }
    const Fq3& ext_field() const { return *fq3_; }
    const FqElem& coeff_a() const { return a_; }
    const FqElem& coeff_b() const { return b_; }

    /// f(x) = x^3 + Ax + B over F_q.
    PolyFq rhs() const;
    Fq3Elem rhs_at(const Fq3Elem& x) const;

    Curve(const Curve&) = delete;
    Curve& operator=(const Curve&) = delete;

private:
    Curve(Int q, Int c, Int A, Int B);

    Fq fq_;
    std::unique_ptr<Fq3> fq3_;
    FqElem a_, b_;
};

using CurvePtr = std::shared_ptr<const Curve>;

class Point {
public:
    Point() = default;  // infinity
    static Point infinity() { return {}; }
    static Point affine(Fq3Elem x, Fq3Elem y) {
        Point p;
        p.xy_.emplace(std::move(x), std::move(y));
        return p;
    }

    bool is_infinity() const { return !xy_.has_value(); }
    const Fq3Elem& x() const { return xy_->first; }
    const Fq3Elem& y() const { return xy_->second; }

    bool operator==(const Point& o) const {
        if (is_infinity() || o.is_infinity())
            return is_infinity() == o.is_infinity();
        return x() == o.x() && y() == o.y();
    }
    bool operator!=(const Point& o) const { return !(*this == o); }

private:
    std::optional<std::pair<Fq3Elem, Fq3Elem>> xy_;
};

bool on_curve(const Curve& cv, const Point& p);
Point point_neg(const Point& p);
Point point_add(const Curve& cv, const Point& p, const Point& q);
Point point_double(const Curve& cv, const Point& p);

/// Plain double-and-add over full coordinates; the verification oracle.
Point oracle_scalar_mul(const Curve& cv, const Int& m, const Point& p);

Point frobenius_point(const Curve& cv, const Point& p);
Point trace(const Curve& cv, const Point& p);

inline constexpr long kDefaultCountBound = 1L << 20;

/// |E(F_q)| by x-enumeration with Euler-criterion counting.
/// Throws BoundExceeded when q exceeds the bound.
Int count_points_base(const Curve& cv, const Int& bound = Int(kDefaultCountBound));

/// Same count on raw parameters (no extension-field requirements on q).
Int count_points_base(const Int& q, const Int& A, const Int& B,
                      const Int& bound = Int(kDefaultCountBound));

/// The trace-zero subgroup context: order p, Frobenius eigenvalue s, and a
/// generator, derived by point counting. Throws NotPrimeOrder when the
/// subgroup order is composite (the curve is unusable for this scheme).
class Subgroup {
public:
    static std::shared_ptr<const Subgroup> derive(CurvePtr curve, Rng& rng,
                                                  const Int& count_bound = Int(kDefaultCountBound));

    const Curve& curve() const { return *curve_; }
    CurvePtr curve_ptr() const { return curve_; }
    const Int& order() const { return p_; }              // p = |T3|
    const Int& eigenvalue() const { return s_; }         // phi = [s] on T3
    const Int& base_count() const { return n1_; }        // |E(F_q)|
    const Point& generator() const { return gen_; }

private:
    Subgroup(CurvePtr curve, Int p, Int s, Int n1, Point gen)
        : curve_(std::move(curve)), p_(std::move(p)), s_(std::move(s)),
          n1_(std::move(n1)), gen_(std::move(gen)) {}

    CurvePtr curve_;
    Int p_, s_, n1_;
    Point gen_;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

Point random_t3_point(const Subgroup& sub, Rng& rng);

/// Uniform random point of E(F_{q^3}) (not necessarily trace zero).
Point random_curve_point(const Curve& cv, Rng& rng);

/// Try random (A, B) over F_q until the trace-zero subgroup has prime
/// order; throws Error when the budget runs out or q is unusable.
SubgroupPtr search_subgroup(const Int& q, Rng& rng, long budget = 2000);

/// Same, with q drawn from the primes = 1 mod 3 in [qmin, qmax).
SubgroupPtr search_subgroup(const Int& qmin, const Int& qmax, Rng& rng,
                            long budget = 2000);

}  // namespace tracezero

#endif
