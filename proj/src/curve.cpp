#include "tracezero/curve.hpp"

namespace tracezero {

Curve::Curve(Int q, Int c, Int A, Int B) : fq_(std::move(q)) {
    a_ = fq_.elem(A);
    b_ = fq_.elem(B);
    FqElem disc = fq_.elem(4) * a_ * a_ * a_ + fq_.elem(27) * b_ * b_;
    if (disc.is_zero()) throw SingularCurve();
    fq3_ = std::make_unique<Fq3>(fq_, fq_.elem(c));
}

std::shared_ptr<const Curve> Curve::create(Int q, Int c, Int A, Int B) {
    return std::shared_ptr<const Curve>(
        new Curve(std::move(q), std::move(c), std::move(A), std::move(B)));
}

std::shared_ptr<const Curve> Curve::create(Int q, Int A, Int B) {
    Int c = smallest_noncube(q);
    return create(std::move(q), std::move(c), std::move(A), std::move(B));
}

PolyFq Curve::rhs() const {
    return PolyFq(std::vector<FqElem>{b_, a_, fq_.zero(), fq_.one()});
}

Fq3Elem Curve::rhs_at(const Fq3Elem& x) const {
    return x * x * x + fq3_->embed(a_) * x + fq3_->embed(b_);
}

bool on_curve(const Curve& cv, const Point& p) {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == cv.rhs_at(p.x());
}

Point point_neg(const Point& p) {
    if (p.is_infinity()) return p;
    return Point::affine(p.x(), -p.y());
}

Point point_add(const Curve& cv, const Point& p, const Point& q) {
    if (!on_curve(cv, p) || !on_curve(cv, q)) throw PointNotOnCurve();
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Fq3& F = cv.ext_field();
    Fq3Elem lam;
    if (p.x() == q.x()) {
        if ((p.y() + q.y()).is_zero()) return Point::infinity();
        // tangent slope f'(x) / 2y
        Fq3Elem num = F.embed(cv.base_field().elem(3)) * p.x() * p.x() +
                      F.embed(cv.coeff_a());
        lam = num * (F.embed(cv.base_field().elem(2)) * p.y()).inv();
    } else {
        lam = (q.y() - p.y()) * (q.x() - p.x()).inv();
    }
    Fq3Elem x3 = lam * lam - p.x() - q.x();
    Fq3Elem y3 = lam * (p.x() - x3) - p.y();
    return Point::affine(std::move(x3), std::move(y3));
}

Point point_double(const Curve& cv, const Point& p) { return point_add(cv, p, p); }

Point oracle_scalar_mul(const Curve& cv, const Int& m, const Point& p) {
    if (m < 0) return point_neg(oracle_scalar_mul(cv, -m, p));
    Point r = Point::infinity();
    Point b = p;
    const std::size_t bits = m == 0 ? 0 : mpz_sizeinbase(m.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(m.get_mpz_t(), i)) r = point_add(cv, r, b);
        if (i + 1 < bits) b = point_add(cv, b, b);
    }
    return r;
}

Point frobenius_point(const Curve& cv, const Point& p) {
    (void)cv;
    if (p.is_infinity()) return p;
    return Point::affine(p.x().frobenius(), p.y().frobenius());
}

Point trace(const Curve& cv, const Point& p) {
    Point f1 = frobenius_point(cv, p);
    Point f2 = frobenius_point(cv, f1);
    return point_add(cv, p, point_add(cv, f1, f2));
}

Int count_points_base(const Int& q, const Int& A, const Int& B, const Int& bound) {
    if (q > bound)
        throw BoundExceeded("point counting capped at q <= " + bound.get_str());
    const Int half = (q - 1) / 2;
    Int n = q + 1;
    for (Int x = 0; x < q; ++x) {
        Int fx = mod_floor(x * x * x + A * x + B, q);
        if (fx == 0) continue;
        n += mod_pow(fx, half, q) == 1 ? 1 : -1;
    }
    return n;
}

Int count_points_base(const Curve& cv, const Int& bound) {
    return count_points_base(cv.base_field().modulus(), cv.coeff_a().value(),
                             cv.coeff_b().value(), bound);
}

std::shared_ptr<const Subgroup> Subgroup::derive(CurvePtr curve, Rng& rng,
                                                 const Int& count_bound) {
    const Curve& cv = *curve;
    const Int& q = cv.base_field().modulus();
    Int n1 = count_points_base(cv, count_bound);
    // Hasse sanity
    Int t = q + 1 - n1;
    if (t * t > 4 * q) throw InternalError("point count violates the Hasse bound");
    Int n3 = q * q * q + 1 - (t * t * t - 3 * q * t);
    if (mod_floor(n3, n1) != 0)
        throw InternalError("|E(F_q)| does not divide |E(F_q^3)|");
    Int p = n3 / n1;
    if (p <= 3 || !is_probable_prime(p))
        throw NotPrimeOrder("trace-zero subgroup order is not a prime > 3");
    Int s = mod_div(q - 1, 2 + q - n1, p);
    if (mod_floor(s * s + s + 1, p) != 0)
        throw InternalError("eigenvalue fails s^2 + s + 1 = 0");
    // generator: kill the prime-to-p part of R - phi(R), which has trace zero
    Point gen;
    for (int tries = 0; tries < 64; ++tries) {
        Point r = random_curve_point(cv, rng);
        Point g = point_add(cv, r, point_neg(frobenius_point(cv, r)));
        g = oracle_scalar_mul(cv, n1, g);
        if (g.is_infinity()) continue;
        if (!trace(cv, g).is_infinity() || !oracle_scalar_mul(cv, p, g).is_infinity())
            throw InternalError("generator candidate escaped the subgroup");
        if (frobenius_point(cv, g) != oracle_scalar_mul(cv, s, g))
            throw InternalError("generator fails phi = [s]");
        gen = g;
        break;
    }
    if (gen.is_infinity()) throw InternalError("no subgroup generator found");
    return std::shared_ptr<const Subgroup>(new Subgroup(
        std::move(curve), std::move(p), std::move(s), std::move(n1), std::move(gen)));
}

Point random_curve_point(const Curve& cv, Rng& rng) {
    const Fq3& F = cv.ext_field();
    const Int q3 = F.order();
    for (;;) {
        Fq3Elem x = F.random(rng);
        Fq3Elem fx = cv.rhs_at(x);
        if (fx.is_zero()) return Point::affine(std::move(x), F.zero());
        if (fx.pow((q3 - 1) / 2) != F.one()) continue;
        Fq3Elem y;
        if (mod_floor(q3, 4) == 3) {
            y = fx.pow((q3 + 1) / 4);
        } else {
            // Tonelli-Shanks in the extension field
            Int Q = q3 - 1;
            unsigned long S = 0;
            while (mpz_even_p(Q.get_mpz_t())) {
                Q /= 2;
                ++S;
            }
            Fq3Elem z = F.random(rng);
            while (z.is_zero() || z.pow((q3 - 1) / 2) == F.one()) z = F.random(rng);
            long M = static_cast<long>(S);
            Fq3Elem c = z.pow(Q);
            Fq3Elem t = fx.pow(Q);
            y = fx.pow((Q + 1) / 2);
            while (t != F.one()) {
                Fq3Elem tt = t;
                long i = 0;
                while (tt != F.one()) {
                    tt = tt * tt;
                    ++i;
                }
                Fq3Elem b = c;
                for (long j = 0; j < M - i - 1; ++j) b = b * b;
                M = i;
                c = b * b;
                t = t * c;
                y = y * b;
            }
        }
        if (!(y * y == fx)) throw InternalError("square root failed in F_q^3");
        return Point::affine(std::move(x), std::move(y));
    }
}

Point random_t3_point(const Subgroup& sub, Rng& rng) {
    Int k = 1 + rng.below(sub.order() - 1);
    return oracle_scalar_mul(sub.curve(), k, sub.generator());
}

SubgroupPtr search_subgroup(const Int& q, Rng& rng, long budget) {
    if (!is_probable_prime(q) || q <= 3)
        throw Error("search needs an odd prime q > 3");
    Int c = smallest_noncube(q);  // rejects q with 3 not dividing q-1
    for (long i = 0; i < budget; ++i) {
        Int A = rng.below(q);
        Int B = rng.below(q);
        try {
            CurvePtr cv = Curve::create(q, c, A, B);
            return Subgroup::derive(std::move(cv), rng);
        } catch (const NotPrimeOrder&) {
        } catch (const SingularCurve&) {
        }
    }
    throw Error("no prime-order subgroup found for q = " + q.get_str() +
                " within the search budget");
}

SubgroupPtr search_subgroup(const Int& qmin, const Int& qmax, Rng& rng, long budget) {
    if (qmax <= qmin) throw Error("empty q range");
    for (long i = 0; i < budget; ++i) {
        Int q = rng.range(qmin, qmax);
        if (!is_probable_prime(q) || q <= 3 || mod_floor(q - 1, 3) != 0) continue;
        try {
            return search_subgroup(q, rng, 50);
        } catch (const Error&) {
        }
    }
    throw Error("no usable curve found in the q range");
}

}  // namespace tracezero
