#ifndef TRACEZERO_FIELD_HPP
#define TRACEZERO_FIELD_HPP

#include <optional>
#include <string>

#include "tracezero/intmath.hpp"

namespace tracezero {

class Fq;
class Fq3;

/// Running count of base-field multiplications on this thread; cheap
/// instrumentation for the benchmark command.
long field_mult_count();
void reset_field_mult_count();

/// Element of the prime field F_q, stored fully reduced in [0, q).
/// Elements keep a pointer to their field; the field object must outlive
/// them (fields live inside the shared Curve context).
class FqElem {
public:
    FqElem() : field_(nullptr), v_(0) {}

    const Int& value() const { return v_; }
    const Fq& field() const;
    bool is_zero() const { return v_ == 0; }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator/(const FqElem& o) const;
    FqElem operator-() const;
    FqElem inv() const;
    FqElem pow(const Int& e) const;

    bool operator==(const FqElem& o) const { return v_ == o.v_; }
    bool operator!=(const FqElem& o) const { return v_ != o.v_; }

private:
    friend class Fq;
    FqElem(const Fq* f, Int v) : field_(f), v_(std::move(v)) {}

    const Fq* field_;
    Int v_;
};

/// The prime field F_q for an odd prime q, q not in {2, 3}.
class Fq {
public:
    explicit Fq(Int q);

    const Int& modulus() const { return q_; }

    FqElem elem(const Int& v) const { return FqElem(this, mod_floor(v, q_)); }
    FqElem elem(long v) const { return elem(Int(v)); }
    FqElem zero() const { return FqElem(this, Int(0)); }
    FqElem one() const { return FqElem(this, Int(1)); }

    bool is_cube(const FqElem& a) const { return is_cube_mod(a.value(), q_); }
    std::optional<FqElem> sqrt(const FqElem& a) const;
    FqElem random(Rng& rng) const { return FqElem(this, rng.below(q_)); }

private:
    Int q_;
};

class Fq3Elem {
public:
    Fq3Elem() : ext_(nullptr) {}

    const FqElem& c0() const { return c0_; }
    const FqElem& c1() const { return c1_; }
    const FqElem& c2() const { return c2_; }
    const Fq3& ext() const;
    bool is_zero() const { return c0_.is_zero() && c1_.is_zero() && c2_.is_zero(); }
    /// True iff the element lies in the base field F_q.
    bool in_base() const { return c1_.is_zero() && c2_.is_zero(); }

    Fq3Elem operator+(const Fq3Elem& o) const;
    Fq3Elem operator-(const Fq3Elem& o) const;
    Fq3Elem operator*(const Fq3Elem& o) const;
    Fq3Elem operator-() const;
    Fq3Elem inv() const;
    Fq3Elem pow(const Int& e) const;
    Fq3Elem frobenius() const;

    bool operator==(const Fq3Elem& o) const {
        return c0_ == o.c0_ && c1_ == o.c1_ && c2_ == o.c2_;
    }
    bool operator!=(const Fq3Elem& o) const { return !(*this == o); }

private:
    friend class Fq3;
    Fq3Elem(const Fq3* e, FqElem a, FqElem b, FqElem c)
        : ext_(e), c0_(std::move(a)), c1_(std::move(b)), c2_(std::move(c)) {}

    const Fq3* ext_;
    FqElem c0_, c1_, c2_;
};

/// The cubic extension F_{q^3} = F_q[z]/(z^3 - c) for a non-cube c.
/// Requires 3 | q - 1 so the binomial is irreducible and the Frobenius is a
/// coordinate-wise scaling: z^q = c^{(q-1)/3} z.
class Fq3 {
public:
    /// base must outlive the extension; c must be a non-cube.
    Fq3(const Fq& base, FqElem c);

    const Fq& base() const { return *base_; }
    const FqElem& binomial_c() const { return c_; }

    Fq3Elem elem(FqElem a0, FqElem a1, FqElem a2) const {
        return Fq3Elem(this, std::move(a0), std::move(a1), std::move(a2));
    }
    Fq3Elem elem(const Int& a0, const Int& a1, const Int& a2) const {
        return elem(base_->elem(a0), base_->elem(a1), base_->elem(a2));
    }
    Fq3Elem embed(const FqElem& a) const { return elem(a, base_->zero(), base_->zero()); }
    Fq3Elem zero() const { return embed(base_->zero()); }
    Fq3Elem one() const { return embed(base_->one()); }
    Fq3Elem random(Rng& rng) const {
        return elem(base_->random(rng), base_->random(rng), base_->random(rng));
    }

    /// z^q = frob_scale() * z.
    const FqElem& frob_scale() const { return frob1_; }
    Int order() const;  // q^3

private:
    const Fq* base_;
    FqElem c_;
    FqElem frob1_;
};

}  // namespace tracezero

#endif
