#include "tracezero/field.hpp"

#include <cassert>

namespace tracezero {

namespace {
const Fq& require_field(const Fq* f) {
    if (!f) throw Error("use of a detached field element");
    return *f;
}

thread_local long g_mult_count = 0;
}  // namespace

long field_mult_count() { return g_mult_count; }
void reset_field_mult_count() { g_mult_count = 0; }

const Fq& FqElem::field() const { return require_field(field_); }

FqElem FqElem::operator+(const FqElem& o) const {
    const Int& q = field().modulus();
    Int r = v_ + o.v_;
    if (r >= q) r -= q;
    return FqElem(field_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const {
    const Int& q = field().modulus();
    Int r = v_ - o.v_;
    if (r < 0) r += q;
    return FqElem(field_, std::move(r));
}

FqElem FqElem::operator*(const FqElem& o) const {
    ++g_mult_count;
    return FqElem(field_, mod_floor(v_ * o.v_, field().modulus()));
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inv(); }

FqElem FqElem::operator-() const {
    if (v_ == 0) return *this;
    return FqElem(field_, field().modulus() - v_);
}

FqElem FqElem::inv() const {
    if (v_ == 0) throw DivisionByZero();
    return FqElem(field_, mod_inverse(v_, field().modulus()));
}

FqElem FqElem::pow(const Int& e) const {
    if (e < 0) return inv().pow(-e);
    return FqElem(field_, mod_pow(v_, e, field().modulus()));
}

Fq::Fq(Int q) : q_(std::move(q)) {
    if (q_ == 2 || q_ == 3 || !is_probable_prime(q_))
        throw Error("field modulus must be an odd prime > 3, got " + q_.get_str());
}

std::optional<FqElem> Fq::sqrt(const FqElem& a) const {
    auto r = sqrt_mod(a.value(), q_);
    if (!r) return std::nullopt;
    return elem(*r);
}

const Fq3& Fq3Elem::ext() const {
    if (!ext_) throw Error("use of a detached extension element");
    return *ext_;
}

Fq3Elem Fq3Elem::operator+(const Fq3Elem& o) const {
    return Fq3Elem(ext_, c0_ + o.c0_, c1_ + o.c1_, c2_ + o.c2_);
}

Fq3Elem Fq3Elem::operator-(const Fq3Elem& o) const {
    return Fq3Elem(ext_, c0_ - o.c0_, c1_ - o.c1_, c2_ - o.c2_);
}

Fq3Elem Fq3Elem::operator-() const { return Fq3Elem(ext_, -c0_, -c1_, -c2_); }

Fq3Elem Fq3Elem::operator*(const Fq3Elem& o) const {
    // schoolbook product reduced by z^3 -> c
    const FqElem& c = ext().binomial_c();
    FqElem d0 = c0_ * o.c0_;
    FqElem d1 = c0_ * o.c1_ + c1_ * o.c0_;
    FqElem d2 = c0_ * o.c2_ + c1_ * o.c1_ + c2_ * o.c0_;
    FqElem d3 = c1_ * o.c2_ + c2_ * o.c1_;
    FqElem d4 = c2_ * o.c2_;
    return Fq3Elem(ext_, d0 + c * d3, d1 + c * d4, d2);
}

Fq3Elem Fq3Elem::inv() const {
    if (is_zero()) throw DivisionByZero();
    // a^{-1} = (a^q a^{q^2}) / N(a) with the norm landing in F_q
    Fq3Elem b = frobenius() * frobenius().frobenius();
    Fq3Elem n = *this * b;
    if (!n.in_base()) throw InternalError("norm left the base field");
    FqElem ninv = n.c0().inv();
    return Fq3Elem(ext_, b.c0_ * ninv, b.c1_ * ninv, b.c2_ * ninv);
}

Fq3Elem Fq3Elem::pow(const Int& e) const {
    if (e < 0) return inv().pow(-e);
    Fq3Elem r = ext().one();
    Fq3Elem b = *this;
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * b;
        if (i + 1 < bits) b = b * b;
    }
    return r;
}

Fq3Elem Fq3Elem::frobenius() const {
    const FqElem& t = ext().frob_scale();
    return Fq3Elem(ext_, c0_, c1_ * t, c2_ * t * t);
}

Fq3::Fq3(const Fq& base, FqElem c) : base_(&base), c_(std::move(c)) {
    const Int& q = base.modulus();
    if (mod_floor(q - 1, 3) != 0)
        throw Error("cubic binomial extensions need 3 | q-1, got q = " + q.get_str());
    if (c_.is_zero() || base.is_cube(c_))
        throw Error("extension constant must be a non-cube");
    frob1_ = c_.pow((q - 1) / 3);
}

Int Fq3::order() const {
    const Int& q = base_->modulus();
    return q * q * q;
}

}  // namespace tracezero
