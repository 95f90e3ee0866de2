#ifndef TRACEZERO_INTMATH_HPP
#define TRACEZERO_INTMATH_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <gmpxx.h>

#include "tracezero/errors.hpp"

namespace tracezero {

/// Arbitrary-precision signed integer used throughout the library.
using Int = mpz_class;

/// Least nonnegative residue of a mod m (m > 0).
Int mod_floor(const Int& a, const Int& m);

/// Inverse of a mod m; throws DivisionByZero if gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

/// a^e mod m with e >= 0.
Int mod_pow(const Int& a, const Int& e, const Int& m);

/// (a/b) mod m, i.e. a * b^{-1}.
Int mod_div(const Int& a, const Int& b, const Int& m);

/// Miller-Rabin probable-prime test (40 rounds).
bool is_probable_prime(const Int& n);

/// Tonelli-Shanks square root mod an odd prime p; nullopt for non-residues.
std::optional<Int> sqrt_mod(const Int& a, const Int& p);

/// True iff a is a cube mod the odd prime q (a != 0; always true when 3 does
/// not divide q-1).
bool is_cube_mod(const Int& a, const Int& q);

/// Smallest non-cube c >= 2 mod q; throws Error when every residue is a cube
/// (i.e. 3 does not divide q-1).
Int smallest_noncube(const Int& q);

Int isqrt(const Int& n);

/// Deterministic RNG handing out arbitrary-precision values.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    /// Uniform value in [0, n) for n > 0.
    Int below(const Int& n);

    /// Uniform value in [lo, hi).
    Int range(const Int& lo, const Int& hi) { return lo + below(hi - lo); }

private:
    std::mt19937_64 eng_;
};

/// FNV-1a over a string; used to derive reproducible factorization seeds.
std::uint64_t fnv1a(const std::string& data);

}  // namespace tracezero

#endif
