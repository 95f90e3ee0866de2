#include "tracezero/intmath.hpp"

namespace tracezero {

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DivisionByZero();
    return r;
}

Int mod_pow(const Int& a, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_div(const Int& a, const Int& b, const Int& m) {
    return mod_floor(a * mod_inverse(b, m), m);
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<Int> sqrt_mod(const Int& a, const Int& p) {
    Int r = mod_floor(a, p);
    if (r == 0) return Int(0);
    if (mod_pow(r, (p - 1) / 2, p) != 1) return std::nullopt;
    if (mod_floor(p, 4) == 3) return mod_pow(r, (p + 1) / 4, p);
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    Int m(static_cast<long>(s));
    Int c = mod_pow(z, q, p);
    Int t = mod_pow(r, q, p);
    Int res = mod_pow(r, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) {
            tt = mod_floor(tt * tt, p);
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = mod_floor(b * b, p);
        m = i;
        c = mod_floor(b * b, p);
        t = mod_floor(t * c, p);
        res = mod_floor(res * b, p);
    }
    return res;
}

bool is_cube_mod(const Int& a, const Int& q) {
    if (mod_floor(q - 1, 3) != 0) return true;
    return mod_pow(mod_floor(a, q), (q - 1) / 3, q) == 1;
}

Int smallest_noncube(const Int& q) {
    if (mod_floor(q - 1, 3) != 0)
        throw Error("every residue mod " + q.get_str() + " is a cube (3 does not divide q-1)");
    for (Int c = 2; c < q; ++c)
        if (!is_cube_mod(c, q)) return c;
    throw Error("no non-cube found");
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int Rng::below(const Int& n) {
    if (n <= 0) throw InvalidScalar("Rng::below needs a positive bound");
    // draw enough 64-bit words, mask the top one, reject values >= n
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - (words - 1) * 64;
    const std::uint64_t mask =
        top_bits >= 64 ? ~0ULL : ((std::uint64_t{1} << top_bits) - 1);
    while (true) {
        Int v = 0;
        for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t w = eng_();
            if (i == 0) w &= mask;
            v <<= 32;
            v += static_cast<unsigned long>(w >> 32);
            v <<= 32;
            v += static_cast<unsigned long>(w & 0xffffffffULL);
        }
        if (v < n) return v;
    }
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace tracezero
