#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the codec or witness implementations.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::uint64_t pair(std::uint64_t x, std::uint64_t y) { return (x + y) * (x + y) + x; }

/// Every pair code below `limit`, mapped to its preimage, by enumerating
/// x + y = s for all s with s^2 < limit.
inline std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>>
pair_codes_below(std::uint64_t limit) {
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> codes;
    for (std::uint64_t s = 0; s * s < limit; ++s) {
        for (std::uint64_t x = 0; x <= s; ++x) {
            const std::uint64_t w = pair(x, s - x);
            if (w < limit) {
                codes.emplace(w, std::make_pair(x, s - x));
            }
        }
    }
    return codes;
}

/// GMP's own square root, a second route to the codec's Newton iteration.
inline mpz_class gmp_sqrt(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Smallest u in [0, prod moduli) with the given residues, by linear search.
inline std::optional<std::uint64_t> crt_search(const std::vector<std::uint64_t>& residues,
                                               const std::vector<std::uint64_t>& moduli) {
    std::uint64_t bound = 1;
    for (const auto m : moduli) {
        bound *= m;
    }
    for (std::uint64_t u = 0; u < bound; ++u) {
        bool ok = true;
        for (std::size_t t = 0; t < moduli.size() && ok; ++t) {
            ok = u % moduli[t] == residues[t];
        }
        if (ok) {
            return u;
        }
    }
    return std::nullopt;
}

/// (lhs, rhs) of (1 + k'v) p' = 1 + (1 + iv) q' evaluated with mpz, using
/// the closed forms for p' and q' written out independently.
inline std::pair<mpz_class, mpz_class> star_sides(unsigned long kp, unsigned long i,
                                                  unsigned long z) {
    const mpz_class k = kp;
    const mpz_class ii = i;
    const mpz_class zz = z;
    const mpz_class v = zz * (ii - k);
    const mpz_class p = 1 + k + ii * k * (ii - (k + 1)) * zz;
    const mpz_class q = k + k * k * (ii - (k + 1)) * zz;
    return {(1 + k * v) * p, 1 + (1 + ii * v) * q};
}

inline std::uint64_t lcm_range(std::uint64_t lo, std::uint64_t hi) {
    mpz_class acc = 1;
    for (std::uint64_t t = lo; t <= hi; ++t) {
        mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), t);
    }
    return acc.get_ui();
}

} // namespace oracle
