#pragma once

// Constructive witnesses behind the beta-function sequence encoding: the
// divisor product u = prod (1 + t*v), its modular inverse modulo 1 + i*v,
// the closed-form single-step inverse identity, and the recoding that moves
// a residue vector to a new modulus base and appends one more residue.
//
// Everything here is exact integer arithmetic over Natural. Each witness
// type carries a `verify()` that re-evaluates its defining equation from the
// stored fields, so a witness read back from JSON can be audited without
// trusting whoever produced it.

#include <cstdint>
#include <span>
#include <vector>

#include "betaseq/natural.hpp"

namespace betaseq {

/// The unique z < m with x = z + q*m. Throws ZeroModulus for m = 0.
Natural rem(const Natural& x, const Natural& m);

/// True iff x = q*d for some q. divides(0, x) holds only for x = 0.
bool divides(const Natural& d, const Natural& x);

/// lcm(1, ..., k); lcm_upto(0) = 1.
Natural lcm_upto(std::uint64_t k);

/// prod_{t=1..k} (1 + t*v), built by the recursion u_0 = 1,
/// u_{k+1} = (1 + (k+1)*v) * u_k.
Natural i1_u(std::uint64_t k, const Natural& v);

/// Closed-form witness for (1 + k'v) p' = 1 + (1 + iv) q' with v = z (i - k').
struct StarWitness {
    Natural kprime;
    Natural i;
    Natural z;
    Natural pprime;
    Natural qprime;

    /// z * (i - k'); throws DomainError when i < k'.
    Natural v() const;
    /// Checks the p'/q' formulas and the identity by direct evaluation.
    bool verify() const;

    friend bool operator==(const StarWitness&, const StarWitness&) = default;
};

/// Requires k' >= 1 and i >= k' + 1, otherwise throws DomainError.
StarWitness star_identity(const Natural& kprime, const Natural& i, const Natural& z);

/// u = prod_{t=1..k} (1 + t*v) together with p, q such that u*p = 1 + (1 + i*v)*q.
struct InverseCertificate {
    std::uint64_t k = 0;
    Natural v;
    Natural i;
    Natural u;
    Natural p;
    Natural q;

    /// Re-checks: u is the divisor product, u*p = 1 + (1+iv)q, i > k and
    /// (i - j) | v for 0 < j <= k.
    bool verify() const;

    friend bool operator==(const InverseCertificate&, const InverseCertificate&) = default;
};

/// Builds the certificate level by level from (p, q) = (1, 0) at k = 0,
/// combining with star_identity(k+1, i, v / (i - (k+1))) at each step.
/// Throws PreconditionViolated unless i > k and (i - j) | v for 0 < j <= k.
InverseCertificate i1_inverse(std::uint64_t k, const Natural& v, const Natural& i);

/// Recodes u from moduli 1 + t*v to moduli 1 + t*vprime (t <= k) and places x
/// at modulus 1 + (k+1)*vprime. Returns u' with
///
///   rem(u', 1 + t*vprime) = rem(u, 1 + t*v)   for all t <= k,
///   rem(u', 1 + (k+1)*vprime) = x.
///
/// Preconditions: t | vprime for 0 < t <= k, vprime >= v, (k+1)*vprime >= x.
/// Violations throw PreconditionViolated.
Natural i2_recode(const Natural& u, const Natural& v, const Natural& vprime, const Natural& x,
                  std::uint64_t k);

/// Input and output of one i2_recode call, checkable on its own.
struct RecodeCertificate {
    std::uint64_t k = 0;
    Natural u;
    Natural v;
    Natural vprime;
    Natural x;
    Natural uprime;

    bool verify() const;

    friend bool operator==(const RecodeCertificate&, const RecodeCertificate&) = default;
};

RecodeCertificate make_recode_certificate(const Natural& u, const Natural& v, const Natural& vprime,
                                          const Natural& x, std::uint64_t k);

/// Least u with rem(u, moduli[t]) = residues[t], by extended gcd.
/// Throws NotCoprime if two moduli share a factor, PreconditionViolated for
/// mismatched lengths, zero moduli or out-of-range residues.
Natural crt(std::span<const Natural> residues, std::span<const Natural> moduli);

/// Residues of u modulo 1 + t*v for t = 1..count.
std::vector<Natural> residue_vector(const Natural& u, const Natural& v, std::uint64_t count);

} // namespace betaseq
