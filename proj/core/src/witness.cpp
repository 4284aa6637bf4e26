#include "betaseq/witness.hpp"

#include <string>

#include "betaseq/errors.hpp"

namespace betaseq {

namespace {

const Natural kOne{1};

Natural modulus(std::uint64_t t, const Natural& v) { return kOne + Natural(t) * v; }

} // namespace

Natural rem(const Natural& x, const Natural& m) { return x % m; }

bool divides(const Natural& d, const Natural& x) {
    if (d.is_zero()) {
        return x.is_zero();
    }
    return (x % d).is_zero();
}

Natural lcm_upto(std::uint64_t k) {
    Natural acc{1};
    for (std::uint64_t t = 2; t <= k; ++t) {
        acc = lcm(acc, Natural(t));
    }
    return acc;
}

Natural i1_u(std::uint64_t k, const Natural& v) {
    Natural u{1};
    for (std::uint64_t t = 1; t <= k; ++t) {
        u = modulus(t, v) * u;
    }
    return u;
}

Natural StarWitness::v() const { return z * i.minus(kprime); }

bool StarWitness::verify() const {
    if (kprime.is_zero() || i < kprime + kOne) {
        return false;
    }
    const Natural gap = i.minus(kprime + kOne);
    if (pprime != kOne + kprime + i * kprime * gap * z) {
        return false;
    }
    if (qprime != kprime + kprime * kprime * gap * z) {
        return false;
    }
    const Natural vv = v();
    return (kOne + kprime * vv) * pprime == kOne + (kOne + i * vv) * qprime;
}

StarWitness star_identity(const Natural& kprime, const Natural& i, const Natural& z) {
    if (kprime.is_zero()) {
        throw DomainError("star_identity: k' must be at least 1");
    }
    if (i < kprime + kOne) {
        throw DomainError("star_identity: i = " + i.to_string() + " < k' + 1 = " +
                          (kprime + kOne).to_string());
    }
    const Natural gap = i.minus(kprime + kOne);
    StarWitness w{kprime, i, z, kOne + kprime + i * kprime * gap * z,
                  kprime + kprime * kprime * gap * z};
    if (!w.verify()) {
        throw Error("star_identity: identity failed to hold (arithmetic defect)");
    }
    return w;
}

bool InverseCertificate::verify() const {
    if (i <= Natural(k)) {
        return false;
    }
    if (v.is_zero()) {
        // Every factor is 1 and every difference divides 0.
        return u == kOne && p == kOne + q;
    }
    // Each factor 1 + t*v is at least 2, so a valid u has at least k bits.
    if (k > u.bit_length()) {
        return false;
    }
    Natural product{1};
    for (std::uint64_t t = 1; t <= k; ++t) {
        product *= modulus(t, v);
        if (!divides(i.minus(Natural(t)), v)) {
            return false;
        }
    }
    return product == u && u * p == kOne + (kOne + i * v) * q;
}

InverseCertificate i1_inverse(std::uint64_t k, const Natural& v, const Natural& i) {
    if (i <= Natural(k)) {
        throw PreconditionViolated("i1_inverse: need i > k (i = " + i.to_string() +
                                   ", k = " + std::to_string(k) + ")");
    }
    for (std::uint64_t j = 1; j <= k; ++j) {
        if (!divides(i.minus(Natural(j)), v)) {
            throw PreconditionViolated("i1_inverse: i - " + std::to_string(j) +
                                       " does not divide v = " + v.to_string());
        }
    }

    const Natural big_modulus = kOne + i * v;
    Natural u{1};
    Natural p{1};
    Natural q{0};
    for (std::uint64_t level = 0; level < k; ++level) {
        const Natural next{level + 1};
        const Natural z = v / i.minus(next);
        const StarWitness star = star_identity(next, i, z);
        u = modulus(level + 1, v) * u;
        // u' p p' = 1 + (1 + iv)(q + q' + q q' (1 + iv))
        q = q + star.qprime + q * star.qprime * big_modulus;
        p = p * star.pprime;
    }
    return InverseCertificate{k, v, i, std::move(u), std::move(p), std::move(q)};
}

Natural i2_recode(const Natural& u, const Natural& v, const Natural& vprime, const Natural& x,
                  std::uint64_t k) {
    for (std::uint64_t t = 1; t <= k; ++t) {
        if (!divides(Natural(t), vprime)) {
            throw PreconditionViolated("i2_recode: " + std::to_string(t) +
                                       " does not divide v' = " + vprime.to_string());
        }
    }
    if (vprime < v) {
        throw PreconditionViolated("i2_recode: v' < v");
    }
    if (Natural(k + 1) * vprime < x) {
        throw PreconditionViolated("i2_recode: (k+1) v' < x");
    }

    // Unrolled recursion. The level-L call appends target(L) on top of the
    // level-(L-1) result, whose own target is u's residue at 1 + L*v.
    auto target = [&](std::uint64_t level) {
        return level == k ? x : rem(u, modulus(level + 1, v));
    };
    Natural acc = target(0);
    for (std::uint64_t level = 1; level <= k; ++level) {
        const Natural u1 = i1_u(level, vprime);
        const InverseCertificate inv = i1_inverse(level, vprime, Natural(level + 1));
        acc = acc + (target(level) + acc * Natural(level + 1) * vprime) * u1 * inv.p;
    }
    return acc;
}

bool RecodeCertificate::verify() const {
    for (std::uint64_t t = 1; t <= k; ++t) {
        if (rem(uprime, modulus(t, vprime)) != rem(u, modulus(t, v))) {
            return false;
        }
    }
    return rem(uprime, modulus(k + 1, vprime)) == x;
}

RecodeCertificate make_recode_certificate(const Natural& u, const Natural& v, const Natural& vprime,
                                          const Natural& x, std::uint64_t k) {
    return RecodeCertificate{k, u, v, vprime, x, i2_recode(u, v, vprime, x, k)};
}

Natural crt(std::span<const Natural> residues, std::span<const Natural> moduli) {
    if (residues.size() != moduli.size()) {
        throw PreconditionViolated("crt: residue and modulus counts differ");
    }
    for (std::size_t a = 0; a < moduli.size(); ++a) {
        if (moduli[a].is_zero()) {
            throw PreconditionViolated("crt: zero modulus");
        }
        if (residues[a] >= moduli[a]) {
            throw PreconditionViolated("crt: residue " + residues[a].to_string() +
                                       " not below modulus " + moduli[a].to_string());
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (gcd(moduli[a], moduli[b]) != kOne) {
                throw NotCoprime("crt: gcd(" + moduli[b].to_string() + ", " +
                                 moduli[a].to_string() + ") > 1");
            }
        }
    }

    mpz_class acc = 0;
    mpz_class m_acc = 1;
    for (std::size_t a = 0; a < moduli.size(); ++a) {
        const mpz_class& m = moduli[a].mpz();
        mpz_class g, s, t;
        // s*m_acc + t*m = 1
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m_acc.get_mpz_t(), m.get_mpz_t());
        mpz_class delta = residues[a].mpz() - acc;
        mpz_class step = delta * s;
        mpz_fdiv_r(step.get_mpz_t(), step.get_mpz_t(), m.get_mpz_t());
        acc += m_acc * step;
        m_acc *= m;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m_acc.get_mpz_t());
    }
    return Natural::from_mpz(std::move(acc));
}

std::vector<Natural> residue_vector(const Natural& u, const Natural& v, std::uint64_t count) {
    std::vector<Natural> out;
    out.reserve(count);
    for (std::uint64_t t = 1; t <= count; ++t) {
        out.push_back(rem(u, modulus(t, v)));
    }
    return out;
}

} // namespace betaseq
