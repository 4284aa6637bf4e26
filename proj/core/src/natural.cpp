#include "betaseq/natural.hpp"

#include <ostream>

#include "betaseq/errors.hpp"

namespace betaseq {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 target expected");

Natural::Natural(std::uint64_t n) : value_(static_cast<unsigned long>(n)) {}

std::optional<Natural> Natural::parse(std::string_view decimal) {
    if (decimal.empty()) {
        return std::nullopt;
    }
    for (const char c : decimal) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
    }
    Natural n;
    if (n.value_.set_str(std::string(decimal), 10) != 0) {
        return std::nullopt;
    }
    return n;
}

Natural Natural::from_decimal(std::string_view decimal) {
    auto n = parse(decimal);
    if (!n) {
        throw ParseError("not a natural number: '" + std::string(decimal) + "'");
    }
    return *std::move(n);
}

Natural Natural::pow2(std::size_t exponent) {
    Natural n;
    mpz_setbit(n.value_.get_mpz_t(), exponent);
    return n;
}

Natural Natural::from_mpz(mpz_class v) {
    if (sgn(v) < 0) {
        throw DomainError("negative value is not a natural number");
    }
    Natural n;
    n.value_ = std::move(v);
    return n;
}

std::string Natural::to_string() const { return value_.get_str(10); }

std::optional<std::uint64_t> Natural::to_u64() const {
    if (!value_.fits_ulong_p()) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(value_.get_ui());
}

std::size_t Natural::bit_length() const {
    if (is_zero()) {
        return 0;
    }
    return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Natural operator/(const Natural& n, const Natural& d) {
    if (d.is_zero()) {
        throw ZeroModulus();
    }
    Natural q;
    mpz_fdiv_q(q.value_.get_mpz_t(), n.value_.get_mpz_t(), d.value_.get_mpz_t());
    return q;
}

Natural operator%(const Natural& n, const Natural& d) {
    if (d.is_zero()) {
        throw ZeroModulus();
    }
    Natural r;
    mpz_fdiv_r(r.value_.get_mpz_t(), n.value_.get_mpz_t(), d.value_.get_mpz_t());
    return r;
}

Natural Natural::operator<<(std::size_t bits) const {
    Natural r;
    mpz_mul_2exp(r.value_.get_mpz_t(), value_.get_mpz_t(), bits);
    return r;
}

Natural Natural::operator>>(std::size_t bits) const {
    Natural r;
    mpz_fdiv_q_2exp(r.value_.get_mpz_t(), value_.get_mpz_t(), bits);
    return r;
}

Natural Natural::minus(const Natural& rhs) const {
    if (*this < rhs) {
        throw DomainError(to_string() + " - " + rhs.to_string() + " is not a natural number");
    }
    Natural r;
    r.value_ = value_ - rhs.value_;
    return r;
}

Natural Natural::monus(const Natural& rhs) const {
    if (*this <= rhs) {
        return Natural{};
    }
    Natural r;
    r.value_ = value_ - rhs.value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

Natural gcd(const Natural& a, const Natural& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Natural::from_mpz(std::move(g));
}

Natural lcm(const Natural& a, const Natural& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return Natural::from_mpz(std::move(l));
}

Natural random_bits(std::mt19937_64& rng, std::size_t bits) {
    Natural n;
    std::size_t filled = 0;
    while (filled < bits) {
        const std::size_t take = std::min<std::size_t>(64, bits - filled);
        std::uint64_t word = rng();
        if (take < 64) {
            word &= (std::uint64_t{1} << take) - 1;
        }
        n += Natural(word) << filled;
        filled += take;
    }
    return n;
}

Natural random_below(std::mt19937_64& rng, const Natural& bound) {
    if (bound.is_zero()) {
        throw DomainError("random_below: empty range");
    }
    const std::size_t bits = bound.bit_length();
    for (;;) {
        Natural candidate = random_bits(rng, bits);
        if (candidate < bound) {
            return candidate;
        }
    }
}

} // namespace betaseq
