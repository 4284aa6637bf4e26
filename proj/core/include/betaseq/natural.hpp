#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace betaseq {

/// Arbitrary-precision nonnegative integer.
///
/// Closed under +, *, and the total order. Subtraction is only available as
/// checked (`minus`, throws DomainError) or truncated (`monus`), so a negative
/// value can never be observed.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t n); // NOLINT(google-explicit-constructor)

    /// Parses a nonempty string of ASCII decimal digits. Signs, whitespace
    /// and other bases are rejected.
    static std::optional<Natural> parse(std::string_view decimal);
    /// As `parse`, but throws ParseError.
    static Natural from_decimal(std::string_view decimal);

    static Natural pow2(std::size_t exponent);

    std::string to_string() const;
    std::optional<std::uint64_t> to_u64() const;

    bool is_zero() const { return sgn(value_) == 0; }
    std::size_t bit_length() const;

    Natural& operator+=(const Natural& rhs);
    Natural& operator*=(const Natural& rhs);

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

    /// Floor division and remainder; both throw ZeroModulus for d = 0.
    friend Natural operator/(const Natural& n, const Natural& d);
    friend Natural operator%(const Natural& n, const Natural& d);

    Natural operator<<(std::size_t bits) const;
    Natural operator>>(std::size_t bits) const;

    /// this - rhs; throws DomainError when rhs > this.
    Natural minus(const Natural& rhs) const;
    /// max(this - rhs, 0).
    Natural monus(const Natural& rhs) const;

    friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpz_class& mpz() const { return value_; }
    /// Wraps a GMP integer; throws DomainError if it is negative.
    static Natural from_mpz(mpz_class v);

private:
    mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);

/// Uniform value in [0, 2^bits) drawn from 64-bit words of `rng`.
Natural random_bits(std::mt19937_64& rng, std::size_t bits);

/// Uniform value in [0, bound); bound must be positive.
Natural random_below(std::mt19937_64& rng, const Natural& bound);

} // namespace betaseq
