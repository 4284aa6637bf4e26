#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "betaseq/natural.hpp"

namespace betaseq {

/// Polynomial in X with Natural coefficients, lowest degree first.
/// Canonical form has no trailing zero coefficient; the zero polynomial is
/// the empty list.
class PolyNat {
public:
    PolyNat() = default;
    explicit PolyNat(std::vector<Natural> coeffs);

    static PolyNat constant(const Natural& c);
    /// The indeterminate X.
    static PolyNat indeterminate();

    const std::vector<Natural>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of X^d, 0 beyond the stored length.
    Natural coeff(std::size_t d) const;

    /// e.g. "1 + 2X + X^2"; "0" for the zero polynomial.
    std::string to_string() const;

    friend PolyNat operator+(const PolyNat& p, const PolyNat& q);
    friend PolyNat operator*(const PolyNat& p, const PolyNat& q);
    friend bool operator==(const PolyNat&, const PolyNat&) = default;

private:
    std::vector<Natural> coeffs_;
};

/// Lexicographic order from the highest degree down, after zero padding.
bool lex_le(const PolyNat& p, const PolyNat& q);

/// Lowest degree d with y_d < x_d, i.e. where z_d + x_d = y_d has no
/// solution. std::nullopt when y - x exists coefficient-wise.
std::optional<std::size_t> blocking_degree(const PolyNat& x, const PolyNat& y);

/// The z with z + x = y, if any. Addition is coefficient-wise, so this
/// decides existence exactly.
std::optional<PolyNat> difference(const PolyNat& x, const PolyNat& y);

/// x <= y in ℕ[X] with no z satisfying z + x = y.
struct SubtractionCounterexample {
    PolyNat x;
    PolyNat y;
    /// Degree whose coefficient equation z_d + x_d = y_d is unsolvable.
    std::size_t degree = 0;
};

/// (1, X): 1 < X but z + 1 = X would need z_0 + 1 = 0. Checked before return.
SubtractionCounterexample subtraction_counterexample();

} // namespace betaseq
