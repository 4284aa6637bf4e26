#include "betaseq/polynat.hpp"

#include <algorithm>

#include "betaseq/errors.hpp"

namespace betaseq {

namespace {

void trim(std::vector<Natural>& c) {
    while (!c.empty() && c.back().is_zero()) {
        c.pop_back();
    }
}

} // namespace

PolyNat::PolyNat(std::vector<Natural> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

PolyNat PolyNat::constant(const Natural& c) { return PolyNat(std::vector<Natural>{c}); }

PolyNat PolyNat::indeterminate() { return PolyNat(std::vector<Natural>{Natural{0}, Natural{1}}); }

Natural PolyNat::coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Natural{}; }

std::string PolyNat::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const Natural& c = coeffs_[d];
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (d == 0 || c != Natural(1)) {
            out += c.to_string();
        }
        if (d >= 1) {
            out += "X";
        }
        if (d >= 2) {
            out += "^" + std::to_string(d);
        }
    }
    return out;
}

PolyNat operator+(const PolyNat& p, const PolyNat& q) {
    const auto& a = p.coeffs_;
    const auto& b = q.coeffs_;
    std::vector<Natural> sum(std::max(a.size(), b.size()));
    for (std::size_t d = 0; d < sum.size(); ++d) {
        if (d < a.size()) {
            sum[d] += a[d];
        }
        if (d < b.size()) {
            sum[d] += b[d];
        }
    }
    return PolyNat(std::move(sum));
}

PolyNat operator*(const PolyNat& p, const PolyNat& q) {
    if (p.is_zero() || q.is_zero()) {
        return PolyNat{};
    }
    const auto& a = p.coeffs_;
    const auto& b = q.coeffs_;
    std::vector<Natural> prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] += a[i] * b[j];
        }
    }
    return PolyNat(std::move(prod));
}

bool lex_le(const PolyNat& p, const PolyNat& q) {
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    // Canonical forms: a longer list means a higher degree.
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    for (std::size_t d = a.size(); d-- > 0;) {
        if (a[d] != b[d]) {
            return a[d] < b[d];
        }
    }
    return true;
}

std::optional<std::size_t> blocking_degree(const PolyNat& x, const PolyNat& y) {
    for (std::size_t d = 0; d < x.coeffs().size(); ++d) {
        if (y.coeff(d) < x.coeffs()[d]) {
            return d;
        }
    }
    return std::nullopt;
}

std::optional<PolyNat> difference(const PolyNat& x, const PolyNat& y) {
    if (blocking_degree(x, y)) {
        return std::nullopt;
    }
    std::vector<Natural> z(y.coeffs().size());
    for (std::size_t d = 0; d < z.size(); ++d) {
        z[d] = y.coeffs()[d].minus(x.coeff(d));
    }
    return PolyNat(std::move(z));
}

SubtractionCounterexample subtraction_counterexample() {
    SubtractionCounterexample ce{PolyNat::constant(Natural(1)), PolyNat::indeterminate(), 0};
    const auto blocked = blocking_degree(ce.x, ce.y);
    if (!lex_le(ce.x, ce.y) || ce.x == ce.y || !blocked || *blocked != ce.degree) {
        throw Error("subtraction counterexample failed its own check");
    }
    return ce;
}

} // namespace betaseq
