#include "betaseq/models.hpp"

#include <algorithm>

#include "betaseq/errors.hpp"

namespace betaseq {

std::string_view to_string(ModelId id) {
    switch (id) {
    case ModelId::nat:
        return "nat";
    case ModelId::polynat:
        return "polynat";
    case ModelId::qext:
        return "qext";
    }
    return "?";
}

std::optional<ModelId> parse_model(std::string_view name) {
    for (const ModelId id : {ModelId::nat, ModelId::polynat, ModelId::qext}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

// nat

std::optional<Natural> NatModel::difference(const Natural& x, const Natural& y) const {
    if (y < x) {
        return std::nullopt;
    }
    return y.minus(x);
}

std::optional<Natural> NatModel::predecessor(const Natural& a) const {
    if (a.is_zero()) {
        return std::nullopt;
    }
    return a.minus(Natural{1});
}

std::vector<Natural> NatModel::box() const {
    std::vector<Natural> out;
    out.reserve(box_bound);
    for (std::uint64_t n = 0; n < box_bound; ++n) {
        out.emplace_back(n);
    }
    return out;
}

Natural NatModel::sample(std::mt19937_64& rng) const {
    if (rng() % 4 == 0) {
        return Natural(rng() % 16);
    }
    const std::size_t bits = rng() % (max_sample_bits + 1);
    return random_bits(rng, bits);
}

std::optional<Natural> NatModel::decode(const Json& j) const {
    if (!j.is_string()) {
        return std::nullopt;
    }
    return Natural::parse(j.get<std::string>());
}

// polynat

std::optional<PolyNat> PolyNatModel::predecessor(const PolyNat& a) const {
    return betaseq::difference(one(), a);
}

std::vector<PolyNat> PolyNatModel::box() const {
    std::vector<PolyNat> out;
    std::vector<Natural> digits(box_degree + 1);
    for (;;) {
        out.emplace_back(digits);
        std::size_t d = 0;
        while (d < digits.size() && digits[d] == Natural(box_coeff)) {
            digits[d] = Natural{};
            ++d;
        }
        if (d == digits.size()) {
            break;
        }
        digits[d] += Natural{1};
    }
    std::sort(out.begin(), out.end(),
              [](const PolyNat& a, const PolyNat& b) { return lex_le(a, b) && !(a == b); });
    return out;
}

PolyNat PolyNatModel::sample(std::mt19937_64& rng) const {
    const std::size_t degree = rng() % (max_sample_degree + 1);
    std::vector<Natural> coeffs(degree + 1);
    for (auto& c : coeffs) {
        switch (rng() % 3) {
        case 0:
            break;
        case 1:
            c = Natural(1 + rng() % 3);
            break;
        default:
            c = Natural(rng());
            break;
        }
    }
    return PolyNat(std::move(coeffs));
}

Json PolyNatModel::encode(const PolyNat& a) const { return polynat_to_json(a); }

std::optional<PolyNat> PolyNatModel::decode(const Json& j) const {
    try {
        return polynat_from_json(j);
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

Json polynat_to_json(const PolyNat& p) {
    Json arr = Json::array();
    for (const Natural& c : p.coeffs()) {
        arr.push_back(c.to_string());
    }
    return arr;
}

PolyNat polynat_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("polynomial must be a JSON array of decimal strings");
    }
    std::vector<Natural> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_string()) {
            throw ParseError("polynomial coefficient must be a decimal string");
        }
        coeffs.push_back(Natural::from_decimal(c.get<std::string>()));
    }
    return PolyNat(std::move(coeffs));
}

// qext

std::vector<QElem> QExtModel::box() const {
    std::vector<QElem> out;
    out.reserve(std_bound + 3);
    for (std::uint64_t n = 0; n <= std_bound; ++n) {
        out.push_back(QElem::standard(Natural(n)));
    }
    out.push_back(QElem::atom(Atom::a0));
    out.push_back(QElem::atom(Atom::a1));
    return out;
}

QElem QExtModel::sample(std::mt19937_64& rng) const {
    switch (rng() % 5) {
    case 0:
        return QElem::atom(rng() % 2 == 0 ? Atom::a0 : Atom::a1);
    case 1:
    case 2:
        return QElem::standard(Natural(rng() % (std_bound + 1)));
    default:
        return QElem::standard(Natural(rng()));
    }
}

std::optional<QElem> QExtModel::decode(const Json& j) const {
    if (!j.is_string()) {
        return std::nullopt;
    }
    return QElem::parse(j.get<std::string>());
}

} // namespace betaseq
