#pragma once

// The three concrete structures the axiom checker runs over: the standard
// naturals, lexicographically ordered ℕ[X], and ℕ extended by two absorbing
// atoms. Each model knows how to enumerate a small exhaustive box, draw a
// random element, and (where meaningful) decide the existential parts of
// the subtraction and predecessor axioms.

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "betaseq/natural.hpp"
#include "betaseq/polynat.hpp"
#include "betaseq/qext.hpp"

namespace betaseq {

using Json = nlohmann::ordered_json;

enum class ModelId { nat, polynat, qext };

std::string_view to_string(ModelId id);
std::optional<ModelId> parse_model(std::string_view name);

/// Signature 0, 1, +, ·, successor plus sampling and element (de)serialization.
template <class M>
concept SemiringModel = requires(const M& m, const typename M::Elem& a, std::mt19937_64& rng,
                                 const Json& j) {
    { M::id } -> std::convertible_to<ModelId>;
    { m.zero() } -> std::same_as<typename M::Elem>;
    { m.one() } -> std::same_as<typename M::Elem>;
    { m.add(a, a) } -> std::same_as<typename M::Elem>;
    { m.mul(a, a) } -> std::same_as<typename M::Elem>;
    { m.succ(a) } -> std::same_as<typename M::Elem>;
    { a == a } -> std::convertible_to<bool>;
    { m.predecessor(a) } -> std::same_as<std::optional<typename M::Elem>>;
    { m.box() } -> std::same_as<std::vector<typename M::Elem>>;
    { m.sample(rng) } -> std::same_as<typename M::Elem>;
    { m.encode(a) } -> std::same_as<Json>;
    { m.decode(j) } -> std::same_as<std::optional<typename M::Elem>>;
};

template <class M>
concept OrderedSemiringModel = SemiringModel<M> && requires(const M& m, const typename M::Elem& a) {
    { m.le(a, a) } -> std::convertible_to<bool>;
    /// z with z + x = y, if one exists.
    { m.difference(a, a) } -> std::same_as<std::optional<typename M::Elem>>;
};

struct NatModel {
    using Elem = Natural;
    static constexpr ModelId id = ModelId::nat;

    /// Exhaustive box is {0, ..., box_bound - 1}.
    std::uint64_t box_bound = 12;
    std::size_t max_sample_bits = 256;

    Elem zero() const { return Natural{}; }
    Elem one() const { return Natural{1}; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem succ(const Elem& a) const { return a + Natural{1}; }
    bool le(const Elem& a, const Elem& b) const { return a <= b; }
    std::optional<Elem> difference(const Elem& x, const Elem& y) const;
    std::optional<Elem> predecessor(const Elem& a) const;
    std::vector<Elem> box() const;
    Elem sample(std::mt19937_64& rng) const;
    Json encode(const Elem& a) const { return a.to_string(); }
    std::optional<Elem> decode(const Json& j) const;
};

struct PolyNatModel {
    using Elem = PolyNat;
    static constexpr ModelId id = ModelId::polynat;

    /// Exhaustive box: degree <= box_degree, coefficients <= box_coeff.
    std::size_t box_degree = 2;
    std::uint64_t box_coeff = 3;
    std::size_t max_sample_degree = 5;

    Elem zero() const { return PolyNat{}; }
    Elem one() const { return PolyNat::constant(Natural{1}); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem succ(const Elem& a) const { return a + one(); }
    bool le(const Elem& a, const Elem& b) const { return lex_le(a, b); }
    std::optional<Elem> difference(const Elem& x, const Elem& y) const {
        return betaseq::difference(x, y);
    }
    std::optional<Elem> predecessor(const Elem& a) const;
    /// Sorted ascending in the lexicographic order.
    std::vector<Elem> box() const;
    Elem sample(std::mt19937_64& rng) const;
    Json encode(const Elem& a) const;
    std::optional<Elem> decode(const Json& j) const;
};

/// ℕ ∪ {a0, a1}. No order is defined on it.
struct QExtModel {
    using Elem = QElem;
    static constexpr ModelId id = ModelId::qext;

    /// Exhaustive box: standard part 0..std_bound plus both atoms.
    std::uint64_t std_bound = 50;

    Elem zero() const { return QElem{}; }
    Elem one() const { return QElem::standard(Natural{1}); }
    Elem add(const Elem& a, const Elem& b) const { return qadd(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return qmul(a, b); }
    Elem succ(const Elem& a) const { return qsucc(a); }
    std::optional<Elem> predecessor(const Elem& a) const { return qpred(a); }
    std::vector<Elem> box() const;
    Elem sample(std::mt19937_64& rng) const;
    Json encode(const Elem& a) const { return a.to_string(); }
    std::optional<Elem> decode(const Json& j) const;
};

static_assert(OrderedSemiringModel<NatModel>);
static_assert(OrderedSemiringModel<PolyNatModel>);
static_assert(SemiringModel<QExtModel> && !OrderedSemiringModel<QExtModel>);

/// PolyNat as a JSON array of decimal-string coefficients, lowest degree first.
Json polynat_to_json(const PolyNat& p);
/// Throws ParseError on anything but an array of decimal strings.
PolyNat polynat_from_json(const Json& j);

} // namespace betaseq
