#pragma once

// Axiom checking by exhaustive small boxes plus seeded random sampling.
//
// Universal sentences are tested, not proved. Existential subformulas
// (SUBTRACTION's ∃z, Q3's ∃y) are decided exactly by the model's
// `difference` / `predecessor`, and every witness is re-checked with the
// model's own + before it counts.
//
// Sample t of a run is drawn from an RNG seeded with mix(seed ^ t), so a
// report depends only on (model, axiom, budget), never on evaluation order.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betaseq/errors.hpp"
#include "betaseq/models.hpp"

namespace betaseq {

enum class AxiomId {
    A1, A2, A3, M1, M2, M3, AM, O1, O2, S1, S2, OA, OM,
    L2_i, L2_ii, L2_iii, L2_iv, L2_v, L2_vi,
    Subtraction,
    Q1, Q2, Q3, Q4, Q5, Q6, Q7,
};

std::string_view to_string(AxiomId a);
/// Accepts the printed names: "A1", "L2.iii", "SUBTRACTION", "Q5", ...
std::optional<AxiomId> parse_axiom(std::string_view name);

/// The 13 universal axioms of discretely ordered commutative semirings.
std::span<const AxiomId> pa_minus_axioms();
/// Derived properties (i)-(vi).
std::span<const AxiomId> derived_properties();
std::span<const AxiomId> q_axioms();

std::size_t arity(AxiomId a);
/// Mentions <= (and so is undefined on models without an order).
bool needs_order(AxiomId a);

/// Whether the axiom is true in the model; nat satisfies everything,
/// polynat everything but SUBTRACTION and Q3, qext only the le-free ones
/// that Q requires.
bool expected_to_hold(ModelId model, AxiomId axiom);

struct SampleBudget {
    std::uint64_t random_samples = 10000;
    std::uint64_t seed = 0;
};

struct ModelConfig {
    NatModel nat{};
    PolyNatModel polynat{};
    QExtModel qext{};
};

struct AxiomReport {
    std::string model;
    std::string axiom;
    /// Assignments evaluated, including a failing one.
    std::uint64_t samples = 0;
    /// Variable name -> serialized element; empty when the axiom passed.
    std::optional<Json> counterexample;
    std::uint64_t seed = 0;

    bool passed() const { return !counterexample.has_value(); }
};

/// {"model", "axiom", "samples", "verdict", "counterexample", "seed"}.
Json to_json(const AxiomReport& r);

std::uint64_t mix_seed(std::uint64_t seed);

inline constexpr std::array<const char*, 3> kVariableNames{"x", "y", "z"};

/// Truth of one instance. Throws UnknownAxiom for an order axiom over a
/// model without <=.
template <SemiringModel M>
bool holds(const M& m, AxiomId axiom, std::span<const typename M::Elem> v) {
    using E = typename M::Elem;
    if (v.size() < arity(axiom)) {
        throw PreconditionViolated("holds: too few variables for " + std::string(to_string(axiom)));
    }
    const auto le = [&](const E& a, const E& b) -> bool {
        if constexpr (OrderedSemiringModel<M>) {
            return m.le(a, b);
        } else {
            throw UnknownAxiom(std::string(to_string(axiom)) + " needs an order, which model " +
                               std::string(to_string(M::id)) + " does not have");
            return false;
        }
    };
    const auto implies = [](bool a, bool b) { return !a || b; };

    switch (axiom) {
    case AxiomId::A1:
        return m.add(v[0], m.zero()) == v[0];
    case AxiomId::A2:
        return m.add(v[0], v[1]) == m.add(v[1], v[0]);
    case AxiomId::A3:
        return m.add(m.add(v[0], v[1]), v[2]) == m.add(v[0], m.add(v[1], v[2]));
    case AxiomId::M1:
        return m.mul(v[0], m.one()) == v[0];
    case AxiomId::M2:
        return m.mul(v[0], v[1]) == m.mul(v[1], v[0]);
    case AxiomId::M3:
        return m.mul(m.mul(v[0], v[1]), v[2]) == m.mul(v[0], m.mul(v[1], v[2]));
    case AxiomId::AM:
        return m.mul(v[0], m.add(v[1], v[2])) == m.add(m.mul(v[0], v[1]), m.mul(v[0], v[2]));
    case AxiomId::O1:
        return le(v[0], v[1]) || le(v[1], v[0]);
    case AxiomId::O2:
        return implies(le(v[0], v[1]) && le(v[1], v[2]), le(v[0], v[2]));
    case AxiomId::S1:
        return !le(m.add(v[0], m.one()), v[0]);
    case AxiomId::S2:
        return implies(le(v[0], v[1]), v[0] == v[1] || le(m.add(v[0], m.one()), v[1]));
    case AxiomId::OA:
        return implies(le(v[0], v[1]), le(m.add(v[0], v[2]), m.add(v[1], v[2])));
    case AxiomId::OM:
        return implies(le(v[0], v[1]), le(m.mul(v[0], v[2]), m.mul(v[1], v[2])));
    case AxiomId::L2_i:
        return implies(le(v[0], v[1]) && le(v[1], v[0]), v[0] == v[1]);
    case AxiomId::L2_ii:
        return implies(le(m.add(v[0], v[2]), m.add(v[1], v[2])), le(v[0], v[1]));
    case AxiomId::L2_iii:
        return m.mul(v[0], m.zero()) == m.zero();
    case AxiomId::L2_iv:
        return le(m.zero(), v[0]);
    case AxiomId::L2_v:
        return implies(!(v[2] == m.zero()) && le(m.mul(v[0], v[2]), m.mul(v[1], v[2])),
                       le(v[0], v[1]));
    case AxiomId::L2_vi: {
        const E y1 = m.add(v[1], m.one());
        return le(v[0], y1) == (le(v[0], v[1]) || v[0] == y1);
    }
    case AxiomId::Subtraction:
        if constexpr (OrderedSemiringModel<M>) {
            if (!m.le(v[0], v[1])) {
                return true;
            }
            const auto z = m.difference(v[0], v[1]);
            return z.has_value() && m.add(*z, v[0]) == v[1];
        } else {
            return le(v[0], v[1]);
        }
    case AxiomId::Q1:
        return !(m.succ(v[0]) == m.zero());
    case AxiomId::Q2:
        return implies(m.succ(v[0]) == m.succ(v[1]), v[0] == v[1]);
    case AxiomId::Q3: {
        if (v[0] == m.zero()) {
            return true;
        }
        const auto y = m.predecessor(v[0]);
        return y.has_value() && m.succ(*y) == v[0];
    }
    case AxiomId::Q4:
        return m.add(v[0], m.zero()) == v[0];
    case AxiomId::Q5:
        return m.add(v[0], m.succ(v[1])) == m.succ(m.add(v[0], v[1]));
    case AxiomId::Q6:
        return m.mul(v[0], m.zero()) == m.zero();
    case AxiomId::Q7:
        return m.mul(v[0], m.succ(v[1])) == m.add(m.mul(v[0], v[1]), v[0]);
    }
    throw UnknownAxiom("unhandled axiom id");
}

namespace detail {

template <SemiringModel M>
Json encode_assignment(const M& m, std::span<const typename M::Elem> v) {
    Json out = Json::object();
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[kVariableNames[k]] = m.encode(v[k]);
    }
    return out;
}

/// Draws `count` values for sample t. Later variables sometimes repeat or
/// step an earlier one so that equalities and x+1 = y cases get exercised.
template <SemiringModel M>
std::vector<typename M::Elem> draw(const M& m, std::size_t count, std::uint64_t seed,
                                   std::uint64_t t) {
    std::mt19937_64 rng(mix_seed(seed ^ t));
    std::vector<typename M::Elem> v;
    v.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::uint64_t roll = rng() % 8;
        if (k > 0 && roll == 0) {
            v.push_back(v[rng() % k]);
        } else if (k > 0 && roll == 1) {
            v.push_back(m.succ(v[rng() % k]));
        } else {
            v.push_back(m.sample(rng));
        }
    }
    return v;
}

} // namespace detail

/// Runs `predicate` over box^arity (first variable outermost, box order
/// innermost-fastest) and then `budget.random_samples` random tuples. Stops
/// at the first failing tuple.
template <SemiringModel M, class Predicate>
AxiomReport check_predicate(const M& m, std::string name, std::size_t vars,
                            const SampleBudget& budget, Predicate&& predicate) {
    using E = typename M::Elem;
    AxiomReport report{std::string(to_string(M::id)), std::move(name), 0, std::nullopt, budget.seed};

    const std::vector<E> box = m.box();
    std::vector<std::size_t> idx(vars, 0);
    std::vector<E> v(vars, box.empty() ? m.zero() : box.front());
    bool more = !box.empty();
    while (more) {
        for (std::size_t k = 0; k < vars; ++k) {
            v[k] = box[idx[k]];
        }
        ++report.samples;
        if (!predicate(std::span<const E>(v))) {
            report.counterexample = detail::encode_assignment(m, std::span<const E>(v));
            return report;
        }
        std::size_t k = vars;
        more = false;
        while (k-- > 0) {
            if (++idx[k] < box.size()) {
                more = true;
                break;
            }
            idx[k] = 0;
        }
    }

    for (std::uint64_t t = 0; t < budget.random_samples; ++t) {
        const std::vector<E> sample = detail::draw(m, vars, budget.seed, t);
        ++report.samples;
        if (!predicate(std::span<const E>(sample))) {
            report.counterexample = detail::encode_assignment(m, std::span<const E>(sample));
            return report;
        }
    }
    return report;
}

template <SemiringModel M>
AxiomReport check_axiom(const M& m, AxiomId axiom, const SampleBudget& budget) {
    if constexpr (!OrderedSemiringModel<M>) {
        if (needs_order(axiom)) {
            throw UnknownAxiom(std::string(to_string(axiom)) + " is not defined over model " +
                               std::string(to_string(M::id)) + " (no order)");
        }
    }
    return check_predicate(m, std::string(to_string(axiom)), arity(axiom), budget,
                           [&](std::span<const typename M::Elem> v) { return holds(m, axiom, v); });
}

AxiomReport check_axiom(ModelId model, AxiomId axiom, const SampleBudget& budget,
                        const ModelConfig& config = {});

/// Q1-Q7 over the two-atom model.
std::vector<AxiomReport> check_q_axioms(const SampleBudget& budget, const ModelConfig& config = {});

/// Homomorphism equations for the atom swap f, plus f(f(x)) = x, over the
/// qext box squared and random pairs. Reported as axiom "AUTOMORPHISM".
AxiomReport verify_automorphism(const SampleBudget& budget, const ModelConfig& config = {});

bool automorphism_holds_at(const QElem& x, const QElem& y);

/// Decodes a report's counterexample assignment and evaluates the axiom on
/// it again. Returns true if the instance holds (i.e. the counterexample is
/// not genuine). Throws ParseError on a malformed assignment.
bool reevaluate(ModelId model, AxiomId axiom, const Json& assignment,
                const ModelConfig& config = {});

} // namespace betaseq
