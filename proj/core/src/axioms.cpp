#include "betaseq/axioms.hpp"

#include <utility>

namespace betaseq {

namespace {

struct AxiomInfo {
    AxiomId id;
    std::string_view name;
    std::size_t arity;
    bool needs_order;
};

constexpr std::array<AxiomInfo, 27> kAxioms{{
    {AxiomId::A1, "A1", 1, false},
    {AxiomId::A2, "A2", 2, false},
    {AxiomId::A3, "A3", 3, false},
    {AxiomId::M1, "M1", 1, false},
    {AxiomId::M2, "M2", 2, false},
    {AxiomId::M3, "M3", 3, false},
    {AxiomId::AM, "AM", 3, false},
    {AxiomId::O1, "O1", 2, true},
    {AxiomId::O2, "O2", 3, true},
    {AxiomId::S1, "S1", 1, true},
    {AxiomId::S2, "S2", 2, true},
    {AxiomId::OA, "OA", 3, true},
    {AxiomId::OM, "OM", 3, true},
    {AxiomId::L2_i, "L2.i", 2, true},
    {AxiomId::L2_ii, "L2.ii", 3, true},
    {AxiomId::L2_iii, "L2.iii", 1, false},
    {AxiomId::L2_iv, "L2.iv", 1, true},
    {AxiomId::L2_v, "L2.v", 3, true},
    {AxiomId::L2_vi, "L2.vi", 2, true},
    {AxiomId::Subtraction, "SUBTRACTION", 2, true},
    {AxiomId::Q1, "Q1", 1, false},
    {AxiomId::Q2, "Q2", 2, false},
    {AxiomId::Q3, "Q3", 1, false},
    {AxiomId::Q4, "Q4", 1, false},
    {AxiomId::Q5, "Q5", 2, false},
    {AxiomId::Q6, "Q6", 1, false},
    {AxiomId::Q7, "Q7", 2, false},
}};

const AxiomInfo& info(AxiomId a) {
    for (const auto& entry : kAxioms) {
        if (entry.id == a) {
            return entry;
        }
    }
    throw UnknownAxiom("unknown axiom id");
}

constexpr std::array kPaMinus{AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::M1, AxiomId::M2,
                              AxiomId::M3, AxiomId::AM, AxiomId::O1, AxiomId::O2, AxiomId::S1,
                              AxiomId::S2, AxiomId::OA, AxiomId::OM};
constexpr std::array kDerived{AxiomId::L2_i,   AxiomId::L2_ii, AxiomId::L2_iii,
                             AxiomId::L2_iv, AxiomId::L2_v,  AxiomId::L2_vi};
constexpr std::array kQ{AxiomId::Q1, AxiomId::Q2, AxiomId::Q3, AxiomId::Q4,
                        AxiomId::Q5, AxiomId::Q6, AxiomId::Q7};

template <class Fn>
decltype(auto) with_model(ModelId model, const ModelConfig& config, Fn&& fn) {
    switch (model) {
    case ModelId::nat:
        return fn(config.nat);
    case ModelId::polynat:
        return fn(config.polynat);
    case ModelId::qext:
        return fn(config.qext);
    }
    throw UnknownAxiom("unknown model id");
}

template <SemiringModel M>
std::vector<typename M::Elem> decode_assignment(const M& m, AxiomId axiom, const Json& assignment) {
    if (!assignment.is_object()) {
        throw ParseError("assignment must be a JSON object");
    }
    std::vector<typename M::Elem> v;
    for (std::size_t k = 0; k < arity(axiom); ++k) {
        const char* name = kVariableNames[k];
        if (!assignment.contains(name)) {
            throw ParseError(std::string("assignment is missing variable ") + name);
        }
        auto e = m.decode(assignment.at(name));
        if (!e) {
            throw ParseError(std::string("cannot decode variable ") + name + " for model " +
                             std::string(to_string(M::id)));
        }
        v.push_back(*std::move(e));
    }
    return v;
}

} // namespace

std::string_view to_string(AxiomId a) { return info(a).name; }

std::optional<AxiomId> parse_axiom(std::string_view name) {
    for (const auto& entry : kAxioms) {
        if (entry.name == name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

std::span<const AxiomId> pa_minus_axioms() { return kPaMinus; }
std::span<const AxiomId> derived_properties() { return kDerived; }
std::span<const AxiomId> q_axioms() { return kQ; }

std::size_t arity(AxiomId a) { return info(a).arity; }
bool needs_order(AxiomId a) { return info(a).needs_order; }

bool expected_to_hold(ModelId model, AxiomId axiom) {
    switch (model) {
    case ModelId::nat:
        return true;
    case ModelId::polynat:
        return axiom != AxiomId::Subtraction && axiom != AxiomId::Q3;
    case ModelId::qext:
        // Left-absorbing atoms break both commutativity laws and the
        // associativity of ·: (a0·0)·a1 = a1 but a0·(0·a1) = a0.
        return axiom != AxiomId::A2 && axiom != AxiomId::M2 && axiom != AxiomId::M3 &&
               !needs_order(axiom);
    }
    return false;
}

Json to_json(const AxiomReport& r) {
    Json j;
    j["model"] = r.model;
    j["axiom"] = r.axiom;
    j["samples"] = r.samples;
    j["verdict"] = r.passed() ? "pass" : "counterexample";
    j["counterexample"] = r.counterexample ? *r.counterexample : Json(nullptr);
    j["seed"] = std::to_string(r.seed);
    return j;
}

std::uint64_t mix_seed(std::uint64_t seed) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

AxiomReport check_axiom(ModelId model, AxiomId axiom, const SampleBudget& budget,
                        const ModelConfig& config) {
    return with_model(model, config,
                      [&](const auto& m) { return check_axiom(m, axiom, budget); });
}

std::vector<AxiomReport> check_q_axioms(const SampleBudget& budget, const ModelConfig& config) {
    std::vector<AxiomReport> reports;
    for (const AxiomId a : q_axioms()) {
        reports.push_back(check_axiom(config.qext, a, budget));
    }
    return reports;
}

bool automorphism_holds_at(const QElem& x, const QElem& y) {
    const auto f = qext_swap;
    const QElem zero{};
    const QElem one = QElem::standard(Natural{1});
    return f(zero) == zero && f(one) == one && f(qadd(x, y)) == qadd(f(x), f(y)) &&
           f(qmul(x, y)) == qmul(f(x), f(y)) && f(qsucc(x)) == qsucc(f(x)) && f(f(x)) == x;
}

AxiomReport verify_automorphism(const SampleBudget& budget, const ModelConfig& config) {
    return check_predicate(config.qext, "AUTOMORPHISM", 2, budget,
                           [](std::span<const QElem> v) { return automorphism_holds_at(v[0], v[1]); });
}

bool reevaluate(ModelId model, AxiomId axiom, const Json& assignment, const ModelConfig& config) {
    return with_model(model, config, [&](const auto& m) {
        const auto v = decode_assignment(m, axiom, assignment);
        using E = typename std::decay_t<decltype(m)>::Elem;
        return holds(m, axiom, std::span<const E>(v));
    });
}

} // namespace betaseq
