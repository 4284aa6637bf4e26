#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "betaseq/natural.hpp"

namespace betaseq {

enum class Atom { a0, a1 };

/// Element of ℕ ∪ {a0, a1}. The atoms absorb on the left under + and under
/// · by a nonzero right factor, and a standard number times an atom is that
/// atom. The structure satisfies Q but is not commutative:
/// a_i + a_j = a_i, 0 · a_i = a_i while a_i · 0 = 0.
class QElem {
public:
    QElem() : value_(Natural{}) {}
    static QElem standard(Natural n) { return QElem(std::move(n)); }
    static QElem atom(Atom a) { return QElem(a); }

    bool is_atom() const { return std::holds_alternative<Atom>(value_); }
    /// Precondition: !is_atom().
    const Natural& number() const { return std::get<Natural>(value_); }
    /// Precondition: is_atom().
    Atom which() const { return std::get<Atom>(value_); }

    /// "a0", "a1" or the decimal value.
    std::string to_string() const;
    static std::optional<QElem> parse(std::string_view text);

    friend bool operator==(const QElem&, const QElem&) = default;

private:
    explicit QElem(Natural n) : value_(std::move(n)) {}
    explicit QElem(Atom a) : value_(a) {}

    std::variant<Natural, Atom> value_;
};

QElem qadd(const QElem& x, const QElem& y);
QElem qmul(const QElem& x, const QElem& y);
QElem qsucc(const QElem& x);
/// y with S(y) = x: n-1 for n >= 1, a_i for a_i, none for 0.
std::optional<QElem> qpred(const QElem& x);

/// Identity on ℕ, a0 <-> a1.
QElem qext_swap(const QElem& x);

} // namespace betaseq
