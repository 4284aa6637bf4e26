#include "betaseq/qext.hpp"

namespace betaseq {

std::string QElem::to_string() const {
    if (is_atom()) {
        return which() == Atom::a0 ? "a0" : "a1";
    }
    return number().to_string();
}

std::optional<QElem> QElem::parse(std::string_view text) {
    if (text == "a0") {
        return atom(Atom::a0);
    }
    if (text == "a1") {
        return atom(Atom::a1);
    }
    auto n = Natural::parse(text);
    if (!n) {
        return std::nullopt;
    }
    return standard(*std::move(n));
}

QElem qadd(const QElem& x, const QElem& y) {
    if (x.is_atom()) {
        return x;
    }
    if (y.is_atom()) {
        return y;
    }
    return QElem::standard(x.number() + y.number());
}

QElem qmul(const QElem& x, const QElem& y) {
    if (x.is_atom()) {
        const bool y_is_zero = !y.is_atom() && y.number().is_zero();
        return y_is_zero ? QElem{} : x;
    }
    if (y.is_atom()) {
        return y;
    }
    return QElem::standard(x.number() * y.number());
}

QElem qsucc(const QElem& x) { return qadd(x, QElem::standard(Natural(1))); }

std::optional<QElem> qpred(const QElem& x) {
    if (x.is_atom()) {
        return x;
    }
    if (x.number().is_zero()) {
        return std::nullopt;
    }
    return QElem::standard(x.number().minus(Natural(1)));
}

QElem qext_swap(const QElem& x) {
    if (!x.is_atom()) {
        return x;
    }
    return QElem::atom(x.which() == Atom::a0 ? Atom::a1 : Atom::a0);
}

} // namespace betaseq
