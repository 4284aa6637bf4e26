#include "betaseq/codec.hpp"

#include "betaseq/errors.hpp"
#include "betaseq/witness.hpp"

namespace betaseq {

namespace {

const Natural kOne{1};

std::uint64_t small_length(const Natural& n, const char* what) {
    auto small = n.to_u64();
    if (!small) {
        throw DomainError(std::string(what) + " " + n.to_string() + " exceeds 64 bits");
    }
    return *small;
}

// Appends x at position k of a pair code whose beta values below k are the
// sequence's values.
Natural extend_pair_code(const Natural& w0, std::uint64_t k, const Natural& x) {
    const PairComponents uv = unpair(w0);
    const Natural& u0 = uv.x;
    const Natural& v0 = uv.y;

    const Natural step = lcm_upto(k + 1);
    const Natural floor = std::max(v0, x);
    // Smallest positive multiple of `step` that is >= floor.
    Natural v1 = ((floor + step.monus(kOne)) / step) * step;
    if (v1.is_zero()) {
        v1 = step;
    }
    const Natural u1 = i2_recode(u0, v0, v1, x, k);
    return pair(u1, v1);
}

} // namespace

Natural pair(const Natural& x, const Natural& y) {
    const Natural s = x + y;
    return s * s + x;
}

Natural isqrt(const Natural& n) {
    if (n < Natural(2)) {
        return n;
    }
    // Start above the root; Newton steps then decrease monotonically to it.
    Natural x = Natural::pow2((n.bit_length() + 1) / 2);
    for (;;) {
        Natural y = (x + n / x) >> 1;
        if (y >= x) {
            break;
        }
        x = std::move(y);
    }
    while (x * x > n) {
        x = x.minus(kOne);
    }
    while ((x + kOne) * (x + kOne) <= n) {
        x += kOne;
    }
    return x;
}

bool is_pair_code(const Natural& w) {
    const Natural s = isqrt(w);
    return w.minus(s * s) <= s;
}

std::optional<PairComponents> try_unpair(const Natural& w) {
    const Natural s = isqrt(w);
    const Natural x = w.minus(s * s);
    if (x > s) {
        return std::nullopt;
    }
    return PairComponents{x, s.minus(x)};
}

PairComponents unpair(const Natural& w) {
    auto uv = try_unpair(w);
    if (!uv) {
        throw NotAPairCode(w.to_string() + " is not a pair code");
    }
    return *std::move(uv);
}

std::optional<Natural> beta_get(const Natural& w, const Natural& i) {
    auto uv = try_unpair(w);
    if (!uv) {
        return std::nullopt;
    }
    return rem(uv->x, kOne + (i + kOne) * uv->y);
}

Natural beta_prime_get(const Natural& w, const Natural& i) {
    // Definedness of beta does not depend on i, so "defined at every j <= i"
    // collapses to "w is a pair code".
    auto value = beta_get(w, i);
    return value ? *std::move(value) : Natural{};
}

SeqHandle seq_empty() { return SeqHandle{Natural{}, Natural{}}; }

SeqHandle seq_append(const SeqHandle& s, const Natural& x) {
    const std::uint64_t k = small_length(s.len, "sequence length");
    const Natural w0 = normalize(s.w, s.len);
    return SeqHandle{s.len + kOne, extend_pair_code(w0, k, x)};
}

SeqHandle seq_build(std::span<const Natural> xs) {
    SeqHandle h = seq_empty();
    for (const Natural& x : xs) {
        h = seq_append(h, x);
    }
    return h;
}

std::vector<Natural> seq_decode(const SeqHandle& s) {
    const std::uint64_t len = small_length(s.len, "sequence length");
    std::vector<Natural> out;
    if (len == 0) {
        return out;
    }
    auto uv = try_unpair(s.w);
    if (!uv) {
        return std::vector<Natural>(len);
    }
    out.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) {
        out.push_back(rem(uv->x, kOne + Natural(i + 1) * uv->y));
    }
    return out;
}

Natural normalize(const Natural& w, const Natural& k) {
    if (k.is_zero()) {
        return Natural{};
    }
    if (is_pair_code(w)) {
        return w;
    }
    const std::uint64_t len = small_length(k, "prefix length");
    Natural code{};
    for (std::uint64_t i = 0; i < len; ++i) {
        code = extend_pair_code(code, i, beta_prime_get(w, Natural(i)));
    }
    return code;
}

bool verify_seq_step(const Natural& w, const Natural& k, const Natural& x, const Natural& w_new) {
    const std::uint64_t len = small_length(k, "sequence length");
    for (std::uint64_t i = 0; i < len; ++i) {
        if (beta_prime_get(w_new, Natural(i)) != beta_prime_get(w, Natural(i))) {
            return false;
        }
    }
    return beta_prime_get(w_new, k) == x;
}

} // namespace betaseq
