#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "betaseq/natural.hpp"

namespace betaseq {

struct PairComponents {
    Natural x;
    Natural y;

    friend bool operator==(const PairComponents&, const PairComponents&) = default;
};

/// <x, y> = (x + y)^2 + x.
Natural pair(const Natural& x, const Natural& y);

/// Floor square root by Newton iteration; exact for every input.
Natural isqrt(const Natural& n);

/// w is a pair code iff w - s^2 <= s for s = isqrt(w).
bool is_pair_code(const Natural& w);

std::optional<PairComponents> try_unpair(const Natural& w);

/// Inverse of `pair`. Throws NotAPairCode when w - isqrt(w)^2 > isqrt(w).
PairComponents unpair(const Natural& w);

/// For w = <u, v>: u rem (1 + (i+1)v). std::nullopt when w is not a pair code.
std::optional<Natural> beta_get(const Natural& w, const Natural& i);

/// Total variant of beta_get: 0 whenever some position j <= i is undefined,
/// which over the naturals means whenever w is not a pair code.
Natural beta_prime_get(const Natural& w, const Natural& i);

/// A finite sequence: `len` entries read from `w` by beta_prime_get.
/// Codes are not self-delimiting, so the length travels beside the code.
struct SeqHandle {
    Natural len;
    Natural w;

    friend bool operator==(const SeqHandle&, const SeqHandle&) = default;
};

/// (0, 0); 0 = <0, 0> decodes to all zeros.
SeqHandle seq_empty();

/// Returns (len + 1, w') with w' agreeing with s.w at every position below
/// s.len and holding x at position s.len.
SeqHandle seq_append(const SeqHandle& s, const Natural& x);

SeqHandle seq_build(std::span<const Natural> xs);

std::vector<Natural> seq_decode(const SeqHandle& s);

/// A pair code w0 with beta_get(w0, i) = beta_prime_get(w, i) for all i < k.
/// Pair codes are returned unchanged; other codes are rebuilt from their
/// (all-zero) values. normalize(w, 0) = 0.
Natural normalize(const Natural& w, const Natural& k);

/// True iff beta_prime_get(w_new, i) = beta_prime_get(w, i) for i < k and
/// beta_prime_get(w_new, k) = x.
bool verify_seq_step(const Natural& w, const Natural& k, const Natural& x, const Natural& w_new);

} // namespace betaseq
