#include <gtest/gtest.h>

#include <map>
#include <random>

#include "betaseq/codec.hpp"
#include "betaseq/errors.hpp"
#include "oracles.hpp"

using namespace betaseq;

namespace {

Natural N(std::uint64_t n) { return Natural(n); }

std::vector<Natural> naturals(std::initializer_list<std::uint64_t> xs) {
    std::vector<Natural> out;
    for (auto x : xs) {
        out.emplace_back(x);
    }
    return out;
}

} // namespace

TEST(Pair, Examples) {
    EXPECT_EQ(pair(N(0), N(0)), N(0));
    EXPECT_EQ(pair(N(1), N(2)), N(10));
    EXPECT_EQ(pair(N(2), N(1)), N(11));
}

TEST(Isqrt, Examples) {
    EXPECT_EQ(isqrt(N(0)), N(0));
    EXPECT_EQ(isqrt(N(10)), N(3));
    EXPECT_EQ(isqrt(N(5544)), N(74));
}

TEST(Isqrt, AgreesWithGmpAndBracketsTheRoot) {
    for (std::uint64_t n = 0; n < 20000; ++n) {
        const Natural s = isqrt(N(n));
        ASSERT_EQ(s.mpz(), oracle::gmp_sqrt(mpz_class(static_cast<unsigned long>(n)))) << n;
    }
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 500; ++rep) {
        const Natural n = random_bits(rng, 1 + rng() % 600);
        const Natural s = isqrt(n);
        ASSERT_EQ(s.mpz(), oracle::gmp_sqrt(n.mpz()));
        ASSERT_LE(s * s, n);
        ASSERT_GT((s + N(1)) * (s + N(1)), n);
    }
    // Perfect squares and their neighbours.
    for (std::size_t bits : {32u, 64u, 127u, 128u, 521u}) {
        const Natural r = Natural::pow2(bits) + N(12345);
        EXPECT_EQ(isqrt(r * r), r);
        EXPECT_EQ(isqrt(r * r + r + r), r);
        EXPECT_EQ(isqrt((r * r).minus(N(1))), r.minus(N(1)));
    }
}

TEST(Unpair, Examples) {
    EXPECT_EQ(unpair(N(10)), (PairComponents{N(1), N(2)}));
    EXPECT_EQ(unpair(N(0)), (PairComponents{N(0), N(0)}));
    EXPECT_THROW(unpair(N(3)), NotAPairCode);
    EXPECT_FALSE(try_unpair(N(3)).has_value());
}

TEST(Unpair, ExhaustiveRoundtripBelow200) {
    for (std::uint64_t x = 0; x < 200; ++x) {
        for (std::uint64_t y = 0; y < 200; ++y) {
            ASSERT_EQ(unpair(pair(N(x), N(y))), (PairComponents{N(x), N(y)}));
        }
    }
}

TEST(Unpair, CodeRangeLawMatchesBruteForce) {
    constexpr std::uint64_t limit = 20000;
    const auto codes = oracle::pair_codes_below(limit);
    for (std::uint64_t w = 0; w < limit; ++w) {
        const auto got = try_unpair(N(w));
        const auto it = codes.find(w);
        ASSERT_EQ(got.has_value(), it != codes.end()) << w;
        ASSERT_EQ(is_pair_code(N(w)), got.has_value());
        if (got) {
            ASSERT_EQ(got->x, N(it->second.first));
            ASSERT_EQ(got->y, N(it->second.second));
        } else {
            // Non-codes are exactly (s^2 + s, s^2 + 2s].
            const std::uint64_t s = isqrt(N(w)).to_u64().value();
            ASSERT_GT(w, s * s + s);
            ASSERT_LE(w, s * s + 2 * s);
        }
    }
}

TEST(Unpair, DivisionUniquenessExhaustive) {
    // d*x + y = d*x' + y' with y, y' < d forces x = x', y = y'.
    for (std::uint64_t d = 1; d <= 30; ++d) {
        std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> seen;
        for (std::uint64_t x = 0; x <= 30; ++x) {
            for (std::uint64_t y = 0; y < d; ++y) {
                const auto [it, fresh] = seen.emplace(d * x + y, std::make_pair(x, y));
                ASSERT_TRUE(fresh) << "collision at d=" << d;
                ASSERT_EQ(N(d * x + y) % N(d), N(y));
            }
        }
    }
}

TEST(BetaGet, Examples) {
    EXPECT_EQ(beta_get(N(5544), N(0)), N(5));
    EXPECT_EQ(beta_get(N(5544), N(1)), N(3));
    EXPECT_FALSE(beta_get(N(3), N(0)).has_value());
}

TEST(BetaGet, IsDeterministicAndBounded) {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 300; ++rep) {
        const Natural w = random_bits(rng, rng() % 200);
        const Natural i(rng() % 40);
        const auto a = beta_get(w, i);
        const auto b = beta_get(w, i);
        ASSERT_EQ(a, b);
        if (a) {
            // x <= (i+1) v comes for free with the remainder.
            const auto uv = unpair(w);
            ASSERT_LE(*a, (i + N(1)) * uv.y);
        }
    }
}

TEST(BetaPrimeGet, Examples) {
    EXPECT_EQ(beta_prime_get(N(5544), N(1)), N(3));
    EXPECT_EQ(beta_prime_get(N(3), N(7)), N(0));
    EXPECT_EQ(beta_prime_get(N(0), N(0)), N(0));
}

TEST(BetaPrimeGet, TotalAndAgreesWithBetaOnCodes) {
    for (std::uint64_t w = 0; w <= 10000; ++w) {
        for (std::uint64_t i = 0; i <= 20; ++i) {
            const Natural got = beta_prime_get(N(w), N(i));
            const auto beta = beta_get(N(w), N(i));
            ASSERT_EQ(got, beta ? *beta : N(0));
        }
    }
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        EXPECT_NO_THROW(beta_prime_get(random_bits(rng, 512), N(rng() % 100)));
    }
}

TEST(Seq, EmptyHandle) {
    EXPECT_EQ(seq_empty(), (SeqHandle{N(0), N(0)}));
    EXPECT_TRUE(seq_decode(seq_empty()).empty());
    for (std::uint64_t x : {0u, 1u, 7u, 1000u}) {
        EXPECT_TRUE(verify_seq_step(N(0), N(0), N(x), seq_append(seq_empty(), N(x)).w));
    }
}

TEST(Seq, AppendExample) {
    const SeqHandle h = seq_append(seq_empty(), N(7));
    EXPECT_EQ(h, (SeqHandle{N(1), N(203)}));
    EXPECT_EQ(beta_get(h.w, N(0)), N(7));
}

TEST(Seq, BuildExamples) {
    EXPECT_EQ(seq_build({}), seq_empty());
    const auto five_three = naturals({5, 3});
    EXPECT_EQ(seq_decode(seq_build(five_three)), five_three);
    const auto big = naturals({UINT64_MAX, 0, 1});
    const SeqHandle h = seq_build(big);
    EXPECT_EQ(h.len, N(3));
    EXPECT_EQ(seq_decode(h), big);
    EXPECT_TRUE(is_pair_code(h.w));
}

TEST(Seq, DecodeExamples) {
    EXPECT_EQ(seq_decode({N(2), N(5544)}), naturals({5, 3}));
    EXPECT_TRUE(seq_decode({N(0), N(99)}).empty());
    EXPECT_EQ(seq_decode({N(1), N(3)}), naturals({0}));
}

TEST(Seq, AppendToNonPairCodeKeepsZeroPrefix) {
    // 3 is no pair code, so its first two entries read as 0.
    const SeqHandle h = seq_append({N(2), N(3)}, N(9));
    EXPECT_EQ(seq_decode(h), naturals({0, 0, 9}));
    EXPECT_TRUE(verify_seq_step(N(3), N(2), N(9), h.w));
}

TEST(Seq, ExhaustiveShortLists) {
    std::vector<std::uint64_t> digits;
    for (std::size_t len = 0; len <= 4; ++len) {
        digits.assign(len, 0);
        for (;;) {
            std::vector<Natural> xs(digits.begin(), digits.end());
            SeqHandle h = seq_empty();
            for (const Natural& x : xs) {
                const SeqHandle next = seq_append(h, x);
                ASSERT_TRUE(verify_seq_step(h.w, h.len, x, next.w));
                h = next;
            }
            ASSERT_EQ(seq_decode(h), xs);
            std::size_t d = 0;
            while (d < len && digits[d] == 7) {
                digits[d++] = 0;
            }
            if (d == len) {
                break;
            }
            ++digits[d];
        }
    }
}

TEST(Seq, RandomSeqContract) {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t len = rng() % 13;
        std::vector<Natural> xs;
        for (std::size_t t = 0; t < len; ++t) {
            xs.push_back(random_bits(rng, rng() % 65));
        }
        const SeqHandle s = seq_build(xs);
        ASSERT_EQ(seq_decode(s), xs);
        const Natural x = random_bits(rng, 64);
        const SeqHandle next = seq_append(s, x);
        ASSERT_TRUE(verify_seq_step(s.w, s.len, x, next.w));
        ASSERT_EQ(beta_prime_get(next.w, s.len), x);
    }
}

TEST(Normalize, Examples) {
    const Natural w0 = normalize(N(3), N(2));
    EXPECT_TRUE(is_pair_code(w0));
    EXPECT_EQ(beta_get(w0, N(0)), N(0));
    EXPECT_EQ(beta_get(w0, N(1)), N(0));

    EXPECT_EQ(normalize(N(5544), N(0)), N(0));
    EXPECT_EQ(normalize(N(3), N(0)), N(0));

    const Natural same = normalize(N(5544), N(2));
    EXPECT_EQ(beta_get(same, N(0)), N(5));
    EXPECT_EQ(beta_get(same, N(1)), N(3));
}

TEST(Normalize, BetaMatchesBetaPrimeBelowK) {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const Natural w = random_bits(rng, rng() % 40);
        const std::uint64_t k = rng() % 6;
        const Natural w0 = normalize(w, N(k));
        if (k > 0) {
            ASSERT_TRUE(is_pair_code(w0));
        }
        for (std::uint64_t i = 0; i < k; ++i) {
            ASSERT_EQ(beta_get(w0, N(i)), beta_prime_get(w, N(i)));
        }
    }
}

TEST(VerifySeqStep, Examples) {
    EXPECT_TRUE(verify_seq_step(N(0), N(0), N(7), N(203)));
    EXPECT_FALSE(verify_seq_step(N(0), N(0), N(7), N(0)));
    EXPECT_TRUE(verify_seq_step(N(0), N(0), N(0), N(0)));
    // Changing an earlier entry is rejected.
    const SeqHandle h = seq_build(naturals({5, 3}));
    const SeqHandle other = seq_build(naturals({5, 4, 1}));
    EXPECT_FALSE(verify_seq_step(h.w, h.len, N(1), other.w));
}
