#include <doctest.h>

#include <algorithm>
#include <random>

#include "bpc/codec.hpp"
#include "oracles.hpp"

using namespace bpc;

namespace {

BooleanFunction quad_n4() {
    return oracle::make_fn(4, [](std::uint32_t x) {
        return (oracle::coord(4, x, 1) & oracle::coord(4, x, 2)) ^
               (oracle::coord(4, x, 3) & oracle::coord(4, x, 4));
    });
}

BooleanFunction random_low_degree(int n, int r, std::mt19937_64& rng) {
    AnfPolynomial p(n);
    for (std::uint32_t y = 0; y < p.coeffs.size(); ++y) {
        if (std::popcount(y) <= r && (rng() & 1)) p.coeffs.set(y, true);
    }
    return truth_table(p);
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32) == mpz_class("1832624140942590534"));
}

TEST_CASE("subset rank and unrank") {
    CHECK(rank_subset(4, {0, 1}) == 0);
    CHECK(rank_subset(4, {2, 3}) == 5);

    // exhaustive over C(8,3) in lexicographic order
    mpz_class expected = 0;
    for (std::uint32_t a = 0; a < 8; ++a) {
        for (std::uint32_t b = a + 1; b < 8; ++b) {
            for (std::uint32_t c = b + 1; c < 8; ++c) {
                std::vector<std::uint32_t> sub{a, b, c};
                REQUIRE(rank_subset(8, sub) == expected);
                REQUIRE(unrank_subset(8, 3, expected) == sub);
                ++expected;
            }
        }
    }
    CHECK(expected == binomial(8, 3));

    CHECK(rank_subset(8, {}) == 0);
    CHECK(unrank_subset(8, 0, 0).empty());
    CHECK_THROWS_AS(rank_subset(4, {1, 1}), IndexOutOfRange);
    CHECK_THROWS_AS(rank_subset(4, {5}), IndexOutOfRange);
    CHECK_THROWS_AS(unrank_subset(8, 3, 56), IndexOutOfRange);
    CHECK_THROWS_AS(unrank_subset(3, 7, 0), IndexOutOfRange);
}

TEST_CASE("subset rank width") {
    CHECK(subset_rank_width(8, 3) == 6);   // 56 values
    CHECK(subset_rank_width(4, 2) == 3);   // 6 values
    CHECK(subset_rank_width(10, 0) == 0);
    CHECK(subset_rank_width(10, 10) == 0);
}

TEST_CASE("spectrum restriction codec") {
    BooleanFunction f = quad_n4();
    WalshSpectrum w = walsh_transform(f);
    std::vector<std::int32_t> rest = restrict_spectrum(w, 1, 2);
    CHECK(rest.size() == 4);
    // face coords {1,2}: restriction keeps indices with x1 = x2 = 0
    for (std::uint32_t a = 0; a < 4; ++a) CHECK(rest[a] == w.values[a]);

    BitWriter bw;
    encode_spectrum_restriction(bw, rest, 4, 0);
    bw.align_byte();
    auto bytes = bw.take();
    BitReader br(bytes.data(), bytes.size());
    CHECK(decode_spectrum_restriction(br, 4, 0) == rest);

    // off-amplitude values are rejected
    BitWriter bad;
    CHECK_THROWS_AS(encode_spectrum_restriction(bad, {4, 2, 0, 0}, 4, 0), NotPlateauedOnFace);
}

TEST_CASE("coset sums recovered from the restricted spectrum") {
    std::mt19937_64 rng(47);
    for (int n : {3, 4, 5, 6}) {
        for (int rep = 0; rep < 10; ++rep) {
            BooleanFunction f = oracle::random_fn(n, rng);
            WalshSpectrum w = walsh_transform(f);
            // face coords {1,2}: translate a is the low n-2 bits, face points
            // fill the top two
            std::vector<int> sums = sums_from_restricted_spectrum(restrict_spectrum(w, 1, 2));
            for (std::uint32_t a = 0; a < sums.size(); ++a) {
                int direct = 0;
                for (std::uint32_t t = 0; t < 4; ++t) {
                    direct += f.get(a | (t << (n - 2))) ? -1 : 1;
                }
                REQUIRE(sums[a] == direct);
            }
        }
    }
}

TEST_CASE("ball restriction and reconstruction") {
    std::mt19937_64 rng(53);
    for (int n : {4, 5, 7}) {
        for (int r = 0; r <= n; ++r) {
            BooleanFunction f = random_low_degree(n, r, rng);
            BallValues bv = ball_restriction(f, r);
            mpz_class expect = 0;
            for (int w = 0; w <= r; ++w) expect += binomial(n, w);
            CHECK(bv.values.size() == expect);
            CHECK(reconstruct_from_ball(bv) == f);
        }
    }
    CHECK_THROWS_AS(ball_restriction(BooleanFunction(3), 4), BadRadius);
    CHECK_THROWS_AS(ball_restriction(BooleanFunction(3), -1), BadRadius);
    BallValues short_bv{3, 1, {0, 1}};
    CHECK_THROWS_AS(reconstruct_from_ball(short_bv), DimensionMismatch);
}

TEST_CASE("plateaued roundtrip at tiny sizes") {
    // every 2-variable function is plateaued; all use the raw path
    for (std::uint32_t code = 0; code < 16; ++code) {
        BooleanFunction f(2);
        f.words()[0] = code;
        auto bytes = encode_plateaued(f, 1);
        CHECK(decode(bytes) == f);
    }
    BooleanFunction f1(1);
    f1.set(1, true);
    CHECK(decode(encode_plateaued(f1, 1)) == f1);
}

TEST_CASE("plateaued roundtrip") {
    BooleanFunction f = quad_n4();
    auto bytes = encode_plateaued(f, 1);
    CHECK(decode(bytes) == f);
    CHECK(decode_plateaued(bytes) == f);

    // 1-plateaued at n=3 and n=5
    BooleanFunction f3 = oracle::make_fn(3, [](std::uint32_t x) {
        return oracle::coord(3, x, 1) & oracle::coord(3, x, 2);
    });
    CHECK(decode(encode_plateaued(f3, 1)) == f3);

    BooleanFunction f5 = oracle::make_fn(5, [](std::uint32_t x) {
        return (oracle::coord(5, x, 1) & oracle::coord(5, x, 2)) ^
               (oracle::coord(5, x, 3) & oracle::coord(5, x, 4)) ^
               oracle::coord(5, x, 5);
    });
    REQUIRE(classify_plateau(f5) == PlateauClass::plateaued(1));
    CHECK(decode(encode_plateaued(f5, 1)) == f5);

    BooleanFunction cubic = oracle::make_fn(3, [](std::uint32_t x) { return int(x == 7); });
    CHECK_THROWS_AS(encode_plateaued(cubic, 1), NotPlateaued);
}

TEST_CASE("bent dual roundtrip") {
    BooleanFunction f = quad_n4();
    auto bytes = encode_bent_dual(f, 1);
    CHECK(decode(bytes) == f);
    CHECK(decode_bent_dual(bytes) == f);

    BooleanFunction f2 = oracle::make_fn(2, [](std::uint32_t x) {
        return oracle::coord(2, x, 1) & oracle::coord(2, x, 2);
    });
    CHECK(decode(encode_bent_dual(f2, 1)) == f2);

    BooleanFunction f3 = oracle::make_fn(3, [](std::uint32_t x) {
        return oracle::coord(3, x, 1) & oracle::coord(3, x, 2);
    });
    CHECK_THROWS_AS(encode_bent_dual(f3, 1), NotBent);
}

TEST_CASE("malformed streams are rejected") {
    CHECK_THROWS_AS(decode({}), MalformedStream);
    CHECK_THROWS_AS(decode({'B', 'P', 'C', '1'}), MalformedStream);
    CHECK_THROWS_AS(decode({'X', 'Y', 'Z', 'W', 4, 0, 0, 0, 0, 0, 0}), MalformedStream);

    auto bytes = encode_plateaued(quad_n4(), 1);
    for (std::size_t cut : {std::size_t{5}, std::size_t{8}, bytes.size() - 1}) {
        std::vector<std::uint8_t> trunc(bytes.begin(), bytes.begin() + long(cut));
        CHECK_THROWS_AS(decode(trunc), MalformedStream);
    }
    // unknown mode byte
    auto bad_mode = bytes;
    bad_mode[6] = 9;
    CHECK_THROWS_AS(decode(bad_mode), MalformedStream);
}

TEST_CASE("length report accounting") {
    BooleanFunction f = quad_n4();
    auto bytes = encode_plateaued(f, 1);
    SectionLengths rep = bitstream_length_report(bytes);
    CHECK(rep.n == 4);
    CHECK(rep.s == 0);
    CHECK(rep.mode == CodecMode::PlateauedDirect);
    CHECK(rep.header_bits == 56);
    // A (n^2) + b,c (2n) + d (1) + two face coordinates
    CHECK(rep.transform_bits == 16 + 8 + 1 + 2 * 2);
    CHECK(rep.total_bits == bytes.size() * 8);

    // spectrum section: support count in n-1 bits, rank, one sign per element
    const std::size_t spectrum_budget =
        std::size_t(rep.n - 1) + subset_rank_width(4, rep.support_k) + rep.support_k;
    CHECK(rep.spectrum_bits == spectrum_budget);

    // face section: 2 bits per odd face plus a packed base-6 block
    mpz_class pow6;
    mpz_ui_pow_ui(pow6.get_mpz_t(), 6, rep.zero_sum_faces);
    const std::size_t zero_bits =
        rep.zero_sum_faces == 0 ? 0 : mpz_sizeinbase(mpz_class(pow6 - 1).get_mpz_t(), 2);
    CHECK(rep.face_bits == 2 * rep.odd_faces + zero_bits);

    SectionLengths drep = bitstream_length_report(encode_bent_dual(f, 1));
    CHECK(drep.mode == CodecMode::BentDual);
    REQUIRE(drep.nested != nullptr);
    CHECK(drep.nested->n == 3);
    CHECK(drep.nested->mode == CodecMode::PlateauedDirect);
}

TEST_CASE("roundtrips on constructed bent functions at n = 6 and 8") {
    std::mt19937_64 rng(59);
    for (int m : {3, 4}) {
        BooleanFunction h = oracle::random_fn(m, rng);
        std::vector<std::uint32_t> perm(std::uint32_t{1} << m);
        for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        // bent construction <x, perm(y)> + h(y); the encoder must not need to
        // know that
        BooleanFunction f(2 * m);
        for (std::uint32_t v = 0; v < f.size(); ++v) {
            const std::uint32_t x = v >> m, y = v & ((std::uint32_t{1} << m) - 1);
            f.set(v, (std::popcount(x & perm[y]) & 1) ^ int(h.get(y)));
        }
        auto direct = encode_plateaued(f, 1);
        auto dual = encode_bent_dual(f, 1);
        CHECK(decode(direct) == f);
        CHECK(decode(dual) == f);
    }
}
