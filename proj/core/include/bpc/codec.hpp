#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <string>
#include <vector>

#include "bpc/affine.hpp"
#include "bpc/bitio.hpp"
#include "bpc/boolfn.hpp"

namespace bpc {

// Bitstream layout ("BPC1" format):
//   magic "BPC1" | n:8 | s:8 | mode:8 | sections...
// Each section is a 32-bit big-endian bit count followed by the payload,
// padded to a byte boundary.
//   mode 0 (plateaued-direct): transform, spectrum, faces
//   mode 1 (bent-dual):        direction, nested plateaued stream, pairs
// For n <= 2 in mode 0 the spectrum section holds the raw truth table.
enum class CodecMode : std::uint8_t { PlateauedDirect = 0, BentDual = 1 };

constexpr char kMagic[4] = {'B', 'P', 'C', '1'};

struct SectionLengths {
    std::size_t header_bits = 0;
    std::size_t transform_bits = 0;
    std::size_t spectrum_bits = 0;
    std::size_t face_bits = 0;
    std::size_t pair_bits = 0;
    std::size_t total_bits = 0;

    // mode-0 payload statistics, recomputed while parsing
    std::uint32_t support_k = 0;
    std::uint32_t odd_faces = 0;
    std::uint32_t zero_sum_faces = 0;

    int n = 0, s = 0;
    CodecMode mode = CodecMode::PlateauedDirect;
    std::shared_ptr<SectionLengths> nested;  // bent-dual only
};

mpz_class binomial(std::uint64_t n, std::uint64_t k);

// Lexicographic rank of a strictly increasing k-subset of {0..N-1} within
// the C(N,k) combinations; unrank inverts it.
mpz_class rank_subset(std::uint64_t universe_size, const std::vector<std::uint32_t>& subset);
std::vector<std::uint32_t> unrank_subset(std::uint64_t universe_size, std::uint64_t k,
                                         const mpz_class& rank);

std::size_t subset_rank_width(std::uint64_t universe_size, std::uint64_t k);

// Spectrum of a plateaued function restricted to the (n-2)-dimensional
// coordinate face complementary to the two given face coordinates, as
// 2^(n-2) values indexed by the projection.
std::vector<std::int32_t> restrict_spectrum(const WalshSpectrum& w, int coord_i, int coord_j);

void encode_spectrum_restriction(BitWriter& bw, const std::vector<std::int32_t>& restricted,
                                 int n, int s);
std::vector<std::int32_t> decode_spectrum_restriction(BitReader& br, int n, int s);

// Coset sums via the spectrum-restriction identity: one signed sum per
// translate of the dual 2-face, indexed by projection.
std::vector<int> sums_from_restricted_spectrum(const std::vector<std::int32_t>& restricted);

struct BallValues {
    int n = 0;
    int r = 0;
    std::vector<std::uint8_t> values;  // weight-then-index order, b(n,r) bits
};

BallValues ball_restriction(const BooleanFunction& f, int r);
BooleanFunction reconstruct_from_ball(const BallValues& bv);

struct EncodeResult {
    std::vector<std::uint8_t> bytes;
};

std::vector<std::uint8_t> encode_plateaued(const BooleanFunction& f, std::uint64_t seed);
BooleanFunction decode_plateaued(const std::vector<std::uint8_t>& bytes);

std::vector<std::uint8_t> encode_bent_dual(const BooleanFunction& f, std::uint64_t seed);
BooleanFunction decode_bent_dual(const std::vector<std::uint8_t>& bytes);

// Dispatches on the mode byte.
BooleanFunction decode(const std::vector<std::uint8_t>& bytes);

SectionLengths bitstream_length_report(const std::vector<std::uint8_t>& bytes);

}  // namespace bpc
