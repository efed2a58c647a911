#include "bpc/codec.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "bpc/bitio.hpp"

namespace bpc {

namespace {

int ceil_log2(std::uint32_t v) {
    return v <= 1 ? 0 : 32 - std::countl_zero(v - 1);
}

// insert a 0 bit at position pos
std::uint32_t insert_zero_bit(std::uint32_t x, int pos) {
    const std::uint32_t low = (std::uint32_t{1} << pos) - 1;
    return ((x & ~low) << 1) | (x & low);
}

struct FacePair {
    int n, pi, pj;  // pi > pj, index bit positions of the two face coords

    FacePair(int n_, int ci, int cj)
        : n(n_), pi(n_ - std::min(ci, cj)), pj(n_ - std::max(ci, cj)) {}

    std::uint32_t expand(std::uint32_t a) const {
        return insert_zero_bit(insert_zero_bit(a, pj), pi);
    }
    std::uint32_t point(std::uint32_t base, int t) const {
        std::uint32_t p = base;
        if (t & 2) p |= std::uint32_t{1} << pi;
        if (t & 1) p |= std::uint32_t{1} << pj;
        return p;
    }
};

// the six balanced sign patterns on a face, ascending
constexpr unsigned kZeroSumPatterns[6] = {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100};

int zero_sum_digit(unsigned pat) {
    for (int d = 0; d < 6; ++d) {
        if (kZeroSumPatterns[d] == pat) return d;
    }
    throw SumMismatch("face pattern inconsistent with zero sum");
}

std::size_t mixed_radix_width(std::uint32_t digit_count) {
    if (digit_count == 0) return 0;
    mpz_class top;
    mpz_ui_pow_ui(top.get_mpz_t(), 6, digit_count);
    return mpz_sizeinbase(mpz_class(top - 1).get_mpz_t(), 2);
}

struct Section {
    std::size_t bits = 0;
    std::vector<std::uint8_t> bytes;
};

Section take_section(BitWriter&& bw) {
    Section s;
    s.bits = bw.bit_count();
    bw.align_byte();
    s.bytes = bw.take();
    return s;
}

void append_section(std::vector<std::uint8_t>& out, const Section& s) {
    out.push_back(std::uint8_t(s.bits >> 24));
    out.push_back(std::uint8_t(s.bits >> 16));
    out.push_back(std::uint8_t(s.bits >> 8));
    out.push_back(std::uint8_t(s.bits));
    out.insert(out.end(), s.bytes.begin(), s.bytes.end());
}

struct SectionView {
    std::size_t bits = 0;
    const std::uint8_t* data = nullptr;
    std::size_t byte_len = 0;

    BitReader reader() const { return BitReader(data, byte_len); }
};

struct StreamView {
    int n = 0, s = 0;
    CodecMode mode = CodecMode::PlateauedDirect;
    std::vector<SectionView> sections;
};

StreamView parse_stream(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 7 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw MalformedStream("bad magic");
    }
    StreamView v;
    v.n = bytes[4];
    v.s = bytes[5];
    if (bytes[6] > 1) throw MalformedStream("unknown mode");
    v.mode = static_cast<CodecMode>(bytes[6]);
    if (v.n < 1 || v.n > kMaxVars) throw MalformedStream("bad variable count");
    std::size_t pos = 7;
    while (pos < bytes.size()) {
        if (pos + 4 > bytes.size()) throw MalformedStream("truncated section header");
        std::size_t bits = (std::size_t(bytes[pos]) << 24) | (std::size_t(bytes[pos + 1]) << 16) |
                           (std::size_t(bytes[pos + 2]) << 8) | std::size_t(bytes[pos + 3]);
        pos += 4;
        std::size_t len = (bits + 7) / 8;
        if (pos + len > bytes.size()) throw MalformedStream("truncated section");
        v.sections.push_back({bits, bytes.data() + pos, len});
        pos += len;
    }
    if (v.sections.size() != 3) throw MalformedStream("expected three sections");
    return v;
}

void write_header(std::vector<std::uint8_t>& out, int n, int s, CodecMode mode) {
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(std::uint8_t(n));
    out.push_back(std::uint8_t(s));
    out.push_back(std::uint8_t(mode));
}

Section encode_transform(const AffineTransform& t, int ci, int cj) {
    BitWriter bw;
    const int n = t.A.n;
    for (int i = 0; i < n; ++i) bw.write(t.A.rows[i], n);
    bw.write(t.b, n);
    bw.write(t.c, n);
    bw.write_bit(t.d);
    const int cw = ceil_log2(std::uint32_t(n));
    bw.write(std::uint32_t(ci - 1), cw);
    bw.write(std::uint32_t(cj - 1), cw);
    return take_section(std::move(bw));
}

void decode_transform(BitReader& br, int n, AffineTransform& t, int& ci, int& cj) {
    t.A.n = n;
    t.A.rows.assign(n, 0);
    for (int i = 0; i < n; ++i) t.A.rows[i] = Vec(br.read(n));
    t.b = Vec(br.read(n));
    t.c = Vec(br.read(n));
    t.d = br.read_bit();
    const int cw = ceil_log2(std::uint32_t(n));
    ci = int(br.read(cw)) + 1;
    cj = int(br.read(cw)) + 1;
    if (ci < 1 || cj < 1 || ci > n || cj > n || (n > 2 && ci >= cj)) {
        throw MalformedStream("bad face coordinates");
    }
}

std::vector<std::uint8_t> known_mask_reconstruct(int n, int r,
                                                 const std::vector<std::uint8_t>& table_bits) {
    // table_bits: full 2^n table with unknown entries zero; callers guarantee
    // all of B(n,r) is known
    BooleanFunction t = BooleanFunction::from_bits(n, table_bits);
    mobius_in_place(n, t.words());
    for (std::uint32_t y = 0; y < t.size(); ++y) {
        if (std::popcount(y) > r) t.set(y, false);
    }
    mobius_in_place(n, t.words());
    std::vector<std::uint8_t> out(t.size());
    for (std::uint32_t x = 0; x < t.size(); ++x) out[x] = t.get(x);
    return out;
}

int face_region_radius(int n, int s) {
    return (n - s) / 2 + 1;  // n + s even
}

}  // namespace

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class b;
    if (k > n) return 0;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

mpz_class rank_subset(std::uint64_t universe_size, const std::vector<std::uint32_t>& subset) {
    mpz_class rank = 0;
    const std::uint64_t k = subset.size();
    std::uint32_t prev = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint32_t c = subset[i];
        if (c >= universe_size || (i > 0 && c <= subset[i - 1])) {
            throw IndexOutOfRange("subset must be strictly increasing and within range");
        }
        for (std::uint32_t j = prev; j < c; ++j) {
            rank += binomial(universe_size - 1 - j, k - 1 - i);
        }
        prev = c + 1;
    }
    return rank;
}

std::vector<std::uint32_t> unrank_subset(std::uint64_t universe_size, std::uint64_t k,
                                         const mpz_class& rank) {
    if (k > universe_size) throw IndexOutOfRange("subset larger than universe");
    mpz_class rest = rank;
    if (rest < 0 || rest >= binomial(universe_size, k)) {
        throw IndexOutOfRange("rank out of range");
    }
    std::vector<std::uint32_t> subset;
    subset.reserve(k);
    std::uint32_t next = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
        for (std::uint32_t c = next;; ++c) {
            mpz_class block = binomial(universe_size - 1 - c, k - 1 - i);
            if (rest < block) {
                subset.push_back(c);
                next = c + 1;
                break;
            }
            rest -= block;
        }
    }
    return subset;
}

std::size_t subset_rank_width(std::uint64_t universe_size, std::uint64_t k) {
    mpz_class c = binomial(universe_size, k);
    if (c <= 1) return 0;
    return mpz_sizeinbase(mpz_class(c - 1).get_mpz_t(), 2);
}

std::vector<std::int32_t> restrict_spectrum(const WalshSpectrum& w, int coord_i, int coord_j) {
    const FacePair face(w.n, coord_i, coord_j);
    const std::uint32_t size = std::uint32_t{1} << (w.n - 2);
    std::vector<std::int32_t> out(size);
    for (std::uint32_t a = 0; a < size; ++a) out[a] = w.values[face.expand(a)];
    return out;
}

void encode_spectrum_restriction(BitWriter& bw, const std::vector<std::int32_t>& restricted,
                                 int n, int s) {
    const std::int32_t amp = std::int32_t{1} << ((n + s) / 2);
    std::vector<std::uint32_t> support;
    for (std::uint32_t a = 0; a < restricted.size(); ++a) {
        if (restricted[a] == 0) continue;
        if (restricted[a] != amp && restricted[a] != -amp) throw NotPlateauedOnFace();
        support.push_back(a);
    }
    const std::uint32_t k = std::uint32_t(support.size());
    bw.write(k, n - 1);
    bw.write_mpz(rank_subset(restricted.size(), support), subset_rank_width(restricted.size(), k));
    for (auto a : support) bw.write_bit(restricted[a] < 0);
}

std::vector<std::int32_t> decode_spectrum_restriction(BitReader& br, int n, int s) {
    const std::int32_t amp = std::int32_t{1} << ((n + s) / 2);
    const std::uint32_t size = std::uint32_t{1} << (n - 2);
    const std::uint32_t k = std::uint32_t(br.read(n - 1));
    if (k > size) throw MalformedStream("spectrum support too large");
    mpz_class rank = br.read_mpz(subset_rank_width(size, k));
    std::vector<std::uint32_t> support = unrank_subset(size, k, rank);
    std::vector<std::int32_t> out(size, 0);
    for (auto a : support) out[a] = br.read_bit() ? -amp : amp;
    return out;
}

std::vector<int> sums_from_restricted_spectrum(const std::vector<std::int32_t>& restricted) {
    std::vector<std::int64_t> v(restricted.begin(), restricted.end());
    const std::uint32_t size = std::uint32_t(v.size());
    for (std::uint32_t h = 1; h < size; h <<= 1) {
        for (std::uint32_t i = 0; i < size; i += h << 1) {
            for (std::uint32_t j = i; j < i + h; ++j) {
                std::int64_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
    std::vector<int> sums(size);
    for (std::uint32_t a = 0; a < size; ++a) {
        if (v[a] % std::int64_t(size) != 0) throw SumMismatch("non-integral coset sum");
        sums[a] = int(v[a] / std::int64_t(size));
    }
    return sums;
}

BallValues ball_restriction(const BooleanFunction& f, int r) {
    if (r < 0 || r > f.n()) throw BadRadius();
    BallValues bv{f.n(), r, {}};
    for (int w = 0; w <= r; ++w) {
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            if (std::popcount(x) == w) bv.values.push_back(f.get(x));
        }
    }
    return bv;
}

BooleanFunction reconstruct_from_ball(const BallValues& bv) {
    const std::uint32_t size = std::uint32_t{1} << bv.n;
    std::vector<std::uint8_t> table(size, 0);
    std::size_t pos = 0;
    for (int w = 0; w <= bv.r; ++w) {
        for (std::uint32_t x = 0; x < size; ++x) {
            if (std::popcount(x) == w) {
                if (pos >= bv.values.size()) throw DimensionMismatch("short ball values");
                table[x] = bv.values[pos++];
            }
        }
    }
    if (pos != bv.values.size()) throw DimensionMismatch("excess ball values");
    return BooleanFunction::from_bits(bv.n, known_mask_reconstruct(bv.n, bv.r, table));
}

namespace {

Section encode_faces_for(const BooleanFunction& g, const std::vector<int>& sums,
                         const FacePair& face, int r) {
    BitWriter bw;
    std::vector<int> zero_digits;
    for (std::uint32_t a = 0; a < sums.size(); ++a) {
        if (std::popcount(a) > r) continue;
        const std::uint32_t base = face.expand(a);
        unsigned pat = 0;
        for (int t = 0; t < 4; ++t) {
            if (g.get(face.point(base, t))) pat |= 1u << t;
        }
        const int ones = std::popcount(pat);
        const int sum = 4 - 2 * ones;
        if (sum != sums[a]) throw SumMismatch("coset sum disagrees with face values");
        switch (sum) {
            case 4: case -4:
                break;
            case 2:
                bw.write(std::uint32_t(std::countr_zero(pat)), 2);
                break;
            case -2:
                bw.write(std::uint32_t(std::countr_zero(~pat & 0xfu)), 2);
                break;
            case 0:
                zero_digits.push_back(zero_sum_digit(pat));
                break;
            default:
                throw SumMismatch("coset sum out of range");
        }
    }
    mpz_class packed = 0;
    for (std::size_t i = zero_digits.size(); i-- > 0;) {
        packed = packed * 6 + zero_digits[i];
    }
    bw.write_mpz(packed, mixed_radix_width(std::uint32_t(zero_digits.size())));
    return take_section(std::move(bw));
}

// returns the full table with face-decoded values, plus a mask of known points
std::vector<std::uint8_t> decode_faces_into_table(BitReader& br, const std::vector<int>& sums,
                                                  const FacePair& face, int r, int n) {
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    struct Pending { std::uint32_t base; };
    std::vector<std::uint32_t> zero_bases;
    for (std::uint32_t a = 0; a < sums.size(); ++a) {
        if (std::popcount(a) > r) continue;
        const std::uint32_t base = face.expand(a);
        switch (sums[a]) {
            case 4:
                break;  // all zeros already
            case -4:
                for (int t = 0; t < 4; ++t) table[face.point(base, t)] = 1;
                break;
            case 2: {
                const int t = int(br.read(2));
                table[face.point(base, t)] = 1;
                break;
            }
            case -2: {
                const int t = int(br.read(2));
                for (int u = 0; u < 4; ++u) table[face.point(base, u)] = (u != t);
                break;
            }
            case 0:
                zero_bases.push_back(base);
                break;
            default:
                throw SumMismatch("decoded coset sum out of range");
        }
    }
    mpz_class packed = br.read_mpz(mixed_radix_width(std::uint32_t(zero_bases.size())));
    for (auto base : zero_bases) {
        const unsigned digit = mpz_class(packed % 6).get_ui();
        packed /= 6;
        const unsigned pat = kZeroSumPatterns[digit];
        for (int t = 0; t < 4; ++t) table[face.point(base, t)] = (pat >> t) & 1;
    }
    return table;
}

struct PlateauedBody {
    Section transform, spectrum, faces;
    std::size_t byte_size() const {
        return transform.bytes.size() + spectrum.bytes.size() + faces.bytes.size() + 12;
    }
};

PlateauedBody build_plateaued_body(const BooleanFunction& f, int s, int r, std::uint64_t seed,
                                   int ci, int cj) {
    NormalizationResult nr = normalize_ea(f, s, r, seed, {ci, cj});
    const WalshSpectrum w = walsh_transform(nr.g);
    const FacePair face(f.n(), ci, cj);
    std::vector<std::int32_t> rest = restrict_spectrum(w, ci, cj);

    PlateauedBody body;
    body.transform = encode_transform(nr.certificate.transform, ci, cj);
    BitWriter sw;
    encode_spectrum_restriction(sw, rest, f.n(), s);
    body.spectrum = take_section(std::move(sw));
    body.faces = encode_faces_for(nr.g, sums_from_restricted_spectrum(rest), face, r);
    return body;
}

}  // namespace

std::vector<std::uint8_t> encode_plateaued(const BooleanFunction& f, std::uint64_t seed) {
    const PlateauClass cls = classify_plateau(f);
    if (!cls.is_plateaued()) throw NotPlateaued();
    const int n = f.n(), s = cls.s;

    std::vector<std::uint8_t> out;
    write_header(out, n, s, CodecMode::PlateauedDirect);

    if (n <= 2) {
        // degenerate sizes: store the table raw behind the uniform layout
        append_section(out, encode_transform(AffineTransform::identity(n), 1, n > 1 ? 2 : 1));
        BitWriter bw;
        for (std::uint32_t x = 0; x < f.size(); ++x) bw.write_bit(f.get(x));
        append_section(out, take_section(std::move(bw)));
        append_section(out, Section{});
        return out;
    }

    const int r = std::min(face_region_radius(n, s), n);
    bool found = false;
    PlateauedBody best;
    for (int ci = 1; ci <= n; ++ci) {
        for (int cj = ci + 1; cj <= n; ++cj) {
            PlateauedBody body;
            try {
                body = build_plateaued_body(f, s, r, seed, ci, cj);
            } catch (const SearchExhausted&) {
                continue;
            }
            if (!found || body.byte_size() < best.byte_size()) {
                best = std::move(body);
                found = true;
            }
        }
    }
    if (!found) throw SearchExhausted("no face admits a normalization");
    append_section(out, best.transform);
    append_section(out, best.spectrum);
    append_section(out, best.faces);
    return out;
}

BooleanFunction decode_plateaued(const std::vector<std::uint8_t>& bytes) {
    StreamView v = parse_stream(bytes);
    if (v.mode != CodecMode::PlateauedDirect) throw MalformedStream("not a plateaued stream");
    const int n = v.n, s = v.s;

    BitReader tr = v.sections[0].reader();
    AffineTransform t;
    int ci = 0, cj = 0;
    decode_transform(tr, n, t, ci, cj);

    if (n <= 2) {
        BitReader br = v.sections[1].reader();
        BooleanFunction f(n);
        for (std::uint32_t x = 0; x < f.size(); ++x) f.set(x, br.read_bit());
        return f;
    }

    BitReader sr = v.sections[1].reader();
    std::vector<std::int32_t> rest = decode_spectrum_restriction(sr, n, s);
    std::vector<int> sums = sums_from_restricted_spectrum(rest);

    const int r = std::min(face_region_radius(n, s), n);
    const FacePair face(n, ci, cj);
    BitReader fr = v.sections[2].reader();
    std::vector<std::uint8_t> table = decode_faces_into_table(fr, sums, face, r, n);
    BooleanFunction g =
        BooleanFunction::from_bits(n, known_mask_reconstruct(n, r, table));
    return apply_affine(g, invert_transform(t));
}

namespace {

int dual_ball_radius(int n) {
    // degree of a bent function is at most n/2 except for the quadratic
    // functions at n = 2
    return n == 2 ? 2 : n / 2;
}

struct DualBody {
    Section direction, nested, pairs;
    std::size_t byte_size() const {
        return direction.bytes.size() + nested.bytes.size() + pairs.bytes.size() + 12;
    }
};

DualBody build_dual_body(const BooleanFunction& f, const BooleanFunction& g, int i,
                         std::uint64_t seed) {
    const int n = f.n();
    const int r = dual_ball_radius(n);
    BooleanFunction h = restrict_to_hyperplane(g, i);
    std::vector<std::uint8_t> sub = encode_plateaued(h, seed);

    DualBody body;
    BitWriter dw;
    dw.write(std::uint32_t(i - 1), ceil_log2(std::uint32_t(n)));
    body.direction = take_section(std::move(dw));
    body.nested.bits = sub.size() * 8;
    body.nested.bytes = std::move(sub);

    const WalshSpectrum wh = walsh_transform(h);
    const int shift = n / 2 - 1;
    const int pos = n - i;
    BitWriter pw;
    for (std::uint32_t zbar = 0; zbar < (std::uint32_t{1} << (n - 1)); ++zbar) {
        if (std::popcount(zbar) > r) continue;
        const int sum = wh.values[zbar] >> shift;
        if (sum == 0) pw.write_bit(f.get(insert_zero_bit(zbar, pos)));
    }
    body.pairs = take_section(std::move(pw));
    return body;
}

}  // namespace

std::vector<std::uint8_t> encode_bent_dual(const BooleanFunction& f, std::uint64_t seed) {
    if (!classify_plateau(f).is_bent()) throw NotBent();
    const int n = f.n();
    BooleanFunction g = dual_bent(f);

    bool found = false;
    int best_i = 0;
    DualBody best;
    for (int i = 1; i <= n; ++i) {
        DualBody body = build_dual_body(f, g, i, seed);
        if (!found || body.byte_size() < best.byte_size()) {
            best = std::move(body);
            best_i = i;
            found = true;
        }
    }
    (void)best_i;
    std::vector<std::uint8_t> out;
    write_header(out, n, 0, CodecMode::BentDual);
    append_section(out, best.direction);
    append_section(out, best.nested);
    append_section(out, best.pairs);
    return out;
}

BooleanFunction decode_bent_dual(const std::vector<std::uint8_t>& bytes) {
    StreamView v = parse_stream(bytes);
    if (v.mode != CodecMode::BentDual) throw MalformedStream("not a bent-dual stream");
    const int n = v.n;
    if (n < 2 || n % 2 != 0) throw MalformedStream("bad bent-dual variable count");

    BitReader dr = v.sections[0].reader();
    const int i = int(dr.read(ceil_log2(std::uint32_t(n)))) + 1;
    if (i < 1 || i > n) throw MalformedStream("bad hyperplane direction");

    std::vector<std::uint8_t> sub(v.sections[1].data, v.sections[1].data + v.sections[1].byte_len);
    BooleanFunction h = decode_plateaued(sub);
    if (h.n() != n - 1) throw MalformedStream("nested stream dimension mismatch");

    const WalshSpectrum wh = walsh_transform(h);
    const int shift = n / 2 - 1;
    const int pos = n - i;
    const Vec dir = Vec{1} << pos;
    const int r = dual_ball_radius(n);

    BitReader pr = v.sections[2].reader();
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    for (std::uint32_t zbar = 0; zbar < (std::uint32_t{1} << (n - 1)); ++zbar) {
        if (std::popcount(zbar) > r) continue;
        const int sum = wh.values[zbar] >> shift;
        const std::uint32_t z = insert_zero_bit(zbar, pos);
        if (sum == 2) {
            // both values +1
        } else if (sum == -2) {
            table[z] = table[z ^ dir] = 1;
        } else if (sum == 0) {
            const int b = pr.read_bit();
            table[z] = std::uint8_t(b);
            table[z ^ dir] = std::uint8_t(b ^ 1);
        } else {
            throw SumMismatch("pair sum out of range");
        }
    }
    return BooleanFunction::from_bits(n, known_mask_reconstruct(n, r, table));
}

BooleanFunction decode(const std::vector<std::uint8_t>& bytes) {
    StreamView v = parse_stream(bytes);
    return v.mode == CodecMode::BentDual ? decode_bent_dual(bytes) : decode_plateaued(bytes);
}

SectionLengths bitstream_length_report(const std::vector<std::uint8_t>& bytes) {
    StreamView v = parse_stream(bytes);
    SectionLengths r;
    r.n = v.n;
    r.s = v.s;
    r.mode = v.mode;
    r.header_bits = 7 * 8;
    if (v.mode == CodecMode::PlateauedDirect) {
        r.transform_bits = v.sections[0].bits;
        r.spectrum_bits = v.sections[1].bits;
        r.face_bits = v.sections[2].bits;
        if (v.n > 2) {
            BitReader sr = v.sections[1].reader();
            std::vector<std::int32_t> rest = decode_spectrum_restriction(sr, v.n, v.s);
            r.support_k = 0;
            for (auto x : rest) r.support_k += (x != 0);
            std::vector<int> sums = sums_from_restricted_spectrum(rest);
            const int rad = std::min(face_region_radius(v.n, v.s), v.n);
            for (std::uint32_t a = 0; a < sums.size(); ++a) {
                if (std::popcount(a) > rad) continue;
                if (sums[a] == 2 || sums[a] == -2) ++r.odd_faces;
                else if (sums[a] == 0) ++r.zero_sum_faces;
            }
        }
    } else {
        r.transform_bits = v.sections[0].bits;
        r.pair_bits = v.sections[2].bits;
        std::vector<std::uint8_t> sub(v.sections[1].data,
                                      v.sections[1].data + v.sections[1].byte_len);
        r.nested = std::make_shared<SectionLengths>(bitstream_length_report(sub));
        r.spectrum_bits = v.sections[1].bits;
    }
    r.total_bits = bytes.size() * 8;
    return r;
}

}  // namespace bpc
