#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "bpc/errors.hpp"

namespace bpc {

// Input vectors are packed into integer indices with coordinate x1 as the
// most significant bit: index(x) = x1*2^(n-1) + ... + xn.  Coordinate i
// (1-based) therefore lives at bit position n-i of the index.
using Vec = std::uint32_t;

constexpr int kMaxVars = 24;

inline Vec coord_bit(int n, int i) { return Vec{1} << (n - i); }

// Truth table of an n-variable Boolean function, bitpacked 64 entries per
// word (entry x at word x>>6, bit x&63).
class BooleanFunction {
public:
    explicit BooleanFunction(int n);
    static BooleanFunction from_bits(int n, const std::vector<std::uint8_t>& bits);
    static BooleanFunction from_string(int n, const std::string& bits);

    int n() const { return n_; }
    std::uint32_t size() const { return std::uint32_t{1} << n_; }

    bool get(std::uint32_t x) const {
        return (words_[x >> 6] >> (x & 63)) & 1u;
    }
    void set(std::uint32_t x, bool v) {
        std::uint64_t m = std::uint64_t{1} << (x & 63);
        if (v) words_[x >> 6] |= m; else words_[x >> 6] &= ~m;
    }

    std::vector<std::uint64_t>& words() { return words_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    std::uint32_t weight() const;

    bool operator==(const BooleanFunction&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> values;

    std::int32_t max_abs() const;
    std::uint32_t support_size() const;
};

struct AnfPolynomial {
    int n = 0;
    BooleanFunction coeffs;  // bit at index y is the Moebius coefficient M[f](y)
    int degree = 0;          // 0 for the zero polynomial

    explicit AnfPolynomial(int n_) : n(n_), coeffs(n_) {}
};

struct PlateauClass {
    enum class Tag { Plateaued, NotPlateaued };
    Tag tag = Tag::NotPlateaued;
    int s = -1;  // valid when tag == Plateaued; s == 0 means bent

    bool is_plateaued() const { return tag == Tag::Plateaued; }
    bool is_bent() const { return is_plateaued() && s == 0; }

    static PlateauClass plateaued(int s) { return {Tag::Plateaued, s}; }
    static PlateauClass not_plateaued() { return {Tag::NotPlateaued, -1}; }

    bool operator==(const PlateauClass&) const = default;
};

// Coordinate subspace Gamma: the listed coordinates are free, all others
// fixed to 0.  The complementary coordinates span Gamma^perp.
struct SubspacePair {
    int n = 0;
    std::vector<int> gamma_coords;  // 1-based, strictly increasing

    Vec gamma_mask() const;
    Vec perp_mask() const { return ((Vec{1} << n) - 1) & ~gamma_mask(); }
};

WalshSpectrum walsh_transform(const BooleanFunction& f);
BooleanFunction inverse_walsh(const WalshSpectrum& w);

// Self-inverse XOR-down butterfly over F2, in place on a packed table of
// 2^n bits: out(y) = XOR of in(x) over all x with support contained in y.
void mobius_in_place(int n, std::vector<std::uint64_t>& words);

AnfPolynomial mobius_transform(const BooleanFunction& f);
BooleanFunction truth_table(const AnfPolynomial& p);

int algebraic_degree(const BooleanFunction& f);

PlateauClass classify_plateau(const BooleanFunction& f);

BooleanFunction dual_bent(const BooleanFunction& f);

BooleanFunction restrict_to_hyperplane(const BooleanFunction& f, int i);

std::map<Vec, int> coset_signed_sums(const BooleanFunction& f, const SubspacePair& gamma);

BooleanFunction derivative(const BooleanFunction& f, Vec a);

// Truth-table text format: line 1 "n=<k>", line 2 exactly 2^k chars of 0/1.
BooleanFunction read_tt(std::istream& in);
void write_tt(std::ostream& out, const BooleanFunction& f);

}  // namespace bpc
