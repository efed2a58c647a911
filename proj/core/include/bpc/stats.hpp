#pragma once

#include <array>
#include <cstdint>
#include <gmpxx.h>

#include "bpc/boolfn.hpp"

namespace bpc {

struct SubspaceCensus {
    mpz_class V;         // number of 2-dimensional affine subspaces through x
    mpz_class S;         // those with an odd number of zero values of f
    mpq_class fraction;  // S/V, canonicalized
};

// Zero-count histogram of f over translates of a fixed 2-face.
struct FaceHistogram {
    std::array<std::uint64_t, 5> counts{};  // indexed by zeros in {0..4}
    bool ball_region = false;
    int ball_radius = 0;

    std::uint64_t total() const;
    std::uint64_t odd() const { return counts[1] + counts[3]; }
    std::uint64_t even() const { return counts[0] + counts[2] + counts[4]; }
    std::uint64_t extreme() const { return counts[0] + counts[4]; }
};

// Average bits per face, kept exact as units + log6_units * log2(6).
struct FaceBitCost {
    mpq_class units;
    mpq_class log6_units;

    double value() const;
    // exact comparison of this <= other (log2(6) is irrational, so ties
    // only happen coefficient-wise)
    bool leq(const FaceBitCost& other) const;
};

SubspaceCensus odd_parity_census(const BooleanFunction& f, Vec x);
mpq_class odd_parity_fraction(const BooleanFunction& f, Vec x);

// Closed form of the odd-parity fraction for an s-plateaued function.
mpq_class odd_parity_fraction_formula(int n, int s);

struct FaceRegion {
    bool ball = false;
    int radius = 0;

    static FaceRegion all() { return {false, 0}; }
    static FaceRegion ball_of(int r) { return {true, r}; }
};

FaceHistogram face_histogram(const BooleanFunction& f, int coord_i, int coord_j,
                             FaceRegion region = FaceRegion::all());

FaceBitCost per_face_bit_cost(const FaceHistogram& h);

// The per-face cost constant 1 + (3/8) log2(6) as a FaceBitCost.
FaceBitCost alpha_cost();

}  // namespace bpc
