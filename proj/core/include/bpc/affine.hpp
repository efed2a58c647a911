#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bpc/boolfn.hpp"
#include "bpc/stats.hpp"

namespace bpc {

// n x n matrix over F2; rows[k] holds row k+1 as a coordinate bitmask
// (coordinate i at bit position n-i, matching the index convention).
struct BinaryMatrix {
    int n = 0;
    std::vector<Vec> rows;

    static BinaryMatrix identity(int n);

    Vec apply(Vec x) const;
    int rank() const;
    bool invertible() const { return rank() == n; }
    BinaryMatrix inverse() const;     // throws SingularMatrix
    BinaryMatrix transpose() const;

    bool operator==(const BinaryMatrix&) const = default;
};

// x |-> A x + b composed with the affine function l(x) = <c,x> + d.
struct AffineTransform {
    BinaryMatrix A;
    Vec b = 0;
    Vec c = 0;
    int d = 0;

    static AffineTransform identity(int n) { return {BinaryMatrix::identity(n), 0, 0, 0}; }

    bool operator==(const AffineTransform&) const = default;
};

struct NormalizationCertificate {
    AffineTransform transform;
    std::array<int, 2> face_coords{1, 2};  // coordinates spanning the 2-face
    int ball_radius = 0;
    FaceHistogram stats;                   // ball-region histogram of g
    // condition (a): odd faces among all translates, as a fraction
    std::uint32_t odd_faces = 0;
    std::uint32_t total_faces = 0;
    // condition (b) counts over the ball region
    std::uint32_t even_faces_ball = 0;
    std::uint32_t extreme_faces_ball = 0;  // zero or four zeros
};

BooleanFunction apply_affine(const BooleanFunction& f, const AffineTransform& t);

BinaryMatrix random_invertible_matrix(int n, std::uint64_t seed);

AffineTransform invert_transform(const AffineTransform& t);

// Searches for an EA-equivalent g = f(Ax+b) + <c,x> + d whose face-parity
// statistics on the translates of the 2-face spanned by face_coords satisfy
// the normalization conditions: (a) the fraction of odd-zero-count faces
// over all translates stays below the plateau-order threshold, and (b) at
// least a quarter of the even faces based in the projection ball have zero
// or four zeros.  Deterministic for a fixed seed.
struct NormalizationResult {
    BooleanFunction g;
    NormalizationCertificate certificate;
};

NormalizationResult normalize_ea(const BooleanFunction& f, int s, int r,
                                 std::uint64_t seed,
                                 std::array<int, 2> face_coords = {1, 2},
                                 int attempt_budget = 4096);

}  // namespace bpc
