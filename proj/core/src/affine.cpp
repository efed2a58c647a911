#include "bpc/affine.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace bpc {

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m{n, std::vector<Vec>(n, 0)};
    for (int i = 0; i < n; ++i) m.rows[i] = Vec{1} << (n - 1 - i);
    return m;
}

Vec BinaryMatrix::apply(Vec x) const {
    Vec y = 0;
    for (int i = 0; i < n; ++i) {
        if (std::popcount(rows[i] & x) & 1) y |= Vec{1} << (n - 1 - i);
    }
    return y;
}

int BinaryMatrix::rank() const {
    std::vector<Vec> r = rows;
    int rank = 0;
    for (int col = n - 1; col >= 0 && rank < n; --col) {
        const Vec bit = Vec{1} << col;
        int pivot = -1;
        for (int i = rank; i < n; ++i) {
            if (r[i] & bit) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(r[rank], r[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i != rank && (r[i] & bit)) r[i] ^= r[rank];
        }
        ++rank;
    }
    return rank;
}

BinaryMatrix BinaryMatrix::inverse() const {
    std::vector<Vec> r = rows;
    BinaryMatrix inv = identity(n);
    int row = 0;
    for (int col = n - 1; col >= 0; --col) {
        const Vec bit = Vec{1} << col;
        int pivot = -1;
        for (int i = row; i < n; ++i) {
            if (r[i] & bit) { pivot = i; break; }
        }
        if (pivot < 0) throw SingularMatrix();
        std::swap(r[row], r[pivot]);
        std::swap(inv.rows[row], inv.rows[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i != row && (r[i] & bit)) {
                r[i] ^= r[row];
                inv.rows[i] ^= inv.rows[row];
            }
        }
        ++row;
    }
    // r is now a permutation of the identity; undo the row order
    BinaryMatrix out{n, std::vector<Vec>(n, 0)};
    for (int i = 0; i < n; ++i) {
        const int col = std::countr_zero(r[i]);
        out.rows[n - 1 - col] = inv.rows[i];
    }
    return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t{n, std::vector<Vec>(n, 0)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (rows[i] & (Vec{1} << (n - 1 - j))) t.rows[j] |= Vec{1} << (n - 1 - i);
        }
    }
    return t;
}

BooleanFunction apply_affine(const BooleanFunction& f, const AffineTransform& t) {
    if (t.A.n != f.n()) throw DimensionMismatch();
    if (!t.A.invertible()) throw SingularMatrix();
    BooleanFunction g(f.n());
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        bool v = f.get(t.A.apply(x) ^ t.b) ^ (std::popcount(t.c & x) & 1) ^ t.d;
        g.set(x, v);
    }
    return g;
}

BinaryMatrix random_invertible_matrix(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVars) throw OutOfRange("variable count out of range");
    std::mt19937_64 rng(seed);
    const Vec mask = (Vec{1} << n) - 1;
    BinaryMatrix m{n, std::vector<Vec>(n, 0)};
    do {
        for (int i = 0; i < n; ++i) m.rows[i] = static_cast<Vec>(rng()) & mask;
    } while (!m.invertible());
    return m;
}

AffineTransform invert_transform(const AffineTransform& t) {
    BinaryMatrix ainv = t.A.inverse();
    AffineTransform out;
    out.A = ainv;
    out.b = ainv.apply(t.b);
    out.c = ainv.transpose().apply(t.c);
    out.d = t.d ^ (std::popcount(static_cast<Vec>(t.c & ainv.apply(t.b))) & 1);
    return out;
}

namespace {

struct FaceLayout {
    int n;
    int pi, pj;            // index bit positions of the two face coordinates
    std::uint32_t translates;

    std::uint32_t expand(std::uint32_t a) const {
        const std::uint32_t lowj = (std::uint32_t{1} << pj) - 1;
        std::uint32_t y = ((a & ~lowj) << 1) | (a & lowj);
        const std::uint32_t lowi = (std::uint32_t{1} << pi) - 1;
        return ((y & ~lowi) << 1) | (y & lowi);
    }

    // insert 2 face bits (bit1 -> coord i, bit0 -> coord j) into a base point
    std::uint32_t point(std::uint32_t base, int t) const {
        std::uint32_t p = base;
        if (t & 2) p |= std::uint32_t{1} << pi;
        if (t & 1) p |= std::uint32_t{1} << pj;
        return p;
    }
};

// zero-or-four test on a 4-bit value pattern
inline bool is_extreme(unsigned pat) { return pat == 0 || pat == 0xf; }

}  // namespace

NormalizationResult normalize_ea(const BooleanFunction& f, int s, int r,
                                 std::uint64_t seed,
                                 std::array<int, 2> face_coords,
                                 int attempt_budget) {
    const int n = f.n();
    if (n < 3) throw OutOfRange("normalization needs n >= 3");
    PlateauClass cls = classify_plateau(f);
    if (!cls.is_plateaued() || cls.s != s) throw NotPlateaued();

    const int ci = std::min(face_coords[0], face_coords[1]);
    const int cj = std::max(face_coords[0], face_coords[1]);
    if (ci < 1 || cj > n || ci == cj) throw BadCoordinate();
    const FaceLayout layout{n, n - ci, n - cj, std::uint32_t{1} << (n - 2)};

    // condition (a) threshold as strict rational upper bound on odd/total;
    // s = 0 mirrors the s = 1 derivation one dimension down
    mpq_class threshold;
    if (s > 1) threshold = mpq_class(1, 2);
    else if (s == 1) threshold = mpq_class(1, 2) + mpq_class(mpz_class(1), mpz_class(1) << n);
    else threshold = mpq_class(1, 2) + mpq_class(mpz_class(1), mpz_class(1) << (n - 1));

    std::mt19937_64 rng(seed);
    const int proj_bits = n - 2;
    const std::uint32_t proj_size = std::uint32_t{1} << proj_bits;
    const bool exhaustive_proj = proj_bits <= 10;

    // ball membership by projection index, for every candidate center
    std::vector<std::uint8_t> in_ball(proj_size);
    for (std::uint32_t a = 0; a < proj_size; ++a) in_ball[a] = std::popcount(a) <= r;

    auto try_matrix = [&](const BinaryMatrix& A) -> std::optional<NormalizationResult> {
        BooleanFunction g0 = apply_affine(f, {A, 0, 0, 0});

        // face value patterns and condition (a) census
        std::vector<std::uint8_t> pat(layout.translates);
        std::uint32_t odd = 0;
        for (std::uint32_t a = 0; a < layout.translates; ++a) {
            const std::uint32_t base = layout.expand(a);
            unsigned p = 0;
            for (int t = 0; t < 4; ++t) {
                if (g0.get(layout.point(base, t))) p |= 1u << t;
            }
            pat[a] = static_cast<std::uint8_t>(p);
            odd += std::popcount(p) & 1;
        }
        if (mpq_class(odd, layout.translates) >= threshold) return std::nullopt;

        // condition (b): search the affine part c and the recentering e.
        // Only c's projection onto the base coordinates (through the parity
        // <c_proj, a>), c's two face bits, and e's projection matter.
        auto face_flip = [&](int c_face, int t) {
            return ((c_face >> 1) & (t >> 1)) ^ (c_face & t & 1);
        };
        auto test_combo = [&](std::uint32_t c_proj, int c_face, std::uint32_t e_proj)
            -> bool {
            std::uint32_t even = 0, extreme = 0;
            for (std::uint32_t a = 0; a < layout.translates; ++a) {
                if (!in_ball[a ^ e_proj]) continue;
                unsigned p = pat[a];
                if (std::popcount(p) & 1) continue;
                ++even;
                const int parity = std::popcount(c_proj & a) & 1;
                unsigned flip = parity ? 0xfu : 0u;
                for (int t = 0; t < 4; ++t) flip ^= face_flip(c_face, t) << t;
                if (is_extreme(p ^ flip)) ++extreme;
            }
            return even == 0 || 4 * extreme >= even;
        };

        std::uint32_t found_c_proj = 0, found_e_proj = 0;
        int found_c_face = -1;
        if (exhaustive_proj) {
            for (std::uint32_t cp = 0; cp < proj_size && found_c_face < 0; ++cp) {
                for (int cf = 0; cf < 4 && found_c_face < 0; ++cf) {
                    for (std::uint32_t ep = 0; ep < proj_size; ++ep) {
                        if (test_combo(cp, cf, ep)) {
                            found_c_proj = cp; found_c_face = cf; found_e_proj = ep;
                            break;
                        }
                    }
                }
            }
        } else {
            for (int it = 0; it < (1 << 16) && found_c_face < 0; ++it) {
                std::uint32_t cp = static_cast<std::uint32_t>(rng()) & (proj_size - 1);
                int cf = static_cast<int>(rng() & 3);
                std::uint32_t ep = static_cast<std::uint32_t>(rng()) & (proj_size - 1);
                if (test_combo(cp, cf, ep)) {
                    found_c_proj = cp; found_c_face = cf; found_e_proj = ep;
                }
            }
        }
        if (found_c_face < 0) return std::nullopt;

        // fold c and the recentering e into a single transform
        Vec c = layout.expand(found_c_proj);
        if (found_c_face & 2) c |= Vec{1} << layout.pi;
        if (found_c_face & 1) c |= Vec{1} << layout.pj;
        const Vec e = layout.expand(found_e_proj);
        AffineTransform t;
        t.A = A;
        t.b = A.apply(e);
        t.c = c;
        t.d = std::popcount(static_cast<Vec>(c & e)) & 1;

        NormalizationResult res{apply_affine(f, t), {}};
        res.certificate.transform = t;
        res.certificate.face_coords = {ci, cj};
        res.certificate.ball_radius = r;
        res.certificate.total_faces = layout.translates;
        res.certificate.stats = face_histogram(res.g, ci, cj, FaceRegion::ball_of(r));
        res.certificate.odd_faces = 0;
        {
            FaceHistogram all = face_histogram(res.g, ci, cj, FaceRegion::all());
            res.certificate.odd_faces = static_cast<std::uint32_t>(all.odd());
        }
        res.certificate.even_faces_ball =
            static_cast<std::uint32_t>(res.certificate.stats.even());
        res.certificate.extreme_faces_ball =
            static_cast<std::uint32_t>(res.certificate.stats.extreme());
        return res;
    };

    // identity first, then seeded random candidates
    if (auto res = try_matrix(BinaryMatrix::identity(n))) return *res;
    for (int attempt = 0; attempt < attempt_budget; ++attempt) {
        if (auto res = try_matrix(random_invertible_matrix(n, rng()))) return *res;
    }
    // deterministic fallback sweep over GL(n,2) at small n
    if (n <= 4) {
        const Vec mask = (Vec{1} << n) - 1;
        BinaryMatrix A{n, std::vector<Vec>(n, 0)};
        std::uint64_t total = std::uint64_t{1} << (n * n);
        for (std::uint64_t code = 0; code < total; ++code) {
            for (int i = 0; i < n; ++i) A.rows[i] = static_cast<Vec>(code >> (i * n)) & mask;
            if (!A.invertible()) continue;
            if (auto res = try_matrix(A)) return *res;
        }
    }
    throw SearchExhausted();
}

}  // namespace bpc
