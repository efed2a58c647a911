#include "bpc/stats.hpp"

#include <bit>
#include <cmath>

namespace bpc {

namespace {

// sign of r - log2(6), r rational
int cmp_rational_vs_log6(const mpq_class& r) {
    if (r <= 0) return -1;
    mpz_class p = r.get_num(), q = r.get_den();
    mpz_class lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 2, p.get_ui());
    mpz_ui_pow_ui(rhs.get_mpz_t(), 6, q.get_ui());
    return cmp(lhs, rhs);  // 2^p vs 6^q  <=>  p/q vs log2 6
}

// sign of u + w * log2(6)
int cmp_affine_log6(const mpq_class& u, const mpq_class& w) {
    if (w == 0) return sgn(u);
    mpq_class r = -u / w;  // expression = w * (log2 6 - r)
    int c = cmp_rational_vs_log6(r);
    return w > 0 ? -c : c;
}

}  // namespace

std::uint64_t FaceHistogram::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

double FaceBitCost::value() const {
    return units.get_d() + log6_units.get_d() * std::log2(6.0);
}

bool FaceBitCost::leq(const FaceBitCost& other) const {
    return cmp_affine_log6(units - other.units, log6_units - other.log6_units) <= 0;
}

SubspaceCensus odd_parity_census(const BooleanFunction& f, Vec x) {
    const std::uint32_t size = f.size();
    if (x >= size) throw BadCoordinate("point out of range");
    SubspaceCensus census;
    std::uint64_t s = 0, v = 0;
    for (Vec y = 1; y < size; ++y) {
        for (Vec z = y + 1; z < size; ++z) {
            if (z >= (y ^ z)) continue;  // count each subspace once
            ++v;
            int zeros = !f.get(x) + !f.get(x ^ y) + !f.get(x ^ z) + !f.get(x ^ y ^ z);
            s += zeros & 1;
        }
    }
    census.V = mpz_class((std::uint32_t{1} << f.n()) - 1) * ((std::uint32_t{1} << f.n()) - 2) / 6;
    if (census.V != mpz_class(static_cast<unsigned long>(v))) {
        throw Error("subspace enumeration count mismatch");
    }
    census.S = static_cast<unsigned long>(s);
    census.fraction = mpq_class(census.S, census.V);
    census.fraction.canonicalize();
    return census;
}

mpq_class odd_parity_fraction(const BooleanFunction& f, Vec x) {
    if (!classify_plateau(f).is_plateaued()) throw NotPlateaued();
    return odd_parity_census(f, x).fraction;
}

mpq_class odd_parity_fraction_formula(int n, int s) {
    mpz_class pn = mpz_class(1) << n;
    mpz_class pns = mpz_class(1) << (n + s);
    mpq_class frac(pns - 3 * pn + 2, 2 * (pn - 1) * (pn - 2));
    frac.canonicalize();
    return mpq_class(1, 2) - frac;
}

FaceHistogram face_histogram(const BooleanFunction& f, int coord_i, int coord_j,
                             FaceRegion region) {
    const int n = f.n();
    if (coord_i < 1 || coord_i > n || coord_j < 1 || coord_j > n || coord_i == coord_j) {
        throw BadCoordinate();
    }
    const int pi = n - std::min(coord_i, coord_j);  // higher bit position
    const int pj = n - std::max(coord_i, coord_j);
    const Vec bi = Vec{1} << pi, bj = Vec{1} << pj;

    FaceHistogram h;
    h.ball_region = region.ball;
    h.ball_radius = region.radius;
    const std::uint32_t translates = std::uint32_t{1} << (n - 2);
    for (std::uint32_t a = 0; a < translates; ++a) {
        if (region.ball && std::popcount(a) > region.radius) continue;
        // expand the projection index into a base point with zeros at i,j
        const std::uint32_t lowj = (std::uint32_t{1} << pj) - 1;
        std::uint32_t y = ((a & ~lowj) << 1) | (a & lowj);
        const std::uint32_t lowi = (std::uint32_t{1} << pi) - 1;
        y = ((y & ~lowi) << 1) | (y & lowi);
        int zeros = !f.get(y) + !f.get(y | bj) + !f.get(y | bi) + !f.get(y | bi | bj);
        ++h.counts[zeros];
    }
    return h;
}

FaceBitCost per_face_bit_cost(const FaceHistogram& h) {
    const std::uint64_t t = h.total();
    if (t == 0) throw EmptyRegion();
    FaceBitCost cost;
    cost.units = mpq_class(2 * static_cast<unsigned long>(h.odd()),
                           static_cast<unsigned long>(t));
    cost.log6_units = mpq_class(static_cast<unsigned long>(h.counts[2]),
                                static_cast<unsigned long>(t));
    cost.units.canonicalize();
    cost.log6_units.canonicalize();
    return cost;
}

FaceBitCost alpha_cost() {
    return {mpq_class(1), mpq_class(3, 8)};
}

}  // namespace bpc
