#include "bpc/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace bpc {

namespace {

Real log2_real(const mpq_class& q) {
    // split into mantissa and exponent to stay accurate for huge values
    signed long exp_num, exp_den;
    double mn = mpz_get_d_2exp(&exp_num, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&exp_den, q.get_den().get_mpz_t());
    return std::log2(Real(mn) / Real(md)) + Real(exp_num - exp_den);
}

Real pow2_real(int e) { return std::ldexp(Real(1), e); }

}  // namespace

Real BoundReport::component_sum() const {
    Real sum = 0;
    for (const auto& [name, v] : components) sum += v;
    return sum;
}

mpz_class ball_size(int n, int r) {
    if (r < 0 || r > n) throw BadRadius();
    mpz_class total = 0, term;
    for (int i = 0; i <= r; ++i) {
        mpz_bin_uiui(term.get_mpz_t(), n, i);
        total += term;
    }
    return total;
}

Real binary_entropy(const mpq_class& p) {
    if (p < 0 || p > 1) throw OutOfRange("entropy argument outside [0,1]");
    if (p == 0 || p == 1) return 0;  // continuity convention
    mpq_class q = 1 - p;
    return -p.get_d() * log2_real(p) - q.get_d() * log2_real(q);
}

Real alpha() { return 1 + Real(3) / 8 * std::log2(Real(6)); }

Real alpha_n(int n) { return alpha() + pow2_real(1 - n); }

BoundReport plateaued_bound(int n, int s) {
    if (s < 0 || s > n || (n + s) % 2 != 0) throw ParityMismatch();
    BoundReport rep;
    rep.n = n;
    rep.s = s;
    rep.label = s == 0 ? "plateaued bound, leading term (s=0 boundary, outside stated range)"
                       : "plateaued bound, leading term";
    const int r = (n - s) / 2 + 1;
    const Real a = s == 1 ? alpha_n(n) : alpha();
    const Real alpha_term = a * Real(ball_size(n - 2, std::min(r, n - 2)).get_d());
    mpq_class p(1, 1);
    p /= mpz_class(1) << s;
    const Real entropy_term = pow2_real(n - 2) * (binary_entropy(p) + Real(p.get_d()));
    rep.components = {{"alpha * b(n-2,r)", alpha_term},
                      {"2^(n-2) * (h(2^-s) + 2^-s)", entropy_term}};
    rep.leading_term_bits = alpha_term + entropy_term;
    return rep;
}

BoundReport restricted_nearbent_bound(int n) {
    if (n < 3 || n % 2 == 0) throw ParityMismatch();
    BoundReport rep;
    rep.n = n;
    rep.s = 1;
    rep.label = "hyperplane-restricted near-bent bound, leading term";
    const Real coeff = alpha() + Real(3) / 2;
    const Real ball = Real(ball_size(n - 2, std::min((n + 1) / 2, n - 2)).get_d());
    rep.components = {{"b(n-2,(n+1)/2) * (alpha + 3/2)", coeff * ball}};
    rep.leading_term_bits = coeff * ball;
    rep.extras = {{"3.47*2^(n-3)", Real(3.47L) * pow2_real(n - 3)},
                  {"per-2^(n-3) coefficient", rep.leading_term_bits / pow2_real(n - 3)}};
    return rep;
}

BoundReport bent_bound(int n) {
    if (n < 2 || n % 2 != 0) throw ParityMismatch();
    BoundReport rep;
    rep.n = n;
    rep.s = 0;
    rep.label = "bent bound (11/32)*2^n, leading term";
    rep.leading_term_bits = Real(11) / 32 * pow2_real(n);
    rep.components = {{"(11/32)*2^n", rep.leading_term_bits}};
    if (n >= 4) {
        // finite-n evaluation of the decomposition N0(n-1,1) + 2^(n-3),
        // reported alongside the headline leading term
        const Real nearbent = restricted_nearbent_bound(n - 1).leading_term_bits;
        rep.extras = {{"N0(n-1,1)", nearbent},
                      {"2^(n-3)", pow2_real(n - 3)},
                      {"N0(n-1,1) + 2^(n-3)", nearbent + pow2_real(n - 3)}};
    }
    rep.known_log2_count = known_bent_log2_count(n);
    return rep;
}

std::optional<Real> known_bent_log2_count(int n) {
    switch (n) {
        case 2: return std::log2(Real(8));
        case 4: return std::log2(Real(896));
        case 6: return Real(32.3L);
        case 8: return Real(106.3L);
        default: return std::nullopt;
    }
}

mpq_class degree_count_bound(int n) {
    if (n % 2 != 0) throw ParityMismatch();
    mpz_class mid;
    mpz_bin_uiui(mid.get_mpz_t(), n, n / 2);
    mpq_class bound(mid, 2);
    bound.canonicalize();
    return mpq_class(mpz_class(1) << (n - 1)) + bound;
}

}  // namespace bpc
