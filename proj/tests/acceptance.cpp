// End-to-end acceptance checks.  Each criterion prints one pass/fail line;
// the exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "bpc/affine.hpp"
#include "bpc/boolfn.hpp"
#include "bpc/bounds.hpp"
#include "bpc/codec.hpp"
#include "bpc/search.hpp"
#include "bpc/stats.hpp"
#include "oracles.hpp"

using namespace bpc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d: %s  %s%s%s\n", idx, ok ? "PASS" : "FAIL", what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::vector<BooleanFunction> g_bent4;  // filled by criterion 1

// criterion 1: enumeration ground truth and sweep time
void crit_enumeration() {
    const auto t0 = Clock::now();
    const std::size_t c2 = enumerate_plateaued(2, 0).functions.size();
    Corpus c4 = enumerate_plateaued(4, 0);
    const double secs = seconds_since(t0);
    g_bent4 = std::move(c4.functions);
    const bool ok = c2 == 8 && g_bent4.size() == 896 && secs < 60.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "counts %zu/%zu, sweep %.2fs", c2, g_bent4.size(), secs);
    report(1, "exhaustive enumeration counts 8 (n=2) and 896 (n=4)", ok, buf);
}

// criterion 2: triple-convolution test vs definitional classification
void crit_triple_convolution() {
    bool ok = true;
    for (std::uint64_t code = 0; code < 65536 && ok; ++code) {
        BooleanFunction f(4);
        f.words()[0] = code;
        const PlateauClass cls = classify_plateau(f);
        for (int s = 0; s <= 4; s += 2) {
            if (triple_convolution_check(f, s) != (cls == PlateauClass::plateaued(s))) {
                ok = false;
                break;
            }
        }
    }
    report(2, "triple convolution agrees with classification on all n=4 functions", ok);
}

// criterion 3: odd-zero census fractions
void crit_census() {
    bool ok = true;
    for (const auto& f : g_bent4) {
        for (Vec x = 0; x < 16 && ok; ++x) {
            SubspaceCensus c = odd_parity_census(f, x);
            ok = c.V == 35 && c.S == 20 && c.fraction == mpq_class(4, 7);
        }
        if (!ok) break;
    }
    // 1-plateaued constructions at n=3 and n=5 against the closed form
    for (int n : {3, 5}) {
        std::mt19937_64 rng(std::uint64_t(n) * 101);
        for (int rep = 0; rep < 10 && ok; ++rep) {
            bool coef[8][8] = {};
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) coef[i][j] = rng() & 1;
            BooleanFunction f(n);
            for (std::uint32_t x = 0; x < f.size(); ++x) {
                int v = 0;
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        if (coef[i][j]) v ^= oracle::coord(n, x, i) & oracle::coord(n, x, j);
                f.set(x, v);
            }
            const PlateauClass cls = classify_plateau(f);
            if (!cls.is_plateaued()) { ok = false; break; }
            const mpq_class want = odd_parity_fraction_formula(n, cls.s);
            for (Vec x = 0; x < f.size() && ok; ++x) {
                ok = odd_parity_census(f, x).fraction == want;
            }
        }
    }
    report(3, "odd-parity census 4/7 on bent n=4 and closed form at n=3,5", ok);
}

// criterion 4: hyperplane restrictions of bent functions are 1-plateaued
void crit_restrictions() {
    bool ok = true;
    for (const auto& f : g_bent4) {
        for (int i = 1; i <= 4 && ok; ++i) {
            ok = classify_plateau(restrict_to_hyperplane(f, i)) == PlateauClass::plateaued(1);
        }
        if (!ok) break;
    }
    report(4, "all 896x4 hyperplane restrictions are 1-plateaued", ok);
}

// criterion 5: duality is an involution within the bent class
void crit_duality() {
    bool ok = true;
    for (const auto& f : g_bent4) {
        BooleanFunction g = dual_bent(f);
        if (!classify_plateau(g).is_bent() || dual_bent(g) != f) {
            ok = false;
            break;
        }
    }
    report(5, "dual of dual is the identity on all 896 bent n=4", ok);
}

// criterion 6: degree bounds for enumerated plateaued functions
void crit_degrees() {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        for (int s = n % 2; s <= n && ok; s += 2) {
            for (const auto& f : enumerate_plateaued(n, s).functions) {
                const int cap = (n - s + 1) / 2 + 1;  // ceil((n-s)/2) + 1
                if (algebraic_degree(f) > cap) { ok = false; break; }
            }
        }
    }
    // bent degree cap n/2 (n >= 4; quadratics at n=2 are the known exception)
    for (const auto& f : g_bent4) {
        if (algebraic_degree(f) > 2) { ok = false; break; }
    }
    report(6, "degree caps ceil((n-s)/2)+1 for plateaued, n/2 for bent n=4", ok);
}

std::vector<std::vector<std::uint8_t>> g_streams;  // filled by criterion 7

// criterion 7: codec roundtrips
void crit_roundtrip() {
    bool ok = true;
    for (const auto& f : g_bent4) {
        auto direct = encode_plateaued(f, 1);
        auto dual = encode_bent_dual(f, 1);
        if (decode(direct) != f || decode(dual) != f) { ok = false; break; }
        g_streams.push_back(std::move(direct));
        g_streams.push_back(std::move(dual));
    }
    double worst8 = 0;
    int constructed = 0;
    for (int m : {3, 4}) {
        for (std::uint64_t seed = 1; seed <= 60 && ok; ++seed) {
            BooleanFunction f = random_maiorana_mcfarland(m, seed);
            const auto t0 = Clock::now();
            auto direct = encode_plateaued(f, 1);
            ok = decode(direct) == f;
            const double direct_secs = seconds_since(t0);
            const auto t1 = Clock::now();
            auto dual = encode_bent_dual(f, 1);
            ok = ok && decode(dual) == f;
            const double dual_secs = seconds_since(t1);
            if (m == 4) worst8 = std::max({worst8, direct_secs, dual_secs});
            // odd-dimension 1-plateaued restriction
            BooleanFunction h = restrict_to_hyperplane(f, 1);
            auto hb = encode_plateaued(h, 1);
            ok = ok && decode(hb) == h;
            g_streams.push_back(std::move(direct));
            g_streams.push_back(std::move(dual));
            g_streams.push_back(std::move(hb));
            ++constructed;
        }
    }
    ok = ok && constructed >= 100 && worst8 < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d constructed n=6,8 functions, worst n=8 time %.3fs",
                  constructed, worst8);
    report(7, "roundtrips on 896 bent n=4 plus constructed n=5..8", ok, buf);
}

// criterion 8: per-stream length accounting identities
void crit_accounting() {
    bool ok = true;
    std::uint64_t direct_bits = 0, dual_bits = 0, direct_count = 0, dual_count = 0;
    for (const auto& bytes : g_streams) {
        SectionLengths rep = bitstream_length_report(bytes);
        const SectionLengths* p = &rep;
        if (rep.mode == CodecMode::BentDual) {
            dual_bits += rep.total_bits;
            ++dual_count;
            p = rep.nested.get();
            if (!p) { ok = false; break; }
        } else {
            direct_bits += rep.total_bits;
            ++direct_count;
        }
        if (p->n <= 2) continue;
        const std::uint64_t universe = std::uint64_t{1} << (p->n - 2);
        const std::size_t spectrum_cap =
            std::size_t(p->n - 1) + subset_rank_width(universe, p->support_k) + p->support_k;
        const std::size_t zero_cap =
            std::size_t(std::ceil(double(p->zero_sum_faces) * std::log2(6.0)));
        const std::size_t face_cap = 2 * std::size_t(p->odd_faces) + zero_cap + 7;
        if (p->spectrum_bits > spectrum_cap || p->face_bits > face_cap) {
            ok = false;
            break;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "mean direct %.1f bits (%llu streams), mean dual %.1f bits (%llu streams)",
                  direct_count ? double(direct_bits) / double(direct_count) : 0.0,
                  (unsigned long long)direct_count,
                  dual_count ? double(dual_bits) / double(dual_count) : 0.0,
                  (unsigned long long)dual_count);
    report(8, "spectrum and face sections within their combinatorial budgets", ok, buf);
}

// criterion 9: bound constants
void crit_bound_constants() {
    const double a = double(alpha());
    // quoted band around ~1.969, with the stated 1e-3 tolerance
    bool ok = a > 1.9689 - 1e-3 && a < 1.9692 + 1e-3;
    BoundReport b8 = bent_bound(8);
    ok = ok && b8.leading_term_bits == 88;
    ok = ok && b8.known_log2_count && double(*b8.known_log2_count) == 106.3;
    BoundReport b6 = bent_bound(6);
    ok = ok && b6.known_log2_count && double(*b6.known_log2_count) == 32.3;
    char buf[96];
    std::snprintf(buf, sizeof buf, "alpha=%.6f, bent leading term n=8: %.0f bits", a,
                  double(b8.leading_term_bits));
    report(9, "alpha near 1.969, (11/32)*256 = 88, known counts flagged", ok, buf);
}

// criterion 10: transform oracles
void crit_transforms() {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (std::uint32_t{1} << n);
        for (std::uint64_t code = 0; code < total && ok; ++code) {
            BooleanFunction f(n);
            f.words()[0] = code;
            WalshSpectrum w = walsh_transform(f);
            auto naive = oracle::naive_walsh(f);
            for (std::uint32_t y = 0; y < f.size(); ++y) {
                if (w.values[y] != naive[y]) { ok = false; break; }
            }
        }
    }
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        BooleanFunction f = oracle::random_fn(10, rng);
        WalshSpectrum w = walsh_transform(f);
        auto naive = oracle::naive_walsh(f);
        for (std::uint32_t y = 0; y < f.size(); ++y) {
            if (w.values[y] != naive[y]) { ok = false; break; }
        }
    }
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        const int n = 2 + int(rng() % 11);  // up to 12
        BooleanFunction f = oracle::random_fn(n, rng);
        std::int64_t sum = 0;
        for (auto v : walsh_transform(f).values) sum += std::int64_t(v) * v;
        ok = sum == (std::int64_t{1} << (2 * n));
    }
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        BooleanFunction f = oracle::random_fn(9, rng);
        BooleanFunction t = f;
        mobius_in_place(9, t.words());
        mobius_in_place(9, t.words());
        ok = t == f;
    }
    report(10, "fast transforms match naive oracles; Parseval; involution", ok);
}

// criterion 11: ball reconstruction of low-degree polynomials
void crit_ball() {
    bool ok = true;
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 1000 && ok; ++rep) {
        AnfPolynomial p(7);
        for (std::uint32_t y = 0; y < 128; ++y) {
            if (std::popcount(y) <= 4 && (rng() & 1)) p.coeffs.set(y, true);
        }
        BooleanFunction f = truth_table(p);
        ok = reconstruct_from_ball(ball_restriction(f, 4)) == f;
    }
    report(11, "1000 degree-<=4 polynomials at n=7 rebuilt from the radius-4 ball", ok);
}

// criterion 12: coset sums depend only on the spectrum over Gamma
void crit_coset_sums() {
    bool ok = true;
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 200 && ok; ++rep) {
        const int n = 3 + int(rng() % 4);  // 3..6
        const int dim = 1 + int(rng() % (n - 1));
        SubspacePair gamma{n, {}};
        for (int c = 1; c <= dim; ++c) gamma.gamma_coords.push_back(c);
        BooleanFunction f = oracle::random_fn(n, rng);
        // translating by t in Gamma^perp fixes the spectrum on Gamma
        Vec t = Vec(rng()) & gamma.perp_mask();
        BooleanFunction g(n);
        for (std::uint32_t x = 0; x < f.size(); ++x) g.set(x, f.get(x ^ t));
        WalshSpectrum wf = walsh_transform(f), wg = walsh_transform(g);
        const Vec gm = gamma.gamma_mask();
        for (Vec y = 0; y < f.size() && ok; ++y) {
            if ((y & ~gm) == 0) ok = wf.values[y] == wg.values[y];
        }
        ok = ok && coset_signed_sums(f, gamma) == coset_signed_sums(g, gamma);
    }
    report(12, "pairs sharing a spectrum on Gamma share all coset sums", ok);
}

}  // namespace

int main() {
    crit_enumeration();
    crit_triple_convolution();
    crit_census();
    crit_restrictions();
    crit_duality();
    crit_degrees();
    crit_roundtrip();
    crit_accounting();
    crit_bound_constants();
    crit_transforms();
    crit_ball();
    crit_coset_sums();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all 12 criteria passed\n");
    return failures;
}
