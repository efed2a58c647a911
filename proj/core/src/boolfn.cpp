#include "bpc/boolfn.hpp"

#include <bit>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

namespace bpc {

namespace {

std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
}

// Bits whose j-th index bit is clear, for j < 6.
constexpr std::uint64_t kLowHalfMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n), words_(word_count(n), 0) {
    if (n < 1 || n > kMaxVars) throw OutOfRange("variable count out of range");
}

BooleanFunction BooleanFunction::from_bits(int n, const std::vector<std::uint8_t>& bits) {
    BooleanFunction f(n);
    if (bits.size() != f.size()) throw DimensionMismatch("table length != 2^n");
    for (std::uint32_t x = 0; x < f.size(); ++x) f.set(x, bits[x] != 0);
    return f;
}

BooleanFunction BooleanFunction::from_string(int n, const std::string& bits) {
    BooleanFunction f(n);
    if (bits.size() != f.size()) throw DimensionMismatch("table length != 2^n");
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        if (bits[x] != '0' && bits[x] != '1') throw BadFormat("truth table must be 0/1");
        f.set(x, bits[x] == '1');
    }
    return f;
}

std::uint32_t BooleanFunction::weight() const {
    std::uint32_t w = 0;
    for (auto word : words_) w += static_cast<std::uint32_t>(std::popcount(word));
    return w;
}

std::int32_t WalshSpectrum::max_abs() const {
    std::int32_t m = 0;
    for (auto v : values) m = std::max(m, std::abs(v));
    return m;
}

std::uint32_t WalshSpectrum::support_size() const {
    std::uint32_t k = 0;
    for (auto v : values) k += (v != 0);
    return k;
}

Vec SubspacePair::gamma_mask() const {
    Vec m = 0;
    for (int i : gamma_coords) {
        if (i < 1 || i > n) throw BadCoordinate();
        m |= coord_bit(n, i);
    }
    return m;
}

WalshSpectrum walsh_transform(const BooleanFunction& f) {
    const std::uint32_t size = f.size();
    WalshSpectrum w;
    w.n = f.n();
    w.values.resize(size);
    for (std::uint32_t x = 0; x < size; ++x) w.values[x] = f.get(x) ? -1 : 1;
    for (std::uint32_t h = 1; h < size; h <<= 1) {
        for (std::uint32_t i = 0; i < size; i += h << 1) {
            for (std::uint32_t j = i; j < i + h; ++j) {
                std::int32_t a = w.values[j], b = w.values[j + h];
                w.values[j] = a + b;
                w.values[j + h] = a - b;
            }
        }
    }
    return w;
}

BooleanFunction inverse_walsh(const WalshSpectrum& w) {
    const std::uint32_t size = std::uint32_t{1} << w.n;
    if (w.values.size() != size) throw DimensionMismatch("spectrum length != 2^n");
    std::vector<std::int64_t> v(w.values.begin(), w.values.end());
    for (std::uint32_t h = 1; h < size; h <<= 1) {
        for (std::uint32_t i = 0; i < size; i += h << 1) {
            for (std::uint32_t j = i; j < i + h; ++j) {
                std::int64_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
    const std::int64_t full = std::int64_t{1} << w.n;
    BooleanFunction f(w.n);
    for (std::uint32_t x = 0; x < size; ++x) {
        if (v[x] == full) continue;
        if (v[x] == -full) f.set(x, true);
        else throw NotBooleanSpectrum();
    }
    return f;
}

void mobius_in_place(int n, std::vector<std::uint64_t>& words) {
    for (int j = 0; j < std::min(n, 6); ++j) {
        for (auto& w : words) w ^= (w & kLowHalfMask[j]) << (1u << j);
    }
    for (int j = 6; j < n; ++j) {
        const std::size_t stride = std::size_t{1} << (j - 6);
        for (std::size_t base = 0; base < words.size(); base += stride << 1) {
            for (std::size_t k = 0; k < stride; ++k) {
                words[base + stride + k] ^= words[base + k];
            }
        }
    }
}

AnfPolynomial mobius_transform(const BooleanFunction& f) {
    AnfPolynomial p(f.n());
    p.coeffs = f;
    mobius_in_place(f.n(), p.coeffs.words());
    p.degree = 0;
    for (std::uint32_t y = 0; y < f.size(); ++y) {
        if (p.coeffs.get(y)) p.degree = std::max(p.degree, std::popcount(y));
    }
    return p;
}

BooleanFunction truth_table(const AnfPolynomial& p) {
    BooleanFunction f = p.coeffs;
    mobius_in_place(p.n, f.words());
    return f;
}

int algebraic_degree(const BooleanFunction& f) {
    return mobius_transform(f).degree;
}

PlateauClass classify_plateau(const BooleanFunction& f) {
    const WalshSpectrum w = walsh_transform(f);
    const std::int32_t amp = w.max_abs();
    if (amp == 0 || std::popcount(static_cast<std::uint32_t>(amp)) != 1) {
        return PlateauClass::not_plateaued();
    }
    const int log_amp = std::countr_zero(static_cast<std::uint32_t>(amp));
    const int s = 2 * log_amp - f.n();
    if (s < 0 || s > f.n() || (f.n() + s) % 2 != 0) return PlateauClass::not_plateaued();
    for (auto v : w.values) {
        if (v != 0 && v != amp && v != -amp) return PlateauClass::not_plateaued();
    }
    // cross-check: the nonzero fraction of the spectrum must be exactly 1/2^s
    if (w.support_size() != (std::uint32_t{1} << (f.n() - s))) {
        return PlateauClass::not_plateaued();
    }
    return PlateauClass::plateaued(s);
}

BooleanFunction dual_bent(const BooleanFunction& f) {
    if (!classify_plateau(f).is_bent()) throw NotBent();
    const WalshSpectrum w = walsh_transform(f);
    const std::int32_t amp = std::int32_t{1} << (f.n() / 2);
    BooleanFunction g(f.n());
    for (std::uint32_t y = 0; y < f.size(); ++y) g.set(y, w.values[y] != amp);
    return g;
}

BooleanFunction restrict_to_hyperplane(const BooleanFunction& f, int i) {
    const int n = f.n();
    if (n < 2 || i < 1 || i > n) throw BadCoordinate();
    const int pos = n - i;  // index bit of coordinate i
    const std::uint32_t low = (std::uint32_t{1} << pos) - 1;
    BooleanFunction h(n - 1);
    for (std::uint32_t x = 0; x < h.size(); ++x) {
        const std::uint32_t expanded = ((x & ~low) << 1) | (x & low);
        h.set(x, f.get(expanded));
    }
    return h;
}

std::map<Vec, int> coset_signed_sums(const BooleanFunction& f, const SubspacePair& gamma) {
    if (gamma.n != f.n()) throw DimensionMismatch();
    const Vec gm = gamma.gamma_mask();
    const Vec pm = gamma.perp_mask();
    std::map<Vec, int> sums;
    Vec a = 0;
    while (true) {
        int sum = 0;
        Vec t = 0;
        while (true) {
            sum += f.get(a | t) ? -1 : 1;
            if (t == pm) break;
            t = (t - pm) & pm;  // next submask of pm
        }
        sums[a] = sum;
        if (a == gm) break;
        a = (a - gm) & gm;
    }
    return sums;
}

BooleanFunction derivative(const BooleanFunction& f, Vec a) {
    if (a == 0) throw ZeroDirection();
    if (a >= f.size()) throw BadCoordinate("direction out of range");
    BooleanFunction d(f.n());
    for (std::uint32_t x = 0; x < f.size(); ++x) d.set(x, f.get(x) ^ f.get(x ^ a));
    return d;
}

BooleanFunction read_tt(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw BadFormat("empty tt input");
    if (line.rfind("n=", 0) != 0) throw BadFormat("tt header must be n=<k>");
    int n = 0;
    try {
        n = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        throw BadFormat("bad variable count");
    }
    if (n < 1 || n > kMaxVars) throw OutOfRange("variable count out of range");
    std::string bits;
    if (!std::getline(in, bits)) throw BadFormat("missing truth table line");
    return BooleanFunction::from_string(n, bits);
}

void write_tt(std::ostream& out, const BooleanFunction& f) {
    out << "n=" << f.n() << "\n";
    for (std::uint32_t x = 0; x < f.size(); ++x) out << (f.get(x) ? '1' : '0');
    out << "\n";
}

}  // namespace bpc
