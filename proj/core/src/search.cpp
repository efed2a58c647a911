#include "bpc/search.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace bpc {

Corpus enumerate_plateaued(int n, int s) {
    if (n > 4) throw TooLarge("exhaustive sweep limited to n <= 4");
    if (n < 1 || s < 0 || s > n || (n + s) % 2 != 0) throw ParityMismatch();
    Corpus corpus;
    corpus.n = n;
    corpus.s = s;
    corpus.provenance = "exhaustive";
    const std::uint64_t total = std::uint64_t{1} << (std::uint32_t{1} << n);
    for (std::uint64_t code = 0; code < total; ++code) {
        BooleanFunction f(n);
        f.words()[0] = code;
        const PlateauClass cls = classify_plateau(f);
        if (cls.is_plateaued() && cls.s == s) corpus.functions.push_back(std::move(f));
    }
    return corpus;
}

BooleanFunction maiorana_mcfarland(int m, const BooleanFunction& h,
                                   const std::vector<std::uint32_t>& perm) {
    if (h.n() != m) throw DimensionMismatch();
    const std::uint32_t half = std::uint32_t{1} << m;
    if (perm.size() != half) throw NotBijective("permutation length != 2^m");
    std::vector<std::uint8_t> seen(half, 0);
    for (auto p : perm) {
        if (p >= half || seen[p]) throw NotBijective();
        seen[p] = 1;
    }
    BooleanFunction f(2 * m);
    for (std::uint32_t x = 0; x < half; ++x) {
        for (std::uint32_t y = 0; y < half; ++y) {
            const bool v = (std::popcount(x & perm[y]) & 1) ^ h.get(y);
            f.set((x << m) | y, v);
        }
    }
    if (!classify_plateau(f).is_bent()) throw Error("construction failed to produce a bent function");
    return f;
}

BooleanFunction random_maiorana_mcfarland(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t half = std::uint32_t{1} << m;
    std::vector<std::uint32_t> perm(half);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    BooleanFunction h(m);
    for (auto& w : h.words()) w = rng();
    if (m < 6) h.words()[0] &= (std::uint64_t{1} << half) - 1;
    return maiorana_mcfarland(m, h, perm);
}

bool triple_convolution_check(const BooleanFunction& f, int s) {
    const int n = f.n();
    if ((n + s) % 2 != 0) throw ParityMismatch();
    const WalshSpectrum w = walsh_transform(f);
    const std::uint32_t size = f.size();
    std::vector<__int128> v(size);
    for (std::uint32_t y = 0; y < size; ++y) {
        v[y] = static_cast<__int128>(w.values[y]) * w.values[y] * w.values[y];
    }
    for (std::uint32_t h = 1; h < size; h <<= 1) {
        for (std::uint32_t i = 0; i < size; i += h << 1) {
            for (std::uint32_t j = i; j < i + h; ++j) {
                __int128 a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
    const __int128 scale = static_cast<__int128>(1) << (n + s);
    for (std::uint32_t x = 0; x < size; ++x) {
        const __int128 conv = v[x] >> n;  // inverse transform normalization
        const __int128 want = f.get(x) ? -scale : scale;
        if (conv != want) return false;
    }
    return true;
}

void write_corpus(std::ostream& out, const Corpus& c) {
    out << "corpus n=" << c.n << " s=" << c.s << " count=" << c.functions.size() << "\n";
    for (const auto& f : c.functions) write_tt(out, f);
}

Corpus read_corpus(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw BadFormat("empty corpus");
    Corpus c;
    std::size_t count = 0;
    {
        std::istringstream hs(header);
        std::string tag, nf, sf, cf;
        hs >> tag >> nf >> sf >> cf;
        if (tag != "corpus" || nf.rfind("n=", 0) != 0 || sf.rfind("s=", 0) != 0 ||
            cf.rfind("count=", 0) != 0) {
            throw BadFormat("bad corpus header");
        }
        c.n = std::stoi(nf.substr(2));
        c.s = std::stoi(sf.substr(2));
        count = std::stoul(cf.substr(6));
    }
    c.provenance = "file";
    for (std::size_t i = 0; i < count; ++i) {
        c.functions.push_back(read_tt(in));
        if (c.functions.back().n() != c.n) throw BadFormat("corpus member dimension mismatch");
    }
    return c;
}

}  // namespace bpc
