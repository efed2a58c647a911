#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bpc/boolfn.hpp"

namespace bpc {

struct Corpus {
    int n = 0;
    int s = 0;
    std::string provenance;  // "exhaustive" or "constructed(...)"
    std::vector<BooleanFunction> functions;
};

// Full truth-table sweep; n <= 4 only.
Corpus enumerate_plateaued(int n, int s);

// f(x,y) = <x, perm(y)> + h(y) on 2m variables; x occupies the first m
// coordinates.  Always bent; classification is verified post-construction.
BooleanFunction maiorana_mcfarland(int m, const BooleanFunction& h,
                                   const std::vector<std::uint32_t>& perm);

BooleanFunction random_maiorana_mcfarland(int m, std::uint64_t seed);

// (-1)^f * (-1)^f * (-1)^f == 2^(n+s) (-1)^f, checked through the spectrum.
bool triple_convolution_check(const BooleanFunction& f, int s);

// Corpus file: header "corpus n=<n> s=<s> count=<k>" then concatenated tt
// records.
void write_corpus(std::ostream& out, const Corpus& c);
Corpus read_corpus(std::istream& in);

}  // namespace bpc
