#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpc/errors.hpp"

namespace bpc {

// All leading-term values drop the (1+o(1)) factor; reports label them as
// such.  Long double carries a 64-bit mantissa on x86, comfortably past the
// 50 significant bits the reports promise.
using Real = long double;

struct BoundReport {
    int n = 0;
    int s = 0;
    std::string label;
    Real leading_term_bits = 0;
    std::vector<std::pair<std::string, Real>> components;  // sums to leading_term_bits
    std::vector<std::pair<std::string, Real>> extras;      // informational, not summed
    std::optional<Real> known_log2_count;
    std::optional<Real> measured_mean_bits;

    Real component_sum() const;
};

mpz_class ball_size(int n, int r);

Real binary_entropy(const mpq_class& p);

Real alpha();
Real alpha_n(int n);

BoundReport plateaued_bound(int n, int s);
BoundReport restricted_nearbent_bound(int n);
BoundReport bent_bound(int n);

// log2 of the known bent counts for n in {2,4,6,8}, as reported.
std::optional<Real> known_bent_log2_count(int n);

// trivial degree-count bound 2^(n-1) + C(n,n/2)/2 on log2 |B(n)|
mpq_class degree_count_bound(int n);

}  // namespace bpc
