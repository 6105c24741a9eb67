#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arelab/model.hpp"

namespace arelab {

// rank_i = 1 + #{j : value_i > value_j}; requires pairwise-distinct values.
std::vector<int> ranks(std::span<const double> values);

// Number of discordant pairs (inversions of y after sorting by x), counted
// by stable merge sort in O(n log n).  Throws TieError on tied coordinates.
std::uint64_t discordant_pairs(const PairedSample& sample);

// Kendall's T_n = (C - D) / binom(n, 2), n >= 2.
double kendall_t(const PairedSample& sample);

// Spearman's S_n in the simplified rank-product form
//   S_n = 12/(n(n^2-1)) sum_i R_i(x) R_i(y) - 3(n+1)/(n-1),  n >= 3.
double spearman_s(const PairedSample& sample);

// U-statistic with the degree-3 kernel counting indicator products over
// triples; evaluated through the rank-product identity
//   sum_i R_i(x) R_i(y) = n^2 + K_n + binom(n,3) * S~_n
// with K_n the concordant-pair count.  Value in [0, 6], n >= 3.
double spearman_u_tilde(const PairedSample& sample);

// Degree-2 sign kernel: sign((x_p - x_q)(y_p - y_q)), always +1 or -1.
int h2_kernel(double xp, double yp, double xq, double yq);

}  // namespace arelab
