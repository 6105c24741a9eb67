#include "arelab/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "arelab/errors.hpp"

namespace arelab {

std::vector<int> ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[a] < values[b]; });
    std::vector<int> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && values[order[k]] == values[order[k - 1]])
            throw TieError("tied values at positions " + std::to_string(order[k - 1]) +
                           " and " + std::to_string(order[k]));
        out[order[k]] = static_cast<int>(k) + 1;
    }
    return out;
}

namespace {

void check_no_ties(const PairedSample& s) {
    auto check = [](std::vector<double> v, const char* col) {
        std::sort(v.begin(), v.end());
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] == v[i - 1]) throw TieError(std::string("tied values in column ") + col);
    };
    check(s.x, "x");
    check(s.y, "y");
}

std::uint64_t count_inversions(std::vector<double>& v, std::vector<double>& buf,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = count_inversions(v, buf, lo, mid) + count_inversions(v, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            inv += mid - i;
            buf[k++] = v[j++];
        } else {
            buf[k++] = v[i++];
        }
    }
    while (i < mid) buf[k++] = v[i++];
    while (j < hi) buf[k++] = v[j++];
    std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
    return inv;
}

}  // namespace

std::uint64_t discordant_pairs(const PairedSample& sample) {
    const std::size_t n = sample.size();
    check_no_ties(sample);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sample.x[a] < sample.x[b]; });
    std::vector<double> ys(n);
    for (std::size_t k = 0; k < n; ++k) ys[k] = sample.y[order[k]];
    std::vector<double> buf(n);
    return count_inversions(ys, buf, 0, n);
}

double kendall_t(const PairedSample& sample) {
    const std::size_t n = sample.size();
    if (n < 2) throw SizeError("kendall_t requires n >= 2");
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t d = discordant_pairs(sample);
    // C - D = pairs - 2D when there are no ties.
    return (static_cast<double>(pairs) - 2.0 * static_cast<double>(d)) /
           static_cast<double>(pairs);
}

double spearman_s(const PairedSample& sample) {
    const std::size_t n = sample.size();
    if (n < 3) throw SizeError("spearman_s requires n >= 3");
    const auto rx = ranks(sample.x);
    const auto ry = ranks(sample.y);
    std::uint64_t dot = 0;
    for (std::size_t i = 0; i < n; ++i)
        dot += static_cast<std::uint64_t>(rx[i]) * static_cast<std::uint64_t>(ry[i]);
    const double nn = static_cast<double>(n);
    return 12.0 * static_cast<double>(dot) / (nn * (nn * nn - 1.0)) -
           3.0 * (nn + 1.0) / (nn - 1.0);
}

double spearman_u_tilde(const PairedSample& sample) {
    const std::size_t n = sample.size();
    if (n < 3) throw SizeError("spearman_u_tilde requires n >= 3");
    const auto rx = ranks(sample.x);
    const auto ry = ranks(sample.y);
    std::uint64_t dot = 0;
    for (std::size_t i = 0; i < n; ++i)
        dot += static_cast<std::uint64_t>(rx[i]) * static_cast<std::uint64_t>(ry[i]);
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t concordant = pairs - discordant_pairs(sample);
    const double triples = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
    return (static_cast<double>(dot) - static_cast<double>(n) * n -
            static_cast<double>(concordant)) /
           triples;
}

int h2_kernel(double xp, double yp, double xq, double yq) {
    if (xp == xq || yp == yq) throw TieError("h2_kernel requires distinct coordinates");
    return ((xp > xq) == (yp > yq)) ? 1 : -1;
}

}  // namespace arelab
