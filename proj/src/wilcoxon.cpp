#include "tasig/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tasig/errors.hpp"

namespace tasig {

namespace {

// Largest effective sample size for which the exact null distribution is
// enumerated; beyond it (or with ties) the normal approximation is used.
constexpr int kExactCutoff = 25;

// Subset-sum counts over ranks {1..n}: counts[s] = number of sign patterns
// with rank sum s. Integer-valued doubles, exact up to n = 25 (2^25 < 2^53).
std::vector<double> rank_sum_counts(int n) {
    int max_sum = n * (n + 1) / 2;
    std::vector<double> counts(std::size_t(max_sum) + 1, 0.0);
    counts[0] = 1.0;
    for (int r = 1; r <= n; ++r)
        for (int s = max_sum; s >= r; --s)
            counts[s] += counts[s - r];
    return counts;
}

double normal_upper_tail(double z) {
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

} // namespace

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]])
            ++j;
        // Positions i..j (0-based) share the average of ranks i+1..j+1.
        double avg = (double(i + 1) + double(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

std::vector<double> signed_rank_null_pmf(int n) {
    if (n < 1)
        throw ValidationError("significance: signed-rank pmf needs n >= 1");
    std::vector<double> pmf = rank_sum_counts(n);
    for (double& p : pmf)
        p = std::ldexp(p, -n); // divide by 2^n, exact
    return pmf;
}

double exact_signed_rank_p(double w_plus, int n, Alternative alternative) {
    if (n < 1)
        throw ValidationError("significance: exact signed-rank p needs n >= 1");
    std::vector<double> counts = rank_sum_counts(n);
    long long w = std::llround(w_plus);
    long long max_sum = (long long)(counts.size()) - 1;
    w = std::clamp(w, 0LL, max_sum);

    double tail = 0.0;
    if (alternative == Alternative::greater) {
        for (long long s = w; s <= max_sum; ++s)
            tail += counts[std::size_t(s)];
    } else {
        for (long long s = 0; s <= w; ++s)
            tail += counts[std::size_t(s)];
    }
    return std::ldexp(tail, -n);
}

double normal_signed_rank_p(double w_plus, int n, double tie_sum, Alternative alternative) {
    if (n < 1)
        throw ValidationError("significance: normal signed-rank p needs n >= 1");
    double mean = n * (n + 1) / 4.0;
    double variance = n * (n + 1) * (2.0 * n + 1) / 24.0 - tie_sum / 48.0;
    double sd = std::sqrt(variance);
    if (alternative == Alternative::greater)
        return normal_upper_tail((w_plus - 0.5 - mean) / sd);
    return 1.0 - normal_upper_tail((w_plus + 0.5 - mean) / sd);
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> diffs, Alternative alternative) {
    std::vector<double> nonzero;
    nonzero.reserve(diffs.size());
    for (double d : diffs) {
        if (!std::isfinite(d))
            throw ValidationError("significance: non-finite difference in sample");
        if (d != 0.0)
            nonzero.push_back(d);
    }
    if (nonzero.empty())
        throw ValidationError(diffs.empty() ? "significance: empty sample"
                                            : "significance: no nonzero differences");

    std::vector<double> abs_values(nonzero.size());
    for (std::size_t i = 0; i < nonzero.size(); ++i)
        abs_values[i] = std::fabs(nonzero[i]);
    std::vector<double> ranks = average_ranks(abs_values);

    double w_plus = 0.0;
    for (std::size_t i = 0; i < nonzero.size(); ++i)
        if (nonzero[i] > 0.0)
            w_plus += ranks[i];

    // Tie groups over |differences|.
    std::vector<double> sorted_abs = abs_values;
    std::sort(sorted_abs.begin(), sorted_abs.end());
    double tie_sum = 0.0;
    bool has_ties = false;
    for (std::size_t i = 0; i < sorted_abs.size();) {
        std::size_t j = i;
        while (j + 1 < sorted_abs.size() && sorted_abs[j + 1] == sorted_abs[i])
            ++j;
        double t = double(j - i + 1);
        if (t > 1.0) {
            has_ties = true;
            tie_sum += t * t * t - t;
        }
        i = j + 1;
    }

    WilcoxonResult result;
    result.n = int(nonzero.size());
    result.w_plus = w_plus;
    result.alternative = alternative;
    if (!has_ties && result.n <= kExactCutoff) {
        result.method = PvalueMethod::exact;
        result.p_value = exact_signed_rank_p(w_plus, result.n, alternative);
    } else {
        result.method = PvalueMethod::normal_approx;
        result.p_value = normal_signed_rank_p(w_plus, result.n, tie_sum, alternative);
    }
    return result;
}

} // namespace tasig
