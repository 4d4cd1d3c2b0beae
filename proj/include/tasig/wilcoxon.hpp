#pragma once

#include <span>
#include <vector>

namespace tasig {

enum class Alternative { greater, less };

enum class PvalueMethod { exact, normal_approx };

struct WilcoxonResult {
    int n = 0;           // effective sample size after zero removal
    double w_plus = 0.0; // sum of ranks of positive differences
    double p_value = 1.0;
    PvalueMethod method = PvalueMethod::exact;
    Alternative alternative = Alternative::greater;
};

/// One-sided Wilcoxon signed-rank test on paired differences. Exact zeros
/// are dropped first (all-zero or empty input is an error); |differences|
/// are ranked with average ranks for ties. The p-value is exact (full
/// null distribution of W+) for tie-free samples with n <= 25, and a
/// tie-corrected normal approximation with continuity correction otherwise.
/// `greater` tests median > 0 via P(W+ >= w), `less` via P(W+ <= w).
WilcoxonResult wilcoxon_signed_rank(std::span<const double> diffs, Alternative alternative);

/// Average ranks (1-based, ties averaged) of the given values.
std::vector<double> average_ranks(std::span<const double> values);

/// Null pmf of W+ for a tie-free sample of size n: element s is
/// P(W+ = s), s = 0 .. n(n+1)/2. Computed by dynamic programming over the
/// subset sums of {1..n}; exact in binary arithmetic for n <= 25.
std::vector<double> signed_rank_null_pmf(int n);

/// Exact one-sided p-value for integer statistic w_plus under the null.
double exact_signed_rank_p(double w_plus, int n, Alternative alternative);

/// Normal-approximation p-value with continuity correction. `tie_sum` is
/// sum(t^3 - t) over groups of tied |differences| (0 when tie-free).
double normal_signed_rank_p(double w_plus, int n, double tie_sum, Alternative alternative);

} // namespace tasig
