#pragma once

#include <span>
#include <vector>

namespace colourlex {

/// Product-moment correlation. Throws DegenerateInput for length < 2,
/// mismatched lengths or zero variance in either list.
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

/// 1-based ranks, tied values receive the average of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation of the average-rank vectors.
double spearman_correlation(std::span<const double> xs, std::span<const double> ys);

}  // namespace colourlex
