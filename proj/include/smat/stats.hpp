#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "smat/matrix.hpp"
#include "smat/wordspace.hpp"

namespace smat {

inline constexpr std::size_t kStatCount = 9;

// Column names of the statistical feature matrix, in order.
const std::array<std::string, kStatCount>& stat_names();

// The nine summary statistics of a vector: mean, population variance,
// population skewness, population excess kurtosis, min, max, median,
// interquartile range (linear-interpolation quantiles), and Shannon entropy
// of |v|/sum|v|. Skewness/kurtosis are 0 for zero variance; entropy is 0
// for zero mass. Never produces NaN/Inf.
std::array<double, kStatCount> summarize(const std::vector<double>& v);

// Row i = summarize(row i of the eigenvector matrix W).
Matrix statistical_features(const WordSpace& space, std::size_t n_docs);

// Two-sample Kolmogorov-Smirnov statistic: max over pooled points of
// |ECDF_a - ECDF_b|. Errors on an empty sample.
double ks_statistic(const std::vector<double>& sample_a, const std::vector<double>& sample_b);

} // namespace smat
