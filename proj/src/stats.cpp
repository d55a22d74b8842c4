#include "smat/stats.hpp"

#include <algorithm>
#include <cmath>

#include "smat/error.hpp"

namespace smat {

namespace {

// Linear-interpolation quantile of an ascending sample (position p*(n-1)).
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

} // namespace

const std::array<std::string, kStatCount>& stat_names() {
    static const std::array<std::string, kStatCount> names = {
        "mean", "variance", "skewness", "kurtosis", "min",
        "max",  "median",   "iqr",      "entropy",
    };
    return names;
}

std::array<double, kStatCount> summarize(const std::vector<double>& v) {
    if (v.empty()) throw Error("summarize: empty vector");
    const double n = static_cast<double>(v.size());

    double sum = 0.0;
    for (double x : v) sum += x;
    const double mean = sum / n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : v) {
        const double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;

    const double variance = m2;
    const double skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    const double kurtosis = m2 > 0.0 ? m4 / (m2 * m2) - 3.0 : 0.0;

    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    const double median = quantile_sorted(sorted, 0.5);
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);

    double mass = 0.0;
    for (double x : v) mass += std::fabs(x);
    double entropy = 0.0;
    if (mass > 0.0) {
        for (double x : v) {
            const double p = std::fabs(x) / mass;
            if (p > 0.0) entropy -= p * std::log(p);
        }
    }

    return {mean, variance, skewness, kurtosis, sorted.front(), sorted.back(),
            median, iqr, entropy};
}

Matrix statistical_features(const WordSpace& space, std::size_t n_docs) {
    if (n_docs == 0) throw Error("statistical_features: empty batch");
    if (space.eigenvectors.rows() != n_docs) {
        throw Error("statistical_features: word space size does not match document count");
    }
    Matrix F(n_docs, kStatCount);
    for (std::size_t i = 0; i < n_docs; ++i) {
        const auto stats = summarize(space.eigenvectors.row(i));
        for (std::size_t j = 0; j < kStatCount; ++j) F.at(i, j) = stats[j];
    }
    return F;
}

double ks_statistic(const std::vector<double>& sample_a, const std::vector<double>& sample_b) {
    if (sample_a.empty() || sample_b.empty()) throw Error("ks_statistic: empty sample");
    std::vector<double> a = sample_a;
    std::vector<double> b = sample_b;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() || j < b.size()) {
        double t;
        if (i < a.size() && j < b.size()) {
            t = std::min(a[i], b[j]);
        } else if (i < a.size()) {
            t = a[i];
        } else {
            t = b[j];
        }
        while (i < a.size() && a[i] <= t) ++i;
        while (j < b.size() && b[j] <= t) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

} // namespace smat
