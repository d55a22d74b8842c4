#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "smat/corpus.hpp"
#include "smat/forest.hpp"
#include "smat/matrix.hpp"

namespace smat {

// Column-wise sums of each class's feature rows; index = class id.
// (The reference sample used by KS-based feature elimination.)
std::vector<std::vector<double>> class_sum_vectors(const Matrix& F,
                                                   const std::vector<int>& labels,
                                                   int n_classes);

// KS-based score of every column: larger = better candidate for removal
// (far from its own class's sum vector, close to the complement's).
std::vector<double> elimination_scores(const Matrix& F, const std::vector<int>& labels);

struct EliminationResult {
    Matrix filtered;
    std::vector<bool> kept;
};

// Drops the ceil(drop_fraction * s) worst-scoring columns, always keeping at
// least one. Requires at least two classes present.
EliminationResult eliminate_features(const Matrix& F, const std::vector<int>& labels,
                                     double drop_fraction);

struct ProfilerParams {
    ForestParams forest;                // 100 trees, depth 16, min leaf 2
    double drop_fraction = 0.05;
    bool do_elimination = true;
    double eigen_tol = 1e-10;
    int threads = 1;
};

struct ProfilerModel {
    std::vector<bool> feature_mask; // over the 9 statistic columns
    Forest gender_forest;
    Forest age_forest; // input = masked features + gender column
    std::vector<std::string> age_groups;
    std::string language;
    std::uint64_t seed = 0;
    std::uint64_t vocab_size = 0;
    std::uint64_t documents = 0;
};

struct BatchPlan {
    std::vector<std::vector<std::size_t>> batches; // document indices
};

// Stratified partition: documents are grouped by (gender, age) cell, each
// cell seeded-shuffled, then all cells dealt round-robin with a continuing
// pointer. Batch sizes differ by at most one.
BatchPlan make_batches(const ProfilingCorpus& corpus, std::size_t n_batches,
                       std::uint64_t seed);

// The 9 statistics of every document in one batch, via that batch's own
// doc-term matrix, Gram matrix and eigen decomposition.
Matrix batch_features(const ProfilingCorpus& corpus, const std::vector<std::size_t>& docs,
                      double eigen_tol);

// Per-batch feature blocks concatenated in plan order (row placement is
// fixed by the plan, so any batch execution schedule yields the same
// matrix). doc_order receives the document index of every row.
Matrix ltlm_feature_matrix(const ProfilingCorpus& corpus, const BatchPlan& plan,
                           double eigen_tol, int threads,
                           std::vector<std::size_t>* doc_order = nullptr);

// Single-batch training. Equivalent to ltlm_train with one batch.
ProfilerModel train_profiler(const ProfilingCorpus& corpus, const ProfilerParams& params,
                             std::uint64_t seed);

// Batched training: per-batch feature extraction, concatenation, optional
// elimination, then the gender and age forests.
ProfilerModel ltlm_train(const ProfilingCorpus& corpus, std::size_t n_batches,
                         const ProfilerParams& params, std::uint64_t seed);

// Hierarchical prediction: gender first, then age with the predicted gender
// appended as an extra feature. One (gender, age) pair per document.
std::vector<std::pair<Gender, std::string>> predict_profiles(const ProfilerModel& model,
                                                             const ProfilingCorpus& corpus,
                                                             double eigen_tol = 1e-10);

void write_profiler_model(std::ostream& out, const ProfilerModel& model);
ProfilerModel read_profiler_model(std::istream& in);

double gender_to_feature(Gender g); // Male -> 0.0, Female -> 1.0

} // namespace smat
