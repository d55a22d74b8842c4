#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "smat/matrix.hpp"

namespace smat {

struct TreeNode {
    int feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int label = -1; // leaf class index
};

struct DecisionTree {
    std::vector<TreeNode> nodes; // preorder, root first
};

struct ForestParams {
    int trees = 100;
    int max_depth = 16;
    int min_leaf = 2;
    int threads = 1;
};

struct Forest {
    std::vector<DecisionTree> trees;
    std::vector<std::string> labels; // declared label order, used for tie-breaks
    std::size_t arity = 0;
    std::uint64_t seed = 0;
};

// Bagged Gini decision trees: each tree sees a bootstrap sample of the rows
// and considers ceil(sqrt(arity)) random features per split, thresholds at
// midpoints of sorted unique values. Deterministic given the seed; tree t
// draws from a seed derived from (seed, t), so the result is independent of
// the thread count.
Forest train_forest(const Matrix& features, const std::vector<int>& labels,
                    const std::vector<std::string>& label_names, const ForestParams& params,
                    std::uint64_t seed);

int tree_predict(const DecisionTree& tree, std::span<const double> x);

// Vote histogram over trees, indexed by label.
std::vector<int> forest_votes(const Forest& forest, std::span<const double> x);

// Majority label; ties resolved toward the lowest label index.
// Errors if x's arity does not match the forest.
int forest_predict(const Forest& forest, std::span<const double> x);

void write_forest(std::ostream& out, const Forest& forest);
Forest read_forest(std::istream& in);

} // namespace smat
