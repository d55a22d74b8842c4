#include "smat/forest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "smat/error.hpp"
#include "smat/rng.hpp"

namespace smat {

namespace {

int majority_label(const std::vector<int>& counts) {
    int best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c) {
        if (counts[c] > counts[best]) best = static_cast<int>(c);
    }
    return best;
}

double gini(const std::vector<int>& counts, int total) {
    if (total == 0) return 0.0;
    double sum_sq = 0.0;
    for (int c : counts) {
        const double p = static_cast<double>(c) / total;
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

struct TreeBuilder {
    const Matrix& F;
    const std::vector<int>& y;
    int n_labels;
    int mtry;
    const ForestParams& params;
    Rng rng;
    DecisionTree tree;

    std::vector<int> class_counts(const std::vector<int>& rows) const {
        std::vector<int> counts(n_labels, 0);
        for (int r : rows) counts[y[r]]++;
        return counts;
    }

    int make_leaf(const std::vector<int>& counts) {
        TreeNode node;
        node.label = majority_label(counts);
        tree.nodes.push_back(node);
        return static_cast<int>(tree.nodes.size()) - 1;
    }

    // Returns the index of the subtree root. Children follow in preorder.
    int build(std::vector<int>& rows, int depth) {
        auto counts = class_counts(rows);
        const int total = static_cast<int>(rows.size());
        const bool pure =
            std::count_if(counts.begin(), counts.end(), [](int c) { return c > 0; }) <= 1;
        if (pure || depth >= params.max_depth || total < 2 * params.min_leaf) {
            return make_leaf(counts);
        }

        // Random feature subset, scanned in ascending index order so equal
        // scores resolve to the lowest feature.
        std::vector<int> feats(F.cols());
        std::iota(feats.begin(), feats.end(), 0);
        for (int i = 0; i < mtry; ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(rng.next_below(feats.size() - i));
            std::swap(feats[i], feats[j]);
        }
        feats.resize(mtry);
        std::sort(feats.begin(), feats.end());

        const double parent_gini = gini(counts, total);
        double best_decrease = 0.0;
        int best_feature = -1;
        double best_threshold = 0.0;

        std::vector<int> order(rows.size());
        for (int f : feats) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return F.at(rows[a], f) < F.at(rows[b], f);
            });
            std::vector<int> left_counts(n_labels, 0);
            for (std::size_t k = 0; k + 1 < order.size(); ++k) {
                left_counts[y[rows[order[k]]]]++;
                const double v = F.at(rows[order[k]], f);
                const double next = F.at(rows[order[k + 1]], f);
                if (v == next) continue;
                const int nl = static_cast<int>(k) + 1;
                const int nr = total - nl;
                if (nl < params.min_leaf || nr < params.min_leaf) continue;
                std::vector<int> right_counts(n_labels);
                for (int c = 0; c < n_labels; ++c) right_counts[c] = counts[c] - left_counts[c];
                const double weighted = (nl * gini(left_counts, nl) + nr * gini(right_counts, nr)) /
                                        static_cast<double>(total);
                const double decrease = parent_gini - weighted;
                if (decrease > best_decrease) {
                    best_decrease = decrease;
                    best_feature = f;
                    best_threshold = 0.5 * (v + next);
                }
            }
        }

        if (best_feature < 0) return make_leaf(counts);

        std::vector<int> left_rows, right_rows;
        for (int r : rows) {
            (F.at(r, best_feature) <= best_threshold ? left_rows : right_rows).push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();

        const int node_index = static_cast<int>(tree.nodes.size());
        TreeNode node;
        node.feature = best_feature;
        node.threshold = best_threshold;
        tree.nodes.push_back(node);
        const int left = build(left_rows, depth + 1);
        const int right = build(right_rows, depth + 1);
        tree.nodes[node_index].left = left;
        tree.nodes[node_index].right = right;
        return node_index;
    }
};

DecisionTree train_tree(const Matrix& F, const std::vector<int>& y, int n_labels,
                        const ForestParams& params, std::uint64_t tree_seed) {
    const std::size_t n = F.rows();
    TreeBuilder builder{
        F, y, n_labels,
        static_cast<int>(std::ceil(std::sqrt(static_cast<double>(F.cols())))),
        params, Rng(tree_seed), DecisionTree{}};
    std::vector<int> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = static_cast<int>(builder.rng.next_below(n)); // bootstrap
    }
    builder.build(rows, 0);
    return builder.tree;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Forest train_forest(const Matrix& features, const std::vector<int>& labels,
                    const std::vector<std::string>& label_names, const ForestParams& params,
                    std::uint64_t seed) {
    if (features.rows() != labels.size()) throw Error("train_forest: rows/labels mismatch");
    if (features.rows() < 2) throw Error("train_forest: need at least 2 rows");
    if (params.trees < 1) throw Error("train_forest: need at least 1 tree");
    for (int l : labels) {
        if (l < 0 || l >= static_cast<int>(label_names.size())) {
            throw Error("train_forest: label index out of range");
        }
    }

    Forest forest;
    forest.labels = label_names;
    forest.arity = features.cols();
    forest.seed = seed;
    forest.trees.resize(params.trees);

    const int n_labels = static_cast<int>(label_names.size());
    auto train_range = [&](int begin, int end) {
        for (int t = begin; t < end; ++t) {
            forest.trees[t] =
                train_tree(features, labels, n_labels, params, derive_seed(seed, t));
        }
    };

    const int workers = std::max(1, std::min(params.threads, params.trees));
    if (workers == 1) {
        train_range(0, params.trees);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (params.trees + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int begin = w * chunk;
            const int end = std::min(params.trees, begin + chunk);
            if (begin < end) pool.emplace_back(train_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return forest;
}

int tree_predict(const DecisionTree& tree, std::span<const double> x) {
    int i = 0;
    while (tree.nodes[i].feature >= 0) {
        const TreeNode& node = tree.nodes[i];
        i = x[node.feature] <= node.threshold ? node.left : node.right;
    }
    return tree.nodes[i].label;
}

std::vector<int> forest_votes(const Forest& forest, std::span<const double> x) {
    if (x.size() != forest.arity) {
        throw Error("forest_predict: feature arity " + std::to_string(x.size()) +
                    " does not match forest arity " + std::to_string(forest.arity));
    }
    std::vector<int> votes(forest.labels.size(), 0);
    for (const auto& tree : forest.trees) votes[tree_predict(tree, x)]++;
    return votes;
}

int forest_predict(const Forest& forest, std::span<const double> x) {
    return majority_label(forest_votes(forest, x));
}

void write_forest(std::ostream& out, const Forest& forest) {
    out << "labels";
    for (const auto& l : forest.labels) out << ' ' << l;
    out << '\n';
    out << "arity " << forest.arity << '\n';
    out << "seed " << forest.seed << '\n';
    out << "trees " << forest.trees.size() << '\n';
    for (const auto& tree : forest.trees) {
        out << "tree " << tree.nodes.size() << '\n';
        for (const auto& node : tree.nodes) {
            if (node.feature < 0) {
                out << "L " << node.label << '\n';
            } else {
                out << "S " << node.feature << ' ' << format_double(node.threshold) << ' '
                    << node.left << ' ' << node.right << '\n';
            }
        }
    }
}

Forest read_forest(std::istream& in) {
    Forest forest;
    std::string line;
    auto next_line = [&]() {
        if (!std::getline(in, line)) throw Error("forest: truncated model file");
        return std::istringstream(line);
    };

    {
        auto ss = next_line();
        std::string key, label;
        ss >> key;
        if (key != "labels") throw Error("forest: expected 'labels' line");
        while (ss >> label) forest.labels.push_back(label);
    }
    std::size_t n_trees = 0;
    {
        auto ss = next_line();
        std::string key;
        ss >> key >> forest.arity;
        if (key != "arity") throw Error("forest: expected 'arity' line");
        ss = next_line();
        ss >> key >> forest.seed;
        if (key != "seed") throw Error("forest: expected 'seed' line");
        ss = next_line();
        ss >> key >> n_trees;
        if (key != "trees") throw Error("forest: expected 'trees' line");
    }
    for (std::size_t t = 0; t < n_trees; ++t) {
        auto ss = next_line();
        std::string key;
        std::size_t n_nodes = 0;
        ss >> key >> n_nodes;
        if (key != "tree") throw Error("forest: expected 'tree' line");
        DecisionTree tree;
        tree.nodes.resize(n_nodes);
        for (std::size_t i = 0; i < n_nodes; ++i) {
            auto ns = next_line();
            std::string kind;
            ns >> kind;
            if (kind == "L") {
                ns >> tree.nodes[i].label;
            } else if (kind == "S") {
                ns >> tree.nodes[i].feature >> tree.nodes[i].threshold >> tree.nodes[i].left >>
                    tree.nodes[i].right;
            } else {
                throw Error("forest: bad node line: " + line);
            }
            if (!ns) throw Error("forest: bad node line: " + line);
        }
        forest.trees[t] = std::move(tree);
    }
    return forest;
}

} // namespace smat
