#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "smat/corpus.hpp"
#include "smat/matrix.hpp"

namespace smat {

// Term -> dense column index, in first-occurrence order over the corpus.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(const ProfilingCorpus& corpus);

    std::size_t size() const { return terms_.size(); }
    // -1 if the term is unknown.
    long index_of(const std::string& term) const;
    const std::vector<std::string>& terms() const { return terms_; }

private:
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::string> terms_;
};

// Row i = term-frequency vector of document i over the vocabulary.
// Out-of-vocabulary tokens are ignored. Errors on an empty corpus.
Matrix build_doc_term_matrix(const ProfilingCorpus& corpus, const Vocabulary& vocab);

// A = V * V^T, the n x n document Gram matrix.
Matrix gram_matrix(const Matrix& V);

struct WordSpace {
    std::vector<double> eigenvalues; // nonincreasing
    Matrix eigenvectors;             // orthonormal columns, sign-fixed
};

// Full symmetric eigendecomposition by cyclic Jacobi rotations.
// Eigenvalues sorted nonincreasing; each eigenvector's first nonzero
// component is made positive. Errors if A is non-symmetric beyond tol or
// the sweep cap is hit before the off-diagonal mass drops below tolerance.
WordSpace eigen_decompose(const Matrix& A, double tol = 1e-10);

} // namespace smat
