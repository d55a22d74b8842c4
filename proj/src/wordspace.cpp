#include "smat/wordspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "smat/error.hpp"

namespace smat {

Vocabulary::Vocabulary(const ProfilingCorpus& corpus) {
    for (const auto& doc : corpus.documents) {
        for (const auto& token : doc.tokens) {
            if (index_.emplace(token, terms_.size()).second) terms_.push_back(token);
        }
    }
}

long Vocabulary::index_of(const std::string& term) const {
    auto it = index_.find(term);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Matrix build_doc_term_matrix(const ProfilingCorpus& corpus, const Vocabulary& vocab) {
    if (corpus.documents.empty()) throw Error("build_doc_term_matrix: empty corpus");
    Matrix V(corpus.size(), vocab.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (const auto& token : corpus.documents[i].tokens) {
            const long j = vocab.index_of(token);
            if (j >= 0) V.at(i, static_cast<std::size_t>(j)) += 1.0;
        }
    }
    return V;
}

Matrix gram_matrix(const Matrix& V) {
    if (V.rows() == 0) throw Error("gram_matrix: empty matrix");
    const std::size_t n = V.rows();
    const std::size_t m = V.cols();
    Matrix A(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* vi = V.row_data(i);
        for (std::size_t j = i; j < n; ++j) {
            const double* vj = V.row_data(j);
            double dot = 0.0;
            for (std::size_t k = 0; k < m; ++k) dot += vi[k] * vj[k];
            A.at(i, j) = dot;
            A.at(j, i) = dot;
        }
    }
    return A;
}

namespace {

double frobenius_norm(const Matrix& A) {
    double sum = 0.0;
    for (double v : A.data()) sum += v * v;
    return std::sqrt(sum);
}

double off_diagonal_norm(const Matrix& A) {
    double sum = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (i != j) sum += A.at(i, j) * A.at(i, j);
        }
    }
    return std::sqrt(sum);
}

void apply_sign_convention(Matrix& W) {
    const std::size_t n = W.rows();
    for (std::size_t k = 0; k < n; ++k) {
        double max_abs = 0.0;
        for (std::size_t i = 0; i < n; ++i) max_abs = std::max(max_abs, std::fabs(W.at(i, k)));
        const double cutoff = 1e-12 * std::max(1.0, max_abs);
        for (std::size_t i = 0; i < n; ++i) {
            const double v = W.at(i, k);
            if (std::fabs(v) > cutoff) {
                if (v < 0.0) {
                    for (std::size_t r = 0; r < n; ++r) W.at(r, k) = -W.at(r, k);
                }
                break;
            }
        }
    }
}

} // namespace

WordSpace eigen_decompose(const Matrix& A, double tol) {
    const std::size_t n = A.rows();
    if (n == 0 || A.cols() != n) throw Error("eigen_decompose: matrix must be square, n >= 1");

    double max_abs = 0.0;
    for (double v : A.data()) max_abs = std::max(max_abs, std::fabs(v));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::fabs(A.at(i, j) - A.at(j, i)) > tol * (1.0 + max_abs)) {
                throw Error("eigen_decompose: matrix not symmetric within tolerance");
            }
        }
    }

    Matrix D = A;
    // Symmetrize so rotations see one consistent value per pair.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (D.at(i, j) + D.at(j, i));
            D.at(i, j) = avg;
            D.at(j, i) = avg;
        }
    }

    Matrix W(n, n);
    for (std::size_t i = 0; i < n; ++i) W.at(i, i) = 1.0;

    const double stop = tol * (1.0 + frobenius_norm(D));
    const int max_sweeps = 100;
    bool converged = off_diagonal_norm(D) <= stop;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = D.at(p, q);
                if (apq == 0.0) continue;
                const double app = D.at(p, p);
                const double aqq = D.at(q, q);
                // Classic two-sided Jacobi rotation zeroing D[p][q].
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double dkp = D.at(k, p);
                    const double dkq = D.at(k, q);
                    D.at(k, p) = c * dkp - s * dkq;
                    D.at(k, q) = s * dkp + c * dkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double dpk = D.at(p, k);
                    const double dqk = D.at(q, k);
                    D.at(p, k) = c * dpk - s * dqk;
                    D.at(q, k) = s * dpk + c * dqk;
                }
                D.at(p, q) = 0.0;
                D.at(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const double wkp = W.at(k, p);
                    const double wkq = W.at(k, q);
                    W.at(k, p) = c * wkp - s * wkq;
                    W.at(k, q) = s * wkp + c * wkq;
                }
            }
        }
        converged = off_diagonal_norm(D) <= stop;
    }
    if (!converged) {
        throw Error("eigen_decompose: no convergence after 100 sweeps, off-diagonal norm " +
                    std::to_string(off_diagonal_norm(D)));
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return D.at(a, a) > D.at(b, b);
    });

    WordSpace space;
    space.eigenvalues.resize(n);
    space.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        space.eigenvalues[k] = D.at(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) {
            space.eigenvectors.at(i, k) = W.at(i, order[k]);
        }
    }
    apply_sign_convention(space.eigenvectors);
    return space;
}

} // namespace smat
