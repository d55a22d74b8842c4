#pragma once

#include <cstddef>
#include <vector>

#include "smat/error.hpp"

namespace smat {

// Dense row-major matrix of doubles. Small and unclever on purpose; the
// batching scheme keeps everything that passes through here modest in size.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const double* row_data(std::size_t r) const { return data_.data() + r * cols_; }
    double* row_data(std::size_t r) { return data_.data() + r * cols_; }

    std::vector<double> row(std::size_t r) const {
        return std::vector<double>(row_data(r), row_data(r) + cols_);
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

} // namespace smat
