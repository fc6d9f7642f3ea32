#pragma once

#include <gmpxx.h>

#include <vector>

#include "dyckcat/errors.hpp"

namespace dyckcat {

using Rat = mpq_class;

/// Small dense matrix of exact rationals. Row-major.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static Mat identity(int nn);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    int rank() const;

    /// Basis of the right nullspace, one column vector per basis element.
    std::vector<std::vector<Rat>> nullspace() const;

    /// Exact inverse; throws invalid_input_error when singular.
    Mat inverse() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

}  // namespace dyckcat
