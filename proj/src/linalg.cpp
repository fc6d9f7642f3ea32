#include "dyckcat/linalg.hpp"

#include <algorithm>

namespace dyckcat {

Mat Mat::identity(int nn) {
    Mat m(nn, nn);
    for (int i = 0; i < nn; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix shape mismatch in product");
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& v) { return v == 0; });
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> row_reduce(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        Rat inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(row_reduce(m).size());
}

std::vector<std::vector<Rat>> Mat::nullspace() const {
    Mat m = *this;
    std::vector<int> pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw invalid_input_error("inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    std::vector<int> pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) != rows_) throw invalid_input_error("singular matrix");
    for (int i = 0; i < rows_; ++i)
        if (pivots[i] != i) throw invalid_input_error("singular matrix");
    Mat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

}  // namespace dyckcat
