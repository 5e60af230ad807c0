#include "partblocks/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace partblocks {

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols, FieldScalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(f);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FieldScalar& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    return out;
}

Matrix Matrix::scaled(const FieldScalar& c) const {
    Matrix out = *this;
    for (auto& v : out.data_) v = v * c;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

FieldScalar Matrix::trace() const {
    FieldScalar t = FieldScalar::zero(field_);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const FieldScalar& v) { return v.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

int Matrix::rank() const {
    Matrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < cols_; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        FieldScalar inv = m.at(rank, col).inverse();
        for (int c = col; c < cols_; ++c) m.at(rank, c) = m.at(rank, c) * inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            FieldScalar f = m.at(r, col);
            for (int c = col; c < cols_; ++c)
                m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

bool Matrix::is_nilpotent() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: nilpotency needs a square matrix");
    Matrix power = *this;
    long long covered = 1;
    while (true) {
        if (power.is_zero()) return true;
        if (covered >= rows_) return false;
        power = power * power;
        covered *= 2;
    }
}

SparseSolver::SparseSolver(const Field& f, int ncols) : field_(f), ncols_(ncols) {}

void SparseSolver::add_row(Row row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge duplicate columns and drop zeros.
    Row merged;
    for (auto& [c, v] : row) {
        if (!merged.empty() && merged.back().first == c)
            merged.back().second = merged.back().second + v;
        else
            merged.emplace_back(c, v);
    }
    std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });

    auto subtract = [&](const Row& r, const FieldScalar& f, const Row& piv) {
        Row out;
        out.reserve(r.size() + piv.size());
        size_t i = 0, j = 0;
        while (i < r.size() || j < piv.size()) {
            if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || piv[j].first < r[i].first) {
                out.emplace_back(piv[j].first, -(f * piv[j].second));
                ++j;
            } else {
                FieldScalar v = r[i].second - f * piv[j].second;
                if (!v.is_zero()) out.emplace_back(r[i].first, v);
                ++i, ++j;
            }
        }
        return out;
    };

    // Reduce against existing pivots.
    for (size_t i = 0; i < merged.size();) {
        auto it = pivots_.find(merged[i].first);
        if (it == pivots_.end()) {
            ++i;
            continue;
        }
        merged = subtract(merged, merged[i].second, it->second);
        i = 0; // positions shifted; rescan (rows stay short in practice)
    }
    if (merged.empty()) return;

    // Normalize on the leading column, then eliminate it from older pivots.
    int pcol = merged.front().first;
    FieldScalar inv = merged.front().second.inverse();
    for (auto& [c, v] : merged) v = v * inv;
    for (auto& [col, prow] : pivots_) {
        auto hit = std::lower_bound(prow.begin(), prow.end(), pcol,
                                    [](const auto& e, int c) { return e.first < c; });
        if (hit != prow.end() && hit->first == pcol) prow = subtract(prow, hit->second, merged);
    }
    pivots_.emplace(pcol, std::move(merged));
}

std::vector<std::vector<FieldScalar>> SparseSolver::nullspace() const {
    std::vector<bool> is_pivot(ncols_, false);
    for (const auto& [col, row] : pivots_) is_pivot[col] = true;
    std::vector<std::vector<FieldScalar>> basis;
    for (int free = 0; free < ncols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldScalar> x(ncols_, FieldScalar::zero(field_));
        x[free] = FieldScalar::one(field_);
        for (const auto& [col, row] : pivots_)
            for (const auto& [c, v] : row)
                if (c == free) x[col] = -v;
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace partblocks
