/*
   Copyright 2026 The carlitz-shtuka Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "carlitz/ff/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "carlitz/errors.hpp"

namespace carlitz::ff {

KMatrix::KMatrix(const Fq& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

KMatrix KMatrix::from_rows(const Fq& field, const std::vector<KVector>& rows, int cols) {
    KMatrix m(field, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(r) * cols);
    }
    return m;
}

KMatrix KMatrix::identity(const Fq& field, int n) {
    KMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

KVector KMatrix::row(int r) const {
    return KVector(a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                   a_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

KVector KMatrix::column(int c) const {
    KVector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    const Fq& F = *field_;
    KMatrix r(F, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Elem a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(a, o.at(k, j)));
        }
    return r;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    KMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
    return r;
}

KMatrix KMatrix::operator-(const KMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    KMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
    return r;
}

KVector KMatrix::apply(const KVector& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    const Fq& F = *field_;
    KVector y(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        Elem s = 0;
        for (int j = 0; j < cols_; ++j) s = F.add(s, F.mul(at(i, j), x[j]));
        y[i] = s;
    }
    return y;
}

KMatrix KMatrix::transpose() const {
    KMatrix r(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool KMatrix::is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
}

bool is_zero(const KVector& v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Fq::Elem x) { return x == 0; });
}

void axpy(const Fq& F, KVector& y, Fq::Elem a, const KVector& x) {
    if (a == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0) y[i] = F.add(y[i], F.mul(a, x[i]));
}

Rref rref(KMatrix m) {
    const Fq& F = m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        const Fq::Elem inv = F.inv(m.at(r, c));
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Fq::Elem f = m.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < m.cols(); ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

int rank(const KMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

KMatrix kernel(const KMatrix& m) {
    const Fq& F = m.field();
    const Rref R = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : R.pivots) is_pivot[p] = true;
    std::vector<KVector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        KVector v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = F.neg(R.reduced.at(static_cast<int>(i), f));
        basis.push_back(std::move(v));
    }
    // echelonize for a deterministic, canonical output
    EchelonBasis eb(F, m.cols());
    for (const auto& v : basis) eb.add(v);
    return KMatrix::from_rows(F, eb.rows(), m.cols());
}

KMatrix image(const KMatrix& m) {
    const Rref R = rref(m.transpose());
    KMatrix out(m.field(), static_cast<int>(R.pivots.size()), m.rows());
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out.at(i, j) = R.reduced.at(i, j);
    return out;
}

KVector solve(const KMatrix& m, const KVector& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    KMatrix aug(m.field(), m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const Rref R = rref(std::move(aug));
    KVector x(m.cols(), 0);
    for (std::size_t i = 0; i < R.pivots.size(); ++i) {
        if (R.pivots[i] == m.cols()) throw Inconsistent("linear system has no solution");
        x[R.pivots[i]] = R.reduced.at(static_cast<int>(i), m.cols());
    }
    return x;
}

std::vector<int> EchelonBasis::free_columns() const {
    std::vector<bool> is_pivot(dim_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<int> out;
    for (int c = 0; c < dim_; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

KVector EchelonBasis::reduce(KVector v) const {
    const Fq& F = *field_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Fq::Elem c = v[pivots_[i]];
        if (c != 0) axpy(F, v, F.neg(c), rows_[i]);
    }
    return v;
}

bool EchelonBasis::add(const KVector& v0) {
    if (static_cast<int>(v0.size()) != dim_) throw std::invalid_argument("vector length mismatch");
    const Fq& F = *field_;
    KVector v = reduce(v0);
    int p = -1;
    for (int c = 0; c < dim_; ++c)
        if (v[c] != 0) {
            p = c;
            break;
        }
    if (p < 0) return false;
    const Fq::Elem inv = F.inv(v[p]);
    for (auto& x : v) x = F.mul(x, inv);
    for (auto& row : rows_) {
        const Fq::Elem c = row[p];
        if (c != 0) axpy(F, row, F.neg(c), v);
    }
    // keep rows sorted by pivot
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto idx = it - pivots_.begin();
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

}  // namespace carlitz::ff
