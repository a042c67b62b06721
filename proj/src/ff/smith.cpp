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

#include "carlitz/ff/smith.hpp"

#include <stdexcept>
#include <utility>

namespace carlitz::ff {

PolyMatrix::PolyMatrix(const Fq& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Poly(field)) {}

PolyMatrix PolyMatrix::identity(const Fq& field, int n) {
    PolyMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(field, 1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix r(*field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Poly s(*field_);
            for (int k = 0; k < cols_; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

int PolyMatrix::max_degree() const {
    int d = -1;
    for (const auto& p : a_) d = std::max(d, p.deg());
    return d;
}

std::vector<Poly> PolyMatrix::column(int c) const {
    std::vector<Poly> v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Poly PolyMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    if (rows_ == 0) return Poly::constant(*field_, 1);
    // Laplace expansion along the first row; matrices here are tiny.
    if (rows_ == 1) return at(0, 0);
    Poly det(*field_);
    for (int j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        PolyMatrix minor(*field_, rows_ - 1, cols_ - 1);
        for (int r = 1; r < rows_; ++r) {
            int cc = 0;
            for (int c = 0; c < cols_; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = at(r, c);
            }
        }
        Poly term = at(0, j) * minor.determinant();
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::string PolyMatrix::to_string() const {
    std::string s = "[";
    for (int r = 0; r < rows_; ++r) {
        if (r) s += "; ";
        for (int c = 0; c < cols_; ++c) {
            if (c) s += ", ";
            s += at(r, c).to_string();
        }
    }
    return s + "]";
}

void PolyMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void PolyMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void PolyMatrix::add_row_multiple(int dst, int src, const Poly& f) {
    if (f.is_zero()) return;
    for (int c = 0; c < cols_; ++c)
        if (!at(src, c).is_zero()) at(dst, c) += f * at(src, c);
}

void PolyMatrix::add_col_multiple(int dst, int src, const Poly& f) {
    if (f.is_zero()) return;
    for (int r = 0; r < rows_; ++r)
        if (!at(r, src).is_zero()) at(r, dst) += f * at(r, src);
}

void PolyMatrix::scale_row(int r, Fq::Elem c) {
    for (int j = 0; j < cols_; ++j) at(r, j) = at(r, j).scaled(c);
}

int SmithForm::rank() const {
    int r = 0;
    for (const auto& d : divisors)
        if (!d.is_zero()) ++r;
    return r;
}

std::vector<Poly> SmithForm::nonunit_divisors() const {
    std::vector<Poly> out;
    for (const auto& d : divisors)
        if (d.deg() > 0) out.push_back(d);
    return out;
}

SmithForm smith_normal_form(const PolyMatrix& m) {
    const Fq& F = m.field();
    PolyMatrix D = m;
    PolyMatrix U = PolyMatrix::identity(F, m.rows());
    PolyMatrix V = PolyMatrix::identity(F, m.cols());
    const int n = std::min(m.rows(), m.cols());

    for (int k = 0; k < n; ++k) {
        while (true) {
            int pr = -1, pc = -1, best = -1;
            for (int i = k; i < D.rows(); ++i)
                for (int j = k; j < D.cols(); ++j) {
                    const Poly& e = D.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.deg() < best) {
                        best = e.deg();
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) break;  // the remaining block is zero
            D.swap_rows(k, pr);
            U.swap_rows(k, pr);
            D.swap_cols(k, pc);
            V.swap_cols(k, pc);

            bool dirty = false;
            const Poly piv = D.at(k, k);
            for (int i = k + 1; i < D.rows(); ++i) {
                if (D.at(i, k).is_zero()) continue;
                auto [quo, rem] = D.at(i, k).divmod(piv);
                D.add_row_multiple(i, k, -quo);
                U.add_row_multiple(i, k, -quo);
                if (!rem.is_zero()) dirty = true;
            }
            for (int j = k + 1; j < D.cols(); ++j) {
                if (D.at(k, j).is_zero()) continue;
                auto [quo, rem] = D.at(k, j).divmod(piv);
                D.add_col_multiple(j, k, -quo);
                V.add_col_multiple(j, k, -quo);
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) continue;

            // divisibility of the remaining block by the pivot
            int bad = -1;
            for (int i = k + 1; i < D.rows() && bad < 0; ++i)
                for (int j = k + 1; j < D.cols(); ++j)
                    if (!piv.divides(D.at(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            D.add_row_multiple(k, bad, Poly::constant(F, 1));
            U.add_row_multiple(k, bad, Poly::constant(F, 1));
        }
        if (!D.at(k, k).is_zero() && !D.at(k, k).is_monic()) {
            const Fq::Elem li = F.inv(D.at(k, k).lc());
            D.scale_row(k, li);
            U.scale_row(k, li);
        }
    }

    SmithForm out{{}, U, V};
    for (int k = 0; k < n; ++k) out.divisors.push_back(D.at(k, k));
    return out;
}

}  // namespace carlitz::ff
