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

#ifndef CARLITZ_FF_SMITH_HPP
#define CARLITZ_FF_SMITH_HPP

#include <string>
#include <vector>

#include "carlitz/ff/poly.hpp"

namespace carlitz::ff {

/// Dense matrix over A = F_q[t].
class PolyMatrix {
public:
    PolyMatrix(const Fq& field, int rows, int cols);
    static PolyMatrix identity(const Fq& field, int n);

    const Fq& field() const noexcept { return *field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Poly& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Poly& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;
    /// Largest t-degree among the entries; -1 for the zero matrix.
    int max_degree() const;
    /// Determinant by fraction-free expansion (small matrices only).
    Poly determinant() const;
    std::vector<Poly> column(int c) const;
    std::string to_string() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    /// row[dst] += f * row[src]
    void add_row_multiple(int dst, int src, const Poly& f);
    /// col[dst] += f * col[src]
    void add_col_multiple(int dst, int src, const Poly& f);
    void scale_row(int r, Fq::Elem c);

private:
    const Fq* field_;
    int rows_;
    int cols_;
    std::vector<Poly> a_;
};

/// left * M * right = diag(divisors) padded with zeros.
struct SmithForm {
    std::vector<Poly> divisors;  ///< min(rows, cols) entries: monic, d_i | d_{i+1}, zeros last
    PolyMatrix left;
    PolyMatrix right;

    /// Number of nonzero divisors (the rank over F_q(t)).
    int rank() const;
    /// Nonzero divisors of positive degree.
    std::vector<Poly> nonunit_divisors() const;
};

/// Smith normal form by gcd-driven elimination. The pivot at each step is
/// the nonzero entry of least degree, ties broken by (row, col).
SmithForm smith_normal_form(const PolyMatrix& m);

}  // namespace carlitz::ff

#endif  // CARLITZ_FF_SMITH_HPP
