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

#ifndef CARLITZ_FF_LINALG_HPP
#define CARLITZ_FF_LINALG_HPP

#include <vector>

#include "carlitz/ff/field.hpp"

namespace carlitz::ff {

using KVector = std::vector<Fq::Elem>;

/// Dense matrix over F_q, row-major.
class KMatrix {
public:
    using Elem = Fq::Elem;

    KMatrix(const Fq& field, int rows, int cols);
    static KMatrix from_rows(const Fq& field, const std::vector<KVector>& rows, int cols);
    static KMatrix identity(const Fq& field, int n);

    const Fq& field() const noexcept { return *field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    Elem at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    KVector row(int r) const;
    KVector column(int c) const;

    KMatrix operator*(const KMatrix& o) const;
    KMatrix operator+(const KMatrix& o) const;
    KMatrix operator-(const KMatrix& o) const;
    KVector apply(const KVector& x) const;
    KMatrix transpose() const;
    bool is_zero() const noexcept;
    bool operator==(const KMatrix& o) const noexcept {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    const Fq* field_;
    int rows_;
    int cols_;
    std::vector<Elem> a_;
};

struct Rref {
    KMatrix reduced;          ///< nonzero rows first
    std::vector<int> pivots;  ///< pivot column of each nonzero row
};

Rref rref(KMatrix m);
int rank(const KMatrix& m);
/// Echelonized basis (as rows) of {x : m x = 0}.
KMatrix kernel(const KMatrix& m);
/// Echelonized basis (as rows) of the column space of m.
KMatrix image(const KMatrix& m);
/// Some x with m x = b; throws Inconsistent when none exists.
KVector solve(const KMatrix& m, const KVector& b);

bool is_zero(const KVector& v) noexcept;
void axpy(const Fq& field, KVector& y, Fq::Elem a, const KVector& x);

/// Incrementally maintained reduced row echelon basis of a subspace of F_q^dim.
///
/// Pivots are the first nonzero coordinate of each row; the basis is kept
/// fully reduced, so reduce() returns the canonical representative of a
/// coset no matter in which order generators were added.
class EchelonBasis {
public:
    EchelonBasis(const Fq& field, int dim) : field_(&field), dim_(dim) {}

    int dim() const noexcept { return dim_; }
    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<KVector>& rows() const noexcept { return rows_; }
    const std::vector<int>& pivots() const noexcept { return pivots_; }
    /// Columns that carry no pivot, ascending: coordinates of the quotient.
    std::vector<int> free_columns() const;

    /// Adds v to the span; returns false when v was already in it.
    bool add(const KVector& v);
    KVector reduce(KVector v) const;
    bool contains(const KVector& v) const { return is_zero(reduce(v)); }

private:
    const Fq* field_;
    int dim_;
    std::vector<KVector> rows_;
    std::vector<int> pivots_;
};

}  // namespace carlitz::ff

#endif  // CARLITZ_FF_LINALG_HPP
