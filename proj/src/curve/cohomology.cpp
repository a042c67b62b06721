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

#include "carlitz/curve/cohomology.hpp"

#include <algorithm>
#include <string>

#include "carlitz/errors.hpp"

namespace carlitz::curve {

namespace {

constexpr int kWindowCap = 1024;

// t^e beta_j in basis_fin coordinates.
FinVec beta_monomial(const CurvePackage& pkg, int j, int e) {
    FinVec r = fin_zero(pkg.field(), pkg.n());
    for (int i = 0; i < pkg.n(); ++i) r[i] = pkg.T()[j][i].shifted(e);
    return r;
}

// Generators t^{m-k} beta_j of t^m O_inf that reach the window.
std::vector<FinVec> coboundary_generators(const CurvePackage& pkg, int m, int N) {
    std::vector<FinVec> out;
    const int K = m + pkg.max_exp_T() + N;
    for (int k = 0; k <= K; ++k)
        for (int j = 0; j < pkg.n(); ++j) out.push_back(beta_monomial(pkg, j, m - k));
    return out;
}

}  // namespace

struct SliceBuilder {
    static CohomologySlice build(const CurvePackage& pkg, int m, int N) {
        if (N < 1) throw WindowTooSmall("window must be positive");
        const Fq& F = pkg.field();
        const int n = pkg.n();
        CohomologySlice s(F, m, N, n);

        // H^0: a_i of degree <= B with sum_i a_i S_ij of degree <= m
        const int B = m + pkg.max_exp_T();
        if (B >= 0) {
            const int cols = (B + 1) * n;
            s.h0_cols_ = cols;
            std::vector<KVector> rows;
            for (int j = 0; j < n; ++j)
                for (int k = m + 1; k <= B + pkg.max_exp_S(); ++k) {
                    KVector r(static_cast<std::size_t>(cols), 0);
                    bool any = false;
                    for (int i = 0; i < n; ++i) {
                        const LaurentPoly& sij = pkg.S()[i][j];
                        if (sij.is_zero()) continue;
                        for (int d = 0; d <= B; ++d) {
                            const auto c = sij.coeff(k - d);
                            if (c) {
                                r[d * n + i] = c;
                                any = true;
                            }
                        }
                    }
                    if (any) rows.push_back(std::move(r));
                }
            KMatrix basis(F, 0, cols);
            if (rows.empty())
                basis = KMatrix::identity(F, cols);
            else
                basis = ff::kernel(KMatrix::from_rows(F, rows, cols));
            for (int r = 0; r < basis.rows(); ++r) {
                KVector row = basis.row(r);
                const auto piv = std::find_if(row.begin(), row.end(), [](auto x) { return x != 0; });
                s.h0_pivots_.push_back(static_cast<int>(piv - row.begin()));
                FinVec h = fin_zero(F, n);
                for (int i = 0; i < n; ++i) {
                    std::vector<Fq::Elem> c(static_cast<std::size_t>(B) + 1, 0);
                    for (int d = 0; d <= B; ++d) c[d] = row[d * n + i];
                    h[i] = LaurentPoly(Poly(F, c));
                }
                s.h0_basis_.push_back(std::move(h));
                s.h0_rows_.push_back(std::move(row));
            }
        }

        // H^1: window modulo the projected coboundaries
        for (const auto& g : coboundary_generators(pkg, m, N)) s.rel_.add(s.window_vector(g));
        s.free_ = s.rel_.free_columns();
        for (int c : s.free_) {
            const int j = N - c / n;
            const int i = c % n;
            s.h1_basis_.push_back(fin_shift(pkg.basis_element(i), -j));
        }
        return s;
    }
};

KVector CohomologySlice::window_vector(const FinVec& x) const {
    KVector v(static_cast<std::size_t>(N_) * n_, 0);
    for (int i = 0; i < n_; ++i) {
        const LaurentPoly& c = x[i];
        if (c.is_zero()) continue;
        for (int e = std::max(c.min_exp(), -N_); e <= std::min(c.max_exp(), -1); ++e)
            v[static_cast<std::size_t>((N_ + e) * n_ + i)] = c.coeff(e);
    }
    return v;
}

KVector CohomologySlice::class_of(const FinVec& x) const {
    const KVector r = rel_.reduce(window_vector(x));
    KVector out;
    out.reserve(free_.size());
    for (int c : free_) out.push_back(r[c]);
    return out;
}

KVector CohomologySlice::h0_coords(const FinVec& h) const {
    const std::string bad = "element is not in L(mD) for m = " + std::to_string(m_);
    KVector rest(static_cast<std::size_t>(h0_cols_), 0);
    for (int i = 0; i < n_; ++i) {
        const LaurentPoly& c = h[i];
        if (c.is_zero()) continue;
        if (c.min_exp() < 0 || c.max_exp() * n_ + i >= h0_cols_) throw Inconsistent(bad);
        for (int d = c.min_exp(); d <= c.max_exp(); ++d) rest[d * n_ + i] = c.coeff(d);
    }
    KVector coords;
    for (std::size_t r = 0; r < h0_rows_.size(); ++r) {
        const auto a = rest[h0_pivots_[r]];
        coords.push_back(a);
        if (a) ff::axpy(*field_, rest, field_->neg(a), h0_rows_[r]);
    }
    if (!ff::is_zero(rest)) throw Inconsistent(bad);
    return coords;
}

CohomologySlice cech_cohomology(const CurvePackage& pkg, int m, std::optional<int> window) {
    if (window) return SliceBuilder::build(pkg, m, *window);
    int N = std::max({2 * pkg.coefficient_degree_bound() + m * pkg.n() + 4, pkg.max_exp_S() - m, 1});
    while (2 * N <= kWindowCap) {
        CohomologySlice a = SliceBuilder::build(pkg, m, N);
        const CohomologySlice b = SliceBuilder::build(pkg, m, 2 * N);
        if (a.h0_dim() == b.h0_dim() && a.h1_dim() == b.h1_dim()) return a;
        N *= 2;
    }
    throw WindowTooSmall("H^1 window did not stabilise below " + std::to_string(kWindowCap));
}

KMatrix apply_map(const CohomologySlice& from, const CohomologySlice& to,
                  const std::function<FinVec(const FinVec&)>& fn) {
    const Fq& F = from.field();
    KMatrix M(F, to.h1_dim(), from.h1_dim());
    for (int c = 0; c < from.h1_dim(); ++c) {
        const KVector v = to.class_of(fn(from.h1_basis()[c]));
        for (int r = 0; r < to.h1_dim(); ++r) M.at(r, c) = v[r];
    }
    return M;
}

KMatrix incl_matrix(const CohomologySlice& from, const CohomologySlice& to) {
    return apply_map(from, to, [](const FinVec& x) { return x; });
}

KMatrix mult_t_matrix(const CohomologySlice& from, const CohomologySlice& to) {
    return apply_map(from, to, [](const FinVec& x) { return fin_shift(x, 1); });
}

KMatrix frob_matrix(const CurvePackage& pkg, const CohomologySlice& from, const CohomologySlice& to) {
    return apply_map(from, to, [&](const FinVec& x) { return pkg.frobenius(x); });
}

CohMaps coh_maps(const CurvePackage& pkg, const CohomologySlice& sm, const CohomologySlice& sm1,
                 const CohomologySlice& sqm) {
    if (sqm.twist() > sm1.twist()) throw Inconsistent("q m exceeds m + 1");
    return {incl_matrix(sm, sm1), mult_t_matrix(sm, sm1), frob_matrix(pkg, sm, sqm), incl_matrix(sqm, sm1)};
}

std::pair<FinVec, FinVec> decompose(const CurvePackage& pkg, const CohomologySlice& slice, const FinVec& x) {
    const KVector cls = slice.class_of(x);
    if (!ff::is_zero(cls)) throw NonzeroClass(std::vector<int>(cls.begin(), cls.end()));
    const Fq& F = pkg.field();
    const int m = slice.twist();
    const auto gens = coboundary_generators(pkg, m, slice.window());
    const int dim = slice.window() * pkg.n();
    FinVec y = fin_zero(F, pkg.n());
    if (!gens.empty()) {
        KMatrix G(F, dim, static_cast<int>(gens.size()));
        for (int c = 0; c < G.cols(); ++c) {
            const KVector w = slice.window_vector(gens[c]);
            for (int r = 0; r < dim; ++r) G.at(r, c) = w[r];
        }
        const KVector lambda = ff::solve(G, slice.window_vector(x));
        for (int c = 0; c < G.cols(); ++c)
            if (lambda[c]) y = fin_add(y, fin_scale(gens[c], lambda[c]));
    }
    // whatever sits below the window lies in t^m O_inf already
    const FinVec rest = fin_sub(x, y);
    FinVec tail = fin_zero(F, pkg.n());
    for (int i = 0; i < pkg.n(); ++i) tail[i] = rest[i].negative_part();
    const FinVec ginf = fin_add(y, tail);
    const FinVec ffin = fin_sub(x, ginf);
    if (!fin_is_polynomial(ffin) || !pkg.in_inf_twist(ginf, m))
        throw Inconsistent("decomposition failed to separate the charts");
    return {ffin, ginf};
}

std::pair<FinVec, FinVec> decompose(const CurvePackage& pkg, const FinVec& x, int m) {
    return decompose(pkg, cech_cohomology(pkg, m), x);
}

}  // namespace carlitz::curve
