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

#include "carlitz/invariants/invariants.hpp"

#include <algorithm>

#include "carlitz/drinfeld/carlitz.hpp"
#include "carlitz/errors.hpp"

namespace carlitz::invariants {

using curve::fin_add;
using curve::fin_scale;
using curve::fin_shift;
using curve::fin_sub;
using curve::fin_zero;
using curve::Place;
using ff::Fq;
using ff::KMatrix;
using ff::KVector;
using ff::LaurentPoly;
using ff::ResidueField;
using series::kExactPrecision;

namespace {

Poly T_times(const Fq& F, Fq::Elem c) { return Poly::monomial(F, c, 1); }

PolyMatrix unimodular_inverse(const PolyMatrix& U) {
    const Fq& F = U.field();
    const int n = U.rows();
    PolyMatrix M = U, inv = PolyMatrix::identity(F, n);
    for (int c = 0; c < n; ++c) {
        while (true) {
            int best = -1;
            for (int r = c; r < n; ++r)
                if (!M.at(r, c).is_zero() && (best < 0 || M.at(r, c).deg() < M.at(best, c).deg())) best = r;
            if (best < 0) throw Inconsistent("matrix is singular");
            M.swap_rows(c, best);
            inv.swap_rows(c, best);
            bool clean = true;
            for (int r = c + 1; r < n; ++r) {
                if (M.at(r, c).is_zero()) continue;
                const Poly quo = M.at(r, c) / M.at(c, c);
                M.add_row_multiple(r, c, -quo);
                inv.add_row_multiple(r, c, -quo);
                if (!M.at(r, c).is_zero()) clean = false;
            }
            if (clean) break;
        }
        if (M.at(c, c).deg() != 0) throw Inconsistent("matrix is not unimodular");
    }
    for (int c = n - 1; c >= 0; --c) {
        const Fq::Elem s = F.inv(M.at(c, c).lc());
        M.scale_row(c, s);
        inv.scale_row(c, s);
        for (int r = 0; r < c; ++r) {
            if (M.at(r, c).is_zero()) continue;
            const Poly f = -M.at(r, c);
            M.add_row_multiple(r, c, f);
            inv.add_row_multiple(r, c, f);
        }
    }
    return inv;
}

drinfeld::CarrierOps<FinVec> fin_ops(const CurvePackage& pkg) {
    return {[](const FinVec& a, const FinVec& b) { return fin_add(a, b); },
            [](Fq::Elem c, const FinVec& a) { return fin_scale(a, c); },
            [](const FinVec& a) { return fin_shift(a, 1); },
            [&pkg](const FinVec& a) { return pkg.frobenius(a); }};
}

int top_degree(const FinVec& x) {
    int d = 0;
    for (const auto& c : x)
        if (!c.is_zero()) d = std::max(d, c.max_exp());
    return d;
}

}  // namespace

std::string poly_list(const std::vector<Poly>& ps) {
    std::string out = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + ps[i].to_string();
    return out + "]";
}

// ---------------------------------------------------------------- boundary

BoundaryData boundary_data(const CurvePackage& pkg, int twist) {
    if (twist < 0) throw Inconsistent("twist must be nonnegative");
    const Fq& F = pkg.field();
    const int m = -twist;
    const int qm = F.q() * m;
    CohomologySlice s_m = curve::cech_cohomology(pkg, m);
    CohomologySlice s_m1 = curve::cech_cohomology(pkg, m + 1);
    CohomologySlice s_qm = qm == m ? s_m : curve::cech_cohomology(pkg, qm);

    PolyMatrix d0(F, s_m1.h0_dim(), s_m.h0_dim());
    for (int k = 0; k < s_m.h0_dim(); ++k) {
        const FinVec& h = s_m.h0_basis()[k];
        const KVector ci = s_m1.h0_coords(h);
        const KVector ct = s_m1.h0_coords(fin_shift(h, 1));
        const KVector cq = s_m1.h0_coords(pkg.frobenius(h));
        for (int r = 0; r < s_m1.h0_dim(); ++r)
            d0.at(r, k) = T_times(F, ci[r]) - Poly::constant(F, F.add(ct[r], cq[r]));
    }

    const KMatrix incl = curve::incl_matrix(s_m, s_m1);
    const KMatrix mult = curve::mult_t_matrix(s_m, s_m1);
    const KMatrix fr = curve::incl_matrix(s_qm, s_m1) * curve::frob_matrix(pkg, s_m, s_qm);
    PolyMatrix B(F, s_m1.h1_dim(), s_m.h1_dim());
    for (int r = 0; r < B.rows(); ++r)
        for (int c = 0; c < B.cols(); ++c)
            B.at(r, c) = T_times(F, incl.at(r, c)) - Poly::constant(F, F.add(mult.at(r, c), fr.at(r, c)));
    return {twist, std::move(s_m), std::move(s_m1), std::move(s_qm), std::move(d0), std::move(B)};
}

ClassModule class_module(const BoundaryData& bd) {
    ClassModule cm;
    const auto sf = ff::smith_normal_form(bd.B);
    cm.divisors = sf.nonunit_divisors();
    for (const auto& d : cm.divisors) cm.log_cardinality += d.deg();
    cm.free_rank = bd.B.rows() - sf.rank();
    cm.finite = cm.free_rank == 0;
    return cm;
}

UnitModule unit_module(const CurvePackage& pkg, const BoundaryData& bd) {
    const Fq& F = pkg.field();
    UnitModule um;
    const auto s0 = ff::smith_normal_form(bd.d0);
    const int r0 = s0.rank();
    um.kernel_d0 = bd.d0.cols() - r0;
    um.torsion_divisors = s0.nonunit_divisors();
    if (bd.d0.rows() > 0) {
        const PolyMatrix Uinv = unimodular_inverse(s0.left);
        for (int k = r0; k < bd.d0.rows(); ++k)
            um.generators.push_back({UnitGenerator::Kind::Coker, Uinv.column(k)});
    }
    const auto sB = ff::smith_normal_form(bd.B);
    for (int k = sB.rank(); k < bd.B.cols(); ++k)
        um.generators.push_back({UnitGenerator::Kind::KerB, sB.right.column(k)});
    um.rank = static_cast<int>(um.generators.size());
    (void)F;
    if (um.kernel_d0 != 0) throw InvalidPackage("d0 has a kernel of rank " + std::to_string(um.kernel_d0));
    if (!um.torsion_divisors.empty())
        throw InvalidPackage("unit module has torsion " + poly_list(um.torsion_divisors));
    if (um.rank != pkg.n())
        throw InvalidPackage("unit module has rank " + std::to_string(um.rank) + ", expected " + std::to_string(pkg.n()));
    return um;
}

// ---------------------------------------------------------------- realization

namespace {

// Sections at infinity sum_j T^j lambda-terms: gamma = sum_j a_j(T) log(iota(f_j)).
struct LambdaTerm {
    Poly a;
    FinVec f;
};

Realization finish_realization(const CurvePackage& pkg, const FinVec& c, const std::vector<LambdaTerm>& terms,
                               int prec) {
    int Dc = top_degree(c), Df = 0, Da = 0;
    for (const auto& term : terms) {
        Df = std::max(Df, top_degree(term.f));
        Da = std::max(Da, term.a.deg());
    }
    const int place_prec = prec + pkg.n() * (std::max(Dc, Df + Da) + 2) + 16;
    const auto places = curve::places_at_infinity(pkg, place_prec);
    Realization out;
    out.c = c;
    out.residual_min = prec + (1 << 20);
    for (const Place& P : places) {
        const drinfeld::LocalCarlitz C(P.embed_t);
        LaurentSeries gamma = LaurentSeries::zero(P.field(), place_prec);
        for (const auto& term : terms) {
            if (term.a.is_zero() || curve::fin_is_zero(term.f)) continue;
            gamma += C.eval_poly(term.a, C.log(P.embed(term.f).truncated(place_prec)));
        }
        const int target = std::min(gamma.prec(), prec + 8);
        const LaurentSeries diff = C.exp(gamma, target) - P.embed(c).truncated(target);
        const int res = diff.val();
        out.gammas.push_back(gamma.truncated(target));
        out.residual_valuations.push_back(res);
        out.residual_min = std::min(out.residual_min, res);
    }
    if (out.residual_min < prec - 8)
        throw RealizationFailed("residual valuation " + std::to_string(out.residual_min) + " below " +
                                std::to_string(prec - 8));
    return out;
}

}  // namespace

Realization realize_coker_element(const CurvePackage& pkg, const BoundaryData& bd, const std::vector<Poly>& w,
                                  int prec) {
    const auto ops = fin_ops(pkg);
    FinVec c = fin_zero(pkg.field(), pkg.n());
    std::vector<LambdaTerm> terms;
    for (std::size_t l = 0; l < w.size(); ++l) {
        const FinVec& h = bd.s_m1.h0_basis()[l];
        c = fin_add(c, drinfeld::phi_action(w[l], h, ops));
        terms.push_back({w[l], h});
    }
    return finish_realization(pkg, c, terms, prec);
}

Realization realize_unit(const CurvePackage& pkg, const BoundaryData& bd, const UnitGenerator& gen, int prec) {
    if (gen.kind == UnitGenerator::Kind::Coker) return realize_coker_element(pkg, bd, gen.coeffs, prec);
    const Fq& F = pkg.field();
    const int n = pkg.n();
    int D = 0;
    for (const auto& v : gen.coeffs) D = std::max(D, v.deg());
    // the cocycle x = sum_k r_k (x) v_k, split by A-degree
    std::vector<FinVec> X(static_cast<std::size_t>(D) + 2, fin_zero(F, n));
    for (std::size_t k = 0; k < gen.coeffs.size(); ++k)
        for (int j = 0; j <= gen.coeffs[k].deg(); ++j)
            if (gen.coeffs[k].coeff(j)) X[j] = fin_add(X[j], fin_scale(bd.s_m.h1_basis()[k], gen.coeffs[k].coeff(j)));
    const auto ops = fin_ops(pkg);
    FinVec c = fin_zero(F, n), check = fin_zero(F, n);
    std::vector<LambdaTerm> terms;
    for (int j = 0; j <= D + 1; ++j) {
        // component of d x at t^j: x_{j-1} - (t x_j + x_j^q)
        FinVec Y = fin_sub(j > 0 ? X[j - 1] : fin_zero(F, n), drinfeld::phi_t(X[j], ops));
        const auto [f, g] = curve::decompose(pkg, bd.s_m1, Y);
        const Poly tj = Poly::monomial(F, 1, j);
        c = fin_add(c, drinfeld::phi_action(tj, f, ops));
        check = fin_add(check, drinfeld::phi_action(tj, g, ops));
        terms.push_back({-tj, g});
    }
    // alpha kills boundaries, so both charts give the same c
    if (!curve::fin_is_zero(fin_add(c, check))) throw RealizationFailed("charts disagree on c");
    return finish_realization(pkg, c, terms, prec);
}

// ---------------------------------------------------------------- analytic side

namespace {

using InfVec = std::vector<LaurentSeries>;

// K_inf = F_q((s)) (x) K written in the basis b_i, s = 1/t.
struct Completion {
    const CurvePackage& pkg;
    const ResidueField& E;
    LaurentSeries T;
    drinfeld::LocalCarlitz C;
    std::vector<InfVec> frob;
    int Cf = 0;

    explicit Completion(const CurvePackage& p)
        : pkg(p),
          E(ResidueField::trivial(p.field())),
          T(LaurentSeries::monomial(E, 1, -1, kExactPrecision)),
          C(T) {
        for (int i = 0; i < pkg.n(); ++i) {
            const FinVec b = pkg.frobenius(pkg.basis_element(i));
            frob.push_back(from_fin(b));
            Cf = std::max(Cf, top_degree(b));
        }
    }

    LaurentSeries from_laurent(const LaurentPoly& x) const {
        if (x.is_zero()) return LaurentSeries::zero(E, kExactPrecision);
        std::vector<ResidueField::Elem> cs;
        for (int e = x.max_exp(); e >= x.min_exp(); --e) cs.push_back(x.coeff(e));
        return {E, -x.max_exp(), cs, kExactPrecision};
    }

    InfVec from_fin(const FinVec& x) const {
        InfVec v;
        for (const auto& c : x) v.push_back(from_laurent(c));
        return v;
    }

    InfVec zero(int prec) const { return InfVec(static_cast<std::size_t>(pkg.n()), LaurentSeries::zero(E, prec)); }

    InfVec q_power(const InfVec& x) const {
        InfVec r = zero(kExactPrecision);
        for (int i = 0; i < pkg.n(); ++i) {
            const LaurentSeries xq = x[i].q_power();
            for (int k = 0; k < pkg.n(); ++k) r[k] += xq * frob[i][k];
        }
        return r;
    }

    static int min_val(const InfVec& x) {
        int v = kExactPrecision;
        for (const auto& c : x) v = std::min(v, c.val());
        return v;
    }

    static InfVec truncated(const InfVec& x, int p) {
        InfVec r;
        for (const auto& c : x) r.push_back(c.truncated(p));
        return r;
    }

    // exp x modulo s^P
    InfVec exp(const InfVec& x, int P) const {
        const int q = pkg.field().q();
        InfVec acc = zero(P);
        InfVec cur = x;
        long long qk = 1;
        for (int k = 0;; ++k, qk *= q) {
            const long long vk = static_cast<long long>(k) * qk;
            const int vc = min_val(cur);
            if (vk + vc >= P && k >= 1 && qk >= Cf + 1) break;
            if (vk + vc < P) {
                const LaurentSeries ek = C.exp_coefficient(k, static_cast<int>(P - vc + 1));
                for (int i = 0; i < pkg.n(); ++i)
                    if (!cur[i].is_zero()) acc[i] += (ek * cur[i]).truncated(P);
            }
            const long long vnext = static_cast<long long>(k + 1) * qk * q;
            const long long need = (P - vnext + Cf + q - 1) / q + 1;
            if (need <= min_val(cur) && vnext > P) break;
            cur = q_power(truncated(cur, static_cast<int>(std::max<long long>(need, -(1LL << 20)))));
        }
        return acc;
    }

    InfVec phi_t(const InfVec& x) const {
        InfVec r = q_power(x);
        for (int i = 0; i < pkg.n(); ++i) r[i] += x[i] * T;
        return r;
    }

    // drop the O_fin part
    static InfVec mod_fin(const InfVec& x) {
        InfVec r;
        for (const auto& c : x) r.push_back(c.part_from(1));
        return r;
    }

    FinVec window(const InfVec& x, int N) const {
        FinVec out = fin_zero(pkg.field(), pkg.n());
        for (int i = 0; i < pkg.n(); ++i) {
            std::vector<Fq::Elem> cs;
            for (int k = N; k >= 1; --k) cs.push_back(static_cast<Fq::Elem>(x[i].coeff(k)));
            out[i] = LaurentPoly(Poly(pkg.field(), cs), -N);
        }
        return out;
    }
};

}  // namespace

AnalyticSetting analytic_estimate(const CurvePackage& pkg, int prec, int depth) {
    AnalyticSetting st;
    st.prec = prec;
    st.depth = depth;
    const CohomologySlice q1 = curve::cech_cohomology(pkg, 1);
    st.dim_q = q1.h1_dim();
    st.codim = st.dim_q;
    if (depth == 0 || st.dim_q == 0) {
        st.saturated = st.dim_q == 0;
        return st;
    }
    const Completion K(pkg);
    const int N = q1.window();
    if (prec <= N + depth + K.Cf + 4) return st;  // too little precision to read the window

    ff::EchelonBasis span(pkg.field(), st.dim_q);
    auto add = [&](const InfVec& x) {
        if (Completion::min_val(x) < kExactPrecision && x[0].prec() <= N) throw PrecisionExhausted("window not covered");
        return span.add(q1.class_of(K.window(x, N)));
    };
    for (const auto& rep : q1.h1_basis()) add(K.exp(K.from_fin(rep), prec));
    std::vector<InfVec> cur;
    for (int i = 0; i < pkg.n(); ++i) cur.push_back(Completion::mod_fin(K.exp(K.from_fin(pkg.basis_element(i)), prec)));
    bool grew = true;
    for (int j = 0; j < depth; ++j) {
        grew = false;
        for (auto& x : cur) {
            grew = add(x) || grew;
            x = Completion::mod_fin(K.phi_t(x));
        }
    }
    st.image = span.rank();
    st.codim = st.dim_q - st.image;
    st.saturated = !grew || st.codim == 0;
    return st;
}

AnalyticReport analytic_check(const CurvePackage& pkg, const ClassModule& cm,
                              const std::vector<std::pair<int, int>>& settings) {
    AnalyticReport rep;
    int agreeing = 0, positive = 0;
    for (const auto& [prec, depth] : settings) {
        rep.settings.push_back(analytic_estimate(pkg, prec, depth));
        const auto& st = rep.settings.back();
        if (depth == 0) continue;
        ++positive;
        if (st.codim == cm.log_cardinality && cm.finite) ++agreeing;
    }
    if (positive == 0)
        rep.status = "LOWER-SATURATION";
    else if (agreeing == positive && positive >= 2)
        rep.status = "PASS";
    else
        rep.status = "INCONCLUSIVE";
    return rep;
}

// ---------------------------------------------------------------- twists

std::vector<TwistSummary> twist_invariance(const CurvePackage& pkg, const std::vector<int>& twists) {
    std::vector<TwistSummary> out;
    for (int tau : twists) {
        const BoundaryData bd = boundary_data(pkg, tau);
        const ClassModule cm = class_module(bd);
        const UnitModule um = unit_module(pkg, bd);
        out.push_back({tau, cm.divisors, um.rank, static_cast<int>(um.torsion_divisors.size())});
        const auto& a = out.front();
        const auto& b = out.back();
        if (a.divisors != b.divisors || a.unit_rank != b.unit_rank || a.unit_torsion != b.unit_torsion)
            throw MismatchAcrossTwists("twist " + std::to_string(b.twist) + " gives H1 divisors " + poly_list(b.divisors) +
                                       " against " + poly_list(a.divisors) + " at twist " + std::to_string(a.twist));
    }
    return out;
}

// ---------------------------------------------------------------- generation

std::vector<GenerationRow> generation_table(const CurvePackage& pkg, int max_degree) {
    const Fq& F = pkg.field();
    const int n = pkg.n();
    const auto ops = fin_ops(pkg);
    std::vector<GenerationRow> rows;
    for (int d = 0; d <= max_degree; ++d) {
        const int D = d + std::max(0, pkg.max_exp_S()) + std::max(0, pkg.max_exp_T()) + 1;
        std::vector<FinVec> images;
        int top = 0;
        for (int k = 0; k <= D; ++k)
            for (int i = 0; i < n; ++i) {
                images.push_back(drinfeld::phi_t(fin_shift(pkg.basis_element(i), k), ops));
                top = std::max(top, top_degree(images.back()));
            }
        auto coords = [&](const FinVec& x, int lo, int hi) {
            KVector v;
            for (int e = lo; e <= hi; ++e)
                for (int i = 0; i < n; ++i) v.push_back(x[i].coeff(e));
            return v;
        };
        const int cols = static_cast<int>(images.size());
        KMatrix high(F, std::max(0, (top - d) * n), cols);
        for (int c = 0; c < cols; ++c) {
            const KVector v = coords(images[c], d + 1, top);
            for (int r = 0; r < high.rows(); ++r) high.at(r, c) = v[r];
        }
        const KMatrix ker = high.rows() > 0 ? ff::kernel(high) : KMatrix::identity(F, cols);
        ff::EchelonBasis span(F, (d + 1) * n);
        for (int r = 0; r < ker.rows(); ++r) {
            FinVec y = fin_zero(F, n);
            for (int c = 0; c < cols; ++c)
                if (ker.at(r, c)) y = fin_add(y, fin_scale(images[c], ker.at(r, c)));
            span.add(coords(y, 0, d));
        }
        rows.push_back({d, (d + 1) * n, span.rank(), (d + 1) * n - span.rank()});
    }
    return rows;
}

}  // namespace carlitz::invariants
