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

#include "carlitz/shtuka/shtuka.hpp"

#include <algorithm>

#include "carlitz/drinfeld/carlitz.hpp"
#include "carlitz/errors.hpp"

namespace carlitz::shtuka {

// ---------------------------------------------------------------- algebra

FiniteAlgebra FiniteAlgebra::quotient(const Fq& field, const Poly& f) {
    if (f.is_zero()) throw Inconsistent("quotient by zero is not finite");
    FiniteAlgebra R;
    R.field_ = &field;
    R.modulus_ = f.monic();
    R.dim_ = R.modulus_.deg();
    R.one_ = R.zero();
    R.t_ = R.zero();
    if (R.dim_ > 0) {
        R.one_[0] = 1;
        const Poly t = Poly::t(field) % R.modulus_;
        for (int i = 0; i < R.dim_; ++i) R.t_[i] = t.coeff(i);
    }
    return R;
}

std::uint64_t FiniteAlgebra::order() const {
    std::uint64_t r = 1;
    for (int i = 0; i < dim_; ++i) r *= static_cast<std::uint64_t>(field_->q());
    return r;
}

KVector FiniteAlgebra::add(const KVector& a, const KVector& b) const {
    KVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = field_->add(a[i], b[i]);
    return r;
}

KVector FiniteAlgebra::sub(const KVector& a, const KVector& b) const {
    KVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = field_->sub(a[i], b[i]);
    return r;
}

KVector FiniteAlgebra::scale(Fq::Elem c, const KVector& a) const {
    KVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = field_->mul(c, a[i]);
    return r;
}

KVector FiniteAlgebra::mul(const KVector& a, const KVector& b) const {
    if (dim_ == 0) return {};
    const Poly p = (Poly(*field_, a) * Poly(*field_, b)) % modulus_;
    KVector r = zero();
    for (int i = 0; i < dim_; ++i) r[i] = p.coeff(i);
    return r;
}

KVector FiniteAlgebra::frob(const KVector& a) const {
    KVector r = one_;
    for (int k = 0; k < field_->q(); ++k) r = mul(r, a);
    return r;
}

KVector FiniteAlgebra::basis(int i) const {
    KVector r = zero();
    r[i] = 1;
    return r;
}

KVector FiniteAlgebra::phi_t(const KVector& r) const { return add(mul(t_, r), frob(r)); }

KVector FiniteAlgebra::phi(const Poly& a, const KVector& r) const {
    KVector acc = zero(), cur = r;
    for (int k = 0; k <= a.deg(); ++k) {
        if (a.coeff(k)) acc = add(acc, scale(a.coeff(k), cur));
        if (k < a.deg()) cur = phi_t(cur);
    }
    return acc;
}

// ---------------------------------------------------------------- R (x) A

namespace {

void ra_trim(RA& x) {
    while (!x.empty() && ff::is_zero(x.back())) x.pop_back();
}

}  // namespace

RA ra_zero() { return {}; }

RA ra_constant(const KVector& r) {
    RA x{r};
    ra_trim(x);
    return x;
}

RA ra_a(const FiniteAlgebra& R, const Poly& a) {
    RA x;
    for (int j = 0; j <= a.deg(); ++j) x.push_back(R.scale(a.coeff(j), R.one()));
    ra_trim(x);
    return x;
}

RA ra_add(const FiniteAlgebra& R, const RA& x, const RA& y) {
    RA r(std::max(x.size(), y.size()), R.zero());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = x[j];
    for (std::size_t j = 0; j < y.size(); ++j) r[j] = R.add(r[j], y[j]);
    ra_trim(r);
    return r;
}

RA ra_sub(const FiniteAlgebra& R, const RA& x, const RA& y) {
    RA r(std::max(x.size(), y.size()), R.zero());
    for (std::size_t j = 0; j < x.size(); ++j) r[j] = x[j];
    for (std::size_t j = 0; j < y.size(); ++j) r[j] = R.sub(r[j], y[j]);
    ra_trim(r);
    return r;
}

RA ra_mul(const FiniteAlgebra& R, const RA& x, const RA& y) {
    if (x.empty() || y.empty()) return {};
    RA r(x.size() + y.size() - 1, R.zero());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = R.add(r[i + j], R.mul(x[i], y[j]));
    ra_trim(r);
    return r;
}

RA ra_tau(const FiniteAlgebra& R, const RA& x) {
    RA r;
    for (const auto& c : x) r.push_back(R.frob(c));
    ra_trim(r);
    return r;
}

bool ra_is_zero(const RA& x) {
    return std::all_of(x.begin(), x.end(), [](const KVector& c) { return ff::is_zero(c); });
}

int ra_degree(const RA& x) {
    for (int j = static_cast<int>(x.size()) - 1; j >= 0; --j)
        if (!ff::is_zero(x[j])) return j;
    return -1;
}

// ---------------------------------------------------------------- shtukas

AffineShtuka AffineShtuka::carlitz(const FiniteAlgebra& R) {
    const RA sigma = ra_sub(R, ra_a(R, Poly::t(R.field())), ra_constant(R.t_image()));
    return {&R, 1, 1, {{sigma}}, {{ra_constant(R.one())}}};
}

AffineShtuka AffineShtuka::unit(const FiniteAlgebra& R) {
    return {&R, 1, 1, {{ra_constant(R.one())}}, {{ra_constant(R.one())}}};
}

AffineShtuka AffineShtuka::zero(const FiniteAlgebra& R) { return {&R, 0, 0, {}, {}}; }

AffineShtuka AffineShtuka::trivial_maps(const FiniteAlgebra& R, int rank) {
    RAMatrix z(static_cast<std::size_t>(rank), std::vector<RA>(static_cast<std::size_t>(rank)));
    return {&R, rank, rank, z, z};
}

Section AffineShtuka::apply_sigma(const Section& x) const {
    Section out(static_cast<std::size_t>(rank_prime));
    for (int r = 0; r < rank_prime; ++r)
        for (int c = 0; c < rank; ++c) out[r] = ra_add(*R, out[r], ra_mul(*R, sigma[r][c], x[c]));
    return out;
}

Section AffineShtuka::apply_jtau(const Section& x) const {
    Section out(static_cast<std::size_t>(rank_prime));
    for (int r = 0; r < rank_prime; ++r)
        for (int c = 0; c < rank; ++c) out[r] = ra_add(*R, out[r], ra_mul(*R, J[r][c], ra_tau(*R, x[c])));
    return out;
}

int AffineShtuka::degree_shift() const {
    int d = 0;
    for (const auto* m : {&sigma, &J})
        for (const auto& row : *m)
            for (const auto& e : row) d = std::max(d, ra_degree(e));
    return d;
}

Section boundary(const AffineShtuka& s, const Section& x) {
    const Section a = s.apply_sigma(x), b = s.apply_jtau(x);
    Section out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) out[r] = ra_sub(*s.R, a[r], b[r]);
    return out;
}

KVector section_coords(const AffineShtuka& s, const Section& x, int N, bool prime) {
    const int k = prime ? s.rank_prime : s.rank;
    const int r = s.R->dim();
    KVector v(static_cast<std::size_t>(k) * (N + 1) * r, 0);
    for (int c = 0; c < k; ++c) {
        if (ra_degree(x[c]) > N) throw Inconsistent("section exceeds the degree window");
        for (int j = 0; j < static_cast<int>(x[c].size()); ++j)
            for (int i = 0; i < r; ++i) v[static_cast<std::size_t>((c * (N + 1) + j) * r + i)] = x[c][j][i];
    }
    return v;
}

Section section_from_coords(const AffineShtuka& s, const KVector& v, int N, bool prime) {
    const int k = prime ? s.rank_prime : s.rank;
    const int r = s.R->dim();
    Section x(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        RA a(static_cast<std::size_t>(N) + 1, s.R->zero());
        for (int j = 0; j <= N; ++j)
            for (int i = 0; i < r; ++i) a[j][i] = v[static_cast<std::size_t>((c * (N + 1) + j) * r + i)];
        x[c] = ra_add(*s.R, a, {});
    }
    return x;
}

KMatrix boundary_matrix(const AffineShtuka& s, int N) {
    const Fq& F = s.R->field();
    const int r = s.R->dim();
    const int Nt = N + s.degree_shift();
    const int cols = s.rank * (N + 1) * r;
    const int rows = s.rank_prime * (Nt + 1) * r;
    KMatrix M(F, rows, cols);
    for (int col = 0; col < cols; ++col) {
        KVector e(static_cast<std::size_t>(cols), 0);
        e[col] = 1;
        const KVector img = section_coords(s, boundary(s, section_from_coords(s, e, N, false)), Nt, true);
        for (int row = 0; row < rows; ++row) M.at(row, col) = img[row];
    }
    return M;
}

bool check_semilinearity(const AffineShtuka& s, std::mt19937_64& rng, int trials, std::string* why) {
    const FiniteAlgebra& R = *s.R;
    const Fq& F = R.field();
    std::uniform_int_distribution<int> c(0, F.q() - 1);
    auto rand_r = [&] {
        KVector v = R.zero();
        for (auto& x : v) x = static_cast<Fq::Elem>(c(rng));
        return v;
    };
    auto rand_section = [&] {
        Section x(static_cast<std::size_t>(s.rank));
        for (auto& comp : x) {
            RA a;
            for (int j = 0; j < 3; ++j) a.push_back(rand_r());
            comp = ra_add(R, a, {});
        }
        return x;
    };
    auto scale = [&](const RA& m, const Section& x) {
        Section out = x;
        for (auto& comp : out) comp = ra_mul(R, m, comp);
        return out;
    };
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int trial = 0; trial < trials; ++trial) {
        const Section x = rand_section(), y = rand_section();
        const KVector r = rand_r();
        Poly a(F, {static_cast<Fq::Elem>(c(rng)), static_cast<Fq::Elem>(c(rng)), 1});
        Section xy = x;
        for (std::size_t i = 0; i < xy.size(); ++i) xy[i] = ra_add(R, x[i], y[i]);
        const Section jx = s.apply_jtau(x), jy = s.apply_jtau(y), jxy = s.apply_jtau(xy);
        for (std::size_t i = 0; i < jx.size(); ++i)
            if (ra_add(R, jx[i], jy[i]) != jxy[i]) return fail("j o tau is not additive");
        const Section lhs_r = s.apply_jtau(scale(ra_constant(r), x));
        const Section rhs_r = scale(ra_constant(R.frob(r)), jx);
        if (lhs_r != rhs_r) return fail("(j o tau)(r x) differs from r^q (j o tau)(x)");
        const Section lhs_a = s.apply_jtau(scale(ra_a(R, a), x));
        const Section rhs_a = scale(ra_a(R, a), jx);
        if (lhs_a != rhs_a) return fail("(j o tau)(a x) differs from a (j o tau)(x)");
        const Section dx = boundary(s, x), dy = boundary(s, y), dxy = boundary(s, xy);
        for (std::size_t i = 0; i < dx.size(); ++i)
            if (ra_add(R, dx[i], dy[i]) != dxy[i]) return fail("boundary is not additive");
        const Section da = boundary(s, scale(ra_a(R, a), x));
        if (da != scale(ra_a(R, a), dx)) return fail("boundary does not commute with A");
    }
    return true;
}

std::vector<Section> hom_from_unit(const AffineShtuka& s, int N) {
    std::vector<Section> out;
    if (s.rank == 0 || s.R->dim() == 0) return out;
    const KMatrix K = ff::kernel(boundary_matrix(s, N));
    for (int i = 0; i < K.rows(); ++i) out.push_back(section_from_coords(s, K.row(i), N, false));
    return out;
}

std::uint64_t hom_from_unit_count_bruteforce(const AffineShtuka& s, int N) {
    const FiniteAlgebra& R = *s.R;
    const int q = R.field().q();
    const int len = s.rank * (N + 1) * R.dim();
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) {
        total *= static_cast<std::uint64_t>(q);
        if (total > (1u << 20)) throw Inconsistent("instance too large for enumeration");
    }
    // generators of the unit module R (x) A as a ring: r_i (x) 1 and 1 (x) t
    std::vector<RA> gens;
    for (int i = 0; i < R.dim(); ++i) gens.push_back(ra_constant(R.basis(i)));
    gens.push_back(ra_a(R, Poly::t(R.field())));
    std::uint64_t count = 0;
    KVector v(static_cast<std::size_t>(len), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t z = idx;
        for (int i = 0; i < len; ++i) {
            v[i] = static_cast<Fq::Elem>(z % static_cast<std::uint64_t>(q));
            z /= static_cast<std::uint64_t>(q);
        }
        const Section f = section_from_coords(s, v, N, false);
        const Section fp = s.apply_sigma(f);  // forced by the first square at x = 1
        bool ok = true;
        for (const RA& x : gens) {
            Section fx = f;
            for (auto& c : fx) c = ra_mul(R, c, x);
            // sigma square: sigma(f x) = f' sigma_1(x), sigma_1 = 1
            Section rhs1 = fp;
            for (auto& c : rhs1) c = ra_mul(R, c, x);
            // j square: (j o tau)(f x) = f' (j_1 o tau)(x), j_1 = 1
            Section rhs2 = fp;
            for (auto& c : rhs2) c = ra_mul(R, c, ra_tau(R, x));
            if (s.apply_sigma(fx) != rhs1 || s.apply_jtau(fx) != rhs2) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

// ---------------------------------------------------------------- exactness away from infinity

std::vector<CheckLine> check_prop_away(const FiniteAlgebra& R, int N) {
    std::vector<CheckLine> lines{{"d injective", true, ""},
                                 {"alpha o d = 0", true, ""},
                                 {"alpha surjective", true, ""},
                                 {"ker alpha = image d", true, ""}};
    const int r = R.dim();
    if (r == 0 || N < 1) {
        for (auto& l : lines) l.detail = "vacuous";
        return lines;
    }
    const Fq& F = R.field();
    const AffineShtuka s = AffineShtuka::carlitz(R);
    const KMatrix D = boundary_matrix(s, N - 1);  // degree <= N-1 -> degree <= N
    KMatrix alpha(F, r, (N + 1) * r);
    for (int j = 0; j <= N; ++j)
        for (int i = 0; i < r; ++i) {
            const KVector img = R.phi(Poly::monomial(F, 1, j), R.basis(i));
            for (int k = 0; k < r; ++k) alpha.at(k, j * r + i) = img[k];
        }
    auto vec_ints = [](const KVector& v) { return std::vector<int>(v.begin(), v.end()); };

    const int rank_d = ff::rank(D);
    lines[0].detail = "rank " + std::to_string(rank_d) + " of " + std::to_string(N * r);
    if (rank_d != N * r) throw ExactnessFailure("d is not injective", vec_ints(ff::kernel(D).row(0)));

    const KMatrix AD = alpha * D;
    for (int c = 0; c < AD.cols(); ++c)
        if (!ff::is_zero(AD.column(c))) {
            KVector w(static_cast<std::size_t>(D.cols()), 0);
            w[c] = 1;
            throw ExactnessFailure("alpha o d does not vanish", vec_ints(w));
        }

    const int rank_a = ff::rank(alpha);
    lines[2].detail = "rank " + std::to_string(rank_a) + " of " + std::to_string(r);
    if (rank_a != r) throw ExactnessFailure("alpha is not surjective", vec_ints(ff::kernel(alpha.transpose()).row(0)));

    const KMatrix ker_a = ff::kernel(alpha);
    lines[3].detail = "dim ker alpha " + std::to_string(ker_a.rows()) + ", dim image d " + std::to_string(rank_d);
    if (ker_a.rows() != N * r || rank_d != ker_a.rows()) {
        // a kernel vector outside the image of d
        ff::EchelonBasis img(F, (N + 1) * r);
        for (int c = 0; c < D.cols(); ++c) img.add(D.column(c));
        for (int i = 0; i < ker_a.rows(); ++i)
            if (!img.contains(ker_a.row(i))) throw ExactnessFailure("ker alpha exceeds image d", vec_ints(ker_a.row(i)));
        throw ExactnessFailure("dimension mismatch between ker alpha and image d", {});
    }
    return lines;
}

// ---------------------------------------------------------------- compatibility at infinity

namespace {

std::string first_mismatch(const LaurentSeries& a, const LaurentSeries& b) {
    const LaurentSeries d = a - b;
    if (d.is_zero()) return "none";
    return "u^" + std::to_string(d.val());
}

}  // namespace

std::vector<CheckLine> check_prop_lie(const curve::Place& place, int prec, int trials, std::mt19937_64& rng) {
    using ff::ResidueField;
    const ResidueField& E = place.field();
    const Fq& F = E.base();
    const drinfeld::LocalCarlitz C(place.embed_t);
    const int e = place.e;
    std::uniform_int_distribution<std::uint64_t> cu(0, E.order() - 1);
    std::uniform_int_distribution<int> cq(0, F.q() - 1);
    std::uniform_int_distribution<int> deg(0, 3);

    std::vector<CheckLine> lines{{"exp(t f) = t exp f + (exp f)^q", true, ""}, {"exp(a log f) = phi_a(f)", true, ""}};
    int worst1 = prec, worst2 = prec;
    for (int trial = 0; trial <= trials; ++trial) {
        LaurentSeries f = LaurentSeries::zero(E, prec);
        if (trial > 0) {  // trial 0 is f = 0
            std::vector<ResidueField::Elem> cs(static_cast<std::size_t>(prec + e));
            for (auto& x : cs) x = static_cast<ResidueField::Elem>(cu(rng));
            f = LaurentSeries(E, -e, cs, prec);
        }
        std::vector<Fq::Elem> ac(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : ac) x = static_cast<Fq::Elem>(cq(rng));
        const Poly a(F, ac);

        const LaurentSeries lhs1 = C.exp(C.mul_t(f), prec - e);
        const LaurentSeries rhs1 = C.phi_t(C.exp(f, prec)).truncated(prec - e);
        const LaurentSeries d1 = lhs1 - rhs1;
        if (!d1.is_zero())
            throw IdentityFailure("exp(t f) differs from t exp f + (exp f)^q at " + first_mismatch(lhs1, rhs1));
        worst1 = std::min(worst1, d1.prec());

        const LaurentSeries lam = C.eval_poly(a, C.log(f));
        const int target = lam.prec();
        const LaurentSeries lhs2 = C.exp(lam, target);
        const LaurentSeries rhs2 = C.phi(a, f).truncated(target);
        const LaurentSeries d2 = lhs2 - rhs2;
        if (!d2.is_zero()) throw IdentityFailure("exp(a log f) differs from phi_a(f) at " + first_mismatch(lhs2, rhs2));
        worst2 = std::min(worst2, d2.prec());
    }
    lines[0].detail = "agree to u^" + std::to_string(worst1);
    lines[1].detail = "agree to u^" + std::to_string(worst2);
    return lines;
}

}  // namespace carlitz::shtuka
