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

#include "carlitz/curve/package.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "carlitz/curve/cohomology.hpp"
#include "carlitz/curve/places.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/ff/factor.hpp"

namespace carlitz::curve {

// ---------------------------------------------------------------- FinVec

FinVec fin_zero(const Fq& field, int n) { return FinVec(static_cast<std::size_t>(n), LaurentPoly(Poly(field))); }

FinVec fin_add(const FinVec& a, const FinVec& b) {
    FinVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

FinVec fin_sub(const FinVec& a, const FinVec& b) {
    FinVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

FinVec fin_scale(const FinVec& a, Fq::Elem c) {
    FinVec r = a;
    for (auto& x : r) x = x.scaled(c);
    return r;
}

FinVec fin_mul_poly(const FinVec& a, const LaurentPoly& c) {
    FinVec r = a;
    for (auto& x : r) x = x * c;
    return r;
}

FinVec fin_shift(const FinVec& a, int k) {
    FinVec r = a;
    for (auto& x : r) x = x.shifted(k);
    return r;
}

bool fin_is_zero(const FinVec& a) {
    return std::all_of(a.begin(), a.end(), [](const LaurentPoly& x) { return x.is_zero(); });
}

bool fin_is_polynomial(const FinVec& a) {
    return std::all_of(a.begin(), a.end(), [](const LaurentPoly& x) { return x.is_polynomial(); });
}

std::string fin_to_string(const FinVec& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += a[i].is_zero() ? "0" : a[i].to_string();
    }
    return out + "]";
}

// ---------------------------------------------------------------- helpers

namespace {

RatFunc rzero(const Fq& F) { return RatFunc(Poly(F)); }
RatFunc rone(const Fq& F) { return RatFunc(Poly::constant(F, 1)); }

std::vector<RatFunc> ycoords(const YPoly& a, int n, const Fq& F) {
    std::vector<RatFunc> c(static_cast<std::size_t>(n), rzero(F));
    for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i) c[i] = a[i];
    return c;
}

std::vector<RatFunc> row_times(const std::vector<RatFunc>& v, const RatMatrix& m, const Fq& F) {
    const std::size_t n = m.empty() ? 0 : m[0].size();
    std::vector<RatFunc> r(n, rzero(F));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!m[k][j].is_zero()) r[j] = r[j] + v[k] * m[k][j];
    }
    return r;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b, const Fq& F) {
    RatMatrix r;
    for (const auto& row : a) r.push_back(row_times(row, b, F));
    return r;
}

int exponent_span(const LaurentPoly& p) {
    if (p.is_zero()) return 0;
    return std::max(std::abs(p.min_exp()), std::abs(p.max_exp()));
}

}  // namespace

// ---------------------------------------------------------------- construction

std::string CurvePackage::kind_name() const {
    switch (kind_) {
        case Kind::POne: return "pone";
        case Kind::Superelliptic: return "superelliptic";
        case Kind::Generic: return "generic";
    }
    return "generic";
}

CurvePackage CurvePackage::pone(const Fq& field) {
    CurvePackage pkg;
    pkg.field_ = &field;
    pkg.kind_ = Kind::POne;
    // K = F with y = 0
    const YPoly one = yconstant(rone(field));
    pkg.build(ynormalize({rzero(field), rone(field)}), {one}, {one});
    pkg.validate();
    return pkg;
}

CurvePackage CurvePackage::superelliptic(const Fq& field, int m, const Poly& f) {
    if (m < 2) throw InvariantViolation("m", "exponent m must be at least 2");
    if (std::gcd(m, field.p()) != 1) throw InvariantViolation("gcd(m,p)", "m = " + std::to_string(m) + " is divisible by the characteristic");
    if (f.is_zero() || f.deg() < 1) throw InvariantViolation("f", "f must be nonconstant");
    if (!ff::is_squarefree(f)) throw InvariantViolation("squarefree", "f = " + f.to_string() + " is not squarefree");
    if (std::gcd(m, f.deg()) != 1)
        throw InvariantViolation("gcd(m,deg f)", "the place at infinity must be totally ramified");
    CurvePackage pkg;
    pkg.field_ = &field;
    pkg.kind_ = Kind::Superelliptic;
    pkg.sup_m_ = m;
    pkg.sup_f_ = f;
    YPoly g(static_cast<std::size_t>(m) + 1, rzero(field));
    g[0] = RatFunc(-f);
    g[m] = rone(field);
    std::vector<YPoly> fin, inf;
    for (int i = 0; i < m; ++i) {
        YPoly yi(static_cast<std::size_t>(i) + 1, rzero(field));
        yi[i] = rone(field);
        fin.push_back(ynormalize(yi));
        const int k = (i * f.deg() + m - 1) / m;
        yi[i] = RatFunc(Poly::constant(field, 1), Poly::monomial(field, 1, k));
        inf.push_back(ynormalize(yi));
    }
    pkg.build(ynormalize(g), fin, inf);
    pkg.validate();
    return pkg;
}

CurvePackage CurvePackage::generic(const Fq& field, const YPoly& g, const std::vector<YPoly>& basis_fin,
                                   const std::vector<YPoly>& basis_inf) {
    CurvePackage pkg;
    pkg.field_ = &field;
    pkg.kind_ = Kind::Generic;
    pkg.build(g, basis_fin, basis_inf);
    pkg.validate();
    return pkg;
}

void CurvePackage::build(const YPoly& g, const std::vector<YPoly>& basis_fin, const std::vector<YPoly>& basis_inf) {
    const Fq& F = *field_;
    g_ = ynormalize(g);
    if (g_.empty() || ydeg(g_) < 1) throw InvariantViolation("monic", "defining polynomial must have positive degree in y");
    if (g_.back() != rone(F)) throw InvariantViolation("monic", "defining polynomial is not monic in y");
    for (const auto& c : g_)
        if (!c.is_poly()) throw InvariantViolation("monic", "coefficients of the defining polynomial must lie in F_q[t]");
    n_ = ydeg(g_);
    const YPoly gy = yderivative(g_);
    if (gy.empty() || ydeg(ygcd(g_, gy)) != 0) throw InvariantViolation("separable", "gcd(g, dg/dy) is not 1");

    if (static_cast<int>(basis_fin.size()) != n_) throw InvariantViolation("basis_size", "basis_fin must have n elements");
    if (static_cast<int>(basis_inf.size()) != n_) throw InvariantViolation("basis_size", "basis_inf must have n elements");
    basis_fin_.clear();
    basis_inf_.clear();
    for (const auto& b : basis_fin) basis_fin_.push_back(ydivmod(b, g_).second);
    for (const auto& b : basis_inf) basis_inf_.push_back(ydivmod(b, g_).second);

    P_.clear();
    RatMatrix Pinf;
    for (const auto& b : basis_fin_) P_.push_back(ycoords(b, n_, F));
    for (const auto& b : basis_inf_) Pinf.push_back(ycoords(b, n_, F));
    try {
        Pinv_ = rat_inverse(P_);
    } catch (const Inconsistent&) {
        throw InvariantViolation("basis_fin_independent", "basis_fin is not a basis of K over F");
    }
    RatMatrix Pinf_inv;
    try {
        Pinf_inv = rat_inverse(Pinf);
    } catch (const Inconsistent&) {
        throw InvariantViolation("basis_inf_independent", "basis_inf is not a basis of K over F");
    }

    const RatMatrix T = mat_mul(Pinf, Pinv_, F);
    const RatMatrix S = mat_mul(P_, Pinf_inv, F);
    auto to_laurent = [&](const RatMatrix& m, const char* what) {
        LaurentMatrix out;
        for (const auto& row : m) {
            std::vector<LaurentPoly> r;
            for (const auto& x : row) {
                if (!x.is_laurent())
                    throw InvariantViolation("charts", std::string(what) + " has an entry " + x.to_string() +
                                                           " that is not a Laurent polynomial");
                r.push_back(x.to_laurent());
            }
            out.push_back(std::move(r));
        }
        return out;
    };
    T_ = to_laurent(T, "the change of basis to basis_inf");
    S_ = to_laurent(S, "the change of basis to basis_fin");
    max_T_ = max_S_ = INT32_MIN;
    coeff_bound_ = 0;
    for (const auto& row : T_)
        for (const auto& x : row) {
            if (!x.is_zero()) max_T_ = std::max(max_T_, x.max_exp());
            coeff_bound_ = std::max(coeff_bound_, exponent_span(x));
        }
    for (const auto& row : S_)
        for (const auto& x : row) {
            if (!x.is_zero()) max_S_ = std::max(max_S_, x.max_exp());
            coeff_bound_ = std::max(coeff_bound_, exponent_span(x));
        }
    for (const auto& c : g_) coeff_bound_ = std::max(coeff_bound_, c.num().deg());

    // O_fin: unit, y and products have polynomial coordinates
    auto fin_poly = [&](const YPoly& a, const char* name, const std::string& what) {
        const auto c = fin_coordinates(a);
        FinVec v;
        for (const auto& x : c) {
            if (!x.is_poly()) throw InvariantViolation(name, what + " is not in the span of basis_fin over F_q[t]");
            v.emplace_back(x.num());
        }
        return v;
    };
    one_ = fin_poly(yconstant(rone(F)), "unit_fin", "1");
    if (n_ > 1) fin_poly(ynormalize({rzero(F), rone(F)}), "contains_y", "y");
    mult_.assign(static_cast<std::size_t>(n_), std::vector<FinVec>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            const YPoly prod = ydivmod(ymul(basis_fin_[i], basis_fin_[j]), g_).second;
            mult_[i][j] = mult_[j][i] =
                fin_poly(prod, "closure_fin", "b" + std::to_string(i) + "*b" + std::to_string(j));
        }

    // O_inf: unit and products have coordinates in F_q[s]
    auto inf_poly = [&](const YPoly& a, const char* name, const std::string& what) {
        const auto c = row_times(ycoords(a, n_, F), Pinf_inv, F);
        for (const auto& x : c)
            if (!x.is_laurent() || (!x.is_zero() && x.to_laurent().max_exp() > 0))
                throw InvariantViolation(name, what + " is not in the span of basis_inf over F_q[1/t]");
    };
    inf_poly(yconstant(rone(F)), "unit_inf", "1");
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            inf_poly(ydivmod(ymul(basis_inf_[i], basis_inf_[j]), g_).second, "closure_inf",
                     "beta" + std::to_string(i) + "*beta" + std::to_string(j));

    // b_i^q by repeated multiplication inside O_fin
    frob_.clear();
    for (int i = 0; i < n_; ++i) {
        const FinVec b = basis_element(i);
        FinVec acc = b;
        for (int k = 1; k < F.q(); ++k) acc = mul(acc, b);
        frob_.push_back(acc);
    }
}

void CurvePackage::validate() {
    const CohomologySlice s0 = cech_cohomology(*this, 0);
    if (s0.h0_dim() != 1)
        throw InvariantViolation("connected", "dim H0(O_X) = " + std::to_string(s0.h0_dim()) + ", expected 1");
    genus_ = s0.h1_dim();
    if (kind_ == Kind::Superelliptic) {
        const int expect = (sup_m_ - 1) * (sup_f_.deg() - 1) / 2;
        if (genus_ != expect)
            throw InvariantViolation("genus", "Cech genus " + std::to_string(genus_) + " differs from closed form " + std::to_string(expect));
    }
    for (int m : {1, 2}) {
        const CohomologySlice s = cech_cohomology(*this, m);
        if (s.h0_dim() - s.h1_dim() != m * n_ + 1 - genus_)
            throw InvariantViolation("euler", "Euler characteristic mismatch at m = " + std::to_string(m));
    }
    std::vector<Place> places;
    try {
        places = places_at_infinity(*this, 16);
    } catch (const Error& e) {
        throw InvariantViolation("places", e.what());
    }
    int total = 0;
    for (const auto& p : places) total += p.d * p.e;
    if (total != n_) throw InvariantViolation("places", "sum of d_z e_z is " + std::to_string(total) + ", expected " + std::to_string(n_));
}

// ---------------------------------------------------------------- arithmetic

FinVec CurvePackage::basis_element(int i) const {
    FinVec v = fin_zero(*field_, n_);
    v[static_cast<std::size_t>(i)] = LaurentPoly(Poly::constant(*field_, 1));
    return v;
}

FinVec CurvePackage::mul(const FinVec& a, const FinVec& b) const {
    FinVec r = fin_zero(*field_, n_);
    for (int i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (b[j].is_zero()) continue;
            const LaurentPoly c = a[i] * b[j];
            for (int k = 0; k < n_; ++k)
                if (!mult_[i][j][k].is_zero()) r[k] += c * mult_[i][j][k];
        }
    }
    return r;
}

FinVec CurvePackage::frobenius(const FinVec& a) const {
    FinVec r = fin_zero(*field_, n_);
    for (int i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        const LaurentPoly c = a[i].frobenius();
        for (int k = 0; k < n_; ++k)
            if (!frob_[i][k].is_zero()) r[k] += c * frob_[i][k];
    }
    return r;
}

FinVec CurvePackage::to_beta(const FinVec& a) const {
    FinVec r = fin_zero(*field_, n_);
    for (int i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j)
            if (!S_[i][j].is_zero()) r[j] += a[i] * S_[i][j];
    }
    return r;
}

FinVec CurvePackage::from_beta(const FinVec& c) const {
    FinVec r = fin_zero(*field_, n_);
    for (int j = 0; j < n_; ++j) {
        if (c[j].is_zero()) continue;
        for (int i = 0; i < n_; ++i)
            if (!T_[j][i].is_zero()) r[i] += c[j] * T_[j][i];
    }
    return r;
}

YPoly CurvePackage::to_ypoly(const FinVec& a) const {
    YPoly r;
    for (int i = 0; i < n_; ++i)
        if (!a[i].is_zero()) r = yadd(r, yscale(basis_fin_[i], RatFunc::from_laurent(a[i])));
    return r;
}

std::vector<RatFunc> CurvePackage::fin_coordinates(const YPoly& a) const {
    return row_times(ycoords(ydivmod(a, g_).second, n_, *field_), Pinv_, *field_);
}

FinVec CurvePackage::from_ypoly(const YPoly& a) const {
    FinVec r;
    for (const auto& x : fin_coordinates(a)) {
        if (!x.is_laurent()) throw InvariantViolation("laurent", "element is not in O_fin[1/t]");
        r.push_back(x.to_laurent());
    }
    return r;
}

bool CurvePackage::in_inf_twist(const FinVec& a, int m) const {
    for (const auto& c : to_beta(a))
        if (!c.is_zero() && c.max_exp() > m) return false;
    return true;
}

// ---------------------------------------------------------------- files

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int r = std::stoi(v, &pos);
        if (pos != v.size()) throw ParseError("");
        return r;
    } catch (const std::exception&) {
        throw ParseError("key '" + key + "' expects an integer, got '" + v + "'");
    }
}

}  // namespace

CurvePackage parse_package(const std::string& text) {
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::string current;
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    auto put = [&](const std::string& kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected name=value, got '" + kv + "'");
        if (current.empty()) throw ParseError("line " + std::to_string(lineno) + ": key outside of a section");
        const std::string k = trim(kv.substr(0, eq));
        if (sections[current].count(k)) throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + k + "'");
        sections[current][k] = trim(kv.substr(eq + 1));
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '[') {
            const auto close = line.find(']');
            if (close == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": unterminated section header");
            current = trim(line.substr(1, close - 1));
            if (current != "field" && current != "model" && current != "precision")
                throw ParseError("line " + std::to_string(lineno) + ": unknown section [" + current + "]");
            sections[current];
            std::stringstream rest(line.substr(close + 1));
            std::string tok;
            while (rest >> tok) put(tok);
        } else {
            put(line);
        }
    }
    auto need = [&](const std::string& sec, const std::string& key) -> const std::string& {
        auto s = sections.find(sec);
        if (s == sections.end()) throw ParseError("missing section [" + sec + "]");
        auto k = s->second.find(key);
        if (k == s->second.end()) throw ParseError("missing key '" + key + "' in [" + sec + "]");
        return k->second;
    };
    auto check_keys = [&](const std::string& sec, std::initializer_list<const char*> allowed) {
        for (const auto& [k, v] : sections[sec]) {
            (void)v;
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
                throw ParseError("unknown key '" + k + "' in [" + sec + "]");
        }
    };

    check_keys("field", {"p", "e", "modulus"});
    const int p = parse_int("p", need("field", "p"));
    const int e = sections["field"].count("e") ? parse_int("e", sections["field"]["e"]) : 1;
    const Fq* F = nullptr;
    try {
        if (sections["field"].count("modulus")) {
            const Fq& Fp = Fq::get(p, 1);
            const Poly mod = Poly::parse(Fp, sections["field"]["modulus"], 'w');
            std::vector<int> coeffs;
            for (auto c : mod.coeffs()) coeffs.push_back(c);
            F = &Fq::get(p, e, coeffs);
        } else {
            F = &Fq::get(p, e);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw InvariantViolation("field", err.what());
    }

    const std::string kind = need("model", "kind");
    std::optional<CurvePackage> pkg;
    if (kind == "pone") {
        check_keys("model", {"kind"});
        pkg = CurvePackage::pone(*F);
    } else if (kind == "superelliptic") {
        check_keys("model", {"kind", "m", "f"});
        pkg = CurvePackage::superelliptic(*F, parse_int("m", need("model", "m")), Poly::parse(*F, need("model", "f")));
    } else if (kind == "generic") {
        check_keys("model", {"kind", "g", "basis_fin", "basis_inf"});
        const YPoly g = parse_ypoly(*F, need("model", "g"));
        std::vector<YPoly> fin, inf;
        for (const auto& s : split_list(need("model", "basis_fin"))) fin.push_back(parse_ypoly(*F, s));
        for (const auto& s : split_list(need("model", "basis_inf"))) inf.push_back(parse_ypoly(*F, s));
        pkg = CurvePackage::generic(*F, g, fin, inf);
    } else {
        throw ParseError("unknown model kind '" + kind + "'");
    }
    if (sections.count("precision")) {
        check_keys("precision", {"series"});
        if (sections["precision"].count("series")) {
            const int prec = parse_int("series", sections["precision"]["series"]);
            if (prec < 16) throw ParseError("series precision must be at least 16");
            pkg->set_series_precision(prec);
        }
    }
    return *pkg;
}

CurvePackage load_package(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve package '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_package(ss.str());
}

}  // namespace carlitz::curve
