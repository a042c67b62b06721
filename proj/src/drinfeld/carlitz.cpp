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

#include "carlitz/drinfeld/carlitz.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "carlitz/errors.hpp"

namespace carlitz::drinfeld {

using ff::ResidueField;

namespace {

constexpr int kMaxTarget = 1 << 16;

long long ipow(long long b, int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > (1LL << 40) / b) throw PrecisionExhausted("q-power exponent too large for series evaluation");
        r *= b;
    }
    return r;
}

struct CoeffCache {
    std::mutex mu;
    std::map<const Fq*, std::vector<Poly>> den;  // D_i
    std::map<const Fq*, std::vector<RatFunc>> exp;
    std::map<const Fq*, std::vector<RatFunc>> log;
};

CoeffCache& cache() {
    static CoeffCache c;
    return c;
}

}  // namespace

std::vector<Poly> phi_coefficients(const Poly& a) {
    const Fq& F = a.field();
    std::vector<Poly> out;
    std::vector<Poly> cur{Poly::constant(F, 1)};  // phi_t^k
    for (int k = 0; k <= a.deg(); ++k) {
        if (out.size() < cur.size()) out.resize(cur.size(), Poly(F));
        for (std::size_t j = 0; j < cur.size(); ++j) out[j] += cur[j].scaled(a.coeff(k));
        // (t + tau) o sum c_j tau^j = sum t c_j tau^j + sum c_j^q tau^{j+1}
        std::vector<Poly> next(cur.size() + 1, Poly(F));
        for (std::size_t j = 0; j < cur.size(); ++j) {
            next[j] += cur[j].shifted(1);
            next[j + 1] += cur[j].frobenius();
        }
        cur = std::move(next);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

RatFunc phi_action(const Poly& a, const RatFunc& c) {
    const auto coeffs = phi_coefficients(a);
    RatFunc acc(Poly(c.field()));
    RatFunc power = c;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) acc = acc + RatFunc(coeffs[k]) * power;
        if (k + 1 < coeffs.size()) power = power.frobenius();
    }
    return acc;
}

const std::vector<RatFunc>& exp_coefficients(const Fq& field, int n) {
    CoeffCache& c = cache();
    std::lock_guard lock(c.mu);
    auto& dens = c.den[&field];
    auto& e = c.exp[&field];
    if (dens.empty()) {
        dens.push_back(Poly::constant(field, 1));
        e.emplace_back(Poly::constant(field, 1));
    }
    while (static_cast<int>(e.size()) <= n) {
        const int i = static_cast<int>(e.size());
        const Poly tq = Poly::monomial(field, 1, static_cast<int>(ipow(field.q(), i)));
        const Poly d = dens.back().frobenius() * (tq - Poly::t(field));
        dens.push_back(d);
        e.emplace_back(Poly::constant(field, 1), d);
    }
    return e;
}

const std::vector<RatFunc>& log_coefficients(const Fq& field, int n) {
    const std::vector<RatFunc> e = exp_coefficients(field, n);
    CoeffCache& c = cache();
    std::lock_guard lock(c.mu);
    auto& l = c.log[&field];
    if (l.empty()) l.emplace_back(Poly::constant(field, 1));
    while (static_cast<int>(l.size()) <= n) {
        const int k = static_cast<int>(l.size());
        // coefficient of x^{q^k} in log(exp x): sum_{j<=k} l_j e_{k-j}^{q^j} = 0
        RatFunc s{Poly(field)};
        for (int j = 0; j < k; ++j) {
            RatFunc term = e[static_cast<std::size_t>(k - j)];
            for (int r = 0; r < j; ++r) term = term.frobenius();
            s = s + l[static_cast<std::size_t>(j)] * term;
        }
        l.push_back(-s);
    }
    return l;
}

ExpCoeffs exp_coeffs(const Fq& field, int n) {
    ExpCoeffs out;
    out.q = field.q();
    const auto& e = exp_coefficients(field, n);
    const auto& l = log_coefficients(field, n);
    out.e.assign(e.begin(), e.begin() + n + 1);
    out.l.assign(l.begin(), l.begin() + n + 1);
    return out;
}

IdentityReport verify_functional_eq(const Fq& field, int n) {
    IdentityReport rep;
    const auto& e = exp_coefficients(field, n);
    const RatFunc t(Poly::t(field));
    for (int i = 0; i <= n; ++i) {
        // coefficient of x^{q^i}: e_i t^{q^i} - t e_i - e_{i-1}^q
        const RatFunc ti(Poly::monomial(field, 1, static_cast<int>(ipow(field.q(), i))));
        RatFunc coeff = e[i] * ti - t * e[i];
        if (i >= 1) coeff = coeff - e[i - 1].frobenius();
        ++rep.checked;
        if (!coeff.is_zero()) {
            rep.ok = false;
            rep.failures.push_back("coefficient of x^(q^" + std::to_string(i) + ") is " + coeff.to_string());
        }
    }
    return rep;
}

IdentityReport verify_composition(const Fq& field, int n) {
    IdentityReport rep;
    const auto& e = exp_coefficients(field, n);
    const auto& l = log_coefficients(field, n);
    for (int k = 0; k <= n; ++k) {
        // log o exp and exp o log, coefficient of x^{q^k}
        RatFunc a{Poly(field)}, b{Poly(field)};
        for (int j = 0; j <= k; ++j) {
            RatFunc ej = e[k - j], lj = l[k - j];
            for (int r = 0; r < j; ++r) {
                ej = ej.frobenius();
                lj = lj.frobenius();
            }
            a = a + l[j] * ej;
            b = b + e[j] * lj;
        }
        const RatFunc want(Poly::constant(field, k == 0 ? 1 : 0));
        rep.checked += 2;
        if (a != want) {
            rep.ok = false;
            rep.failures.push_back("log(exp x) coefficient " + std::to_string(k) + " is " + a.to_string());
        }
        if (b != want) {
            rep.ok = false;
            rep.failures.push_back("exp(log x) coefficient " + std::to_string(k) + " is " + b.to_string());
        }
    }
    return rep;
}

IdentityReport verify_degree_law(const Fq& field, int n) {
    IdentityReport rep;
    const auto& e = exp_coefficients(field, n);
    for (int i = 0; i <= n; ++i) {
        const long long want = i * ipow(field.q(), i);
        const long long got = e[i].den().deg() - (e[i].num().is_zero() ? 0 : e[i].num().deg());
        ++rep.checked;
        if (got != want) {
            rep.ok = false;
            rep.failures.push_back("e_" + std::to_string(i) + " has degree gap " + std::to_string(got) +
                                   ", expected " + std::to_string(want));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct SeriesCache {
    std::mutex mu;
    std::map<int, LaurentSeries> exp;
    std::map<int, LaurentSeries> log;
};

// Cache shared by all LocalCarlitz instances with the same t expansion.
std::shared_ptr<SeriesCache> cache_for(const LaurentSeries& t) {
    static std::mutex mu;
    static std::map<std::tuple<const void*, int, ResidueField::Elem>, std::shared_ptr<SeriesCache>> m;
    std::lock_guard lock(mu);
    auto& slot = m[{&t.field(), t.val(), t.lead()}];
    if (!slot) slot = std::make_shared<SeriesCache>();
    return slot;
}

}  // namespace

LocalCarlitz::LocalCarlitz(const LaurentSeries& t_image) : t_(t_image) {
    if (!t_.has_field() || t_.is_zero() || t_.val() >= 0 || t_.coeffs().size() != 1 || t_.prec() < kMaxTarget)
        throw OutOfDomain("the expansion of t must be an exact monomial with a pole");
    e_ = -t_.val();
    q_ = t_.field().base().q();
}

LaurentSeries LocalCarlitz::phi_t(const LaurentSeries& c) const { return t_ * c + c.q_power(); }

LaurentSeries LocalCarlitz::phi(const Poly& a, const LaurentSeries& c) const {
    CarrierOps<LaurentSeries> ops{
        [](const LaurentSeries& x, const LaurentSeries& y) { return x + y; },
        [](Fq::Elem k, const LaurentSeries& x) { return x.scaled(x.field().embed(k)); },
        [this](const LaurentSeries& x) { return mul_t(x); },
        [](const LaurentSeries& x) { return x.q_power(); },
    };
    return phi_action(a, c, ops);
}

LaurentSeries LocalCarlitz::eval_poly(const Poly& a, const LaurentSeries& c) const {
    return series::eval(a, t_) * c;
}

LaurentSeries LocalCarlitz::d_series(int i, int rel) const {
    const ResidueField& F = field();
    if (i == 0) return LaurentSeries::constant(F, 1, rel);
    const LaurentSeries prev = d_series(i - 1, (rel + q_ - 1) / q_);
    const LaurentSeries factor = t_.q_power(i) - t_;
    const LaurentSeries d = prev.q_power() * factor;
    return d.truncated(d.val() + rel);
}

LaurentSeries LocalCarlitz::exp_coefficient(int i, int prec) const {
    const ResidueField& F = field();
    const long long v = static_cast<long long>(e_) * i * ipow(q_, i);
    if (v >= prec) return LaurentSeries::zero(F, prec);
    if (i == 0) return LaurentSeries::constant(F, 1, prec);
    auto c = cache_for(t_);
    {
        std::lock_guard lock(c->mu);
        auto it = c->exp.find(i);
        if (it != c->exp.end() && it->second.prec() >= prec) return it->second.truncated(prec);
    }
    const int rel = prec - static_cast<int>(v);
    LaurentSeries r = d_series(i, rel).inverse().truncated(prec);
    std::lock_guard lock(c->mu);
    auto& slot = c->exp[i];
    if (!slot.has_field() || slot.prec() < r.prec()) slot = r;
    return r;
}

LaurentSeries LocalCarlitz::exp(const LaurentSeries& x, int target) const {
    const ResidueField& F = field();
    target = std::min(target, x.prec());
    if (x.is_zero()) return LaurentSeries::zero(F, target);
    if (target > kMaxTarget) throw PrecisionExhausted("exp needs a finite working precision");
    const long long v = x.val();
    LaurentSeries acc = LaurentSeries::zero(F, target);
    for (int i = 0;; ++i) {
        const long long qi = ipow(q_, i);
        const long long lv = qi * (v + static_cast<long long>(i) * e_);
        if (v + static_cast<long long>(i) * e_ > 0 && lv >= target) break;
        if (lv >= target) continue;
        const long long vi = static_cast<long long>(e_) * i * qi;
        // x^{q^i} is needed modulo u^{target - vi}
        const long long need = (target - vi + qi - 1) / qi;
        const LaurentSeries xi = x.truncated(static_cast<int>(std::min<long long>(need, x.prec()))).q_power(i);
        const LaurentSeries ei = exp_coefficient(i, static_cast<int>(target - qi * v));
        acc += (ei * xi).truncated(target);
    }
    return acc;
}

LaurentSeries LocalCarlitz::log(const LaurentSeries& x) const {
    const ResidueField& F = field();
    const int target = x.prec();
    if (x.is_zero()) return LaurentSeries::zero(F, target);
    if (target > kMaxTarget) throw PrecisionExhausted("log needs a finite working precision");
    const long long v = x.val();
    if (v < -e_) throw OutOfDomain("log requires v(x) >= " + std::to_string(-e_) + ", got " + std::to_string(v));
    LaurentSeries acc = LaurentSeries::zero(F, target);
    auto cache = cache_for(t_);
    for (int k = 0;; ++k) {
        const long long qk = ipow(q_, k);
        const RatFunc& lk = log_coefficients(F.base(), k)[static_cast<std::size_t>(k)];
        const long long gap = lk.den().deg() - lk.num().deg();
        if (static_cast<long long>(e_) * gap - e_ * qk >= target && k > 0) break;  // beyond the domain bound
        const long long lv = e_ * gap + qk * v;
        if (lv >= target) continue;
        const long long need_l = target - qk * v;  // l_k(t) modulo u^need_l
        LaurentSeries ls;
        {
            std::lock_guard lock(cache->mu);
            auto it = cache->log.find(k);
            if (it != cache->log.end() && it->second.prec() >= need_l) ls = it->second.truncated(static_cast<int>(need_l));
        }
        if (!ls.has_field()) {
            const LaurentSeries den = series::eval(lk.den(), t_);
            const LaurentSeries num = series::eval(lk.num(), t_);
            const long long rel = need_l - e_ * gap + static_cast<long long>(e_) * lk.num().deg();
            ls = (num * den.truncated(static_cast<int>(den.val() + rel)).inverse()).truncated(static_cast<int>(need_l));
            std::lock_guard lock(cache->mu);
            auto& slot = cache->log[k];
            if (!slot.has_field() || slot.prec() < ls.prec()) slot = ls;
        }
        const long long need_x = (target - e_ * gap + qk - 1) / qk;
        const LaurentSeries xk = x.truncated(static_cast<int>(std::min<long long>(need_x, x.prec()))).q_power(k);
        acc += (ls * xk).truncated(target);
    }
    return acc;
}

LaurentSeries LocalCarlitz::monomial_exp(ResidueField::Elem a, int exponent, int target) const {
    return exp(LaurentSeries::monomial(field(), a, exponent, target), target);
}

LaurentSeries LocalCarlitz::solve_exp(const LaurentSeries& c, SolveInfo* info, int max_depth) const {
    const ResidueField& F = field();
    const int target = c.prec();
    if (target > kMaxTarget) throw PrecisionExhausted("solve_exp needs a finite working precision");
    SolveInfo local;
    SolveInfo& st = info ? *info : local;
    st = SolveInfo{};
    LaurentSeries gamma = LaurentSeries::zero(F, target);
    LaurentSeries E = c;

    // peel poles until the residual enters the contraction domain
    while (!E.is_zero() && !in_contraction_domain(E.val())) {
        if (st.peel_steps >= max_depth) throw NoSolutionFound(st.peel_steps, "peeling depth cap reached");
        const long long V = E.val();
        // min_i q^i (P + i e) is strictly increasing in P, so at most one P reaches V
        long long P = 0;
        std::vector<int> ties;
        bool found = false;
        for (int i = 0; !found; ++i) {
            const long long qi = ipow(q_, i);
            if (qi > (V < 0 ? -V : V) + 1 && i > 0) break;
            if (V % qi != 0) continue;
            const long long cand = V / qi - static_cast<long long>(i) * e_;
            long long best = V + 1;
            std::vector<int> at;
            for (int j = 0;; ++j) {
                const long long qj = ipow(q_, j);
                const long long val = qj * (cand + static_cast<long long>(j) * e_);
                if (val < best) {
                    best = val;
                    at = {j};
                } else if (val == best) {
                    at.push_back(j);
                }
                if (cand + static_cast<long long>(j) * e_ > 0 && val > best) break;
            }
            if (best == V) {
                P = cand;
                ties = at;
                found = true;
            }
        }
        if (!found) throw NoSolutionFound(st.peel_steps, "valuation " + std::to_string(V) + " is not attained by exp of a monomial");

        ResidueField::Elem a = 0;
        if (ties.size() == 1) {
            const int i = ties[0];
            const LaurentSeries ei = exp_coefficient(i, static_cast<int>(V + 1 - ipow(q_, i) * P));
            a = F.frobenius_inverse(F.div(E.lead(), ei.lead()), i);
        } else {
            st.brute_forced = true;
            bool ok = false;
            for (std::uint64_t x = 1; x < F.order() && !ok; ++x) {
                ResidueField::Elem s = 0;
                for (int i : ties) {
                    const LaurentSeries ei = exp_coefficient(i, static_cast<int>(V + 1 - ipow(q_, i) * P));
                    ResidueField::Elem xi = static_cast<ResidueField::Elem>(x);
                    for (int r = 0; r < i; ++r) xi = F.frobenius(xi);
                    s = F.add(s, F.mul(ei.lead(), xi));
                }
                if (s == E.lead()) {
                    a = static_cast<ResidueField::Elem>(x);
                    ok = true;
                }
            }
            if (!ok) throw NoSolutionFound(st.peel_steps, "no leading coefficient cancels the residual");
        }
        const LaurentSeries step = LaurentSeries::monomial(F, a, static_cast<int>(P), target);
        gamma += step;
        const LaurentSeries next = E - monomial_exp(a, static_cast<int>(P), target);
        if (!next.is_zero() && next.val() <= V) throw NoSolutionFound(st.peel_steps, "peeling did not raise the valuation");
        E = next;
        ++st.peel_steps;
    }

    // fixed point gamma <- gamma + E; the residual becomes E - exp(E)
    while (!E.is_zero()) {
        const int before = E.val();
        gamma += E;
        E = E - exp(E, target);
        ++st.fixed_point_steps;
        if (!E.is_zero() && E.val() <= before) throw NoSolutionFound(st.peel_steps, "fixed point iteration stalled");
    }
    st.residual_val = (c - exp(gamma, target)).val();
    return gamma;
}

}  // namespace carlitz::drinfeld
