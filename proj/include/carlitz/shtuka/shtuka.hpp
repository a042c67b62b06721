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

#ifndef CARLITZ_SHTUKA_SHTUKA_HPP
#define CARLITZ_SHTUKA_SHTUKA_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "carlitz/curve/places.hpp"
#include "carlitz/ff/linalg.hpp"
#include "carlitz/ff/poly.hpp"

namespace carlitz::shtuka {

using ff::Fq;
using ff::KMatrix;
using ff::KVector;
using ff::Poly;
using series::LaurentSeries;

// A finite-dimensional commutative F_q-algebra with an A-structure t -> t_R.
class FiniteAlgebra {
public:
    // R = F_q[t]/(f) with t acting as the class of t. f = 1 gives the zero ring.
    static FiniteAlgebra quotient(const Fq& field, const Poly& f);

    const Fq& field() const noexcept { return *field_; }
    int dim() const noexcept { return dim_; }
    std::uint64_t order() const;
    const KVector& one() const noexcept { return one_; }
    const KVector& t_image() const noexcept { return t_; }
    const Poly& modulus() const noexcept { return modulus_; }

    KVector zero() const { return KVector(static_cast<std::size_t>(dim_), 0); }
    KVector add(const KVector& a, const KVector& b) const;
    KVector sub(const KVector& a, const KVector& b) const;
    KVector scale(Fq::Elem c, const KVector& a) const;
    KVector mul(const KVector& a, const KVector& b) const;
    KVector frob(const KVector& a) const;  ///< r -> r^q
    KVector basis(int i) const;
    // Carlitz action on C_0(R): phi_t(r) = t_R r + r^q.
    KVector phi_t(const KVector& r) const;
    KVector phi(const Poly& a, const KVector& r) const;

private:
    const Fq* field_ = nullptr;
    int dim_ = 0;
    Poly modulus_;
    KVector one_, t_;
};

// An element of R (x) A, truncated: coefficient of t^j (A-variable) at index j.
using RA = std::vector<KVector>;
// A section of a free R (x) A module of rank k.
using Section = std::vector<RA>;
using RAMatrix = std::vector<std::vector<RA>>;

RA ra_zero();
RA ra_constant(const KVector& r);         ///< r (x) 1
RA ra_a(const FiniteAlgebra& R, const Poly& a);  ///< 1 (x) a
RA ra_add(const FiniteAlgebra& R, const RA& x, const RA& y);
RA ra_sub(const FiniteAlgebra& R, const RA& x, const RA& y);
RA ra_mul(const FiniteAlgebra& R, const RA& x, const RA& y);
RA ra_tau(const FiniteAlgebra& R, const RA& x);  ///< Frobenius on the R factor
bool ra_is_zero(const RA& x);
int ra_degree(const RA& x);  ///< -1 for zero

// M -sigma-> M' <-j- tau^* M over Spec R, with M, M' free of ranks k, k'.
// j o tau acts as x -> J * tau(x).
struct AffineShtuka {
    const FiniteAlgebra* R = nullptr;
    int rank = 0;        ///< k
    int rank_prime = 0;  ///< k'
    RAMatrix sigma;      ///< k' x k
    RAMatrix J;          ///< k' x k

    static AffineShtuka carlitz(const FiniteAlgebra& R);  ///< sigma = 1 (x) t - t (x) 1, j = 1
    static AffineShtuka unit(const FiniteAlgebra& R);     ///< sigma = j = 1
    static AffineShtuka zero(const FiniteAlgebra& R);     ///< M = M' = 0
    static AffineShtuka trivial_maps(const FiniteAlgebra& R, int rank);  ///< sigma = j = 0

    Section apply_sigma(const Section& x) const;
    Section apply_jtau(const Section& x) const;
    int degree_shift() const;  ///< largest A-degree among the entries of sigma and J
};

// d = sigma - j o tau.
Section boundary(const AffineShtuka& s, const Section& x);

// Matrix of d on sections of A-degree <= N, over F_q. Coordinates are
// ordered (component, A-degree, R-basis index).
KMatrix boundary_matrix(const AffineShtuka& s, int N);
Section section_from_coords(const AffineShtuka& s, const KVector& v, int N, bool prime);
KVector section_coords(const AffineShtuka& s, const Section& x, int N, bool prime);

// The semilinearity law of j o tau and additivity of d on random inputs.
bool check_semilinearity(const AffineShtuka& s, std::mt19937_64& rng, int trials, std::string* why = nullptr);

// Basis of Hom(1, s) in A-degree <= N: the sections f with d f = 0.
std::vector<Section> hom_from_unit(const AffineShtuka& s, int N);
// Number of f of A-degree <= N for which both squares of the diagram
// 1 -> s commute, found by enumeration (tiny instances only).
std::uint64_t hom_from_unit_count_bruteforce(const AffineShtuka& s, int N);

struct CheckLine {
    std::string name;
    bool ok = true;
    std::string detail;
};

// Exactness of 0 -> R(x)A -d-> R(x)A -alpha-> C_0(R) -> 0 in A-degree <= N.
// Throws ExactnessFailure carrying a witness.
std::vector<CheckLine> check_prop_away(const FiniteAlgebra& R, int N);

// Local compatibility at an infinite place: exp(t f) = t exp f + (exp f)^q and
// exp(a log f) = phi_a(f) on random f in t O and a of degree <= 3.
// Throws IdentityFailure on the first mismatch.
std::vector<CheckLine> check_prop_lie(const curve::Place& place, int prec, int trials, std::mt19937_64& rng);

}  // namespace carlitz::shtuka

#endif  // CARLITZ_SHTUKA_SHTUKA_HPP
