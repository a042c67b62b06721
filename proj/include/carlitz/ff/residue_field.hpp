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

#ifndef CARLITZ_FF_RESIDUE_FIELD_HPP
#define CARLITZ_FF_RESIDUE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/ff/field.hpp"
#include "carlitz/ff/poly.hpp"

namespace carlitz::ff {

/// The extension F_{q^d} = F_q[z]/(modulus), used as the coefficient field
/// of completions at places of residue degree d.
///
/// Elements are integer codes whose base-q digits are the coordinates in
/// 1, z, ..., z^(d-1). Small fields (order <= 256) use full tables.
class ResidueField {
public:
    using Elem = std::uint32_t;

    /// Interned; `modulus` must be monic irreducible over the base field.
    static const ResidueField& get(const Fq& base, const Poly& modulus);
    /// F_q itself (d = 1).
    static const ResidueField& trivial(const Fq& base);

    const Fq& base() const noexcept { return *base_; }
    int degree() const noexcept { return d_; }
    const Poly& modulus() const noexcept { return modulus_; }
    std::uint64_t order() const noexcept { return order_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    /// Class of z (meaningless when d = 1).
    Elem gen() const noexcept { return d_ == 1 ? Elem{0} : static_cast<Elem>(base_->q()); }
    Elem embed(Fq::Elem a) const noexcept { return a; }
    bool in_base(Elem a) const noexcept { return a < static_cast<Elem>(base_->q()); }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem scale(Fq::Elem c, Elem a) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t n) const noexcept;
    /// x -> x^q, an F_q-linear automorphism of order d.
    Elem frobenius(Elem a) const noexcept;
    /// Inverse of x -> x^(q^k).
    Elem frobenius_inverse(Elem a, int k) const noexcept;

    std::vector<Fq::Elem> coords(Elem a) const;
    Elem from_coords(const std::vector<Fq::Elem>& c) const;
    /// Class of a polynomial over the base field.
    Elem from_poly(const Poly& p) const;

    std::string format(Elem a) const;

private:
    ResidueField(const Fq& base, Poly modulus);
    Elem mul_slow(Elem a, Elem b) const noexcept;

    const Fq* base_;
    Poly modulus_;
    int d_;
    std::uint64_t order_;
    std::vector<Elem> mul_table_;  // filled when order_ <= 256
    std::vector<std::vector<Fq::Elem>> frob_matrix_;  // column i = coords of z^(iq)
};

}  // namespace carlitz::ff

#endif  // CARLITZ_FF_RESIDUE_FIELD_HPP
