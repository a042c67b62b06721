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

#ifndef CARLITZ_FF_FACTOR_HPP
#define CARLITZ_FF_FACTOR_HPP

#include <utility>
#include <vector>

#include "carlitz/ff/poly.hpp"

namespace carlitz::ff {

struct Factorization {
    Fq::Elem unit = 1;                          ///< leading coefficient
    std::vector<std::pair<Poly, int>> factors;  ///< monic irreducibles, sorted, with multiplicity

    Poly product(const Fq& field) const;
};

/// Complete factorization over F_q: square-free split, distinct-degree
/// split, then equal-degree (Cantor-Zassenhaus) split driven by a PRNG
/// seeded from the coefficients of f, so the output is reproducible.
Factorization factor(const Poly& f);

/// Square-free decomposition f = unit * prod g_i^i, g_i monic square-free.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);

/// Monic irreducible polynomials of the given degree, ascending in Poly order;
/// stops after `limit` results.
std::vector<Poly> irreducibles_of_degree(const Fq& field, int degree, int limit);

}  // namespace carlitz::ff

#endif  // CARLITZ_FF_FACTOR_HPP
