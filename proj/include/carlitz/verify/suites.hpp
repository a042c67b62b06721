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

#ifndef CARLITZ_VERIFY_SUITES_HPP
#define CARLITZ_VERIFY_SUITES_HPP

#include <random>
#include <string>
#include <vector>

#include "carlitz/curve/package.hpp"
#include "carlitz/shtuka/shtuka.hpp"

namespace carlitz::verify {

using shtuka::CheckLine;

struct BuiltinCurve {
    std::string name;
    std::string text;  ///< package file contents
};

// The example packages shipped under data/curves.
const std::vector<BuiltinCurve>& builtin_corpus();
curve::CurvePackage builtin(const std::string& name);

// exp(tx) = t exp x + (exp x)^q modulo x^{q^5}, the degree law for i <= 5
// and the exp/log composition, all exact over F_q(t).
std::vector<CheckLine> series_suite(int q);

// Log inversion and contraction at every place at infinity of pkg.
std::vector<CheckLine> place_suite(const std::string& name, const curve::CurvePackage& pkg, int prec, int trials,
                                   std::mt19937_64& rng);

// The windowed exactness check for F_q, F_q[t]/(t^2), a quadratic field and
// F_q[t]/(t^2 - t).
std::vector<CheckLine> exactness_suite(int q, int window);

// Euler characteristics, window stability, finiteness of H^1 and the unit rank.
std::vector<CheckLine> cech_suite(const std::string& name, const curve::CurvePackage& pkg);

// Hom(1, C) = 0 on finite algebras, and the diagram at infinity on every place of pkg.
std::vector<CheckLine> shtuka_suite(const std::string& name, const curve::CurvePackage& pkg, int prec, int trials,
                                    std::mt19937_64& rng);

std::vector<shtuka::FiniteAlgebra> standard_algebras(const ff::Fq& field);

bool all_ok(const std::vector<CheckLine>& lines);

}  // namespace carlitz::verify

#endif  // CARLITZ_VERIFY_SUITES_HPP
