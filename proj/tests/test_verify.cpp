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

#include "carlitz/verify/suites.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "carlitz/errors.hpp"
#include "doctest.h"

using namespace carlitz;

TEST_CASE("data files match the built-in corpus") {
    const std::filesystem::path dir = std::filesystem::path(CARLITZ_SOURCE_DIR) / "data" / "curves";
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".curve") continue;
        ++files;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        const std::string name = entry.path().stem().string();
        CAPTURE(name);
        bool found = false;
        for (const auto& c : verify::builtin_corpus())
            if (c.name == name) {
                found = true;
                CHECK(c.text == ss.str());
            }
        CHECK(found);
    }
    CHECK(files == static_cast<int>(verify::builtin_corpus().size()));
    CHECK_THROWS_AS(verify::builtin("nope"), ParseError);
}

TEST_CASE("corpus shape") {
    // P^1; genus 1, 2, 3 over q = 3 and 5; a q = 2 generic package
    struct Want {
        const char* name;
        int q, n, g;
    };
    for (const Want w : {Want{"p1", 3, 1, 0}, Want{"p1_q4", 4, 1, 0}, Want{"g1_q3", 3, 2, 1}, Want{"g2_q3", 3, 2, 2},
                         Want{"g2_q5", 5, 2, 2}, Want{"g3_q3", 3, 2, 3}, Want{"g3_q5", 5, 2, 3}, Want{"q2_cubic", 2, 3, 1}}) {
        const auto pkg = verify::builtin(w.name);
        CAPTURE(w.name);
        CHECK(pkg.field().q() == w.q);
        CHECK(pkg.n() == w.n);
        CHECK(pkg.genus() == w.g);
    }
}

TEST_CASE("suites pass on the corpus") {
    std::mt19937_64 rng(3);
    for (int q : {2, 3}) {
        CHECK(verify::all_ok(verify::series_suite(q)));
        const auto ex = verify::exactness_suite(q, 4);
        CHECK(ex.size() == 16);
        CHECK(verify::all_ok(ex));
    }
    for (const char* name : {"p1", "g2_q5", "q2_cubic"}) {
        const auto pkg = verify::builtin(name);
        CHECK(verify::all_ok(verify::place_suite(name, pkg, 48, 20, rng)));
        CHECK(verify::all_ok(verify::cech_suite(name, pkg)));
        CHECK(verify::all_ok(verify::shtuka_suite(name, pkg, 48, 10, rng)));
    }
    CHECK(verify::all_ok({}));
    CHECK_FALSE(verify::all_ok({{"x", false, ""}}));
}

TEST_CASE("standard algebras") {
    for (int q : {2, 3, 4, 5}) {
        const auto algs = verify::standard_algebras(ff::Fq::of_order(q));
        REQUIRE(algs.size() == 4);
        CHECK(algs[0].dim() == 1);
        for (int i = 1; i < 4; ++i) CHECK(algs[i].dim() == 2);
        CHECK(algs[2].order() == static_cast<std::uint64_t>(q * q));
    }
}
