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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(CARLITZ_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string curve(const char* name) { return std::string(CARLITZ_CURVES) + "/" + name + ".curve"; }

bool has_line(const std::string& out, const std::string& line) {
    return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

// the lines of a report whose key starts with prefix
std::string keys(const std::string& out, const std::string& prefix) {
    std::string r, line;
    std::istringstream in(out);
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) r += line + "\n";
    return r;
}

std::string temp_curve(const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / "carlitz_cli_test.curve";
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("coeffs") {
    auto r = run("coeffs --q 2 --count 2");
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "e[1]=1/(t^2+t)"));
    CHECK(has_line(r.out, "e[2]=1/(t^8+t^6+t^5+t^3)"));
    CHECK(has_line(r.out, "l[1]=1/(t^2+t)"));

    r = run("--machine coeffs --q 3 --count 0");
    CHECK(r.code == 0);
    CHECK(r.out == "q=3\ncount=0\n");

    CHECK(run("coeffs --q 6").code == 2);
    CHECK(run("coeffs --q 3 --count 9").code == 2);
    CHECK(run("coeffs").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("invariants report") {
    auto r = run("invariants --machine --curve " + curve("p1"));
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "curve.n=1"));
    CHECK(has_line(r.out, "curve.genus=0"));
    CHECK(has_line(r.out, "H0.rank=1"));
    CHECK(has_line(r.out, "H0.torsion=[]"));
    CHECK(has_line(r.out, "H1.cardinality=q^0"));
    CHECK(has_line(r.out, "unit[0].c=1"));
    CHECK(has_line(r.out, "check.twist=PASS"));
    CHECK(r.out.find("check.analytic") == std::string::npos);

    r = run("invariants --machine --curve " + curve("g2_q3") + " --cross-check --precision 96");
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "check.analytic=PASS"));

    r = run("invariants --machine --twist 0,1,2 --curve " + curve("g2_q5") + " --cross-check");
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "H1.divisors=[t+1]"));
    CHECK(has_line(r.out, "H1.cardinality=q^1"));
    CHECK(has_line(r.out, "check.analytic=PASS"));
    CHECK(has_line(r.out, "check.twist=PASS"));

    r = run("invariants --machine --curve " + curve("g1_q3") + " --bound 4");
    CHECK(has_line(r.out, "generation[0].needed=2"));
    CHECK(has_line(r.out, "generation[4].needed=7"));

    // human mode carries the same keys
    r = run("invariants " + curve("g3_q3"));
    CHECK(r.code == 0);
    CHECK(r.out.find("H1.divisors") != std::string::npos);
}

TEST_CASE("invariants exit codes") {
    CHECK(run("invariants --curve /nonexistent/x.curve").code == 2);
    CHECK(run("invariants --twist 0,x --curve " + curve("p1")).code == 2);
    CHECK(run("--precision 8 invariants --curve " + curve("p1")).code == 2);
    CHECK(run("invariants --curve " + temp_curve("[field] p=3\n[model] kind=superelliptic m=2 f=t^2\n")).code == 3);
    CHECK(run("invariants --curve " + temp_curve("[field] p=3\n[model] kind=nonsense\n")).code == 3);
    CHECK(run("invariants --curve " + temp_curve("[field] p=3\n[model] kind=pone\n[precision] series=4\n")).code == 3);
    // depth 0 cannot saturate
    auto r = run("--machine --depth 0 --strict invariants --cross-check --curve " + curve("g2_q5"));
    CHECK(r.code == 4);
    CHECK(has_line(r.out, "check.analytic=LOWER-SATURATION"));
    CHECK(run("--depth 0 invariants --cross-check --curve " + curve("g2_q5")).code == 0);
}

TEST_CASE("determinism and precision soundness") {
    for (const char* name : {"g1_q3", "g3_q5", "q2_cubic"}) {
        const auto a = run("--machine invariants --curve " + curve(name));
        const auto b = run("--machine invariants --curve " + curve(name));
        CHECK(a.out == b.out);
        const auto c = run("--machine --precision 128 invariants --curve " + curve(name));
        for (const char* k : {"curve.", "H0.", "H1."}) CHECK(keys(a.out, k) == keys(c.out, k));
        CHECK(keys(a.out, "unit[0].c") == keys(c.out, "unit[0].c"));
        CHECK(keys(a.out, "unit[1].c") == keys(c.out, "unit[1].c"));
    }
}

TEST_CASE("verify") {
    auto r = run("verify --suite series --q 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS functional-equation[q=3]") != std::string::npos);
    CHECK(r.out.find("PASS degree-law[q=3]") != std::string::npos);
    CHECK(r.out.find("PASS round-trip[q=3]") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run("--machine verify --suite all");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS euler[g3_q5]") != std::string::npos);

    CHECK(run("verify --suite bogus").code == 2);
    CHECK(run("verify --suite series --q 6").code == 2);
}
