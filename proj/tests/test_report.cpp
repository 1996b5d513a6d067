/*
   Copyright 2026 The ffdescent Authors

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

#include <doctest.h>

#include "ffdescent/report.hpp"

using namespace ffd;

TEST_CASE("curve files parse into models") {
    const CurveSpec s = parse_curve(json::parse(R"({"p": 7, "f": [[1], [0, 1], [0], [1]]})"));
    REQUIRE(s.weierstrass.has_value());
    CHECK(s.model == "weierstrass");
    CHECK(s.weierstrass->d == 3);
    CHECK(to_json(*s.weierstrass)["field"] == s.field->name());

    const CurveSpec h = parse_curve(json::parse(R"({"p": 7, "model": "hyperelliptic", "F": [1, 0, 0, 0, 0, 1]})"));
    REQUIRE(h.F.has_value());
    CHECK(h.F->deg() == 5);
    CHECK(to_json(*h.F) == json::parse("[1, 0, 0, 0, 0, 1]"));

    const CurveSpec t = parse_curve(json::parse(R"({"p": 5, "model": "trigonal", "G": [[1, 2, 0, 1, 1], [3, 1], [4], [1]]})"));
    REQUIRE(t.G.has_value());
    CHECK(t.G->degX() == 3);

    const CurveSpec r = parse_curve(json::parse(R"({"p": 5, "f": [{"num": [1], "den": [0, 1]}, [0, 1], [0], [1]]})"));
    CHECK_FALSE(r.weierstrass->f[0].is_polynomial());
}

TEST_CASE("malformed curve files are rejected") {
    CHECK_THROWS_AS(parse_curve(json::parse("[]")), domain_error);
    CHECK_THROWS_AS(parse_curve(json::parse(R"({"p": 9, "f": [[1], [0], [0]]})")), domain_error);
    CHECK_THROWS_AS(parse_curve(json::parse(R"({"p": 2, "f": [[1], [0], [0]]})")), domain_error);
    CHECK_THROWS_AS(parse_curve(json::parse(R"({"p": 7, "model": "quartic"})")), domain_error);
    CHECK_THROWS_AS(parse_curve(json::parse(R"({"p": 7, "f": [[1.5], [0], [0]]})")), domain_error);
    CHECK_THROWS_AS(parse_curve(json::parse(R"({"p": 7, "f": [{"num": [1], "den": []}, [0], [0]]})")), domain_error);
    CHECK_THROWS_AS(parse_curve(json::parse(R"({"p": 3, "r": 2, "modulus": [1, 1, 1], "f": [[1], [0], [0]]})")),
                    domain_error);
    CHECK_THROWS_AS(load_curve("/nonexistent/curve.json"), domain_error);
}

TEST_CASE("bound values serialize with the documented keys") {
    BoundParams P;
    P.q = 5;
    P.p = 5;
    P.curve_genus = 2;
    P.lambda = 1.0;
    BoundReport R = torsion_bounds(P);
    R.observe("trivial_2", 4);
    const json a = to_json(R);
    REQUIRE(a.is_array());
    bool found = false;
    for (const auto& b : a) {
        CHECK(b.contains("bound_name"));
        CHECK(b.contains("base"));
        CHECK(b.contains("inputs"));
        if (b["bound_name"] == "trivial_2") {
            found = true;
            CHECK(b["exponent_num"] == 4);
            CHECK(b["exponent_den"] == 1);
            CHECK(b["observed"] == 4.0);
            CHECK(b["satisfied"] == true);
        }
    }
    CHECK(found);
}
