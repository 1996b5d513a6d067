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

#include <random>

#include "ffdescent/curvemodel.hpp"
#include "ffdescent/elliptic.hpp"
#include "ffdescent/factor.hpp"
#include "helpers.hpp"

using namespace ffd;
using ffd::test::P;
using ffd::test::R;
using ffd::test::short_model;

TEST_CASE("validate_model on elliptic examples") {
    const GF& K5 = GF::get(5);
    const HyperellipticModel a = short_model(Poly(K5), Poly::x(K5));
    CHECK(a.genus == 1);
    REQUIRE(a.j);
    CHECK(a.j->is_zero());
    CHECK(a.triviality == Triviality::isotrivial);

    const GF& K7 = GF::get(7);
    const Poly t = Poly::x(K7);
    const HyperellipticModel b = short_model(t, P(K7, {1}));
    REQUIRE(b.j);
    // 6912 t^3 / (4 t^3 + 27)
    const RatFunc t3(pow(t, 3u));
    CHECK(*b.j == RatFunc(P(K7, {6912})) * t3 / (RatFunc(P(K7, {4})) * t3 + R(K7, {27})));
    CHECK(b.triviality == Triviality::nonisotrivial);
    CHECK(b.height == 1);

    // x^3 - t x^2 has the double root x = 0.
    CHECK_THROWS_AS(validate_model(K5, {R(K5, {0}), R(K5, {0}), R(K5, {0, -1}), R(K5, {1})}), domain_error);
    CHECK_THROWS_AS(validate_model(K5, {R(K5, {1}), R(K5, {0}), R(K5, {1})}), domain_error);  // even degree
}

TEST_CASE("constant curves are classified") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(P(K, {1}), P(K, {3}));
    CHECK(m.triviality == Triviality::constant);
}

TEST_CASE("bad places") {
    const GF& K7 = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K7), P(K7, {1}));
    const auto S = bad_places(m);
    Poly prod = P(K7, {1});
    for (const auto& pl : S) prod = prod * pl.pi;
    CHECK(prod == radical(P(K7, {27, 0, 0, 4})).monic());

    const GF& K5 = GF::get(5);
    const auto S2 = bad_places(short_model(Poly(K5), Poly::x(K5)));
    REQUIRE(S2.size() == 1);
    CHECK(S2[0].pi == Poly::x(K5));
    CHECK(bad_places(short_model(P(K5, {1}), P(K5, {1}))).empty());
}

TEST_CASE("Kodaira types and conductor of y^2 = x^3 + t over F_5") {
    const GF& K = GF::get(5);
    const EllipticLocalData ld = elliptic_local_data(short_model(Poly(K), Poly::x(K)));
    REQUIRE(ld.places.size() == 2);
    CHECK(ld.places[0].kodaira == "II");
    CHECK(ld.places[0].v_disc == 2);
    CHECK(ld.places[0].component_group == 1);
    CHECK(ld.places[0].conductor_exponent == 2);
    CHECK(ld.places[1].place.inf);
    CHECK(ld.places[1].kodaira == "II*");
    CHECK(ld.places[1].conductor_exponent == 2);
    CHECK(ld.conductor_degree == 4);
    CHECK(ld.sigma2.empty());
}

TEST_CASE("type IV on y^2 = x^3 + t^2") {
    const GF& K = GF::get(5);
    const EllipticLocalData ld = elliptic_local_data(short_model(Poly(K), P(K, {0, 0, 1})));
    REQUIRE(!ld.places.empty());
    CHECK(ld.places[0].kodaira == "IV");
    CHECK(ld.places[0].component_group == 3);
    for (const auto& pl : ld.sigma2) CHECK_FALSE(pl.pi == Poly::x(K));
}

TEST_CASE("local data rejects constant curves") {
    const GF& K = GF::get(7);
    CHECK_THROWS_WITH_AS(elliptic_local_data(short_model(P(K, {1}), P(K, {3}))), doctest::Contains("constant"),
                         domain_error);
}

TEST_CASE("conductor degree counts multiplicative places on semistable samples") {
    // Only I_n fibres: every bad place contributes its degree once.
    const GF& K = GF::get(7);
    std::mt19937_64 rng(12);
    int checked = 0;
    for (int i = 0; i < 30 && checked < 8; ++i) {
        const Poly A = random_poly(K, 1, rng), B = random_poly(K, 2, rng);
        HyperellipticModel m;
        try {
            m = short_model(A, B);
        } catch (const domain_error&) {
            continue;
        }
        if (m.triviality == Triviality::constant) continue;
        const EllipticLocalData ld = elliptic_local_data(m);
        bool semistable = true;
        for (const auto& r : ld.places) semistable = semistable && r.kodaira.front() == 'I' && r.kodaira.back() != '*' && r.v_c4 == 0;
        if (!semistable) continue;
        int expect = 0;
        for (const auto& r : ld.places) expect += r.place.degree();
        CHECK(ld.conductor_degree == expect);
        ++checked;
    }
}

TEST_CASE("plane curve analysis") {
    const GF& K = GF::get(5);
    const HyperellipticModel a = short_model(Poly(K), Poly::x(K));
    const auto pa = plane_curve_analyze(a, true);
    CHECK(pa.omega == 1);
    REQUIRE(pa.genus);
    CHECK(*pa.genus == 0);

    const HyperellipticModel b = short_model(Poly::x(K), Poly(K));
    CHECK(plane_curve_analyze(b, false).omega == 2);
    CHECK(plane_curve_analyze(b, false).two_torsion_dim == 1);

    // B squarefree of degree 9 with 3 | 9: g = d1 + d2 - 2 = 7.
    Poly B = P(K, {1});
    for (int a0 = 0; a0 < 5; ++a0) B = B * P(K, {-a0, 1});
    B = B * P(K, {2, 0, 1}) * P(K, {3, 0, 1});
    REQUIRE(is_squarefree(B));
    REQUIRE(B.deg() == 9);
    const auto pc = analyze_plane_curve(BiPoly(K, {B, Poly(K), Poly(K), P(K, {1})}), true);
    REQUIRE(pc.genus);
    CHECK(*pc.genus == 7);
    CHECK(j0_genus_formula(9, 0) == 7);
}

TEST_CASE("j = 0 genus formula matches the ramification count") {
    const GF& K = GF::get(7);
    std::mt19937_64 rng(21);
    for (const auto [d1, d2] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{4, 1}, std::pair{2, 2}, std::pair{5, 0}}) {
        Poly b1, b2;
        do {
            b1 = ffd::test::random_squarefree(K, d1, rng);
            b2 = ffd::test::random_squarefree(K, d2, rng);
        } while (!is_squarefree(b1 * b2));
        const Poly B = b1 * b2 * b2;
        const auto pc = analyze_plane_curve(BiPoly(K, {B, Poly(K), Poly(K), P(K, {1})}), true);
        REQUIRE(pc.genus);
        CHECK(*pc.genus == j0_genus_formula(d1, d2));
    }
}

TEST_CASE("trigonal one-point data") {
    const GF& K = GF::get(5);
    // w = 7: h0(9 P) = 5 > 4 first at n = 3, so m = 1.
    const BiPoly G(K, {P(K, {1, 0, 0, 0, 0, 0, 0, 1}), Poly(K), Poly(K), P(K, {1})});
    const TrigonalData td = trigonal_infinity_data(G);
    CHECK(td.w == 7);
    CHECK(td.genus == 6);
    CHECK(trigonal_h0(7, 9) == 5);
    REQUIRE(td.maroni);
    CHECK(*td.maroni == 1);
    CHECK(3 * *td.maroni >= td.genus - 4);
    CHECK(2 * *td.maroni <= td.genus - 2);

    const TrigonalData r = trigonal_infinity_data(BiPoly(K, {Poly::x(K), Poly(K), Poly(K), P(K, {1})}));
    CHECK(r.genus == 0);
    CHECK_FALSE(r.maroni);

    CHECK_THROWS_WITH_AS(trigonal_infinity_data(BiPoly(K, {P(K, {1, 0, 0, 1}), Poly(K), Poly(K), P(K, {1})})),
                         doctest::Contains("not totally ramified"), domain_error);
    CHECK_THROWS_WITH_AS(trigonal_infinity_data(BiPoly(K, {P(K, {0, 0, 0, 0, 1}), P(K, {0, 0, 0, 1}), Poly(K), P(K, {1})})),
                         doctest::Contains("not totally ramified"), domain_error);
}

TEST_CASE("Maroni range on random accepted models") {
    std::mt19937_64 rng(33);
    const GF& K = GF::get(7);
    int seen = 0;
    for (int i = 0; i < 200 && seen < 10; ++i) {
        const int w = i % 2 ? 7 : 8;
        BiPoly G(K, {random_poly(K, w, rng), random_poly(K, (2 * w - 1) / 3, rng), random_poly(K, (w - 1) / 3, rng),
                     P(K, {1})});
        TrigonalData td;
        try {
            td = trigonal_infinity_data(G);
        } catch (const domain_error&) {
            continue;
        }
        REQUIRE(td.maroni);
        CHECK(3 * *td.maroni >= td.genus - 4);
        CHECK(2 * *td.maroni <= td.genus - 2);
        ++seen;
    }
    CHECK(seen == 10);
}

TEST_CASE("comparison chi") {
    const GF& K = GF::get(5);
    const Poly t = Poly::x(K);
    CHECK(comparison_chi(t, P(K, {1})) == 1);
    CHECK(comparison_chi(Poly(K), t * t) == 1);
    CHECK(comparison_chi(pow(t, 4u), pow(t, 6u)) == 1);
    CHECK(comparison_chi(pow(t, 5u), Poly(K)) == 2);
}
