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

#include <algorithm>
#include <random>

#include "ffdescent/elliptic.hpp"
#include "ffdescent/points.hpp"
#include "helpers.hpp"

using namespace ffd;
using ffd::test::P;
using ffd::test::R;
using ffd::test::short_model;

namespace {

bool contains(const std::vector<CurvePoint>& v, const CurvePoint& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

}  // namespace

TEST_CASE("integral points of degree 0") {
    const GF& K = GF::get(5);
    const auto a = enum_integral(short_model(Poly(K), P(K, {0, 0, 1})), 0);
    REQUIRE(a.size() == 2);
    CHECK(contains(a, CurvePoint{R(K, {0}), R(K, {0, 1})}));
    CHECK(contains(a, CurvePoint{R(K, {0}), R(K, {0, -1})}));
    CHECK(enum_integral(short_model(Poly(K), Poly::x(K)), 0).empty());
    CHECK(enum_integral(short_model(Poly(K), Poly::x(K)), -1).empty());
}

TEST_CASE("sieved kernels match the reference enumerator") {
    std::mt19937_64 rng(17);
    for (const int p : {5, 7}) {
        const GF& K = GF::get(p);
        for (int i = 0; i < 6; ++i) {
            HyperellipticModel m;
            try {
                m = short_model(random_poly(K, 1, rng), random_poly(K, 2, rng));
            } catch (const domain_error&) {
                continue;
            }
            const int c = p == 5 ? 5 : 4;
            auto ref = enum_integral_reference(m, c);
            sort_points(ref);
            auto ser = enum_integral(m, c, EnumOptions{1e8, false});
            auto par = enum_integral(m, c, EnumOptions{1e8, true});
            CHECK(ser == ref);
            CHECK(par == ref);
        }
    }
}

TEST_CASE("enumeration respects the candidate cap") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K), P(K, {1}));
    CHECK_THROWS_AS(enum_integral(m, 14, EnumOptions{1e3, false}), search_limit_error);
}

TEST_CASE("rational points contain the integral ones") {
    const GF& K = GF::get(5);
    const HyperellipticModel m = short_model(Poly(K), P(K, {0, 0, 1}));
    const auto I = enum_integral(m, 2);
    const auto Q = enum_rational(m, 2);
    for (const auto& p : I) CHECK(contains(Q, p));
    for (const auto& p : Q) CHECK(m.eval(p.x) == p.y * p.y);
    std::vector<CurvePoint> nonint;
    for (const auto& p : Q)
        if (!p.x.is_polynomial()) nonint.push_back(p);
    for (const auto& p : nonint) CHECK(p.x.den().is_monic());
}

TEST_CASE("S-integral enumeration") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K), P(K, {1}));
    const std::vector<Place> inf{Place::infinity(K)};
    CHECK(enum_s_integral(m, inf, 6) == enum_integral(m, 6));
    const std::vector<Place> S{Place::infinity(K), Place::finite(Poly::x(K))};
    const auto pts = enum_s_integral(m, S, 4);
    for (const auto& p : pts) {
        CHECK(is_s_integral(p.x, S));
        CHECK(is_s_integral(p.y, S));
        CHECK(m.eval(p.x) == p.y * p.y);
    }
    for (const auto& p : enum_integral(m, 4)) CHECK(contains(pts, p));
    CHECK(is_s_integral(RatFunc(P(K, {1}), P(K, {0, 0, 1})), S));
    CHECK_FALSE(is_s_integral(RatFunc(P(K, {1}), P(K, {1, 1})), S));
    CHECK_THROWS_AS(enum_s_integral(m, {Place::finite(Poly::x(K))}, 2), domain_error);
}

TEST_CASE("canonical height: torsion, generator and doubling") {
    const GF& K5 = GF::get(5);
    const HyperellipticModel e = short_model(Poly(K5), P(K5, {0, 0, 1}));
    const EllPoint T = EllPoint::affine(R(K5, {0}), R(K5, {0, 1}));
    const EllipticGroup Ge(e);
    CHECK(Ge.dbl(T) == EllPoint::affine(R(K5, {0}), R(K5, {0, -1})));
    const HeightEstimate ht = canonical_height(e, T);
    CHECK(ht.torsion);
    CHECK(ht.value == 0);
    CHECK(canonical_height(e, EllPoint::zero()).value == 0);

    const GF& K7 = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K7), P(K7, {1}));
    const EllPoint P0 = EllPoint::affine(R(K7, {0}), R(K7, {1}));
    const HeightEstimate h = canonical_height(m, P0, 0.01);
    CHECK_FALSE(h.torsion);
    CHECK(h.value > 0);
    CHECK(h.value == doctest::Approx(0.25).epsilon(0.05));
    const HeightEstimate h2 = canonical_height(m, EllipticGroup(m).dbl(P0), 0.01);
    CHECK(h2.value == doctest::Approx(4 * h.value).epsilon(0.05));
}

TEST_CASE("height comparison window") {
    const GF& K = GF::get(5);
    const HyperellipticModel e = short_model(Poly(K), P(K, {0, 0, 1}));
    const ComparisonCheck c = check_comparison(e, CurvePoint{R(K, {0}), R(K, {0, 1})});
    CHECK(c.holds);
    CHECK(c.lower == -2);
    CHECK(c.middle == 0);
    CHECK(c.upper == 2);
    const HyperellipticModel k = short_model(P(K, {1}), P(K, {1}));
    CHECK_THROWS_WITH_AS(check_comparison(k, CurvePoint{R(K, {0}), R(K, {1})}), doctest::Contains("nonconstant required"),
                         domain_error);
}

TEST_CASE("comparison holds on enumerated points and multiples") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K), P(K, {1}));
    const EllipticGroup G(m);
    for (const auto& p : enum_integral(m, 6)) {
        for (int n = 1; n <= 3; ++n) {
            const EllPoint Q = G.mul(n, to_ell(p));
            const ComparisonCheck c = check_comparison(m, CurvePoint{Q.x, Q.y});
            CHECK(c.holds);
            CHECK(c.conclusive);
        }
    }
}

TEST_CASE("Davenport cutoff") {
    const GF& K = GF::get(7);
    std::mt19937_64 rng(3);
    Poly B = random_poly(K, 9, rng, true);
    while (!is_squarefree(B)) B = random_poly(K, 9, rng, true);
    const HyperellipticModel m = short_model(Poly(K), B);
    const auto pts = enum_integral(m, 6);
    const DavenportCheck d = check_davenport(m, pts);
    CHECK(d.bound == 16);
    CHECK(d.hypotheses_ok);
    CHECK(d.holds);
    CHECK_THROWS_AS(check_davenport(short_model(Poly(K), P(K, {3})), {}), domain_error);
}

TEST_CASE("Mordell-Weil multiples certify the small points of y^2 = x^3 + t x + 1") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K), P(K, {1}));
    const MultiplesSearch ms = integral_multiples(m, CurvePoint{R(K, {0}), R(K, {1})}, 8);
    auto a = ms.points;
    sort_points(a);
    CHECK(a == enum_integral(m, 8));
}
