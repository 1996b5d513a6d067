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

#include <cmath>

#include "ffdescent/bounds.hpp"

using namespace ffd;

namespace {

Rational exponent_of(const BoundReport& R, const std::string& name) {
    const BoundValue* b = R.find(name);
    REQUIRE(b != nullptr);
    REQUIRE(b->applicable);
    REQUIRE(b->exponent.has_value());
    return *b->exponent;
}

BoundParams cubic() {
    BoundParams P;
    P.q = 5;
    P.p = 5;
    P.d = 3;
    P.g = 0;
    P.h = 1;
    P.g_f = 0;
    return P;
}

}  // namespace

TEST_CASE("omega exponent branches") {
    BoundParams P = cubic();
    CHECK(omega_exponent(Rational(2), P) == Rational(7));
    P.irreducible = false;
    P.omega = 2;
    CHECK(omega_exponent(Rational(2), P) == Rational(8));
    BoundParams Q;
    Q.d = 5;
    Q.h = 10;
    Q.g_f = 8;
    CHECK(omega_exponent(Rational(1), Q) == Rational(15, 2));
    Q.g_f.reset();
    CHECK_THROWS_AS(omega_exponent(Rational(1), Q), domain_error);
}

TEST_CASE("rational point count exponents") {
    BoundParams P = cubic();
    P.c = 4;
    P.rank = 0;
    P.two_torsion_dim = 0;
    const BoundReport R = rational_point_count_bounds(P);
    CHECK(exponent_of(R, "total_p1") == Rational(10));
    CHECK(exponent_of(R, "per_class_p1_integral") == Rational(7));
    CHECK(exponent_of(R, "total_p1") <= exponent_of(R, "total"));

    P.h = 6;
    const BoundReport S = rational_point_count_bounds(P);
    CHECK_FALSE(S.find("per_class_p1_integral")->applicable);
}

TEST_CASE("P1 refinement never exceeds the general exponent") {
    for (int c = 1; c <= 12; ++c)
        for (int h = 0; h <= 6; ++h)
            for (const int d : {3, 5}) {
                BoundParams P = cubic();
                P.d = d;
                P.c = c;
                P.h = h;
                P.g_f = 0;
                P.rank = 1;
                P.two_torsion_dim = 1;
                const BoundReport R = rational_point_count_bounds(P);
                CHECK(exponent_of(R, "total_p1") <= exponent_of(R, "total"));
            }
}

TEST_CASE("rank surrogate") {
    CHECK(gos_rank_surrogate(3, 0, 0, 4, 1) == 0);
    CHECK(gos_rank_surrogate(5, 0, 0, 10, 2) == 3);
    BoundParams P = cubic();
    P.c = 2;
    P.conductor_degree = 4;
    const BoundReport R = rational_point_count_bounds(P);
    CHECK(R.find("total")->applicable);
    P.conductor_degree.reset();
    CHECK_FALSE(rational_point_count_bounds(P).find("total")->applicable);
}

TEST_CASE("height cutoff for S-integral points") {
    BoundParams P = cubic();
    P.S = 1;
    P.deg_disc = 3;
    P.rho = 1;
    const CmaxValue cm = cmax(P);
    CHECK(cm.full == Rational(13));
    for (int s = 1; s <= 3; ++s) {
        P.S_union_Sigma = s + 1;
        P.S = s;
        const CmaxValue v = cmax(P);
        REQUIRE(v.sharp.has_value());
        CHECK(*v.sharp <= v.full);
    }
    P.S = 1;
    P.S_union_Sigma.reset();
    P.rank = 0;
    P.two_torsion_dim = 0;
    CHECK(exponent_of(s_integral_count_bound(P), "s_integral_total") == Rational(54));
    P.isotrivial = true;
    CHECK_THROWS_AS(cmax(P), domain_error);
}

TEST_CASE("trigonal bounds") {
    CHECK(maroni_mu(4, 7, 2) == Rational(3));
    CHECK_THROWS_AS(maroni_mu(3, 7, 2), domain_error);

    BoundParams P;
    P.q = 5;
    P.p = 5;
    P.c = 4;
    P.h = 0;
    P.g_C = 7;
    P.d1 = 9;
    P.d2 = 0;
    P.degB = 9;
    P.rank = 0;
    P.simple_root = true;
    const BoundReport R = maroni_bounds(P);
    CHECK(exponent_of(R, "j0") == Rational(2));
    CHECK(exponent_of(R, "isotrivial_total") == Rational(18));
    CHECK_FALSE(R.find("maroni")->applicable);  // Maroni invariant not supplied
    P.c = 3;
    CHECK_FALSE(maroni_bounds(P).find("j0")->applicable);
    P.c = 4;
    P.g_C = 4;
    CHECK_FALSE(maroni_bounds(P).find("isotrivial_total")->applicable);
}

TEST_CASE("Maroni exponent is consistent with the h0 estimates") {
    for (int g = 5; g <= 14; ++g)
        for (int m = (g - 4 + 2) / 3; 2 * m <= g - 2; ++m)
            for (int c = 2; 3 * c < 2 * g; c += 2) {
                const Rational mu = maroni_mu(c, g, m);
                const Rational D(3 * c, 2);
                const Rational cor = h0_maroni_bound(g, m, D);
                CHECK(mu <= std::max(cor, h0_trigonal_bound(g, D)));
            }
}

TEST_CASE("torsion ingredients") {
    CHECK(factor_count_bound(5, 25) == doctest::Approx(250.0));
    CHECK(brumer_rank_bound(12, 5, 1.0) == doctest::Approx(7.6245).epsilon(1e-4));
    BoundParams P;
    P.q = 5;
    P.p = 5;
    P.curve_genus = 2;
    CHECK_THROWS_WITH_AS(torsion_bounds(P), doctest::Contains("lambda"), domain_error);
    P.lambda = 1.0;
    const BoundReport R = torsion_bounds(P);
    CHECK(exponent_of(R, "trivial_2") == Rational(4));
    const BoundValue* w = R.find("weil");
    REQUIRE(w);
    CHECK(w->log2 == doctest::Approx(4 * std::log2(std::sqrt(5.0) + 1)));
}

TEST_CASE("observed counts against bounds") {
    BoundParams P;
    P.q = 5;
    P.p = 5;
    P.curve_genus = 2;
    P.lambda = 1.0;
    BoundReport R = torsion_bounds(P);
    CHECK(R.observe("trivial_2", 16));
    CHECK(R.all_satisfied());
    CHECK_FALSE(R.observe("trivial_2", 17));
    CHECK_FALSE(R.all_satisfied());
}

TEST_CASE("Weil interval in exact arithmetic") {
    // (sqrt 5 - 1)^4 = 56 - 24 sqrt 5 ~ 2.33, (sqrt 5 + 1)^4 = 56 + 24 sqrt 5 ~ 109.67
    CHECK_FALSE(weil_interval_contains(5, 2, 2));
    CHECK(weil_interval_contains(5, 2, 3));
    CHECK(weil_interval_contains(5, 2, 109));
    CHECK_FALSE(weil_interval_contains(5, 2, 110));
    CHECK(weil_interval_contains(7, 1, 8));
    CHECK_FALSE(weil_interval_contains(7, 1, 14));
    CHECK(weil_interval_contains(9, 1, 16));
    CHECK_FALSE(weil_interval_contains(9, 1, 17));
}

TEST_CASE("mantissa and exponent representation") {
    BoundValue b;
    b.exponent = Rational(600);
    b.log2 = 600;
    const auto [m, e] = b.mantissa_exponent();
    CHECK(m == doctest::Approx(1.0));
    CHECK(e == 600);
    CHECK(b.value().has_value());
    b.exponent.reset();
    b.log2 = 1500.5;
    CHECK_FALSE(b.value().has_value());
    CHECK(b.mantissa_exponent().second == 1500);
}
