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

#include "ffdescent/funcfield.hpp"
#include "helpers.hpp"

using namespace ffd;
using ffd::test::P;

TEST_CASE("degree of rational functions") {
    const GF& K = GF::get(5);
    CHECK(degree(RatFunc(P(K, {1, 0, 1}), Poly::x(K))) == 2);
    CHECK(degree(RatFunc(P(K, {3}))) == 0);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 40; ++i) {
        const Poly d = random_poly(K, 3, rng, true);
        const RatFunc z(random_poly(K, 4, rng), d);
        if (z.is_zero()) continue;
        CHECK(degree(z * z) == 2 * degree(z));
    }
}

TEST_CASE("polynomial height") {
    const GF& K = GF::get(5);
    const RatFunc one(P(K, {1})), zero{Poly(K)};
    CHECK(poly_height(std::vector<RatFunc>{RatFunc(P(K, {0, 0, 1})), RatFunc(Poly::x(K)), zero, one}) == 2);
    CHECK(poly_height(std::vector<RatFunc>{RatFunc(P(K, {1, 0, 1}), Poly::x(K)), one}) == 2);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        // (x + a)(x + b) with rational a, b.
        const RatFunc a(random_poly(K, 2, rng), random_poly(K, 1, rng, true));
        const RatFunc b(random_poly(K, 1, rng), random_poly(K, 2, rng, true));
        CHECK(poly_height(std::vector<RatFunc>{a * b, a + b, one}) == poly_height(std::vector<RatFunc>{a, one}) + poly_height(std::vector<RatFunc>{b, one}));
    }
}

TEST_CASE("inseparable degree") {
    const GF& K = GF::get(5);
    const Poly t = Poly::x(K);
    CHECK(insep_degree(RatFunc(pow(t, 5u))) == 5);
    CHECK(insep_degree(RatFunc(pow(t, 5u) + t)) == 1);
    CHECK(insep_degree(RatFunc(pow(t, 25u) + pow(t, 5u))) == 5);
    CHECK(insep_degree(RatFunc(pow(t, 25u), pow(t, 5u) + P(K, {1}))) == 5);
}

TEST_CASE("valuations and the product formula") {
    const GF& K = GF::get(5);
    const RatFunc z(pow(Poly::x(K), 3u), P(K, {1, 1}));
    CHECK(valuation(z, Place::finite(Poly::x(K))) == 3);
    CHECK(valuation(z, Place::infinity(K)) == -2);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 40; ++i) {
        const RatFunc w(random_poly(K, 5, rng), random_poly(K, 4, rng, true));
        if (w.is_zero()) continue;
        int sum = valuation(w, Place::infinity(K));
        for (const auto& pl : support(w)) sum += pl.degree() * valuation(w, pl);
        CHECK(sum == 0);
    }
}

TEST_CASE("field operations in K(t)") {
    const GF& K = GF::get(7);
    std::mt19937_64 rng(10);
    for (int i = 0; i < 40; ++i) {
        const RatFunc a(random_poly(K, 3, rng), random_poly(K, 2, rng, true));
        const RatFunc b(random_poly(K, 2, rng), random_poly(K, 3, rng, true));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(a.den().is_monic());
    }
}
