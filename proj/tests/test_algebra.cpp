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

#include "ffdescent/bipoly.hpp"
#include "ffdescent/factor.hpp"
#include "ffdescent/field.hpp"
#include "ffdescent/poly.hpp"
#include "helpers.hpp"

using namespace ffd;
using ffd::test::P;

TEST_CASE("field axioms and Frobenius on F_25 and F_49") {
    std::mt19937_64 rng(11);
    for (const auto [p, n] : {std::pair{5, 2}, std::pair{7, 2}, std::pair{5, 3}}) {
        const GF& K = GF::get(p, n);
        std::uniform_int_distribution<Elt> u(0, K.q() - 1);
        for (int i = 0; i < 300; ++i) {
            const Elt a = u(rng), b = u(rng), c = u(rng);
            CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
            CHECK(K.add(K.add(a, b), c) == K.add(a, K.add(b, c)));
            CHECK(K.pow(K.add(a, b), p) == K.add(K.pow(a, p), K.pow(b, p)));
            CHECK(K.frob_inv(K.frob(a)) == a);
            if (a) CHECK(K.mul(a, K.inv(a)) == 1);
        }
    }
}

TEST_CASE("square roots in F_q and extensions") {
    const GF& F5 = GF::get(5);
    const auto r = F5.sqrt(4);
    REQUIRE(r);
    CHECK((*r == 2 || *r == 3));
    CHECK_FALSE(F5.sqrt(2));
    CHECK_FALSE(F5.is_square(2));

    const ExtSqrt e = sqrt_in_extension(F5, 2, 2);
    REQUIRE(e.root);
    CHECK(e.field->q() == 25);
    CHECK(e.field->mul(*e.root, *e.root) == Embedding::get(F5, *e.field)(2));
    // Exhaustive oracle over F_25.
    const GF& F25 = GF::get(5, 2);
    const Elt two = Embedding::get(F5, F25)(2);
    int hits = 0;
    for (Elt w = 0; w < 25; ++w) hits += F25.mul(w, w) == two;
    CHECK(hits == 2);
}

TEST_CASE("factor small examples") {
    const GF& K = GF::get(5);
    const Factorization a = factor(P(K, {-1, 0, 1}));
    REQUIRE(a.count() == 2);
    CHECK(a.factors[0].first.deg() == 1);
    CHECK(a.expand(K) == P(K, {-1, 0, 1}));
    const Factorization b = factor(P(K, {1, 0, 1}));
    REQUIRE(b.count() == 2);
    std::vector<Poly> got{b.factors[0].first, b.factors[1].first};
    std::sort(got.begin(), got.end());
    std::vector<Poly> want{P(K, {-2, 1}), P(K, {2, 1})};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("factor multiplies back into random input") {
    const GF& K = GF::get(7);
    std::mt19937_64 rng(2026);
    for (int i = 0; i < 40; ++i) {
        const Poly f = random_poly(K, 6, rng, true);
        const Factorization fa = factor(f);
        CHECK(fa.expand(K) == f);
        for (const auto& [g, e] : fa.factors) {
            CHECK(g.is_monic());
            CHECK(is_irreducible(g));
            CHECK(e >= 1);
        }
    }
}

TEST_CASE("factor over F_25 multiplies back") {
    const GF& K = GF::get(5, 2);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        const Poly f = random_poly(K, 5, rng, true);
        CHECK(factor(f).expand(K) == f);
    }
}

TEST_CASE("discriminant in X") {
    const GF& K = GF::get(7);
    const Poly t = Poly::x(K);
    const Poly B = P(K, {3, 1, 2});
    const BiPoly f(K, {B, Poly(K), Poly(K), P(K, {1})});
    CHECK(discriminant_in_X(f) == P(K, {-27}) * B * B);
    const BiPoly g(K, {P(K, {1}), t, Poly(K), P(K, {1})});
    CHECK(discriminant_in_X(g) == P(K, {-27, 0, 0, -4}));
    const BiPoly h(K, {Poly(K), Poly(K), -t, P(K, {1})});
    CHECK(discriminant_in_X(h).is_zero());
}

TEST_CASE("discriminant vanishes iff f and f_X share a factor") {
    const GF& K = GF::get(5);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        std::vector<Poly> c;
        for (int k = 0; k < 3; ++k) c.push_back(random_poly(K, 2, rng));
        c.push_back(P(K, {1}));
        BiPoly f(K, c);
        if (i % 3 == 0) f = f * BiPoly(K, {random_poly(K, 1, rng), P(K, {1})});  // not yet squared
        if (i % 3 == 1) {
            const BiPoly l(K, {random_poly(K, 1, rng), P(K, {1})});
            f = BiPoly(K, {random_poly(K, 1, rng), P(K, {1})}) * l * l;
        }
        const bool zero = discriminant_in_X(f).is_zero();
        const bool shared = resultant_in_X(f, f.derivativeX()).is_zero();
        CHECK(zero == shared);
    }
}

TEST_CASE("cube adapted decomposition") {
    const GF& K = GF::get(5);
    const Poly t = Poly::x(K), t1 = P(K, {1, 1});
    auto d = cube_adapted_decompose(t * t * t1 * t1 * t1);
    CHECK(d.b1 == P(K, {1}));
    CHECK(d.b2 == t);
    CHECK(d.b3 == t1);
    d = cube_adapted_decompose(pow(t, 4u));
    CHECK(d.b1 == t);
    CHECK(d.b2 == P(K, {1}));
    CHECK(d.b3 == t);
    const Poly B = P(K, {1, 2, 0, 1});
    REQUIRE(is_squarefree(B));
    d = cube_adapted_decompose(B);
    CHECK(d.b1 == B);
    CHECK(d.b2 == P(K, {1}));
}

TEST_CASE("cube decomposition reconstructs random input") {
    const GF& K = GF::get(7);
    std::mt19937_64 rng(19);
    for (int i = 0; i < 40; ++i) {
        Poly B = random_poly(K, 2, rng, true) * pow(random_poly(K, 1, rng, true), 2u) *
                 pow(random_poly(K, 1, rng, true), static_cast<unsigned>(3 + i % 3));
        const auto d = cube_adapted_decompose(B);
        CHECK(Poly::constant(K, d.unit) * d.b1 * d.b2 * d.b2 * pow(d.b3, 3u) == B);
        CHECK(is_squarefree(d.b1));
        CHECK(is_squarefree(d.b2));
        CHECK(gcd(d.b1, d.b2).deg() == 0);
    }
}

TEST_CASE("resultants") {
    const GF& K = GF::get(5);
    CHECK(resultant(P(K, {-1, 1}), P(K, {-2, 1})) == K.from_int(-1));
    const Poly f = P(K, {1, 3, 0, 1});
    CHECK(resultant(f, f) == 0);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const Poly a = random_poly(K, 3, rng, true), b = random_poly(K, 2, rng, true);
        CHECK((resultant(a, b) == 0) == (gcd(a, b).deg() > 0));
    }
}

TEST_CASE("polynomial division identity") {
    const GF& K = GF::get(7, 2);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const Poly a = random_poly(K, 7, rng), b = random_poly(K, 3, rng, true);
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
        const XGcd x = xgcd(a, b);
        CHECK(x.s * a + x.t * b == x.g);
    }
}
