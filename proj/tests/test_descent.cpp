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

#include "ffdescent/descent.hpp"
#include "ffdescent/points.hpp"
#include "helpers.hpp"

using namespace ffd;
using ffd::test::P;
using ffd::test::R;
using ffd::test::short_model;

namespace {

BiPoly random_element(const GF& K, int deg, std::mt19937_64& rng) {
    return BiPoly(K, {random_poly(K, deg, rng), random_poly(K, deg, rng), random_poly(K, deg, rng)});
}

}  // namespace

TEST_CASE("delta at a 2-torsion point uses the second formula") {
    const GF& K = GF::get(5);
    const Poly t = Poly::x(K);
    const HyperellipticModel m = short_model(-(t * t), Poly(K));
    const DescentClassRep z = delta(m, CurvePoint{R(K, {0}), R(K, {0})});
    CHECK(z.z == BiPoly(K, {-(t * t), P(K, {-1}), P(K, {1})}));
}

TEST_CASE("delta is x0 - x and has norm f(x0)") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K), P(K, {1}));
    for (const auto& Q : enum_integral(m, 4)) {
        const DescentClassRep z = delta(m, Q);
        if (!Q.y.is_zero()) CHECK(z.z == BiPoly(K, {Q.x.num(), P(K, {-1})}));
        CHECK(z.norm() == (Q.y * Q.y).num());
    }
    CHECK_THROWS_AS(delta(m, CurvePoint{R(K, {1}), R(K, {1})}), domain_error);
}

TEST_CASE("geometric squareness test") {
    const GF& K = GF::get(5);
    const HyperellipticModel m = short_model(P(K, {1, 1}), P(K, {2, 0, 1}));
    const BiPoly f = m.fpoly();
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10; ++i) {
        const DescentClassRep w = make_rep(f, random_element(K, 1, rng));
        if (w.norm().is_zero()) continue;
        const DescentClassRep sq = rep_mul(w, w);
        CHECK(is_square_geometric(sq));
        // A non-square constant is a square over F_25.
        CHECK(is_square_geometric(rep_mul(sq, make_rep(f, BiPoly(K, {P(K, {2})})))));
    }
}

TEST_CASE("Monte Carlo agrees with the oracle on random elements") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(P(K, {0, 1}), P(K, {3, 1}));
    const BiPoly f = m.fpoly();
    std::mt19937_64 rng(4);
    int nonsquares = 0;
    for (int i = 0; i < 20; ++i) {
        const DescentClassRep z = make_rep(f, random_element(K, 2, rng));
        if (z.norm().is_zero()) continue;
        const OracleResult o = is_square_oracle(z, 16);
        REQUIRE(o.status != SquareStatus::budget_exceeded);
        CHECK(is_square_geometric(z, {40, 1}) == (o.status == SquareStatus::square));
        nonsquares += o.status == SquareStatus::nonsquare;
    }
    CHECK(nonsquares > 0);
}

TEST_CASE("oracle witnesses and budget") {
    const GF& K = GF::get(5);
    const Poly t = Poly::x(K);
    const HyperellipticModel m = short_model(-(t * t), Poly(K));
    const BiPoly f = m.fpoly();
    const DescentClassRep w = make_rep(f, BiPoly(K, {t + P(K, {1}), P(K, {1})}));
    const OracleResult o = is_square_oracle(rep_mul(w, w), 16);
    CHECK(o.status == SquareStatus::square);
    REQUIRE(o.witness);
    CHECK(o.witness->degX() == f.degX());
    CHECK(o.charpoly.degX() == f.degX());
    CHECK(is_square_oracle(rep_mul(w, w), 0).status == SquareStatus::budget_exceeded);
    // X + 1 has norm 1 - t^2, not a square.
    const OracleResult x = is_square_oracle(make_rep(f, BiPoly(K, {P(K, {1}), P(K, {1})})), 16);
    CHECK(x.status == SquareStatus::nonsquare);
}

TEST_CASE("same_class absorbs squares and constants") {
    const GF& K = GF::get(5);
    const HyperellipticModel m = short_model(P(K, {1, 1}), P(K, {2, 0, 1}));
    const BiPoly f = m.fpoly();
    std::mt19937_64 rng(6);
    for (int i = 0; i < 6; ++i) {
        const DescentClassRep z = make_rep(f, random_element(K, 1, rng));
        if (z.norm().is_zero()) continue;
        const Poly u = random_poly(K, 2, rng, true);
        const DescentClassRep zu = rep_mul(z, make_rep(f, BiPoly(K, {u * u})));
        CHECK(same_class(z, z));
        CHECK(same_class(z, zu));
        CHECK(same_class(z, rep_mul(z, make_rep(f, BiPoly(K, {P(K, {2})})))));
    }
}

TEST_CASE("fiber partition") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K), P(K, {1}));
    CHECK(group_fibers(m, {}).fibers.empty());
    const auto pts = enum_integral(m, 4);
    REQUIRE(pts.size() >= 2);
    const FiberPartition fp = group_fibers(m, pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (pts[i].x == pts[j].x) {
                bool together = false;
                for (const auto& fb : fp.fibers)
                    together = together || (std::count(fb.begin(), fb.end(), static_cast<int>(i)) &&
                                            std::count(fb.begin(), fb.end(), static_cast<int>(j)));
                CHECK(together);
            }
    std::size_t total = 0;
    for (const auto& fb : fp.fibers) total += fb.size();
    CHECK(total == pts.size());
}

TEST_CASE("fibers follow the group law: P and P + 2Q share a class") {
    const GF& K = GF::get(7);
    const HyperellipticModel m = short_model(Poly::x(K), P(K, {1}));
    const EllipticGroup G(m);
    const EllPoint p0 = EllPoint::affine(R(K, {0}), R(K, {1}));
    const EllPoint p2 = G.mul(2, p0), p3 = G.mul(3, p0);
    const DescentClassRep a = delta(m, {p0.x, p0.y}), b = delta(m, {p3.x, p3.y});
    CHECK(same_class(a, b));
    if (p2.x.is_polynomial()) CHECK(is_square_geometric(delta(m, {p2.x, p2.y})));
    CHECK_FALSE(is_square_geometric(a));
}

TEST_CASE("torsion on y^2 = x^3 + t^2: the 3-torsion point maps to a square") {
    const GF& K = GF::get(5);
    const HyperellipticModel m = short_model(Poly(K), P(K, {0, 0, 1}));
    const auto pts = enum_integral(m, 0);
    REQUIRE(pts.size() == 2);
    const FiberPartition fp = group_fibers(m, pts);
    CHECK(fp.fibers.size() == 1);  // (0, t) = 2 (0, -t) is twice a point
    CHECK(is_square_geometric(delta(m, pts[0])));
}

TEST_CASE("h1 dimension") {
    CHECK(h1_dim(0, 2) == 1);
    CHECK(h1_dim(1, 0) == 2);
    CHECK(h1_dim(7, 3) == 16);
}
