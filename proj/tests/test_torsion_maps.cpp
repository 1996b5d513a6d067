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

#include <map>
#include <random>
#include <set>

#include "ffdescent/curvemodel.hpp"
#include "ffdescent/jacobian.hpp"
#include "ffdescent/torsion_maps.hpp"
#include "helpers.hpp"

using namespace ffd;
using ffd::test::P;
using ffd::test::random_squarefree;

namespace {

std::vector<MumfordDivisor> three_torsion(const HyperellipticJacobian& J) {
    std::vector<MumfordDivisor> out;
    for (const auto& a : J.enumerate_group())
        if (!a.is_zero() && J.mul(3, a).is_zero()) out.push_back(a);
    return out;
}

BiPoly trigonal(const GF& K, int w, std::mt19937_64& rng) {
    for (;;) {
        Poly a0 = random_poly(K, w, rng);
        if (a0.deg() < w) a0.set(w, 1);
        BiPoly G(K, {a0, random_poly(K, (2 * w - 1) / 3, rng), random_poly(K, (w - 1) / 3, rng), P(K, {1})});
        try {
            OnePointCurve::trigonal(G);
            if (affine_smooth(G)) return G;
        } catch (const domain_error&) {
        }
    }
}

}  // namespace

TEST_CASE("3-torsion witnesses round trip on random quintics") {
    std::mt19937_64 rng(5);
    const GF& K = GF::get(7);
    int seen = 0;
    for (int i = 0; i < 12; ++i) {
        const Poly F = random_squarefree(K, 5, rng);
        const HyperellipticJacobian J(F);
        const auto T = three_torsion(J);
        const auto W = three_torsion_witnesses(F, T, false);
        REQUIRE(W.size() == T.size());
        std::set<std::string> img;
        for (std::size_t k = 0; k < W.size(); ++k) {
            const TorsionWitness& w = W[k];
            CHECK(witness_degree_caps(w));
            CHECK(w.x0.deg() <= 2);
            CHECK(recover_class(F, w) == T[k]);
            const HyperellipticModel E = build_Ea(F, w.target_a);
            CHECK(E.eval(RatFunc(w.x0)) == RatFunc(w.y0 * w.y0));
            img.insert(w.target_a.str() + "|" + w.x0.str() + "|" + w.y0.str());
        }
        CHECK(img.size() == W.size());
        seen += static_cast<int>(T.size());
    }
    CHECK(seen > 0);
}

TEST_CASE("parallel and serial witness batches agree") {
    std::mt19937_64 rng(8);
    const GF& K = GF::get(5);
    const Poly F = random_squarefree(K, 5, rng);
    const auto T = three_torsion(HyperellipticJacobian(F));
    const auto a = three_torsion_witnesses(F, T, false);
    const auto b = three_torsion_witnesses(F, T, true);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].str() == b[i].str());
}

TEST_CASE("classes with a repeated root of u use the Riemann-Roch route") {
    const GF& K = GF::get(5);
    const Poly F = P(K, {1, 3, 4, 2, 1, 0, 3, 1});
    const HyperellipticJacobian J(F);
    const auto T = three_torsion(J);
    int ramified = 0;
    for (const auto& a : T) {
        const TorsionWitness w = three_torsion_to_point(F, a);
        CHECK(recover_class(F, w) == a);
        CHECK(witness_degree_caps(w));
        if (a.u == P(K, {0, 0, 3, 1})) {
            CHECK(w.route == LiftRoute::riemann_roch);
            ++ramified;
        }
    }
    CHECK(ramified == 2);
}

TEST_CASE("3-torsion input validation") {
    const GF& K = GF::get(7);
    const Poly F = P(K, {1, 0, 0, 0, 0, 1});
    const HyperellipticJacobian J(F);
    CHECK_THROWS_WITH_AS(three_torsion_to_point(F, J.zero()), doctest::Contains("identity"), domain_error);
    for (const auto& a : J.enumerate_group()) {
        if (!J.mul(3, a).is_zero()) {
            CHECK_THROWS_WITH_AS(three_torsion_to_point(F, a), doctest::Contains("not 3-torsion"), domain_error);
            break;
        }
    }
    CHECK_THROWS_AS(three_torsion_to_point(P(GF::get(3), {1, 0, 0, 0, 0, 1}), MumfordDivisor{}), domain_error);
}

TEST_CASE("corrupted witnesses are rejected") {
    std::mt19937_64 rng(21);
    const GF& K = GF::get(7);
    for (int i = 0; i < 20; ++i) {
        const Poly F = random_squarefree(K, 5, rng);
        const auto T = three_torsion(HyperellipticJacobian(F));
        if (T.empty()) continue;
        TorsionWitness w = three_torsion_to_point(F, T.front());
        w.y0 = w.y0 + P(K, {1});
        CHECK_THROWS_AS(recover_class(F, w), domain_error);
        return;
    }
    FAIL("no curve with 3-torsion found");
}

TEST_CASE("auxiliary elliptic models") {
    const GF& K = GF::get(7);
    const Poly F = P(K, {1, 0, 0, 0, 0, 1});
    const HyperellipticModel E = build_Ea(F, P(K, {1}));
    CHECK(E.d == 3);
    CHECK(E.f[0] == RatFunc(F));
    CHECK_THROWS_AS(build_Ea(F, Poly(K)), domain_error);
    CHECK_THROWS_AS(build_Ea(Poly(K), P(K, {1})), domain_error);
    CHECK_THROWS_AS(build_Epsi(BiPoly(K, {P(K, {1}), P(K, {1}), P(K, {2})})), domain_error);
}

TEST_CASE("norm polynomial of psi") {
    const GF& K = GF::get(5);
    const Poly a0 = P(K, {1, 2, 0, 1, 1}), a1 = P(K, {3, 1}), a2 = P(K, {4});
    const BiPoly G(K, {a0, a1, a2, P(K, {1})});
    const OnePointCurve C = OnePointCurve::trigonal(G);
    CHECK(minimal_polynomial(C, RRFunction{{{0, 1}}, {1}}) == G);
    const Poly t = Poly::x(K);
    const BiPoly expect(K, {a0 * t * t * t, a1 * t * t, a2 * t, P(K, {1})});
    CHECK(minimal_polynomial(C, RRFunction{{{1, 1}}, {1}}) == expect);
}

TEST_CASE("trigonal family size and 2-torsion correspondence") {
    std::mt19937_64 rng(33);
    const GF& K = GF::get(5);
    int seen = 0;
    for (int i = 0; i < 4; ++i) {
        const BiPoly G = trigonal(K, 4, rng);
        const OnePointCurve C = OnePointCurve::trigonal(G);
        const int g = C.genus();
        REQUIRE(g == 3);
        std::uint64_t expect = 1;
        for (int k = 0; k < (g + 2) / 3; ++k) expect *= K.q();
        CHECK(trigonal_family(C).size() == expect - 1);
        for (const auto& [i0, j0] : psi_basis(C)) CHECK(C.pole_order(i0, j0) <= 2 * g);

        std::map<std::string, int> fibre;
        for (const auto& D : reduced_representatives(C)) {
            if (D.empty() || !is_torsion_class(C, D, 2)) continue;
            const TorsionWitness w = two_torsion_trigonal_to_point(C, D);
            CHECK(witness_degree_caps(w));
            CHECK(same_divisor(C, recover_divisor(C, w), D));
            const HyperellipticModel E = build_Epsi(w.F_psi);
            CHECK(E.eval(RatFunc(w.x0)) == RatFunc(w.y0 * w.y0));
            ++fibre[w.F_psi.str() + "|" + w.x0.str() + "|" + w.y0.str()];
            ++seen;
        }
        for (const auto& [k, n] : fibre) CHECK(n <= 3);
    }
    CHECK(seen > 0);
}

TEST_CASE("trigonal identity class is rejected") {
    std::mt19937_64 rng(2);
    const GF& K = GF::get(7);
    const OnePointCurve C = OnePointCurve::trigonal(trigonal(K, 4, rng));
    CHECK_THROWS_WITH_AS(two_torsion_trigonal_to_point(C, EffectiveDivisor{}), doctest::Contains("identity"), domain_error);
}
