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

#include <complex>
#include <random>
#include <set>

#include "ffdescent/jacobian.hpp"
#include "helpers.hpp"

using namespace ffd;
using ffd::test::P;

namespace {

/// Roots of a real polynomial by Durand-Kerner.
std::vector<std::complex<double>> numeric_roots(const std::vector<long long>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; ++i) z[i] = std::pow(std::complex<double>(0.4, 0.9), i);
    const double lead = static_cast<double>(c.back());
    for (int it = 0; it < 500; ++it) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> v = 0;
            for (int k = n; k >= 0; --k) v = v * z[i] + static_cast<double>(c[k]);
            std::complex<double> d = lead;
            for (int k = 0; k < n; ++k)
                if (k != i) d *= z[i] - z[k];
            z[i] -= v / d;
        }
    }
    return z;
}

}  // namespace

TEST_CASE("Cantor identity, inverse and associativity on y^2 = x^5 + 1 over F_7") {
    const GF& K = GF::get(7);
    const HyperellipticJacobian J(P(K, {1, 0, 0, 0, 0, 1}));
    const auto G = J.enumerate_group();
    for (const auto& a : G) {
        CHECK(J.is_valid(a));
        CHECK(J.add(a, J.zero()) == a);
        CHECK(J.add(a, MumfordDivisor{a.u, -a.v}).is_zero());
    }
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
    const std::set<MumfordDivisor> all(G.begin(), G.end());
    for (int i = 0; i < 1000; ++i) {
        const auto &a = G[pick(rng)], &b = G[pick(rng)], &c = G[pick(rng)];
        CHECK(J.add(J.add(a, b), c) == J.add(a, J.add(b, c)));
        CHECK(all.count(J.add(a, b)) == 1);  // closure
    }
    CHECK(all.count(J.zero()) == 1);
}

TEST_CASE("genus 1: group order equals the direct point count") {
    const GF& K = GF::get(7);
    const Poly F = P(K, {1, 0, 0, 1});
    const HyperellipticJacobian J(F);
    std::uint64_t n = 1;
    for (Elt x = 0; x < 7; ++x) {
        const Elt v = F.eval(x);
        n += v == 0 ? 1 : (K.is_square(v) ? 2 : 0);
    }
    CHECK(J.enumerate_group().size() == n);
    const auto L = l_polynomial(J);
    CHECK(L[0] + L[1] + L[2] == static_cast<long long>(n));
}

TEST_CASE("torsion counts") {
    const GF& K = GF::get(11);
    const HyperellipticJacobian J(P(K, {1, 0, 0, 0, 0, 1}));
    const auto G = J.enumerate_group(GroupLimits{2, 11});
    CHECK(torsion_count(J, G, 1) == 1);
    // x^5 + 1 splits into 5 linear factors over F_11: J[2] has order 2^4.
    CHECK(factor(J.F()).count() == 5);
    CHECK(torsion_count(J, G, 2) == 16);
    CHECK(torsion_count(J, G, 3) <= 81);
}

TEST_CASE("|J[2]| = 2^(number of factors - 1) for odd degree F") {
    std::mt19937_64 rng(44);
    for (const int p : {5, 7}) {
        const GF& K = GF::get(p);
        for (int i = 0; i < 12; ++i) {
            const Poly F = ffd::test::random_squarefree(K, i % 2 ? 5 : 3, rng);
            const HyperellipticJacobian J(F);
            const auto G = J.enumerate_group();
            CHECK(torsion_count(J, G, 2) == (1ull << (factor(F).count() - 1)));
        }
    }
}

TEST_CASE("L-polynomial: P(1) = |J| and Riemann hypothesis") {
    std::mt19937_64 rng(45);
    for (const int p : {5, 7}) {
        const GF& K = GF::get(p);
        for (const int deg : {3, 5, 7}) {
            const Poly F = ffd::test::random_squarefree(K, deg, rng);
            const HyperellipticJacobian J(F);
            const auto L = l_polynomial(J);
            long long P1 = 0;
            for (const long long a : L) P1 += a;
            CHECK(P1 == static_cast<long long>(J.enumerate_group().size()));
            // Reciprocal roots have absolute value sqrt(q): roots of P have 1/sqrt(q).
            for (const auto& z : numeric_roots(L)) CHECK(std::abs(z) == doctest::Approx(1 / std::sqrt(p)).epsilon(1e-6));
            CHECK(l_polynomial_from_counts(K.q(), J.genus(), {J.count_points(1), J.count_points(2), J.count_points(3)}) ==
                  L);
        }
    }
}

TEST_CASE("scalar multiplication agrees with repeated addition") {
    const GF& K = GF::get(5);
    const HyperellipticJacobian J(P(K, {1, 2, 0, 3, 0, 1}));
    const auto G = J.enumerate_group();
    for (std::size_t i = 0; i < G.size(); i += 3) {
        MumfordDivisor s = J.zero();
        for (int n = 0; n <= 7; ++n) {
            CHECK(J.mul(n, G[i]) == s);
            s = J.add(s, G[i]);
        }
        CHECK(J.mul(-2, G[i]) == J.neg(J.add(G[i], G[i])));
    }
}
