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

#ifndef FFDESCENT_TESTS_HELPERS_HPP
#define FFDESCENT_TESTS_HELPERS_HPP

#include <initializer_list>
#include <random>

#include "ffdescent/curvemodel.hpp"
#include "ffdescent/factor.hpp"
#include "ffdescent/funcfield.hpp"
#include "ffdescent/poly.hpp"

namespace ffd::test {

inline Poly P(const GF& K, std::initializer_list<long long> c) { return Poly::from_ints(K, c); }
inline RatFunc R(const GF& K, std::initializer_list<long long> c) { return RatFunc(P(K, c)); }

/// y^2 = x^3 + A x + B with polynomial A, B.
inline HyperellipticModel short_model(const Poly& A, const Poly& B) {
    const GF& K = A.field();
    return validate_model(K, {RatFunc(B), RatFunc(A), RatFunc(Poly(K)), RatFunc(Poly::constant(K, 1))});
}

inline Poly random_squarefree(const GF& K, int deg, std::mt19937_64& rng) {
    for (;;) {
        Poly F = random_poly(K, deg, rng, true);
        if (is_squarefree(F)) return F;
    }
}

}  // namespace ffd::test

#endif
