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

#ifndef FFDESCENT_FACTOR_HPP
#define FFDESCENT_FACTOR_HPP

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ffdescent/poly.hpp"

namespace ffd {

struct Factorization {
    Elt unit = 1;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity

    Poly expand(const GF& f) const;
    int count() const noexcept { return static_cast<int>(factors.size()); }
};

/// p-th root of a polynomial in t^p (coefficientwise inverse Frobenius).
Poly pth_root(const Poly& a);

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i, g_i squarefree and pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Distinct-degree split of a monic squarefree polynomial.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f);

/// Equal-degree split (Cantor-Zassenhaus) of a product of degree-d
/// irreducibles.
std::vector<Poly> equal_degree(const Poly& f, int d, std::mt19937_64& rng);

/// Full factorization; output sorted by Poly::operator<, independent of the
/// generator state.
Factorization factor(const Poly& f, std::mt19937_64& rng);
Factorization factor(const Poly& f);

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

/// Distinct roots in the coefficient field, ascending.
std::vector<Elt> roots(const Poly& f);

/// Product of the distinct monic irreducible factors.
Poly radical(const Poly& f);

/// B = unit * B1 * B2^2 * B3^3 by exponent classes mod 3.
struct CubeDecomposition {
    Elt unit = 1;
    Poly b1, b2, b3;
};
CubeDecomposition cube_adapted_decompose(const Poly& b);

/// Square root of a in F_{q^m} (q the order of a's field). The returned
/// element lives in GF::get(p, n*m).
struct ExtSqrt {
    const GF* field = nullptr;
    std::optional<Elt> root;
};
ExtSqrt sqrt_in_extension(const GF& f, Elt a, int m);

/// Square root of a polynomial over its coefficient field, if it is one.
std::optional<Poly> poly_sqrt(const Poly& a);

}  // namespace ffd

#endif
