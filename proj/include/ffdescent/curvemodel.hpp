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

#ifndef FFDESCENT_CURVEMODEL_HPP
#define FFDESCENT_CURVEMODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ffdescent/bipoly.hpp"
#include "ffdescent/funcfield.hpp"
#include "ffdescent/series.hpp"

namespace ffd {

enum class Triviality { constant, isotrivial, nonisotrivial, unknown };
std::string to_string(Triviality t);

/// y^2 = f(x) with f monic separable of odd degree d >= 3 over K(t).
struct HyperellipticModel {
    const GF* F = nullptr;
    std::vector<RatFunc> f;  // a_0..a_d, a_d = 1
    int d = 0;
    int genus = 0;  // (d - 1) / 2
    RatFunc disc;
    int height = 0;
    bool polynomial = false;  // all coefficients in K[t]
    Triviality triviality = Triviality::unknown;
    std::optional<RatFunc> j;  // d = 3, p != 3
    // Short Weierstrass form x^3 + A x + B for d = 3, p != 3.
    std::optional<RatFunc> A, B;

    const GF& field() const { return *F; }
    /// f as a bivariate polynomial; requires polynomial coefficients.
    BiPoly fpoly() const;
    /// f(x0) for x0 in K(t).
    RatFunc eval(const RatFunc& x0) const;
    std::string str() const;
};

HyperellipticModel validate_model(const GF& F, const std::vector<RatFunc>& coeffs);
HyperellipticModel validate_model(const BiPoly& f);

/// Finite places dividing the discriminant (polynomial coefficients required).
std::vector<Place> bad_places(const HyperellipticModel& m);

/// Ramification of one component above one place, read at a single geometric
/// point of that place.
struct PlaceRamification {
    Place place;
    std::vector<int> e;
    std::vector<Branch> branches;
};

struct Component {
    BiPoly f;
    int degX = 0;
    std::vector<PlaceRamification> ramification;  // bad finite places, then infinity
    std::optional<int> genus;
    int x_pole_degree = 0;  // sum of pole orders of x
};

struct PlaneCurveData {
    std::vector<Component> components;
    int omega = 0;
    int two_torsion_dim = 0;  // omega - 1
    std::optional<int> genus;  // when irreducible and computed
};

/// Components over K(t) and, when want_genus, tame ramification and genus.
PlaneCurveData analyze_plane_curve(const BiPoly& f, bool want_genus);
PlaneCurveData plane_curve_analyze(const HyperellipticModel& m, bool want_genus);

struct TrigonalData {
    int w = 0;
    std::vector<int> semigroup_generators;  // {3, w}
    int genus = 0;  // w - 1
    std::optional<int> maroni;  // defined for genus > 4
    std::vector<int> h0;  // h0(3n P_inf), n = 0..genus
};

/// h0(m P_inf) on a one-point trigonal curve with semigroup <3, w>.
int trigonal_h0(int w, int m);

/// Maroni invariant from the semigroup counts.
int maroni_from_semigroup(int w);

/// Accepts x^3 + a2 x^2 + a1 x + a0 with a_i in K[t]; checks irreducibility,
/// total ramification at infinity and affine smoothness.
TrigonalData trigonal_infinity_data(const BiPoly& F);

/// True when F = F_x = F_t = 0 has no solution over the algebraic closure.
bool affine_smooth(const BiPoly& F);

/// Genus of x^3 + B = 0 from the cube decomposition degrees.
int j0_genus_formula(int d1, int d2);

/// max(ceil(deg A / 4), ceil(deg B / 6)).
int comparison_chi(const Poly& A, const Poly& B);

}  // namespace ffd

#endif
