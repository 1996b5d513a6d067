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

#ifndef FFDESCENT_TORSION_MAPS_HPP
#define FFDESCENT_TORSION_MAPS_HPP

#include <string>
#include <vector>

#include "ffdescent/curvemodel.hpp"
#include "ffdescent/rrspace.hpp"

namespace ffd {

enum class WitnessKind { hyperelliptic3, trigonal2 };
enum class LiftRoute { hensel, riemann_roch };

/// Image of a torsion class on an auxiliary elliptic curve.
///
/// Hyperelliptic (n = 3): phi = a y + b with b^2 - a^2 F = c u^3; the point
/// (x0, y0) = (c u, c b) lies on y^2 = x^3 + (c a)^2 F.
/// Trigonal (n = 2): phi = x0 - psi after rescaling; (x0, y0) lies on
/// y^2 = F_psi(x).
struct TorsionWitness {
    WitnessKind kind = WitnessKind::hyperelliptic3;
    int genus = 0;
    EffectiveDivisor D;  // affine part of the class representative
    int class_degree = 0;  // deg D; the class is [D - deg(D) P_inf]
    MumfordDivisor mumford;  // hyperelliptic only
    Poly a, b;  // hyperelliptic phi = a y + b (normalized by c)
    RRFunction psi;  // trigonal, monomials t^i z^j with j >= 1
    BiPoly F_psi;  // trigonal
    Poly target_a;  // hyperelliptic c a
    Poly x0, y0;
    Elt c = 1;
    LiftRoute route = LiftRoute::hensel;

    /// phi as a function on the one-point curve.
    RRFunction phi() const;
    std::string str() const;
};

/// Degree caps of the correspondence; true when all hold.
bool witness_degree_caps(const TorsionWitness& w);

/// 3-torsion class P != 0 of y^2 = F (deg F odd, p >= 5) to a point on
/// y^2 = x^3 + a^2 F.
TorsionWitness three_torsion_to_point(const Poly& F, const MumfordDivisor& P);

/// Witnesses for a batch of classes, one OpenMP task each; results keep the
/// input order and the first error is rethrown.
std::vector<TorsionWitness> three_torsion_witnesses(const Poly& F, const std::vector<MumfordDivisor>& classes,
                                                    bool parallel = true);

/// Nonzero 2-torsion class [D - deg(D) P_inf] of a one-point trigonal curve to
/// a point on y^2 = F_psi(x).
TorsionWitness two_torsion_trigonal_to_point(const OnePointCurve& C, const EffectiveDivisor& D);

/// Recover the affine divisor D = div_0(phi) / n; throws when inconsistent.
EffectiveDivisor recover_divisor(const OnePointCurve& C, const TorsionWitness& w);

/// Recover the Mumford class from a hyperelliptic witness.
MumfordDivisor recover_class(const Poly& F, const TorsionWitness& w);

/// y^2 = x^3 + a^2 F.
HyperellipticModel build_Ea(const Poly& F, const Poly& a);
/// y^2 = F_psi(x).
HyperellipticModel build_Epsi(const BiPoly& F_psi);

/// Norm polynomial of psi in K(t)[z]/(G), monic cubic in Y.
BiPoly minimal_polynomial(const OnePointCurve& C, const RRFunction& psi);

/// Monomials t^i z^j (j = 1, 2) with pole order <= 2g.
std::vector<std::pair<int, int>> psi_basis(const OnePointCurve& C);

/// All psi in V \ {0} with F_psi, in coefficient order.
struct PsiModel {
    RRFunction psi;
    BiPoly F_psi;
};
std::vector<PsiModel> trigonal_family(const OnePointCurve& C);

/// Reduced affine representatives D (h0(D - P_inf) = 0) of all classes, by
/// degree; each divisor class of degree 0 appears once.
std::vector<EffectiveDivisor> reduced_representatives(const OnePointCurve& C);

/// True when 2 (resp. n) [D - deg(D) P_inf] = 0.
bool is_torsion_class(const OnePointCurve& C, const EffectiveDivisor& D, int n);

}  // namespace ffd

#endif
