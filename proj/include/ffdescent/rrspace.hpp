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

#ifndef FFDESCENT_RRSPACE_HPP
#define FFDESCENT_RRSPACE_HPP

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "ffdescent/bipoly.hpp"
#include "ffdescent/jacobian.hpp"

namespace ffd {

struct AffPoint {
    Elt t = 0, z = 0;
    auto operator<=>(const AffPoint&) const = default;
};

/// Galois orbit of an affine point, coordinates in GF(p, n * degree).
struct ClosedPoint {
    int degree = 1;
    std::vector<AffPoint> orbit;  // orbit[0] is the smallest
};

/// Effective divisor supported on affine points, all coordinates in
/// GF(p, n * level); conjugates carry equal multiplicities.
struct EffectiveDivisor {
    int level = 1;
    std::vector<std::pair<AffPoint, int>> pts;  // sorted by point

    int degree() const;
    bool empty() const noexcept { return pts.empty(); }
};

/// A function sum c_{ij} t^i z^j with coefficients in K.
struct RRFunction {
    std::vector<std::pair<int, int>> monomials;
    std::vector<Elt> coef;
};

/// Plane model G(t, z) = z^n + sum_{i<n} a_i(t) z^i with one place at
/// infinity: n = 2 (y^2 = F, deg F odd) or n = 3 (totally ramified cubic).
class OnePointCurve {
   public:
    static OnePointCurve hyperelliptic(const Poly& F);
    static OnePointCurve trigonal(const BiPoly& F);

    const GF& field() const { return G_.field(); }
    const BiPoly& G() const noexcept { return G_; }
    int n() const noexcept { return n_; }
    int w() const noexcept { return w_; }
    int genus() const noexcept { return (n_ - 1) * (w_ - 1) / 2; }
    int pole_order(int i, int j) const noexcept { return n_ * i + w_ * j; }

    /// Monomials t^i z^j with pole order <= m, sorted by pole order.
    std::vector<std::pair<int, int>> basis(int m) const;
    /// Closed points of exactly the given degree.
    std::vector<ClosedPoint> closed_points(int degree) const;
    const GF& level_field(int level) const;

    /// Evaluate f at a point with coordinates in level_field(level).
    Elt eval(const RRFunction& f, const AffPoint& P, int level) const;

   private:
    OnePointCurve(BiPoly G, int n, int w) : G_(std::move(G)), n_(n), w_(w) {}
    BiPoly G_;
    int n_, w_;
};

/// Re-embed into a larger level (old level must divide the new one).
EffectiveDivisor lift(const OnePointCurve& C, const EffectiveDivisor& D, int level);
EffectiveDivisor divisor_sum(const OnePointCurve& C, const EffectiveDivisor& a, const EffectiveDivisor& b);
EffectiveDivisor divisor_scale(const EffectiveDivisor& a, int k);
EffectiveDivisor divisor_from_points(const OnePointCurve& C, const std::vector<std::pair<ClosedPoint, int>>& pts);
bool same_divisor(const OnePointCurve& C, const EffectiveDivisor& a, const EffectiveDivisor& b);

/// Divisor of zeros of u on a hyperelliptic one-point curve for (u, v).
EffectiveDivisor divisor_from_mumford(const OnePointCurve& C, const MumfordDivisor& D);

/// Basis (over K) of {phi in L(m P_inf) : div(phi) >= D}.
std::vector<RRFunction> vanishing_solve(const OnePointCurve& C, int m, const EffectiveDivisor& D);
std::vector<RRFunction> rr_basis(const OnePointCurve& C, int m);

/// h0(D + k P_inf) by Riemann-Roch with K ~ (2g - 2) P_inf.
int h0(const OnePointCurve& C, const EffectiveDivisor& D, int k_inf = 0);

/// Zero divisor of a nonzero f (all affine zeros).
EffectiveDivisor zero_divisor(const OnePointCurve& C, const RRFunction& f);

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<RRFunction> rho;  // witness rho / sigma(t)
    Poly sigma;
};

/// D ~ E for effective divisors of equal degree.
EquivalenceResult divisor_equivalent(const OnePointCurve& C, const EffectiveDivisor& D, const EffectiveDivisor& E);

/// All effective divisors of degree k supported on affine points.
std::vector<EffectiveDivisor> effective_divisors(const OnePointCurve& C, int k);

}  // namespace ffd

#endif
