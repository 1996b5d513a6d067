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

#ifndef FFDESCENT_ELLIPTIC_HPP
#define FFDESCENT_ELLIPTIC_HPP

#include <string>
#include <vector>

#include "ffdescent/curvemodel.hpp"

namespace ffd {

/// Point on y^2 = x^3 + a2 x^2 + a1 x + a0 over K(t).
struct EllPoint {
    bool inf = true;
    RatFunc x, y;

    static EllPoint zero() { return EllPoint{}; }
    static EllPoint affine(const RatFunc& x, const RatFunc& y) { return EllPoint{false, x, y}; }
    bool operator==(const EllPoint& o) const {
        return inf == o.inf && (inf || (x == o.x && y == o.y));
    }
};

/// Group law on a cubic model (d = 3), chord and tangent.
class EllipticGroup {
   public:
    explicit EllipticGroup(const HyperellipticModel& m);

    const HyperellipticModel& model() const noexcept { return *m_; }
    bool on_curve(const EllPoint& P) const;
    EllPoint neg(const EllPoint& P) const;
    EllPoint add(const EllPoint& P, const EllPoint& Q) const;
    EllPoint dbl(const EllPoint& P) const { return add(P, P); }
    EllPoint mul(long long n, const EllPoint& P) const;

   private:
    const HyperellipticModel* m_;
    RatFunc a2_, a1_, a0_;
};

struct LocalReduction {
    Place place;
    int v_c4 = 0, v_c6 = 0, v_disc = 0;  // minimal model; large value for c = 0
    std::string kodaira;
    int component_group = 1;  // geometric
    int conductor_exponent = 0;
};

struct EllipticLocalData {
    std::vector<LocalReduction> places;  // bad finite places, then infinity if bad
    int conductor_degree = 0;
    RatFunc j;
    std::vector<Place> sigma2;
};

constexpr int kInfiniteValuation = 1 << 20;

/// Tame Kodaira type from minimal valuations of c4 and the discriminant.
LocalReduction classify_reduction(int vA, int vB, int vD);

/// p >= 5, d = 3, polynomial coefficients, non-constant curve.
EllipticLocalData elliptic_local_data(const HyperellipticModel& m);

}  // namespace ffd

#endif
