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

#ifndef FFDESCENT_POINTS_HPP
#define FFDESCENT_POINTS_HPP

#include <cstdint>
#include <vector>

#include "ffdescent/descent.hpp"
#include "ffdescent/elliptic.hpp"

namespace ffd {

class search_limit_error : public domain_error {
   public:
    search_limit_error(const std::string& what, double estimate) : domain_error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

   private:
    double estimate_;
};

struct EnumOptions {
    double cap = 1e8;  // candidate limit
    bool parallel = true;
};

struct EnumStats {
    double candidates = 0;  // size of the search space after exact pruning
    std::uint64_t survivors = 0;  // candidates reaching the full square test
};

/// Canonical order: by height, then x, then y.
void sort_points(std::vector<CurvePoint>& pts);

/// Points with x0, y0 in K[t] and deg x0 <= c (sieved kernel).
std::vector<CurvePoint> enum_integral(const HyperellipticModel& m, int c, const EnumOptions& opt = {},
                                      EnumStats* stats = nullptr);

/// Unsieved serial scan over all x0; reference for the sieved kernel.
std::vector<CurvePoint> enum_integral_reference(const HyperellipticModel& m, int c, double cap = 1e8);

/// Points over K(t) with deg x0 <= c, via x0 = u / e^2.
std::vector<CurvePoint> enum_rational(const HyperellipticModel& m, int c, const EnumOptions& opt = {});

/// S-integral points with deg x0 <= c; S must contain infinity.
std::vector<CurvePoint> enum_s_integral(const HyperellipticModel& m, const std::vector<Place>& S, int c,
                                        const EnumOptions& opt = {});

bool is_s_integral(const RatFunc& z, const std::vector<Place>& S);

struct HeightEstimate {
    double value = 0;
    double lo = 0, hi = 0;
    bool torsion = false;
    bool conclusive = false;
    int doublings = 0;
};

/// Canonical height normalized so that deg x0 - 2 h(P) is bounded.
HeightEstimate canonical_height(const HyperellipticModel& m, const EllPoint& P, double eps = 0.05);

struct ComparisonCheck {
    bool holds = false;
    bool conclusive = false;
    double lower = 0, middle = 0, upper = 0;  // -2chi, deg x0 - 2h, deg j / 12 + 2chi
};

ComparisonCheck check_comparison(const HyperellipticModel& m, const CurvePoint& P, double eps = 0.05);

struct DavenportCheck {
    bool holds = true;
    bool hypotheses_ok = false;  // p > 3 and B has a simple root
    int bound = 0;  // 2 deg B - 2
    int max_degree = -1;
};

DavenportCheck check_davenport(const HyperellipticModel& m, const std::vector<CurvePoint>& pts);

/// Integral points among +-nP with deg x <= c, using deg x(nP) >=
/// 2 n^2 h(P) - 2 chi to bound n. Complete when E(K(t)) = <P> (torsion-free).
struct MultiplesSearch {
    std::vector<CurvePoint> points;
    int n_max = 0;
    HeightEstimate height;
};
MultiplesSearch integral_multiples(const HyperellipticModel& m, const CurvePoint& P, int c);

EllPoint to_ell(const CurvePoint& P);

}  // namespace ffd

#endif
