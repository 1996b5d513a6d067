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

#ifndef FFDESCENT_REPORT_HPP
#define FFDESCENT_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ffdescent/bounds.hpp"
#include "ffdescent/descent.hpp"
#include "ffdescent/rrspace.hpp"
#include "ffdescent/torsion_maps.hpp"

namespace ffd {

using json = nlohmann::ordered_json;

std::string library_version();

json to_json(const Poly& a);
json to_json(const RatFunc& a);
json to_json(const BiPoly& a);
json to_json(const CurvePoint& P);
json to_json(const HyperellipticModel& m);
json to_json(const MumfordDivisor& D);
json to_json(const EffectiveDivisor& D);
json to_json(const BoundValue& b, const BoundReport& owner);
json to_json(const BoundReport& r);
json to_json(const TorsionWitness& w);
json to_json(const FiberPartition& f);

/// Curve description read from JSON.
///
///   {"p": 7, "r": 1, "model": "weierstrass", "f": [a_0, ..., a_d]}
///   {"p": 7, "model": "hyperelliptic", "F": [c_0, ..., c_n]}
///   {"p": 5, "model": "trigonal", "G": [a_0, a_1, a_2, [1]]}
///
/// A polynomial is a list of coefficients in t (low degree first); a
/// weierstrass coefficient may also be {"num": [...], "den": [...]}. For
/// r > 1 coefficients are element indices (base-p digit sums) and an optional
/// "modulus" must match the library's defining polynomial.
struct CurveSpec {
    std::string model;
    const GF* field = nullptr;
    std::optional<HyperellipticModel> weierstrass;
    std::optional<Poly> F;
    std::optional<BiPoly> G;
    json source;
};

CurveSpec parse_curve(const json& j);
CurveSpec load_curve(const std::string& path);

Poly poly_from_json(const GF& K, const json& j);

}  // namespace ffd

#endif
