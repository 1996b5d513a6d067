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

#ifndef FFDESCENT_DESCENT_HPP
#define FFDESCENT_DESCENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffdescent/curvemodel.hpp"

namespace ffd {

struct CurvePoint {
    RatFunc x, y;
    int height() const { return degree(x); }
    bool operator==(const CurvePoint& o) const { return x == o.x && y == o.y; }
};

/// Element of K(t)[X]/(f) kept with polynomial coefficients; scaling by
/// squares of K(t) does not change the class, so denominators are cleared.
struct DescentClassRep {
    BiPoly f;  // the model's f, monic in X
    BiPoly z;  // degX < deg f

    Poly norm() const;
    std::string str() const { return z.str(); }
};

DescentClassRep make_rep(const BiPoly& f, const BiPoly& z);
DescentClassRep rep_mul(const DescentClassRep& a, const DescentClassRep& b);

/// Class of x0 - X, or (x0 - X) + f(X)/(X - x0) when f(x0) = 0.
DescentClassRep delta(const HyperellipticModel& m, const CurvePoint& P);

struct SquareTestOptions {
    int trials = 40;
    std::uint64_t seed = 1;
};

enum class SquareStatus { square, nonsquare, budget_exceeded };

/// Monte Carlo test for squareness over the algebraic closure, specializing
/// t in an even-degree extension of K.
bool is_square_geometric(const DescentClassRep& z, const SquareTestOptions& opt = {});

struct OracleResult {
    SquareStatus status = SquareStatus::budget_exceeded;
    /// When square: G with P(Y) = +-G(Y) G(-Y), P(Y) = S(Y^2) and S the
    /// characteristic polynomial of (a rescaling of) z, over K_2(t).
    std::optional<BiPoly> witness;
    BiPoly charpoly;
};

/// Deterministic test over K_2 = GF(q^2) by factoring S(Y^2); requires p > d.
OracleResult is_square_oracle(const DescentClassRep& z, int degree_budget);

struct SameClassOptions {
    SquareTestOptions mc;
    int oracle_budget = 16;
};

bool same_class(const DescentClassRep& a, const DescentClassRep& b, const SameClassOptions& opt = {});

struct FiberPartition {
    std::vector<std::vector<int>> fibers;  // indices into the input, sorted
    int max_fiber = 0;
};

FiberPartition group_fibers(const HyperellipticModel& m, const std::vector<CurvePoint>& pts,
                            const SameClassOptions& opt = {});

/// Dimension of H^1 of a genus-gC curve with s punctures.
int h1_dim(int gC, int s);

/// Characteristic polynomial of multiplication by z on {1, X, ..., X^{d-1}}.
BiPoly characteristic_polynomial(const DescentClassRep& z);

}  // namespace ffd

#endif
