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

#ifndef FFDESCENT_BOUNDS_HPP
#define FFDESCENT_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "ffdescent/field.hpp"

namespace ffd {

/// Exact exponents; boost normalizes to lowest terms with positive denominator.
using Rational = boost::rational<long long>;

long long floor(const Rational& r);
long long ceil(const Rational& r);
double to_double(const Rational& r);
std::string to_string(const Rational& r);

/// All inputs of the closed-form bounds; fields left empty are reported as
/// missing by the evaluators that need them.
struct BoundParams {
    std::uint64_t q = 0;
    int p = 0;
    int d = 3;  // deg_x f
    int g = 0;  // base genus
    int c = 0;
    int h = 0;  // h_B(f)
    bool irreducible = true;
    std::optional<int> g_f;
    int omega = 1;
    std::optional<int> rank;
    std::optional<int> two_torsion_dim;
    int d0 = 0;  // dimension of the trace
    std::optional<int> conductor_degree;
    int S = 1;
    std::optional<int> S_union_Sigma;
    int deg_disc = 0;
    std::uint64_t rho = 1;
    bool isotrivial = false;
    std::optional<int> maroni;
    std::optional<int> g_C;
    int d1 = 0, d2 = 0, degB = 0;
    bool simple_root = false;
    std::optional<double> lambda;
    int curve_genus = 0;  // genus of X for the torsion bounds
};

/// One evaluated bound. When `exponent` is set the value is base^exponent
/// exactly; log2 carries the value otherwise.
struct BoundValue {
    std::string name;
    bool applicable = true;
    std::string note;
    std::optional<Rational> exponent;
    double base = 2;
    double log2 = 0;
    std::optional<double> observed;
    std::optional<bool> satisfied;

    /// value = mantissa * 2^exp2 with mantissa in [1, 2).
    std::pair<double, long long> mantissa_exponent() const;
    /// The value as a double when below 2^1000.
    std::optional<double> value() const;
};

struct BoundReport {
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<BoundValue> bounds;

    const BoundValue* find(const std::string& name) const;
    BoundValue* find(const std::string& name);
    /// Record an observed count against a bound; returns satisfied.
    bool observe(const std::string& name, double observed);
    /// False when any observed quantity exceeds its bound.
    bool all_satisfied() const;
    void merge(const BoundReport& o);
};

/// observed <= bound, exact when the exponent is an integer.
bool bound_holds(const BoundValue& b, double observed);

Rational omega_exponent(const Rational& c, const BoundParams& P);

/// r + dim LN(J)[2] <= 2 d0 + (d - 1)(2g - 2) + deg f_J + omega - 1.
int gos_rank_surrogate(int d, int g, int d0, int conductor_degree, int omega);

BoundReport rational_point_count_bounds(const BoundParams& P);

enum class CharBranch { zero, positive };

struct CmaxValue {
    Rational full;  // with |S| + deg disc
    std::optional<Rational> sharp;  // with |S u Sigma|
};
CmaxValue cmax(const BoundParams& P, CharBranch branch = CharBranch::positive);

BoundReport s_integral_count_bound(const BoundParams& P);

/// Right-hand sides of the trigonal h0 estimates at an effective divisor of
/// degree deg_D (max with 1 included for the first).
Rational h0_maroni_bound(int g, int m, const Rational& deg_D);
Rational h0_trigonal_bound(int g, const Rational& deg_D);

/// mu of the general Maroni bound; requires c even, g_C > 4.
Rational maroni_mu(int c, int g_C, int m);

BoundReport maroni_bounds(const BoundParams& P);

/// #irreducible factors of a squarefree degree-d polynomial: 4 q d / log_q d.
double factor_count_bound(std::uint64_t q, int d);

/// (N - 4) / (2 log_q N) + lambda N / (log_q N)^2.
double brumer_rank_bound(int conductor_degree, std::uint64_t q, double lambda);

BoundReport torsion_bounds(const BoundParams& P);

/// (sqrt q - 1)^{2g} <= N <= (sqrt q + 1)^{2g}, decided in exact integers.
bool weil_interval_contains(std::uint64_t q, int g, std::uint64_t N);

}  // namespace ffd

#endif
