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

#include "ffdescent/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ffd {

long long floor(const Rational& r) {
    const long long n = r.numerator(), d = r.denominator();
    long long q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

long long ceil(const Rational& r) { return -floor(-r); }

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

std::string to_string(const Rational& r) {
    const std::string n = std::to_string(r.numerator());
    return r.denominator() == 1 ? n : n + "/" + std::to_string(r.denominator());
}

std::pair<double, long long> BoundValue::mantissa_exponent() const {
    const double e = std::floor(log2);
    return {std::exp2(log2 - e), static_cast<long long>(e)};
}

std::optional<double> BoundValue::value() const {
    if (log2 >= 1000) return std::nullopt;
    return std::exp2(log2);
}

const BoundValue* BoundReport::find(const std::string& name) const {
    for (const auto& b : bounds)
        if (b.name == name) return &b;
    return nullptr;
}

BoundValue* BoundReport::find(const std::string& name) {
    for (auto& b : bounds)
        if (b.name == name) return &b;
    return nullptr;
}

bool bound_holds(const BoundValue& b, double observed) {
    if (observed <= 0) return true;
    if (b.exponent && b.base == 2 && b.exponent->denominator() == 1 && b.exponent->numerator() < 62) {
        if (b.exponent->numerator() < 0) return observed <= 0;
        return observed <= static_cast<double>(1LL << b.exponent->numerator());
    }
    return std::log2(observed) <= b.log2 + 1e-9;
}

bool BoundReport::observe(const std::string& name, double observed) {
    BoundValue* b = find(name);
    if (!b) throw domain_error("no bound named " + name);
    b->observed = observed;
    if (!b->applicable) return true;
    b->satisfied = bound_holds(*b, observed);
    return *b->satisfied;
}

bool BoundReport::all_satisfied() const {
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundValue& b) { return !b.satisfied || *b.satisfied; });
}

void BoundReport::merge(const BoundReport& o) {
    for (const auto& kv : o.inputs)
        if (std::find(inputs.begin(), inputs.end(), kv) == inputs.end()) inputs.push_back(kv);
    bounds.insert(bounds.end(), o.bounds.begin(), o.bounds.end());
}

namespace {

BoundValue pow2(const std::string& name, const Rational& e) {
    BoundValue b;
    b.name = name;
    b.exponent = e;
    b.log2 = to_double(e);
    return b;
}

BoundValue from_log2(const std::string& name, double l2) {
    BoundValue b;
    b.name = name;
    b.log2 = l2;
    return b;
}

BoundValue inapplicable(const std::string& name, const std::string& why) {
    BoundValue b;
    b.name = name;
    b.applicable = false;
    b.note = why;
    return b;
}

Rational ceil_half(int c) { return Rational((c + 1) / 2); }

void echo(BoundReport& r, const std::string& k, long long v) { r.inputs.emplace_back(k, std::to_string(v)); }

std::optional<int> rank_plus_torsion(const BoundParams& P, std::string& source) {
    if (P.rank) {
        source = "rank input";
        return *P.rank + P.two_torsion_dim.value_or(P.omega - 1);
    }
    if (P.conductor_degree) {
        source = "conductor surrogate";
        return gos_rank_surrogate(P.d, P.g, P.d0, *P.conductor_degree, P.omega);
    }
    return std::nullopt;
}

// log2(2^a + 2^b).
double log2_add(double a, double b) {
    const double m = std::max(a, b);
    return m + std::log2(std::exp2(a - m) + std::exp2(b - m));
}

}  // namespace

Rational omega_exponent(const Rational& c, const BoundParams& P) {
    const Rational base = Rational(P.d) * (c + Rational(P.g)) + Rational(P.h);
    if (P.irreducible) {
        if (!P.g_f) throw domain_error("omega_exponent: g_f is required for irreducible C_f");
        return std::max(base - Rational(*P.g_f), base / Rational(2));
    }
    return base + Rational(P.omega - 1);
}

int gos_rank_surrogate(int d, int g, int d0, int conductor_degree, int omega) {
    return 2 * d0 + (d - 1) * (2 * g - 2) + conductor_degree + omega - 1;
}

BoundReport rational_point_count_bounds(const BoundParams& P) {
    BoundReport R;
    echo(R, "d", P.d);
    echo(R, "g", P.g);
    echo(R, "c", P.c);
    echo(R, "h", P.h);
    echo(R, "irreducible", P.irreducible);
    if (P.g_f) echo(R, "g_f", *P.g_f);
    echo(R, "omega", P.omega);
    std::string source;
    const auto rt = rank_plus_torsion(P, source);
    if (rt) {
        echo(R, "rank_plus_torsion", *rt);
        R.inputs.emplace_back("rank_source", source);
    }
    const Rational c(P.c);
    const Rational per_class = omega_exponent(c, P) + std::max(c, (c + Rational(P.g)) / Rational(2)) + Rational(1);
    R.bounds.push_back(pow2("per_class", per_class));
    if (rt)
        R.bounds.push_back(pow2("total", per_class + Rational(*rt)));
    else
        R.bounds.push_back(inapplicable("total", "rank and torsion inputs missing (give rank or conductor degree)"));

    if (P.g == 0) {
        BoundParams P0 = P;
        P0.g = 0;
        const Rational ch = ceil_half(P.c);
        const Rational pc1 = omega_exponent(ch, P0) + ch + Rational(1);
        R.bounds.push_back(pow2("per_class_p1", pc1));
        if (rt)
            R.bounds.push_back(pow2("total_p1", pc1 + Rational(*rt)));
        else
            R.bounds.push_back(inapplicable("total_p1", "rank and torsion inputs missing"));
        if (P.c >= P.h) {
            Rational e;
            const Rational dc = Rational(P.d) * ch;
            if (P.irreducible) {
                if (!P.g_f) throw domain_error("per-class integral bound: g_f is required for irreducible C_f");
                e = std::max(dc - Rational(*P.g_f), dc / Rational(2)) + Rational(1);
            } else {
                e = dc + Rational(P.omega);
            }
            R.bounds.push_back(pow2("per_class_p1_integral", e));
        } else {
            R.bounds.push_back(inapplicable("per_class_p1_integral", "c < h(f)"));
        }
    } else {
        R.bounds.push_back(inapplicable("per_class_p1", "base genus > 0"));
        R.bounds.push_back(inapplicable("total_p1", "base genus > 0"));
        R.bounds.push_back(inapplicable("per_class_p1_integral", "base genus > 0"));
    }
    return R;
}

CmaxValue cmax(const BoundParams& P, CharBranch branch) {
    if (P.isotrivial) throw domain_error("cmax: isotrivial model");
    if (branch == CharBranch::positive && P.p != 0 && P.p <= P.d) throw domain_error("cmax: requires char > d");
    const Rational k = branch == CharBranch::zero ? Rational(4) : Rational(6 * static_cast<long long>(P.rho));
    const Rational tail = Rational(3 * P.h, P.d);
    CmaxValue v;
    v.full = k * Rational(2 * P.g - 2 + P.S + P.deg_disc) + tail;
    if (P.S_union_Sigma) v.sharp = k * Rational(2 * P.g - 2 + *P.S_union_Sigma) + tail;
    return v;
}

BoundReport s_integral_count_bound(const BoundParams& P) {
    BoundReport R;
    const CharBranch br = P.p == 0 ? CharBranch::zero : CharBranch::positive;
    const CmaxValue cm = cmax(P, br);
    R.inputs.emplace_back("c_max", to_string(cm.full));
    if (cm.sharp) R.inputs.emplace_back("c_max_sharp", to_string(*cm.sharp));
    echo(R, "d", P.d);
    echo(R, "g", P.g);
    echo(R, "h", P.h);
    echo(R, "irreducible", P.irreducible);
    std::string source;
    const auto rt = rank_plus_torsion(P, source);
    if (!rt) {
        R.bounds.push_back(inapplicable("s_integral_total", "rank and torsion inputs missing"));
        return R;
    }
    R.inputs.emplace_back("rank_source", source);
    // Only the rank enters the irreducible branch; a surrogate bounds r + t >= r.
    const int r = P.rank ? *P.rank : *rt;
    const Rational cmx = cm.full;
    const Rational lin = Rational(P.d + 1) * cmx + Rational(P.h) + Rational(P.d * P.g);
    const Rational dom1 = Rational(P.d) * (cmx + Rational(P.g)) + Rational(P.h);
    const bool dominant2 = cmx >= Rational(P.g);
    bool dominant1 = true;
    BoundValue b;
    if (P.irreducible) {
        if (!P.g_f) throw domain_error("s_integral_count_bound: g_f is required for irreducible C_f");
        dominant1 = dom1 >= Rational(2 * *P.g_f);
        b = pow2("s_integral_total", lin - Rational(*P.g_f) + Rational(1) + Rational(r));
    } else {
        b = pow2("s_integral_total", lin + Rational(P.omega) + Rational(*rt));
    }
    if (dominant1 && dominant2) {
        b.note = "dominance conditions hold";
        R.bounds.push_back(b);
        return R;
    }
    // Fall back to the general count at c = floor(c_max).
    BoundParams Q = P;
    Q.c = static_cast<int>(floor(cmx));
    const Rational c(Q.c);
    BoundValue f = pow2("s_integral_total", omega_exponent(c, Q) + std::max(c, (c + Rational(Q.g)) / Rational(2)) + Rational(1) +
                                      Rational(*rt));
    f.note = "dominance conditions fail; general count at floor(c_max)";
    R.bounds.push_back(f);
    return R;
}

Rational h0_maroni_bound(int g, int m, const Rational& deg_D) {
    const Rational a = Rational(m) + deg_D + Rational(2 - g);
    const Rational b = (Rational(2) * (deg_D - Rational(1)) - Rational(g)) / Rational(3) + Rational(2);
    return std::max(std::min(a, b), Rational(1));
}

Rational h0_trigonal_bound(int g, const Rational& deg_D) {
    if (deg_D > Rational(2 * g - 2)) return deg_D + Rational(1 - g);
    return Rational(2, 3) * (deg_D + Rational(2)) - Rational(g, 3);
}

Rational maroni_mu(int c, int g_C, int m) {
    if (c % 2) throw domain_error("maroni_mu: c must be even");
    const Rational cc(c);
    const Rational mid = cc + Rational(4 - g_C, 3);
    if (Rational(3 * c) < Rational(2 * g_C)) return std::min(Rational(m) + Rational(3 * c, 2) + Rational(2 - g_C), mid);
    if (Rational(3 * c) <= Rational(4 * (g_C - 1))) return mid;
    return Rational(3 * c, 2) + Rational(1 - g_C);
}

BoundReport maroni_bounds(const BoundParams& P) {
    BoundReport R;
    echo(R, "c", P.c);
    echo(R, "h", P.h);
    if (P.g_C) echo(R, "g_C", *P.g_C);
    if (P.maroni) echo(R, "maroni", *P.maroni);
    const bool even = P.c % 2 == 0;
    const int gC = P.g_C.value_or(0);

    if (!P.g_C || gC <= 4)
        R.bounds.push_back(inapplicable("maroni", "requires g_C > 4"));
    else if (!even)
        R.bounds.push_back(inapplicable("maroni", "c must be even"));
    else if (2 * P.c < P.h)
        R.bounds.push_back(inapplicable("maroni", "requires c >= h(f)/2"));
    else if (!P.irreducible)
        R.bounds.push_back(inapplicable("maroni", "requires C irreducible"));
    else if (!P.maroni)
        R.bounds.push_back(inapplicable("maroni", "Maroni invariant missing"));
    else {
        const Rational mu = maroni_mu(P.c, gC, *P.maroni);
        BoundValue b = pow2("maroni", std::max(mu, Rational(1)));
        b.note = "mu = " + to_string(mu);
        R.bounds.push_back(b);
    }

    echo(R, "d1", P.d1);
    echo(R, "d2", P.d2);
    echo(R, "degB", P.degB);
    if (!P.g_C || gC <= 4)
        R.bounds.push_back(inapplicable("j0", "requires g_C > 4"));
    else if (!even)
        R.bounds.push_back(inapplicable("j0", "c must be even"));
    else if (!(P.degB <= 3 * P.c && 3 * P.c < 2 * gC))
        R.bounds.push_back(inapplicable("j0", "requires deg B / 3 <= c < 2 g_C / 3"));
    else {
        const Rational e = Rational(ceil(Rational(std::min(P.d1 + 2 * P.d2, 2 * P.d1 + P.d2), 3))) + Rational(3 * P.c, 2) -
                           Rational(gC);
        R.bounds.push_back(pow2("j0", std::max(e, Rational(1))));
    }

    if (!P.g_C || gC <= 4)
        R.bounds.push_back(inapplicable("isotrivial_total", "requires g_C > 4"));
    else if (P.p != 0 && (P.p <= 3 || !P.simple_root))
        R.bounds.push_back(inapplicable("isotrivial_total", "requires p > 3 and a simple root of B"));
    else if (!P.rank)
        R.bounds.push_back(inapplicable("isotrivial_total", "rank input missing"));
    else
        R.bounds.push_back(pow2("isotrivial_total", Rational(3 * P.degB - 2 - gC + *P.rank)));
    return R;
}

double factor_count_bound(std::uint64_t q, int d) {
    const double lq = std::log(static_cast<double>(d)) / std::log(static_cast<double>(q));
    return 4.0 * static_cast<double>(q) * d / lq;
}

double brumer_rank_bound(int conductor_degree, std::uint64_t q, double lambda) {
    const double N = conductor_degree;
    const double l = std::log(N) / std::log(static_cast<double>(q));
    return (N - 4) / (2 * l) + lambda * N / (l * l);
}

BoundReport torsion_bounds(const BoundParams& P) {
    if (P.p != 0 && P.p < 5) throw domain_error("torsion_bounds: requires p >= 5");
    if (!P.lambda) throw domain_error("torsion_bounds: lambda (explicit rank bound constant) must be supplied");
    BoundReport R;
    const std::uint64_t q = P.q;
    const int g = P.curve_genus;
    const double lam = *P.lambda;
    const double lq = std::log2(static_cast<double>(q));
    echo(R, "q", static_cast<long long>(q));
    echo(R, "genus", g);
    R.inputs.emplace_back("lambda", std::to_string(lam));

    // Hyperelliptic 3-torsion, d = 2g + 1.
    const int d = 2 * g + 1;
    const double fc = factor_count_bound(q, d);
    BoundValue bf = from_log2("factor_count", std::log2(fc));
    R.bounds.push_back(bf);
    const double br = brumer_rank_bound(3 * d, q, lam);
    BoundValue bb = from_log2("brumer_rank_torsion3", std::log2(br));
    bb.note = "rank bound at deg f = 3d";
    R.bounds.push_back(bb);
    const double r3 = std::floor(br);
    const double t1 = 3 * std::log2(static_cast<double>(d)) + fc + lq * (d / 4.0 + r3 + 6);
    const double t2 = lq * (d / 4.0 + 6 + fc + r3);
    R.bounds.push_back(from_log2("torsion3_total", log2_add(log2_add(t1, t2), 0)));
    BoundValue triv3;
    triv3.name = "trivial_3";
    triv3.base = 3;
    triv3.exponent = Rational(2 * g);
    triv3.log2 = 2 * g * std::log2(3.0);
    R.bounds.push_back(triv3);

    // Trigonal 2-torsion: E_psi has chi <= ceil(g / 3), so deg f <= 12 ceil(g / 3).
    const int cg = (g + 2) / 3;
    const double br2 = brumer_rank_bound(12 * cg, q, lam);
    BoundValue bb2 = from_log2("brumer_rank_torsion2", std::log2(br2));
    bb2.note = "rank bound at deg f = 12 ceil(g/3)";
    R.bounds.push_back(bb2);
    const double r4 = std::floor(br2);
    const double fam = std::log2(std::pow(static_cast<double>(q), cg) - 1);
    R.bounds.push_back(from_log2("torsion2_total", log2_add(0, std::log2(3.0) + fam + (g + 4) / 3.0 + r4)));
    R.bounds.push_back(pow2("trivial_2", Rational(2 * g)));

    R.bounds.push_back(from_log2("weil", 2 * g * std::log2(std::sqrt(static_cast<double>(q)) + 1)));
    R.bounds.push_back(from_log2("bhargava", std::log2((std::pow(static_cast<double>(q), g + 1) - 1) / (q - 1.0))));
    return R;
}

bool weil_interval_contains(std::uint64_t q, int g, std::uint64_t N) {
    // (sqrt q + 1)^{2g} = A + B sqrt q and (sqrt q - 1)^{2g} = A - B sqrt q.
    using i128 = __int128;
    i128 A = 1, B = 0;
    for (int k = 0; k < 2 * g; ++k) {
        const i128 a = A + B * static_cast<i128>(q), b = A + B;
        A = a;
        B = b;
    }
    const i128 n = static_cast<i128>(N), qq = static_cast<i128>(q);
    const i128 up = n - A, lo = A - n;
    const bool below = up <= 0 || up * up <= B * B * qq;
    const bool above = lo <= 0 || lo * lo <= B * B * qq;
    return below && above;
}

}  // namespace ffd
