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

#include "ffdescent/funcfield.hpp"

#include <algorithm>
#include <map>

#include "ffdescent/factor.hpp"

namespace ffd {

RatFunc::RatFunc(const Poly& n) : num_(n), den_(Poly::constant(n.field(), 1)) {}

RatFunc::RatFunc(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw domain_error("rational function with zero denominator");
    const GF& F = d.field();
    if (n.is_zero()) {
        num_ = Poly(F);
        den_ = Poly::constant(F, 1);
        return;
    }
    const Poly g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
    const Elt l = den_.lc();
    if (l != 1) {
        const Elt il = F.inv(l);
        num_ = num_.scaled(il);
        den_ = den_.scaled(il);
    }
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
    if (den_.deg() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den() == b.den()) return RatFunc(a.num() + b.num(), a.den());
    return RatFunc(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num() * b.num(), a.den() * b.den());
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc pow(const RatFunc& a, int e) {
    if (e < 0) return pow(a.inverse(), -e);
    return RatFunc(pow(a.num(), static_cast<unsigned>(e)), pow(a.den(), static_cast<unsigned>(e)));
}

int valuation(const RatFunc& z, const Place& v) {
    if (z.is_zero()) throw domain_error("valuation of zero");
    if (v.inf) return z.den().deg() - z.num().deg();
    return ord(z.num(), v.pi) - ord(z.den(), v.pi);
}

int degree(const RatFunc& z) {
    if (z.is_zero()) return 0;
    return std::max(z.num().deg(), z.den().deg());
}

std::vector<Place> support(const RatFunc& z) {
    std::vector<Place> out;
    if (z.is_zero()) return out;
    for (const Poly* p : {&z.num(), &z.den()})
        if (p->deg() > 0)
            for (const auto& [g, e] : factor(*p).factors) out.push_back(Place::finite(g));
    std::sort(out.begin(), out.end());
    return out;
}

int poly_height(const std::vector<RatFunc>& a) {
    if (a.empty() || a.back() != RatFunc(Poly::constant(a.back().field(), 1)))
        throw domain_error("poly_height: polynomial must be monic");
    const GF& F = a.back().field();
    // Finite contributions come from denominators only.
    std::map<Poly, int> worst;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i].is_zero() || a[i].den().deg() == 0) continue;
        for (const auto& [g, e] : factor(a[i].den()).factors) {
            int& w = worst[g];
            w = std::max(w, e);
        }
    }
    int h = 0;
    for (const auto& [g, e] : worst) h += g.deg() * e;
    int vinf = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (!a[i].is_zero()) vinf = std::min(vinf, valuation(a[i], Place::infinity(F)));
    return h - vinf;
}

std::uint64_t insep_degree(const RatFunc& z0) {
    if (z0.is_constant()) throw domain_error("inseparable degree of a constant function is undefined");
    const int p = z0.field().p();
    std::uint64_t e = 1;
    RatFunc z = z0;
    while (z.derivative().is_zero()) {
        z = RatFunc(pth_root(z.num()), pth_root(z.den()));
        e *= static_cast<std::uint64_t>(p);
    }
    return e;
}

}  // namespace ffd
