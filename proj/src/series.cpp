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

#include "ffdescent/series.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ffdescent/factor.hpp"

namespace ffd {

namespace {

struct NeedExtension {
    int degree;
};

constexpr int kInfVal = std::numeric_limits<int>::max() / 4;

int low_order(const Poly& a) {
    for (int k = 0; k <= a.deg(); ++k)
        if (a[k] != 0) return k;
    return kInfVal;
}

Poly stretch(const Poly& a, int b, int shift) {
    if (a.is_zero()) return a;
    std::vector<Elt> c(static_cast<std::size_t>(a.deg() * b + shift) + 1, 0);
    for (int k = 0; k <= a.deg(); ++k) c[static_cast<std::size_t>(k * b + shift)] = a[k];
    return Poly(a.field(), std::move(c));
}

Poly drop_low(const Poly& a, int m) {
    if (a.is_zero()) return a;
    for (int k = 0; k < m; ++k)
        if (a[k] != 0) throw domain_error("Puiseux substitution: negative valuation");
    return Poly(a.field(), std::vector<Elt>(a.coeffs().begin() + m, a.coeffs().end()));
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// G(u^b, u^a (c + Y)) / u^m.
BiPoly substitute(const BiPoly& G, int a, int b, Elt c, int m) {
    const GF& K = G.field();
    const int d = G.degX();
    std::vector<Poly> out(static_cast<std::size_t>(d) + 1, Poly(K));
    for (int i = 0; i <= d; ++i) {
        if (G[i].is_zero()) continue;
        const Poly gi = stretch(G[i], b, a * i);
        for (int k = 0; k <= i; ++k) {
            const Elt w = K.mul(K.from_int(binom(i, k)), K.pow(c, static_cast<std::uint64_t>(i - k)));
            if (w) out[k] += gi.scaled(w);
        }
    }
    for (auto& p : out) p = drop_low(p, m);
    return BiPoly(K, std::move(out));
}

void analyse(const BiPoly& G, bool top, int lam_num, int lam_den, std::vector<Branch>& out) {
    const GF& K = G.field();
    const int p = K.p();
    const int d = G.degX();
    std::vector<int> v(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) v[i] = G[i].is_zero() ? kInfVal : low_order(G[i]);

    int first = 0;
    while (first <= d && v[first] == kInfVal) ++first;
    if (first > 1) throw domain_error("Puiseux analysis: repeated exact root (inseparable input)");
    if (first == 1) out.push_back(Branch{1, top ? kInfVal : lam_num, top ? 1 : lam_den});

    int last = d;
    if (!top) {
        const int mn = *std::min_element(v.begin() + first, v.end());
        last = first;
        while (v[last] != mn) ++last;
    }
    // Lower convex hull of (i, v_i), first <= i <= last.
    std::vector<int> hull;
    for (int i = first; i <= last; ++i) {
        if (v[i] == kInfVal) continue;
        while (hull.size() >= 2) {
            const int i1 = hull[hull.size() - 2], i2 = hull.back();
            // drop i2 if it lies on or above the segment i1 -> i
            const long long lhs = static_cast<long long>(v[i2] - v[i1]) * (i - i1);
            const long long rhs = static_cast<long long>(v[i] - v[i1]) * (i2 - i1);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const int i0 = hull[h], i1 = hull[h + 1];
        const int drop = v[i0] - v[i1], len = i1 - i0;
        const int g = std::gcd(drop, len);
        const int a = drop / g, b = len / g;
        if (b % p == 0) throw wild_error("wild ramification: slope denominator divisible by p");
        std::vector<Elt> rc(static_cast<std::size_t>(len / b) + 1);
        for (int j = 0; j <= len / b; ++j) rc[j] = G[i0 + j * b][v[i0] - j * a];
        const Poly R(K, std::move(rc));
        const int ln = top ? a : lam_num, ld = top ? b : lam_den;
        for (const auto& [phi, mu] : factor(R).factors) {
            if (phi.deg() > 1) throw NeedExtension{phi.deg()};
            const Elt zeta = K.neg(phi[0]);
            if (mu == 1) {
                out.push_back(Branch{b, ln, ld});
                continue;
            }
            Elt c = zeta;
            if (b > 1) {
                const Poly zb = Poly::monomial(K, 1, b) - Poly::constant(K, zeta);
                const auto rs = roots(zb);
                if (rs.empty()) {
                    int md = b;
                    for (const auto& [q, e] : factor(zb).factors) md = std::min(md, q.deg());
                    throw NeedExtension{md};
                }
                c = rs.front();
            }
            const BiPoly G1 = substitute(G, a, b, c, b * v[i0] + a * i0);
            std::vector<Branch> sub;
            analyse(G1, false, ln, ld, sub);
            for (auto br : sub) {
                br.e *= b;
                out.push_back(br);
            }
        }
    }
}

}  // namespace

std::vector<Branch> puiseux_branches(const BiPoly& G, int max_field_order) {
    const GF& F = G.field();
    int m = 1;
    while (true) {
        double order = 1;
        for (int i = 0; i < F.n() * m; ++i) order *= F.p();
        if (order > max_field_order) throw domain_error("Puiseux analysis: residue field extension too large");
        const GF& K = GF::get(F.p(), F.n() * m);
        const BiPoly Gk = m == 1 ? G : G.embed(Embedding::get(F, K));
        try {
            std::vector<Branch> out;
            analyse(Gk, true, 0, 1, out);
            return out;
        } catch (const NeedExtension& ne) {
            m *= ne.degree;
        }
    }
}

BiPoly shift_to(const BiPoly& f, const GF& big, Elt tau) {
    const Embedding& e = Embedding::get(f.field(), big);
    const Poly lin(big, {tau, 1});
    std::vector<Poly> c;
    for (const auto& a : f.coeffs()) c.push_back(compose(embed(a, e), lin));
    return BiPoly(big, std::move(c));
}

BiPoly infinity_chart(const BiPoly& f, int h) {
    const GF& F = f.field();
    const int d = f.degX();
    std::vector<Poly> c(static_cast<std::size_t>(d) + 1, Poly(F));
    for (int i = 0; i <= d; ++i) {
        const Poly& a = f[i];
        if (a.is_zero()) continue;
        const int sh = h * (d - i) - a.deg();
        if (sh < 0) throw domain_error("infinity_chart: height too small");
        std::vector<Elt> r(a.coeffs().rbegin(), a.coeffs().rend());
        c[i] = Poly(F, std::move(r)).shifted(sh);
    }
    return BiPoly(F, std::move(c));
}

}  // namespace ffd
