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

#include "ffdescent/factor.hpp"

#include <algorithm>
#include <map>

namespace ffd {

Poly Factorization::expand(const GF& f) const {
    Poly r = Poly::constant(f, unit);
    for (const auto& [g, e] : factors) r *= pow(g, static_cast<unsigned>(e));
    return r;
}

Poly pth_root(const Poly& a) {
    const GF& F = a.field();
    const int p = F.p();
    if (a.is_zero()) return a;
    std::vector<Elt> c(static_cast<std::size_t>(a.deg() / p) + 1, 0);
    for (int i = 0; i <= a.deg(); ++i) {
        if (a[i] == 0) continue;
        if (i % p) throw domain_error("polynomial is not a p-th power");
        c[i / p] = F.frob_inv(a[i]);
    }
    return Poly(F, std::move(c));
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f0) {
    std::vector<std::pair<Poly, int>> out;
    if (f0.deg() <= 0) return out;
    const GF& F = f0.field();
    const Poly one = Poly::constant(F, 1);
    const Poly f = f0.monic();
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    int i = 1;
    while (w.deg() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.deg() > 0) out.emplace_back(z, i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.deg() > 0) {
        const Poly r = pth_root(c);
        for (auto& [g, e] : squarefree_decomposition(r)) out.emplace_back(g, e * F.p());
    }
    // Merge equal multiplicities arising from the recursion.
    std::map<int, Poly> by_mult;
    for (auto& [g, e] : out) {
        auto it = by_mult.find(e);
        if (it == by_mult.end())
            by_mult.emplace(e, g);
        else
            it->second *= g;
    }
    out.clear();
    for (auto& [e, g] : by_mult) out.emplace_back(g, e);
    (void)one;
    return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f0) {
    std::vector<std::pair<Poly, int>> out;
    const GF& F = f0.field();
    Poly f = f0.monic();
    const Poly x = Poly::x(F);
    Poly h = x % f;
    for (int d = 1; 2 * d <= f.deg(); ++d) {
        h = powmod(h, F.q(), f);
        Poly g = gcd(h - x, f);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.deg() > 0) out.emplace_back(f, f.deg());
    return out;
}

namespace {

// a^((q^d - 1)/2) mod f via a^(1 + q + ... + q^(d-1)) then the (q-1)/2 power.
Poly half_power(const Poly& a, int d, const Poly& f) {
    const GF& F = f.field();
    Poly h = a % f, s = h;
    for (int i = 1; i < d; ++i) {
        h = powmod(h, F.q(), f);
        s = (s * h) % f;
    }
    return powmod(s, (F.q() - 1) / 2, f);
}

void edf_rec(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    const GF& F = f.field();
    const Poly one = Poly::constant(F, 1);
    while (true) {
        Poly a = random_poly(F, f.deg() - 1, rng);
        if (a.deg() <= 0) continue;
        Poly g = gcd(a, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf_rec(g, d, rng, out);
            edf_rec(f / g, d, rng, out);
            return;
        }
        Poly b = half_power(a, d, f) - one;
        g = gcd(b, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf_rec(g, d, rng, out);
            edf_rec(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly> equal_degree(const Poly& f, int d, std::mt19937_64& rng) {
    std::vector<Poly> out;
    if (f.deg() <= 0) return out;
    edf_rec(f.monic(), d, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

Factorization factor(const Poly& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw domain_error("factor of the zero polynomial");
    Factorization r;
    r.unit = f.lc();
    for (const auto& [g, e] : squarefree_decomposition(f))
        for (const auto& [h, d] : distinct_degree(g))
            for (auto& irr : equal_degree(h, d, rng)) r.factors.emplace_back(irr, e);
    std::sort(r.factors.begin(), r.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

Factorization factor(const Poly& f) {
    std::mt19937_64 rng(0x5eedf00dULL);
    return factor(f, rng);
}

bool is_squarefree(const Poly& f) {
    if (f.deg() <= 0) return true;
    return gcd(f, f.derivative()).deg() == 0;
}

bool is_irreducible(const Poly& f) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    const GF& F = f.field();
    const Poly g = f.monic();
    const Poly x = Poly::x(F);
    const int n = g.deg();
    Poly h = x % g;
    for (int i = 1; i <= n / 2; ++i) {
        h = powmod(h, F.q(), g);
        if (gcd(h - x, g).deg() > 0) return false;
    }
    return true;
}

std::vector<Elt> roots(const Poly& f) {
    std::vector<Elt> out;
    if (f.is_zero()) throw domain_error("roots of the zero polynomial");
    if (f.deg() <= 0) return out;
    const GF& F = f.field();
    const Poly g0 = f.monic();
    if (g0[0] == 0) out.push_back(0);
    Poly g = g0;
    while (g[0] == 0 && !g.is_zero()) g = g / Poly::x(F);
    if (g.deg() > 0) {
        const Poly x = Poly::x(F);
        Poly xq = powmod(x, F.q(), g);
        Poly lin = gcd(xq - x, g);
        if (lin.deg() > 0) {
            std::mt19937_64 rng(0x600dcafeULL);
            for (const auto& l : equal_degree(lin, 1, rng)) out.push_back(F.neg(l[0]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Poly radical(const Poly& f) {
    const GF& F = f.field();
    Poly r = Poly::constant(F, 1);
    for (const auto& [g, e] : factor(f).factors) r *= g;
    return r;
}

CubeDecomposition cube_adapted_decompose(const Poly& b) {
    if (b.is_zero()) throw domain_error("cube decomposition of zero");
    const GF& F = b.field();
    CubeDecomposition d;
    const auto fz = factor(b);
    d.unit = fz.unit;
    d.b1 = d.b2 = d.b3 = Poly::constant(F, 1);
    for (const auto& [g, e] : fz.factors) {
        if (e % 3 == 1) d.b1 *= g;
        if (e % 3 == 2) d.b2 *= g;
        if (e / 3 > 0) d.b3 *= pow(g, static_cast<unsigned>(e / 3));
    }
    return d;
}

ExtSqrt sqrt_in_extension(const GF& f, Elt a, int m) {
    if (m < 1) throw domain_error("extension degree must be positive");
    ExtSqrt r;
    const GF& big = GF::get(f.p(), f.n() * m);
    r.field = &big;
    const Elt b = Embedding::get(f, big)(a);
    r.root = big.sqrt(b);
    return r;
}

std::optional<Poly> poly_sqrt(const Poly& a) {
    const GF& F = a.field();
    if (a.is_zero()) return a;
    if (a.deg() % 2) return std::nullopt;
    const auto slc = F.sqrt(a.lc());
    if (!slc) return std::nullopt;
    // Top-down square root, then verify.
    const int n = a.deg() / 2;
    std::vector<Elt> r(static_cast<std::size_t>(n) + 1, 0);
    r[n] = *slc;
    const Elt inv2 = F.inv(F.mul(2, *slc));
    for (int k = 1; k <= n; ++k) {
        // coefficient of t^{2n-k} in r^2 must equal a_{2n-k}
        Elt s = 0;
        for (int i = n - k + 1; i < n; ++i) {
            const int j = 2 * n - k - i;
            if (j > n || j < n - k + 1) continue;
            s = F.add(s, F.mul(r[i], r[j]));
        }
        r[n - k] = F.mul(F.sub(a[2 * n - k], s), inv2);
    }
    Poly root(F, std::move(r));
    if (root * root == a) return root;
    return std::nullopt;
}

}  // namespace ffd
