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

#include "ffdescent/rrspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ffdescent/curvemodel.hpp"
#include "ffdescent/factor.hpp"

namespace ffd {

namespace {

using Series = std::vector<Elt>;

Series smul(const GF& K, const Series& a, const Series& b) {
    const std::size_t N = a.size();
    Series c(N, 0);
    for (std::size_t i = 0; i < N; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < N; ++j) c[i + j] = K.add(c[i + j], K.mul(a[i], b[j]));
    }
    return c;
}

Series spoly(const GF& K, const Poly& a, const Series& x) {
    Series r(x.size(), 0);
    for (int k = a.deg(); k >= 0; --k) {
        r = smul(K, r, x);
        r[0] = K.add(r[0], a[k]);
    }
    return r;
}

// G(t(s), z(s)) for G monic in z.
Series sG(const GF& K, const BiPoly& G, const Series& t, const Series& z) {
    Series r(t.size(), 0);
    for (int i = G.degX(); i >= 0; --i) {
        r = smul(K, r, z);
        const Series c = spoly(K, G[i], t);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = K.add(r[k], c[k]);
    }
    return r;
}

// Local parametrization (t(s), z(s)) at P to precision N.
std::pair<Series, Series> local_param(const BiPoly& G, const BiPoly& Gt, const BiPoly& Gz, const AffPoint& P, int N) {
    const GF& K = G.field();
    Series t(static_cast<std::size_t>(N), 0), z(static_cast<std::size_t>(N), 0);
    t[0] = P.t;
    z[0] = P.z;
    const Elt dz = Gz.spec_t(P.t).eval(P.z);
    if (dz != 0) {
        if (N > 1) t[1] = 1;
        for (int k = 1; k < N; ++k) {
            const Series g = sG(K, G, t, z);
            z[k] = K.neg(K.div(g[k], dz));
        }
    } else {
        const Elt dt = Gt.spec_t(P.t).eval(P.z);
        if (dt == 0) throw domain_error("local expansion at a singular point");
        if (N > 1) z[1] = 1;
        for (int k = 1; k < N; ++k) {
            const Series g = sG(K, G, t, z);
            t[k] = K.neg(K.div(g[k], dt));
        }
    }
    return {t, z};
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

// Kernel of M (rows over big) pulled back to the subfield.
std::vector<std::vector<Elt>> kernel_descended(const GF& big, const Embedding& e, std::vector<std::vector<Elt>> M,
                                               int ncols) {
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(M.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(M.size()); ++i)
            if (M[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[r], M[piv]);
        const Elt inv = big.inv(M[r][c]);
        for (auto& x : M[r]) x = big.mul(x, inv);
        for (int i = 0; i < static_cast<int>(M.size()); ++i) {
            if (i == r || M[i][c] == 0) continue;
            const Elt f = M[i][c];
            for (int k = 0; k < ncols; ++k) M[i][k] = big.sub(M[i][k], big.mul(f, M[r][k]));
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(static_cast<std::size_t>(ncols), false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<std::vector<Elt>> out;
    const GF& small = e.small();
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Elt> v(static_cast<std::size_t>(ncols), 0);
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(pivcol.size()); ++i) {
            const auto x = e.pull(M[i][f]);
            if (!x) throw domain_error("vanishing conditions are not Galois stable");
            v[pivcol[i]] = small.neg(*x);
        }
        out.push_back(std::move(v));
    }
    return out;
}

BiPoly to_bipoly(const GF& K, const RRFunction& f) {
    int dz = 0;
    for (const auto& [i, j] : f.monomials) dz = std::max(dz, j);
    std::vector<Poly> c(static_cast<std::size_t>(dz) + 1, Poly(K));
    for (std::size_t k = 0; k < f.monomials.size(); ++k)
        if (f.coef[k]) c[f.monomials[k].second] += Poly::monomial(K, f.coef[k], f.monomials[k].first);
    return BiPoly(K, std::move(c));
}

EffectiveDivisor normalize(EffectiveDivisor D) {
    std::map<AffPoint, int> m;
    for (const auto& [P, k] : D.pts) m[P] += k;
    D.pts.clear();
    for (const auto& [P, k] : m)
        if (k) D.pts.emplace_back(P, k);
    return D;
}

}  // namespace

int EffectiveDivisor::degree() const {
    int d = 0;
    for (const auto& pk : pts) d += pk.second;
    return d;
}

OnePointCurve OnePointCurve::hyperelliptic(const Poly& F) {
    if (F.deg() < 3 || F.deg() % 2 == 0) throw domain_error("hyperelliptic one-point model needs odd degree >= 3");
    if (!is_squarefree(F)) throw domain_error("hyperelliptic one-point model needs squarefree F");
    const GF& K = F.field();
    BiPoly G(K, {-F, Poly(K), Poly::constant(K, 1)});
    return OnePointCurve(G, 2, F.deg());
}

OnePointCurve OnePointCurve::trigonal(const BiPoly& F) {
    const TrigonalData td = trigonal_infinity_data(F);
    return OnePointCurve(F, 3, td.w);
}

std::vector<std::pair<int, int>> OnePointCurve::basis(int m) const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < n_; ++j)
        for (int i = 0; pole_order(i, j) <= m; ++i) out.emplace_back(i, j);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return pole_order(a.first, a.second) < pole_order(b.first, b.second);
    });
    return out;
}

const GF& OnePointCurve::level_field(int level) const {
    const GF& K = field();
    double order = 1;
    for (int i = 0; i < K.n() * level; ++i) order *= K.p();
    if (order > (1 << 23)) throw domain_error("residue field too large for point arithmetic");
    return GF::get(K.p(), K.n() * level);
}

std::vector<ClosedPoint> OnePointCurve::closed_points(int degree) const {
    const GF& K = field();
    const GF& Kk = level_field(degree);
    const BiPoly Gk = G_.embed(Embedding::get(K, Kk));
    const std::uint64_t q = K.q();
    auto frob = [&](const AffPoint& P) { return AffPoint{Kk.pow(P.t, q), Kk.pow(P.z, q)}; };
    std::vector<ClosedPoint> out;
    for (Elt t = 0; t < Kk.q(); ++t) {
        const Poly g = Gk.spec_t(t);
        for (const Elt z : roots(g)) {
            const AffPoint P{t, z};
            std::vector<AffPoint> orb{P};
            AffPoint Q = frob(P);
            while (!(Q == P) && static_cast<int>(orb.size()) <= degree) {
                orb.push_back(Q);
                Q = frob(Q);
            }
            if (static_cast<int>(orb.size()) != degree) continue;
            if (*std::min_element(orb.begin(), orb.end()) != P) continue;
            out.push_back(ClosedPoint{degree, orb});
        }
    }
    return out;
}

Elt OnePointCurve::eval(const RRFunction& f, const AffPoint& P, int level) const {
    const GF& K = field();
    const GF& big = level_field(level);
    const Embedding& e = Embedding::get(K, big);
    Elt s = 0;
    for (std::size_t k = 0; k < f.monomials.size(); ++k) {
        if (!f.coef[k]) continue;
        const auto [i, j] = f.monomials[k];
        s = big.add(s, big.mul(e(f.coef[k]), big.mul(big.pow(P.t, i), big.pow(P.z, j))));
    }
    return s;
}

EffectiveDivisor lift(const OnePointCurve& C, const EffectiveDivisor& D, int level) {
    if (level == D.level) return D;
    if (level % D.level) throw domain_error("lift: level must be a multiple");
    const Embedding& e = Embedding::get(C.level_field(D.level), C.level_field(level));
    EffectiveDivisor out;
    out.level = level;
    for (const auto& [P, k] : D.pts) out.pts.emplace_back(AffPoint{e(P.t), e(P.z)}, k);
    return normalize(out);
}

EffectiveDivisor divisor_sum(const OnePointCurve& C, const EffectiveDivisor& a, const EffectiveDivisor& b) {
    const int L = lcm_int(a.level, b.level);
    EffectiveDivisor x = lift(C, a, L), y = lift(C, b, L);
    x.pts.insert(x.pts.end(), y.pts.begin(), y.pts.end());
    return normalize(x);
}

EffectiveDivisor divisor_scale(const EffectiveDivisor& a, int k) {
    EffectiveDivisor out = a;
    for (auto& pk : out.pts) pk.second *= k;
    return normalize(out);
}

EffectiveDivisor divisor_from_points(const OnePointCurve& C, const std::vector<std::pair<ClosedPoint, int>>& pts) {
    int L = 1;
    for (const auto& [P, k] : pts) L = lcm_int(L, P.degree);
    EffectiveDivisor out;
    out.level = L;
    for (const auto& [P, k] : pts) {
        const Embedding& e = Embedding::get(C.level_field(P.degree), C.level_field(L));
        for (const auto& Q : P.orbit) out.pts.emplace_back(AffPoint{e(Q.t), e(Q.z)}, k);
    }
    return normalize(out);
}

bool same_divisor(const OnePointCurve& C, const EffectiveDivisor& a, const EffectiveDivisor& b) {
    const int L = lcm_int(a.level, b.level);
    return lift(C, a, L).pts == lift(C, b, L).pts;
}

EffectiveDivisor divisor_from_mumford(const OnePointCurve& C, const MumfordDivisor& D) {
    if (C.n() != 2) throw domain_error("Mumford divisors live on hyperelliptic curves");
    const GF& K = C.field();
    EffectiveDivisor out;
    if (D.u.deg() <= 0) return out;
    const auto fz = factor(D.u);
    int L = 1;
    for (const auto& [pi, e] : fz.factors) L = lcm_int(L, pi.deg());
    out.level = L;
    const GF& big = C.level_field(L);
    const Embedding& emb = Embedding::get(K, big);
    const Poly vb = embed(D.v, emb);
    for (const auto& [pi, e] : fz.factors)
        for (const Elt tau : roots(embed(pi, emb))) out.pts.emplace_back(AffPoint{tau, vb.eval(tau)}, e);
    return normalize(out);
}

std::vector<RRFunction> vanishing_solve(const OnePointCurve& C, int m, const EffectiveDivisor& D) {
    const GF& K = C.field();
    const auto mons = C.basis(m);
    const int ncols = static_cast<int>(mons.size());
    std::vector<RRFunction> out;
    if (ncols == 0) return out;
    const GF& big = C.level_field(D.level);
    const Embedding& e = Embedding::get(K, big);
    const BiPoly G = C.G().embed(e);
    const BiPoly Gt = G.derivativeT(), Gz = G.derivativeX();
    std::vector<std::vector<Elt>> M;
    for (const auto& [P, mult] : D.pts) {
        const auto [ts, zs] = local_param(G, Gt, Gz, P, mult);
        std::vector<Series> tp{Series(static_cast<std::size_t>(mult), 0)}, zp{Series(static_cast<std::size_t>(mult), 0)};
        tp[0][0] = zp[0][0] = 1;
        std::vector<std::vector<Elt>> rows(static_cast<std::size_t>(mult), std::vector<Elt>(ncols, 0));
        for (int c = 0; c < ncols; ++c) {
            const auto [i, j] = mons[c];
            while (static_cast<int>(tp.size()) <= i) tp.push_back(smul(big, tp.back(), ts));
            while (static_cast<int>(zp.size()) <= j) zp.push_back(smul(big, zp.back(), zs));
            const Series s = smul(big, tp[i], zp[j]);
            for (int k = 0; k < mult; ++k) rows[k][c] = s[k];
        }
        for (auto& r : rows) M.push_back(std::move(r));
    }
    for (auto& v : kernel_descended(big, e, std::move(M), ncols)) out.push_back(RRFunction{mons, std::move(v)});
    return out;
}

std::vector<RRFunction> rr_basis(const OnePointCurve& C, int m) { return vanishing_solve(C, m, EffectiveDivisor{}); }

int h0(const OnePointCurve& C, const EffectiveDivisor& D, int k_inf) {
    const int g = C.genus();
    const int m = 2 * g - 2 - k_inf;
    const int special = m >= 0 ? static_cast<int>(vanishing_solve(C, m, D).size()) : 0;
    return D.degree() + k_inf + 1 - g + special;
}

EffectiveDivisor zero_divisor(const OnePointCurve& C, const RRFunction& f) {
    const GF& K = C.field();
    const BiPoly fb = to_bipoly(K, f);
    if (fb.is_zero()) throw domain_error("zero divisor of the zero function");
    const Poly N = resultant_in_X(C.G(), fb);
    EffectiveDivisor out;
    if (N.deg() <= 0) return out;
    std::vector<EffectiveDivisor> parts;
    for (const auto& [pi, e] : factor(N).factors) {
        int L = pi.deg();
        while (true) {
            const GF& big = C.level_field(L);
            const Embedding& emb = Embedding::get(K, big);
            const BiPoly G = C.G().embed(emb), fB = fb.embed(emb);
            const BiPoly Gt = G.derivativeT(), Gz = G.derivativeX();
            EffectiveDivisor part;
            part.level = L;
            int need = 1;
            for (const Elt tau : roots(embed(pi, emb))) {
                const Poly h = gcd(G.spec_t(tau), fB.spec_t(tau));
                for (const auto& [g, m] : factor(h).factors) need = lcm_int(need, g.deg());
                if (need > 1) break;
                for (const Elt xi : roots(h)) {
                    const AffPoint P{tau, xi};
                    const int prec = e * C.n() + 1;
                    const auto [ts, zs] = local_param(G, Gt, Gz, P, prec);
                    Series val(static_cast<std::size_t>(prec), 0);
                    for (int j = fB.degX(); j >= 0; --j) {
                        val = smul(big, val, zs);
                        const Series c = spoly(big, fB[j], ts);
                        for (int k = 0; k < prec; ++k) val[k] = big.add(val[k], c[k]);
                    }
                    int ordv = 0;
                    while (ordv < prec && val[ordv] == 0) ++ordv;
                    if (ordv == prec) throw domain_error("zero_divisor: order exceeds norm bound");
                    part.pts.emplace_back(P, ordv);
                }
            }
            if (need > 1) {
                L *= need;
                continue;
            }
            parts.push_back(normalize(part));
            break;
        }
    }
    for (const auto& p : parts) out = out.empty() ? p : divisor_sum(C, out, p);
    return out;
}

EquivalenceResult divisor_equivalent(const OnePointCurve& C, const EffectiveDivisor& D, const EffectiveDivisor& E) {
    if (D.degree() != E.degree()) throw domain_error("divisor_equivalent: degree mismatch");
    const GF& K = C.field();
    EquivalenceResult res;
    if (E.empty()) {
        res.equivalent = D.empty();
        res.sigma = Poly::constant(K, 1);
        if (res.equivalent) res.rho = RRFunction{{{0, 0}}, {1}};
        return res;
    }
    int L = lcm_int(D.level, E.level);
    while (true) {
        const EffectiveDivisor EL = lift(C, E, L);
        const GF& big = C.level_field(L);
        const Embedding& emb = Embedding::get(K, big);
        const BiPoly G = C.G().embed(emb);
        // Fibres of t over the support of E, with ramification multiplicities.
        std::map<Elt, std::vector<std::pair<Elt, int>>> fibre;
        int need = 1;
        for (const auto& [P, m] : EL.pts) {
            if (fibre.count(P.t)) continue;
            const auto fz = factor(G.spec_t(P.t));
            std::vector<std::pair<Elt, int>> pts;
            for (const auto& [g, k] : fz.factors) {
                if (g.deg() > 1) need = lcm_int(need, g.deg());
                else pts.emplace_back(big.neg(g[0]), k);
            }
            fibre[P.t] = pts;
        }
        if (need > 1) {
            L *= need;
            continue;
        }
        std::map<Elt, int> mt;
        std::map<AffPoint, int> emult;
        for (const auto& [P, m] : EL.pts) emult[P] = m;
        for (const auto& [tau, pts] : fibre) {
            int best = 0;
            for (const auto& [xi, k] : pts) {
                const auto it = emult.find(AffPoint{tau, xi});
                if (it != emult.end()) best = std::max(best, (it->second + k - 1) / k);
            }
            mt[tau] = best;
        }
        Poly sig = Poly::constant(big, 1);
        EffectiveDivisor target = lift(C, D, L);
        for (const auto& [tau, pts] : fibre) {
            sig *= pow(Poly(big, {big.neg(tau), 1}), static_cast<unsigned>(mt[tau]));
            for (const auto& [xi, k] : pts) {
                const AffPoint P{tau, xi};
                const int extra = k * mt[tau] - (emult.count(P) ? emult[P] : 0);
                if (extra < 0) throw domain_error("divisor_equivalent: fibre multiplicity underflow");
                if (extra) target.pts.emplace_back(P, extra);
            }
        }
        target = normalize(target);
        std::vector<Elt> sc(sig.coeffs().size());
        for (std::size_t i = 0; i < sc.size(); ++i) {
            const auto v = emb.pull(sig.coeffs()[i]);
            if (!v) throw domain_error("divisor_equivalent: auxiliary denominator not rational");
            sc[i] = *v;
        }
        res.sigma = Poly(K, std::move(sc));
        const int N = C.n() * res.sigma.deg();
        const auto sol = vanishing_solve(C, N, target);
        res.equivalent = !sol.empty();
        if (res.equivalent) res.rho = sol.front();
        return res;
    }
}

std::vector<EffectiveDivisor> effective_divisors(const OnePointCurve& C, int k) {
    std::vector<ClosedPoint> pts;
    for (int d = 1; d <= k; ++d) {
        auto cp = C.closed_points(d);
        pts.insert(pts.end(), cp.begin(), cp.end());
    }
    std::vector<EffectiveDivisor> out;
    std::vector<std::pair<ClosedPoint, int>> cur;
    // Multisets of closed points with total degree k, by nondecreasing index.
    auto rec = [&](auto&& self, std::size_t start, int rem) -> void {
        if (rem == 0) {
            out.push_back(divisor_from_points(C, cur));
            return;
        }
        for (std::size_t i = start; i < pts.size(); ++i) {
            const int d = pts[i].degree;
            for (int m = 1; m * d <= rem; ++m) {
                cur.emplace_back(pts[i], m);
                self(self, i + 1, rem - m * d);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace ffd
