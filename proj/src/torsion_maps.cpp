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

#include "ffdescent/torsion_maps.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "ffdescent/descent.hpp"
#include "ffdescent/factor.hpp"
#include "ffdescent/jacobian.hpp"

namespace ffd {

namespace {

// Basis of the right kernel of M (rows of length ncols) over K.
std::vector<std::vector<Elt>> nullspace(const GF& K, std::vector<std::vector<Elt>> M, int ncols) {
    std::vector<int> pivcol;
    int r = 0;
    const int nrows = static_cast<int>(M.size());
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (M[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[r], M[piv]);
        const Elt inv = K.inv(M[r][c]);
        for (auto& x : M[r]) x = K.mul(x, inv);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || !M[i][c]) continue;
            const Elt f = M[i][c];
            for (int k = 0; k < ncols; ++k) M[i][k] = K.sub(M[i][k], K.mul(f, M[r][k]));
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(static_cast<std::size_t>(ncols), false);
    for (int c : pivcol) is_piv[c] = true;
    std::vector<std::vector<Elt>> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Elt> v(static_cast<std::size_t>(ncols), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = K.neg(M[i][f]);
        out.push_back(std::move(v));
    }
    return out;
}

BiPoly as_bipoly(const GF& K, const RRFunction& f) {
    int dz = 0;
    for (const auto& m : f.monomials) dz = std::max(dz, m.second);
    std::vector<Poly> c(static_cast<std::size_t>(dz) + 1, Poly(K));
    for (std::size_t k = 0; k < f.monomials.size(); ++k)
        if (f.coef[k]) c[f.monomials[k].second] += Poly::monomial(K, f.coef[k], f.monomials[k].first);
    return BiPoly(K, std::move(c));
}

// Split f into the z^0 part and the rest.
std::pair<Poly, RRFunction> split_t_part(const GF& K, const RRFunction& f) {
    Poly x(K);
    RRFunction rest;
    for (std::size_t k = 0; k < f.monomials.size(); ++k) {
        if (!f.coef[k]) continue;
        if (f.monomials[k].second == 0)
            x += Poly::monomial(K, f.coef[k], f.monomials[k].first);
        else {
            rest.monomials.push_back(f.monomials[k]);
            rest.coef.push_back(f.coef[k]);
        }
    }
    return {x, rest};
}

RRFunction scaled(const GF& K, RRFunction f, Elt s) {
    for (auto& c : f.coef) c = K.mul(c, s);
    return f;
}

void append_poly(RRFunction& f, const Poly& a, int j) {
    for (int i = 0; i <= a.deg(); ++i)
        if (a[i]) {
            f.monomials.emplace_back(i, j);
            f.coef.push_back(a[i]);
        }
}

// v3 = v mod u with v3^2 = F mod u^3, by Newton steps; needs gcd(u, F) = 1.
Poly hensel_cube(const Poly& F, const Poly& u, const Poly& v) {
    const GF& K = F.field();
    const Poly u3 = pow(u, 3u);
    Poly w = v, mod = u;
    for (int step = 0; step < 2; ++step) {
        mod = mod * mod;
        const Poly inv = invmod((w * Poly::constant(K, 2)) % mod, mod);
        w = (w + ((F - w * w) % mod) * inv) % mod;
    }
    return w % u3;
}

// phi = a y + b with a monic and b = -a v3 mod u^3, deg b <= 3k/2.
std::optional<std::pair<Poly, Poly>> hensel_phi(const Poly& F, const MumfordDivisor& P, int g) {
    const GF& K = F.field();
    const int k = P.u.deg();
    const int A = (3 * k - 2 * g - 1) / 2;
    if (3 * k - 2 * g - 1 < 0) return std::nullopt;
    const int B = 3 * k / 2;
    const Poly u3 = pow(P.u, 3u);
    const Poly v3 = hensel_cube(F, P.u, P.v);
    std::vector<Poly> r;
    for (int i = 0; i <= A; ++i) r.push_back((-(Poly::monomial(K, 1, i) * v3)) % u3);
    std::vector<std::vector<Elt>> M;
    for (int e = B + 1; e < 3 * k; ++e) {
        std::vector<Elt> row;
        for (int i = 0; i <= A; ++i) row.push_back(r[i][e]);
        M.push_back(std::move(row));
    }
    const auto ker = nullspace(K, std::move(M), A + 1);
    if (ker.empty()) return std::nullopt;
    Poly a(K, ker.front());
    a = a.monic();
    const Poly b = (-(a * v3)) % u3;
    return std::make_pair(a, b);
}

std::optional<std::pair<Poly, Poly>> rr_phi(const OnePointCurve& C, const EffectiveDivisor& D) {
    const GF& K = C.field();
    const int k = D.degree();
    const auto sols = vanishing_solve(C, 3 * k, divisor_scale(D, 3));
    if (sols.empty()) return std::nullopt;
    auto [b, rest] = split_t_part(K, sols.front());
    Poly a(K);
    for (std::size_t i = 0; i < rest.monomials.size(); ++i)
        a += Poly::monomial(K, rest.coef[i], rest.monomials[i].first);
    if (a.is_zero()) return std::nullopt;
    const Elt s = K.inv(a.lc());
    return std::make_pair(a.scaled(s), b.scaled(s));
}

// Smallest nonsquare by element index.
Elt first_nonsquare(const GF& K) {
    for (Elt x = 1; x < K.q(); ++x)
        if (K.chi(x) < 0) return x;
    throw domain_error("field without nonsquares");
}

}  // namespace

RRFunction TorsionWitness::phi() const {
    RRFunction f;
    if (kind == WitnessKind::hyperelliptic3) {
        append_poly(f, y0, 0);
        append_poly(f, target_a, 1);
    } else {
        append_poly(f, x0, 0);
        const GF& K = x0.field();
        for (std::size_t i = 0; i < psi.monomials.size(); ++i) {
            f.monomials.push_back(psi.monomials[i]);
            f.coef.push_back(K.neg(psi.coef[i]));
        }
    }
    return f;
}

std::string TorsionWitness::str() const {
    std::ostringstream o;
    if (kind == WitnessKind::hyperelliptic3)
        o << "a=" << target_a.str() << " x0=" << x0.str() << " y0=" << y0.str() << " c=" << c;
    else
        o << "F_psi=" << F_psi.str() << " x0=" << x0.str() << " y0=" << y0.str() << " c=" << c;
    return o.str();
}

bool witness_degree_caps(const TorsionWitness& w) {
    const int g = w.genus;
    if (w.kind == WitnessKind::hyperelliptic3) {
        if (w.target_a.is_zero() || 2 * w.target_a.deg() > g - 1) return false;
        return w.x0.deg() <= g;
    }
    if (3 * w.x0.deg() > 2 * g) return false;
    for (int i = 0; i < 3; ++i)
        if (3 * w.F_psi.coeff(i).deg() > 2 * g * (3 - i)) return false;
    return true;
}

TorsionWitness three_torsion_to_point(const Poly& F, const MumfordDivisor& P) {
    const GF& K = F.field();
    if (K.p() < 5) throw domain_error("three_torsion_to_point requires p >= 5");
    const HyperellipticJacobian J(F);
    if (P.is_zero()) throw domain_error("three_torsion_to_point: identity class");
    if (!J.is_valid(P)) throw domain_error("three_torsion_to_point: invalid Mumford divisor");
    if (!J.mul(3, P).is_zero()) throw domain_error("no such phi: class is not 3-torsion");
    const OnePointCurve C = OnePointCurve::hyperelliptic(F);
    TorsionWitness w;
    w.kind = WitnessKind::hyperelliptic3;
    w.genus = J.genus();
    w.mumford = P;
    w.D = divisor_from_mumford(C, P);
    w.class_degree = P.u.deg();

    std::optional<std::pair<Poly, Poly>> ab;
    if (gcd(P.u, F).deg() == 0) {
        ab = hensel_phi(F, P, w.genus);
        w.route = LiftRoute::hensel;
    } else {
        ab = rr_phi(C, w.D);
        w.route = LiftRoute::riemann_roch;
    }
    if (!ab) throw domain_error("no such phi within the degree caps (route " +
                                std::string(w.route == LiftRoute::hensel ? "hensel" : "riemann-roch") + ")");
    auto [a, b] = *ab;
    const Poly u3 = pow(P.u, 3u);
    const Poly N = b * b - a * a * F;
    Elt c = N.lc();
    if (N.is_zero() || !(N == u3.scaled(c))) throw domain_error("three_torsion_to_point: norm is not c u^3");
    // phi -> s phi multiplies c by s^2; move c to 1 or the first nonsquare.
    const Elt target = K.chi(c) > 0 ? 1 : first_nonsquare(K);
    const Elt s = *K.sqrt(K.div(target, c));
    a = a.scaled(s);
    b = b.scaled(s);
    c = target;
    w.a = a;
    w.b = b;
    w.c = c;
    w.target_a = a.scaled(c);
    w.x0 = P.u.scaled(c);
    w.y0 = b.scaled(c);
    if (!(w.y0 * w.y0 == pow(w.x0, 3u) + w.target_a * w.target_a * F))
        throw domain_error("three_torsion_to_point: image point fails the curve equation");
    return w;
}

BiPoly minimal_polynomial(const OnePointCurve& C, const RRFunction& psi) {
    return characteristic_polynomial(make_rep(C.G(), as_bipoly(C.field(), psi)));
}

std::vector<std::pair<int, int>> psi_basis(const OnePointCurve& C) {
    std::vector<std::pair<int, int>> out;
    for (const auto& m : C.basis(2 * C.genus()))
        if (m.second > 0) out.push_back(m);
    return out;
}

std::vector<PsiModel> trigonal_family(const OnePointCurve& C) {
    if (C.n() != 3) throw domain_error("trigonal_family requires a trigonal model");
    const GF& K = C.field();
    const auto mons = psi_basis(C);
    const int n = static_cast<int>(mons.size());
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= K.q();
    std::vector<PsiModel> out;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        RRFunction psi{mons, std::vector<Elt>(static_cast<std::size_t>(n))};
        std::uint64_t r = idx;
        for (int i = 0; i < n; ++i, r /= K.q()) psi.coef[i] = static_cast<Elt>(r % K.q());
        out.push_back({psi, minimal_polynomial(C, psi)});
    }
    return out;
}

std::vector<TorsionWitness> three_torsion_witnesses(const Poly& F, const std::vector<MumfordDivisor>& classes,
                                                    bool parallel) {
    const long n = static_cast<long>(classes.size());
    std::vector<TorsionWitness> out(classes.size());
    std::vector<std::exception_ptr> err(classes.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = three_torsion_to_point(F, classes[i]);
        } catch (...) {
            err[i] = std::current_exception();
        }
    }
    for (const auto& e : err)
        if (e) std::rethrow_exception(e);
    return out;
}

TorsionWitness two_torsion_trigonal_to_point(const OnePointCurve& C, const EffectiveDivisor& D) {
    const GF& K = C.field();
    if (C.n() != 3) throw domain_error("two_torsion_trigonal_to_point requires a trigonal model");
    if (K.p() < 5) throw domain_error("two_torsion_trigonal_to_point requires p >= 5");
    const int k = D.degree(), g = C.genus();
    if (k > g) throw domain_error("class representative of degree > g");
    if (k == 0) throw domain_error("two_torsion_trigonal_to_point: identity class");
    const auto sols = vanishing_solve(C, 2 * k, divisor_scale(D, 2));
    if (sols.empty()) throw domain_error("no such phi: class is not 2-torsion");
    RRFunction phi = sols.front();
    // Leading monomial (largest pole order) gets coefficient 1.
    int lead = -1;
    for (std::size_t i = 0; i < phi.monomials.size(); ++i)
        if (phi.coef[i] &&
            (lead < 0 || C.pole_order(phi.monomials[i].first, phi.monomials[i].second) >
                             C.pole_order(phi.monomials[lead].first, phi.monomials[lead].second)))
            lead = static_cast<int>(i);
    phi = scaled(K, phi, K.inv(phi.coef[lead]));
    auto [x0, rest] = split_t_part(K, phi);
    if (rest.monomials.empty()) throw domain_error("psi = 0: the class is trivial");
    const Poly N = resultant_in_X(C.G(), as_bipoly(K, phi));
    const Elt c = N.lc();
    const auto y = poly_sqrt(N.scaled(K.inv(c)));
    if (!y) throw domain_error("two_torsion_trigonal_to_point: norm is not c y0^2");

    TorsionWitness w;
    w.kind = WitnessKind::trigonal2;
    w.genus = g;
    w.D = D;
    w.class_degree = k;
    w.c = c;
    w.psi = scaled(K, rest, K.neg(c));  // phi = x0 - psi
    w.x0 = x0.scaled(c);
    w.y0 = y->scaled(K.mul(c, c));
    w.F_psi = minimal_polynomial(C, w.psi);
    if (!(w.F_psi.eval_x(w.x0) == w.y0 * w.y0))
        throw domain_error("two_torsion_trigonal_to_point: image point fails the curve equation");
    return w;
}

EffectiveDivisor recover_divisor(const OnePointCurve& C, const TorsionWitness& w) {
    const int n = w.kind == WitnessKind::hyperelliptic3 ? 3 : 2;
    if (w.kind == WitnessKind::hyperelliptic3) {
        if (C.n() != 2) throw domain_error("recover_divisor: curve kind mismatch");
        const Poly F = -C.G()[0];
        if (!(w.y0 * w.y0 == pow(w.x0, 3u) + w.target_a * w.target_a * F))
            throw domain_error("inconsistent witness: point not on y^2 = x^3 + a^2 F");
    } else {
        if (C.n() != 3) throw domain_error("recover_divisor: curve kind mismatch");
        if (!(w.F_psi.eval_x(w.x0) == w.y0 * w.y0))
            throw domain_error("inconsistent witness: point not on y^2 = F_psi(x)");
    }
    EffectiveDivisor Z = zero_divisor(C, w.phi());
    for (auto& pk : Z.pts) {
        if (pk.second % n) throw domain_error("inconsistent witness: multiplicity not divisible by " + std::to_string(n));
        pk.second /= n;
    }
    return Z;
}

MumfordDivisor recover_class(const Poly& F, const TorsionWitness& w) {
    if (w.kind != WitnessKind::hyperelliptic3) throw domain_error("recover_class: hyperelliptic witness required");
    const OnePointCurve C = OnePointCurve::hyperelliptic(F);
    const EffectiveDivisor D = recover_divisor(C, w);
    const Poly u = w.x0.monic();
    if (u.deg() != D.degree()) throw domain_error("inconsistent witness: deg x0 differs from the recovered degree");
    const HyperellipticJacobian J(F);
    auto matches = [&](const MumfordDivisor& M) { return J.is_valid(M) && same_divisor(C, divisor_from_mumford(C, M), D); };
    if (u.deg() == 0) return J.zero();
    if (gcd(w.target_a, u).deg() == 0) {
        const MumfordDivisor M{u, (-(w.y0 * invmod(w.target_a % u, u))) % u};
        if (matches(M)) return M;
        throw domain_error("inconsistent witness: recovered divisor is not reduced");
    }
    // a shares a root with u: scan v with deg v < deg u.
    const GF& K = F.field();
    const int k = u.deg();
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= K.q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Elt> vc(static_cast<std::size_t>(k));
        std::uint64_t r = idx;
        for (int i = 0; i < k; ++i, r /= K.q()) vc[i] = static_cast<Elt>(r % K.q());
        const MumfordDivisor M{u, Poly(K, vc)};
        if (matches(M)) return M;
    }
    throw domain_error("inconsistent witness: no Mumford divisor matches");
}

HyperellipticModel build_Ea(const Poly& F, const Poly& a) {
    const GF& K = F.field();
    if (a.is_zero()) throw domain_error("build_Ea: a = 0 gives a singular cubic");
    return validate_model(K, {RatFunc(a * a * F), RatFunc(Poly(K)), RatFunc(Poly(K)), RatFunc(Poly::constant(K, 1))});
}

HyperellipticModel build_Epsi(const BiPoly& F_psi) {
    if (F_psi.degX() != 3 || !F_psi.is_monic()) throw domain_error("build_Epsi: monic cubic required");
    return validate_model(F_psi);
}

std::vector<EffectiveDivisor> reduced_representatives(const OnePointCurve& C) {
    std::vector<EffectiveDivisor> out;
    for (int k = 0; k <= C.genus(); ++k)
        for (auto& D : effective_divisors(C, k))
            if (h0(C, D, -1) == 0) out.push_back(std::move(D));
    return out;
}

bool is_torsion_class(const OnePointCurve& C, const EffectiveDivisor& D, int n) {
    return !vanishing_solve(C, n * D.degree(), divisor_scale(D, n)).empty();
}

}  // namespace ffd
