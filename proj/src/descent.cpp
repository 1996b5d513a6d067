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

#include "ffdescent/descent.hpp"

#include <algorithm>
#include <random>

#include "ffdescent/factor.hpp"

namespace ffd {

namespace {

BiPoly reduce(const BiPoly& f, const BiPoly& z) { return divmodX(z, f).second; }

BiPoly constant_bipoly(const GF& K, const Poly& c) { return BiPoly(K, {c}); }

// Clear denominators of a0 + a1 X + ... by a square, keeping the class.
BiPoly clear_by_square(const GF& K, const std::vector<RatFunc>& c) {
    Poly L = Poly::constant(K, 1);
    for (const auto& a : c) L = L / gcd(L, a.den()) * a.den();
    const RatFunc L2(L * L);
    std::vector<Poly> out;
    for (const auto& a : c) {
        const RatFunc v = a * L2;
        out.push_back(v.num());
    }
    return BiPoly(K, std::move(out));
}

// Odd s with q^(2s) >= 400, so specializations range over a non-tiny field.
const GF& specialization_field(const GF& K) {
    int s = 1;
    double order = static_cast<double>(K.q()) * static_cast<double>(K.q());
    while (order < 400) {
        s += 2;
        order *= static_cast<double>(K.q()) * static_cast<double>(K.q()) * static_cast<double>(K.q()) *
                 static_cast<double>(K.q());
    }
    return GF::get(K.p(), K.n() * 2 * s);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(i)};
    std::uint64_t out[1];
    ss.generate(reinterpret_cast<std::uint32_t*>(out), reinterpret_cast<std::uint32_t*>(out) + 2);
    return out[0];
}

// Returns +1 (all residues square), -1 (some non-square) or 0 (degenerate point).
int trial_at(const BiPoly& f, const BiPoly& z, Elt a, const Embedding& e) {
    const GF& B = e.big();
    const Poly fa = f.spec_t(a, e);
    if (gcd(fa, fa.derivative()).deg() > 0) return 0;
    const Poly za = z.spec_t(a, e);
    int verdict = 1;
    for (const auto& [g, m] : factor(fa).factors) {
        const Elt r = resultant(g, za);
        if (r == 0) return 0;
        if (B.chi(r) < 0) verdict = -1;
    }
    return verdict;
}

BiPoly substitute_Y2(const BiPoly& S) {
    const GF& K = S.field();
    std::vector<Poly> c(static_cast<std::size_t>(2 * S.degX()) + 1, Poly(K));
    for (int i = 0; i <= S.degX(); ++i) c[2 * i] = S[i];
    return BiPoly(K, std::move(c));
}

// g(-Y) made monic.
BiPoly reflect(const BiPoly& g) {
    const GF& K = g.field();
    std::vector<Poly> c(g.coeffs());
    for (int i = 0; i <= g.degX(); ++i)
        if ((g.degX() - i) % 2) c[i] = -c[i];
    (void)K;
    return BiPoly(g.field(), std::move(c));
}

}  // namespace

Poly DescentClassRep::norm() const { return resultant_in_X(f, z); }

DescentClassRep make_rep(const BiPoly& f, const BiPoly& z) {
    if (!f.is_monic()) throw domain_error("descent: f must be monic");
    return DescentClassRep{f, reduce(f, z)};
}

DescentClassRep rep_mul(const DescentClassRep& a, const DescentClassRep& b) {
    if (!(a.f == b.f)) throw domain_error("descent: representatives of different models");
    return DescentClassRep{a.f, reduce(a.f, a.z * b.z)};
}

DescentClassRep delta(const HyperellipticModel& m, const CurvePoint& P) {
    const GF& K = m.field();
    if (P.y * P.y != m.eval(P.x)) throw domain_error("delta: point not on curve");
    const BiPoly f = m.fpoly();
    std::vector<RatFunc> c(static_cast<std::size_t>(m.d), RatFunc(K));
    c[0] = P.x;
    c[1] = -RatFunc(Poly::constant(K, 1));
    if (P.y.is_zero()) {
        // Synthetic division f(X) / (X - x0).
        RatFunc q(Poly::constant(K, 1));
        c[m.d - 1] = c[m.d - 1] + q;
        for (int k = m.d - 1; k >= 1; --k) {
            q = m.f[k] + P.x * q;
            c[k - 1] = c[k - 1] + q;
        }
    }
    return make_rep(f, clear_by_square(K, c));
}

bool is_square_geometric(const DescentClassRep& z, const SquareTestOptions& opt) {
    const GF& K = z.f.field();
    const GF& B = specialization_field(K);
    const Embedding& e = Embedding::get(K, B);
    for (int i = 0; i < opt.trials; ++i) {
        std::mt19937_64 rng(derive_seed(opt.seed, static_cast<std::uint64_t>(i)));
        std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(B.q() - 1));
        int v = 0;
        for (int tries = 0; tries < 256 && v == 0; ++tries) v = trial_at(z.f, z.z, pick(rng), e);
        if (v == 0) throw domain_error("is_square_geometric: no usable specialization found");
        if (v < 0) return false;
    }
    return true;
}

BiPoly characteristic_polynomial(const DescentClassRep& z) {
    const GF& K = z.f.field();
    const int d = z.f.degX();
    if (d >= K.p()) throw domain_error("characteristic polynomial requires p > d");
    using Mat = std::vector<std::vector<Poly>>;
    Mat A(static_cast<std::size_t>(d), std::vector<Poly>(static_cast<std::size_t>(d), Poly(K)));
    BiPoly col = z.z;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) A[i][j] = col.coeff(i);
        col = reduce(z.f, col * BiPoly(K, {Poly(K), Poly::constant(K, 1)}));
    }
    auto mul = [&](const Mat& X, const Mat& Y) {
        Mat R(static_cast<std::size_t>(d), std::vector<Poly>(static_cast<std::size_t>(d), Poly(K)));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k)
                if (!X[i][k].is_zero())
                    for (int j = 0; j < d; ++j) R[i][j] += X[i][k] * Y[k][j];
        return R;
    };
    // Faddeev-LeVerrier.
    std::vector<Poly> c(static_cast<std::size_t>(d) + 1, Poly(K));
    c[d] = Poly::constant(K, 1);
    Mat M(static_cast<std::size_t>(d), std::vector<Poly>(static_cast<std::size_t>(d), Poly(K)));
    for (int k = 1; k <= d; ++k) {
        M = mul(A, M);
        for (int i = 0; i < d; ++i) M[i][i] += c[d - k + 1];
        const Mat AM = mul(A, M);
        Poly tr(K);
        for (int i = 0; i < d; ++i) tr += AM[i][i];
        c[d - k] = -(tr * Poly::constant(K, K.inv(K.from_int(k))));
    }
    return BiPoly(K, std::move(c));
}

OracleResult is_square_oracle(const DescentClassRep& z, int degree_budget) {
    OracleResult res;
    if (z.z.degT() > degree_budget) return res;
    const GF& K = z.f.field();
    const GF& K2 = GF::get(K.p(), 2 * K.n());
    const Embedding& e = Embedding::get(K, K2);
    // Rescale by squares until the characteristic polynomial is squarefree.
    std::vector<BiPoly> mults{constant_bipoly(K, Poly::constant(K, 1))};
    for (Elt c = 0; c < K.q(); ++c) {
        const BiPoly l(K, {Poly::constant(K, c), Poly::constant(K, 1)});
        mults.push_back(l * l);
    }
    for (Elt c = 0; c < K.q(); ++c) {
        const BiPoly l(K, {Poly(K, {c, 1}), Poly::constant(K, 1)});
        mults.push_back(l * l);
    }
    for (const auto& m : mults) {
        const DescentClassRep zm = make_rep(z.f, z.z * m);
        const BiPoly S = characteristic_polynomial(zm);
        if (S[0].is_zero()) throw domain_error("is_square_oracle: element is not a unit");
        const BiPoly S2 = S.embed(e);
        if (discriminant_in_X(S2).is_zero()) continue;
        const BiPoly P = substitute_Y2(S2);
        const auto fs = factor_bivariate(S2);
        const auto fp = factor_bivariate(P);
        res.charpoly = S;
        if (fp.size() == 2 * fs.size()) {
            res.status = SquareStatus::square;
            BiPoly G(K2, {Poly::constant(K2, 1)});
            for (const auto& g : fp) {
                const BiPoly r = reflect(g);
                if (!(r == g) && !(r.coeffs() < g.coeffs())) G = G * g;
            }
            res.witness = G;
        } else {
            res.status = SquareStatus::nonsquare;
        }
        return res;
    }
    throw domain_error("is_square_oracle: no squarefree rescaling found");
}

bool same_class(const DescentClassRep& a, const DescentClassRep& b, const SameClassOptions& opt) {
    const DescentClassRep ab = rep_mul(a, b);
    const GF& K = ab.f.field();
    if (ab.f.degX() < K.p() && ab.z.degT() <= opt.oracle_budget) {
        const OracleResult r = is_square_oracle(ab, opt.oracle_budget);
        return r.status == SquareStatus::square;
    }
    return is_square_geometric(ab, opt.mc);
}

FiberPartition group_fibers(const HyperellipticModel& m, const std::vector<CurvePoint>& pts,
                            const SameClassOptions& opt) {
    FiberPartition out;
    std::vector<DescentClassRep> reps;
    std::vector<DescentClassRep> fiber_rep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const DescentClassRep z = delta(m, pts[i]);
        bool placed = false;
        for (std::size_t k = 0; k < out.fibers.size() && !placed; ++k) {
            if (z.z == fiber_rep[k].z || same_class(z, fiber_rep[k], opt)) {
                out.fibers[k].push_back(static_cast<int>(i));
                placed = true;
            }
        }
        if (!placed) {
            out.fibers.push_back({static_cast<int>(i)});
            fiber_rep.push_back(z);
        }
    }
    for (const auto& f : out.fibers) out.max_fiber = std::max(out.max_fiber, static_cast<int>(f.size()));
    return out;
}

int h1_dim(int gC, int s) {
    if (gC < 0 || s < 0) throw domain_error("h1_dim: negative input");
    return s == 0 ? 2 * gC : 2 * gC + s - 1;
}

}  // namespace ffd
