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

#include "ffdescent/points.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ffdescent/factor.hpp"

namespace ffd {

namespace {

void require_polynomial(const HyperellipticModel& m) {
    if (!m.polynomial) throw domain_error("enumeration requires coefficients in K[t]");
}

Poly poly_from_digits(const GF& K, std::uint64_t idx, int ncoef) {
    std::vector<Elt> c(static_cast<std::size_t>(ncoef));
    for (int i = 0; i < ncoef; ++i, idx /= K.q()) c[i] = static_cast<Elt>(idx % K.q());
    return Poly(K, std::move(c));
}

void emit(const BiPoly& f, const Poly& x0, std::vector<CurvePoint>& out) {
    const Poly F = f.eval_x(x0);
    if (F.is_zero()) {
        out.push_back({RatFunc(x0), RatFunc(Poly(x0.field()))});
        return;
    }
    const auto y = poly_sqrt(F);
    if (!y) return;
    out.push_back({RatFunc(x0), RatFunc(*y)});
    out.push_back({RatFunc(x0), RatFunc(-*y)});
}

// A sieving place: a root alpha of a monic irreducible of degree 1 or 2,
// with the table of x-values whose image under f(alpha, .) is a square or 0.
struct SievePlace {
    const GF* R = nullptr;
    const Embedding* emb = nullptr;
    Elt alpha = 0;
    std::vector<std::uint8_t> admissible;  // indexed by R elements
};

std::vector<SievePlace> sieve_places(const BiPoly& f, bool linear, bool quadratic) {
    const GF& K = f.field();
    std::vector<SievePlace> out;
    auto make = [&](const GF& R, Elt a) {
        SievePlace s;
        s.R = &R;
        s.emb = &Embedding::get(K, R);
        s.alpha = a;
        const Poly fa = f.spec_t(a, *s.emb);
        s.admissible.resize(R.q());
        for (Elt v = 0; v < R.q(); ++v) s.admissible[v] = R.chi(fa.eval(v)) >= 0;
        out.push_back(std::move(s));
    };
    if (linear)
        for (Elt a = 0; a < K.q(); ++a) make(K, a);
    if (quadratic) {
        const GF& R = GF::get(K.p(), 2 * K.n());
        const Embedding& e = Embedding::get(K, R);
        for (Elt a = 0; a < R.q(); ++a) {
            if (e.pull(a)) continue;
            if (R.pow(a, K.q()) < a) continue;  // one root per conjugate pair
            make(R, a);
        }
    }
    return out;
}

struct DegreePlan {
    int D = 0;
    bool skip = false;
    std::vector<Elt> lcset;
};

DegreePlan plan_degree(const HyperellipticModel& m, int D) {
    const GF& K = m.field();
    DegreePlan p;
    p.D = D;
    int others = -1;
    for (int i = 0; i < m.d; ++i)
        if (!m.f[i].is_zero()) others = std::max(others, m.f[i].num().deg() + i * D);
    const bool dominant = m.d * D > others;
    if (dominant && (m.d * D) % 2) {
        p.skip = true;
        return p;
    }
    for (Elt a = 1; a < K.q(); ++a)
        if (!dominant || K.chi(a) > 0) p.lcset.push_back(a);
    return p;
}

// Scan x0 = L + M Q over deg Q = e, lc(Q) in lcset, with the lowest digit of Q
// resolved by one mask lookup per sieving place.
class DegreeScanner {
   public:
    DegreeScanner(const BiPoly& f, const Poly& M, int e, const std::vector<Elt>& lcset, std::vector<SievePlace> pl)
        : f_(f), K_(f.field()), M_(M), e_(e), lcset_(lcset), places_(std::move(pl)) {
        const Elt q = K_.q();
        lcmask_ = 0;
        for (Elt a : lcset_) lcmask_ |= 1ULL << a;
        fullmask_ = (q == 64) ? ~0ULL : ((1ULL << q) - 1);
        for (auto& s : places_) {
            const GF& R = *s.R;
            const Elt Ma = embed(M_, *s.emb).eval(s.alpha);
            std::vector<std::vector<Elt>> term(static_cast<std::size_t>(e_) + 1, std::vector<Elt>(q));
            Elt pw = 1;
            for (int i = 0; i <= e_; ++i) {
                for (Elt u = 0; u < q; ++u) term[i][u] = R.mul(Ma, R.mul((*s.emb)(u), pw));
                pw = R.mul(pw, s.alpha);
            }
            std::vector<std::uint64_t> maskA(R.q(), 0);
            for (Elt A = 0; A < R.q(); ++A)
                for (Elt u = 0; u < q; ++u)
                    if (s.admissible[R.add(A, term[0][u])]) maskA[A] |= 1ULL << u;
            // Per-transition increments: digit i < e steps u -> u + 1 mod q;
            // the leading digit steps through lcset.
            std::vector<std::vector<Elt>> step(static_cast<std::size_t>(e_) + 1);
            for (int i = 1; i < e_; ++i)
                for (Elt u = 0; u < q; ++u) step[i].push_back(R.sub(term[i][(u + 1) % q], term[i][u]));
            if (e_ >= 1)
                for (std::size_t k = 0; k + 1 < lcset_.size(); ++k)
                    step[e_].push_back(R.sub(term[e_][lcset_[k + 1]], term[e_][lcset_[k]]));
            if (R.q() <= 1024) {
                std::vector<std::uint16_t> add(static_cast<std::size_t>(R.q()) * R.q());
                for (Elt a = 0; a < R.q(); ++a)
                    for (Elt b = 0; b < R.q(); ++b) add[a * R.q() + b] = static_cast<std::uint16_t>(R.add(a, b));
                add_.push_back(std::move(add));
            } else {
                add_.emplace_back();
            }
            terms_.push_back(std::move(term));
            steps_.push_back(std::move(step));
            masks_.push_back(std::move(maskA));
        }
    }

    void scan(const Poly& L, std::vector<CurvePoint>& out, std::uint64_t& survivors) const {
        const Elt q = K_.q();
        const std::size_t np = places_.size();
        std::vector<Elt> A(np);
        std::vector<Elt> dig(static_cast<std::size_t>(e_) + 1, 0);
        std::size_t lc_idx = 0;
        if (e_ >= 1) dig[e_] = lcset_[0];
        for (std::size_t j = 0; j < np; ++j) {
            const SievePlace& s = places_[j];
            Elt a = embed(L, *s.emb).eval(s.alpha);
            for (int i = 1; i <= e_; ++i) a = s.R->add(a, terms_[j][i][dig[i]]);
            A[j] = a;
        }
        const std::uint64_t base = (e_ == 0) ? lcmask_ : fullmask_;
        while (true) {
            std::uint64_t mk = base;
            for (std::size_t j = 0; j < np && mk; ++j) mk &= masks_[j][A[j]];
            while (mk) {
                const int u = __builtin_ctzll(mk);
                mk &= mk - 1;
                dig[0] = static_cast<Elt>(u);
                ++survivors;
                emit(f_, L + M_ * Poly(K_, dig), out);
            }
            // Advance digits 1..e.
            int i = 1;
            for (; i <= e_; ++i) {
                std::size_t which;
                bool carry = false;
                if (i < e_) {
                    which = dig[i];
                    carry = ++dig[i] == q;
                    if (carry) dig[i] = 0;
                } else {
                    which = lc_idx++;
                    if (lc_idx == lcset_.size()) return;
                    dig[i] = lcset_[lc_idx];
                }
                for (std::size_t j = 0; j < np; ++j) {
                    const Elt dlt = steps_[j][i][which];
                    const auto& tab = add_[j];
                    A[j] = tab.empty() ? places_[j].R->add(A[j], dlt) : tab[A[j] * places_[j].R->q() + dlt];
                }
                if (!carry) break;
            }
            if (i > e_) return;
        }
    }

   private:
    const BiPoly& f_;
    const GF& K_;
    Poly M_;
    int e_;
    std::vector<Elt> lcset_;
    std::vector<SievePlace> places_;
    std::vector<std::vector<std::vector<Elt>>> terms_, steps_;
    std::vector<std::vector<std::uint16_t>> add_;
    std::vector<std::vector<std::uint64_t>> masks_;
    std::uint64_t lcmask_ = 0, fullmask_ = 0;
};

double ipow(double b, int e) {
    double r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

void sort_points(std::vector<CurvePoint>& pts) {
    auto key = [](const CurvePoint& P) {
        return std::make_tuple(P.height(), P.x.den(), P.x.num(), P.y.den(), P.y.num());
    };
    std::sort(pts.begin(), pts.end(), [&](const CurvePoint& a, const CurvePoint& b) { return key(a) < key(b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::vector<CurvePoint> enum_integral(const HyperellipticModel& m, int c, const EnumOptions& opt, EnumStats* stats) {
    require_polynomial(m);
    const GF& K = m.field();
    if (K.q() > 64) return enum_integral_reference(m, c, opt.cap);
    std::vector<CurvePoint> out;
    if (c < 0) return out;
    const BiPoly f = m.fpoly();
    const Elt q = K.q();

    // Exact pruning first, then the size estimate against the cap.
    std::vector<std::vector<Elt>> adm(q);
    for (Elt a = 0; a < q; ++a) {
        const Poly fa = f.spec_t(a);
        for (Elt v = 0; v < q; ++v)
            if (K.chi(fa.eval(v)) >= 0) adm[a].push_back(v);
    }
    double tuples = 1;
    for (const auto& s : adm) tuples *= static_cast<double>(s.size());
    std::vector<DegreePlan> plans;
    double total = static_cast<double>(q);
    for (int D = 1; D <= c; ++D) {
        DegreePlan p = plan_degree(m, D);
        if (p.skip) continue;
        const double n = D < static_cast<int>(q) ? p.lcset.size() * ipow(q, D)
                                                : tuples * p.lcset.size() * ipow(q, D - static_cast<int>(q));
        total += n;
        plans.push_back(std::move(p));
    }
    if (stats) stats->candidates = total;
    if (total > opt.cap) {
        std::ostringstream os;
        os << "integral search space " << total << " exceeds cap " << opt.cap;
        throw search_limit_error(os.str(), total);
    }
    std::uint64_t survivors = 0;
    for (Elt a = 0; a < q; ++a) {
        ++survivors;
        emit(f, Poly::constant(K, a), out);
    }
    const auto all_places = sieve_places(f, true, true);
    const auto quad_places = sieve_places(f, false, true);
    for (const auto& p : plans) {
        if (p.D < static_cast<int>(q)) {
            DegreeScanner sc(f, Poly::constant(K, 1), p.D, p.lcset, all_places);
            sc.scan(Poly(K), out, survivors);
            continue;
        }
        bool empty = false;
        for (const auto& s : adm) empty = empty || s.empty();
        if (empty) continue;
        // x0 = L + (t^q - t) Q with L interpolating admissible residues.
        const Poly M = Poly::monomial(K, 1, static_cast<int>(q)) - Poly::x(K);
        std::vector<Poly> lag(q);
        for (Elt a = 0; a < q; ++a) {
            Poly l = Poly::constant(K, 1);
            for (Elt b = 0; b < q; ++b)
                if (b != a) l *= Poly(K, {K.neg(b), 1}) * Poly::constant(K, K.inv(K.sub(a, b)));
            lag[a] = l;
        }
        const DegreeScanner sc(f, M, p.D - static_cast<int>(q), p.lcset, quad_places);
        const long long ntup = static_cast<long long>(tuples);
#pragma omp parallel if (opt.parallel)
        {
            std::vector<CurvePoint> local;
            std::uint64_t surv = 0;
#pragma omp for schedule(dynamic, 8)
            for (long long idx = 0; idx < ntup; ++idx) {
                long long r = idx;
                Poly L(K);
                for (Elt a = 0; a < q; ++a) {
                    const auto& s = adm[a];
                    const Elt v = s[static_cast<std::size_t>(r % static_cast<long long>(s.size()))];
                    r /= static_cast<long long>(s.size());
                    if (v) L += lag[a] * Poly::constant(K, v);
                }
                sc.scan(L, local, surv);
            }
#pragma omp critical
            {
                out.insert(out.end(), local.begin(), local.end());
                survivors += surv;
            }
        }
    }
    if (stats) stats->survivors = survivors;
    sort_points(out);
    return out;
}

std::vector<CurvePoint> enum_integral_reference(const HyperellipticModel& m, int c, double cap) {
    require_polynomial(m);
    std::vector<CurvePoint> out;
    if (c < 0) return out;
    const GF& K = m.field();
    const double n = ipow(K.q(), c + 1);
    if (n > cap) throw search_limit_error("reference search space exceeds cap", n);
    const BiPoly f = m.fpoly();
    const auto N = static_cast<std::uint64_t>(n);
    for (std::uint64_t i = 0; i < N; ++i) emit(f, poly_from_digits(K, i, c + 1), out);
    sort_points(out);
    return out;
}

namespace {

// Points x0 = u / e^2 for the given monic e (deg e >= 1).
void scan_denominator(const HyperellipticModel& m, const BiPoly& f, const Poly& e, int c, bool parallel,
                      std::vector<CurvePoint>& out) {
    const GF& K = m.field();
    const Poly e2 = e * e;
    std::vector<Poly> e2pow{Poly::constant(K, 1)};
    for (int i = 1; i <= m.d; ++i) e2pow.push_back(e2pow.back() * e2);
    const Poly ed = pow(e, static_cast<unsigned>(m.d));
    const auto N = static_cast<long long>(ipow(K.q(), c + 1));
#pragma omp parallel if (parallel)
    {
        std::vector<CurvePoint> local;
#pragma omp for schedule(dynamic, 64)
        for (long long i = 0; i < N; ++i) {
            const Poly u = poly_from_digits(K, static_cast<std::uint64_t>(i), c + 1);
            if (u.is_zero() || gcd(u, e).deg() > 0) continue;
            // H = e^{2d} f(u / e^2).
            Poly H(K), up = Poly::constant(K, 1);
            for (int k = 0; k <= m.d; ++k) {
                H += f[k] * up * e2pow[m.d - k];
                up *= u;
            }
            const RatFunc x0(u, e2);
            if (H.is_zero()) {
                local.push_back({x0, RatFunc(Poly(K))});
                continue;
            }
            const auto Y = poly_sqrt(H);
            if (!Y) continue;
            local.push_back({x0, RatFunc(*Y, ed)});
            local.push_back({x0, RatFunc(-*Y, ed)});
        }
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
}

void monic_polys(const GF& K, int k, const std::function<void(const Poly&)>& fn) {
    const auto N = static_cast<std::uint64_t>(ipow(K.q(), k));
    for (std::uint64_t i = 0; i < N; ++i) {
        std::vector<Elt> c(static_cast<std::size_t>(k) + 1, 1);
        std::uint64_t r = i;
        for (int j = 0; j < k; ++j, r /= K.q()) c[j] = static_cast<Elt>(r % K.q());
        fn(Poly(K, std::move(c)));
    }
}

}  // namespace

std::vector<CurvePoint> enum_rational(const HyperellipticModel& m, int c, const EnumOptions& opt) {
    require_polynomial(m);
    std::vector<CurvePoint> out;
    if (c < 0) return out;
    const GF& K = m.field();
    double n = 0;
    for (int k = 1; 2 * k <= c; ++k) n += ipow(K.q(), k) * ipow(K.q(), c + 1);
    if (n > opt.cap) throw search_limit_error("rational search space exceeds cap", n);
    out = enum_integral(m, c, opt);
    const BiPoly f = m.fpoly();
    for (int k = 1; 2 * k <= c; ++k)
        monic_polys(K, k, [&](const Poly& e) { scan_denominator(m, f, e, c, opt.parallel, out); });
    sort_points(out);
    return out;
}

bool is_s_integral(const RatFunc& z, const std::vector<Place>& S) {
    for (const auto& pl : support(z)) {
        if (valuation(z, pl) >= 0) continue;
        if (std::find(S.begin(), S.end(), pl) == S.end()) return false;
    }
    return true;
}

std::vector<CurvePoint> enum_s_integral(const HyperellipticModel& m, const std::vector<Place>& S, int c,
                                        const EnumOptions& opt) {
    require_polynomial(m);
    const GF& K = m.field();
    if (m.d >= static_cast<int>(K.p())) throw domain_error("S-integral enumeration requires p > d");
    if (m.triviality == Triviality::constant || m.triviality == Triviality::isotrivial)
        throw domain_error("S-integral enumeration requires a non-isotrivial model");
    if (std::find(S.begin(), S.end(), Place::infinity(K)) == S.end())
        throw domain_error("S must contain the place at infinity");
    std::vector<Poly> primes;
    for (const auto& pl : S)
        if (!pl.inf) primes.push_back(pl.pi);
    // Denominators e supported on S with 2 deg e <= c.
    std::vector<Poly> dens{Poly::constant(K, 1)};
    for (const auto& pi : primes) {
        std::vector<Poly> next;
        for (const auto& e : dens)
            for (Poly g = e; 2 * g.deg() <= c; g *= pi) next.push_back(g);
        dens = std::move(next);
    }
    double n = 0;
    for (const auto& e : dens)
        if (e.deg() > 0) n += ipow(K.q(), c + 1);
    if (n > opt.cap) throw search_limit_error("S-integral search space exceeds cap", n);
    std::vector<CurvePoint> out = enum_integral(m, c, opt);
    const BiPoly f = m.fpoly();
    for (const auto& e : dens)
        if (e.deg() > 0) scan_denominator(m, f, e, c, opt.parallel, out);
    sort_points(out);
    return out;
}

EllPoint to_ell(const CurvePoint& P) { return EllPoint::affine(P.x, P.y); }

namespace {

struct ShortData {
    int chi = 0;
    double degj = 0;
};

ShortData short_data(const HyperellipticModel& m) {
    if (m.d != 3) throw domain_error("canonical height requires an elliptic curve");
    if (!m.polynomial || !m.f[2].is_zero())
        throw domain_error("canonical height requires y^2 = x^3 + A x + B with A, B in K[t]");
    if (m.triviality == Triviality::constant) throw domain_error("nonconstant required");
    ShortData s;
    s.chi = comparison_chi(m.f[1].num(), m.f[0].num());
    s.degj = m.j ? degree(*m.j) : 0;
    return s;
}

}  // namespace

HeightEstimate canonical_height(const HyperellipticModel& m, const EllPoint& P, double eps) {
    const ShortData s = short_data(m);
    const EllipticGroup G(m);
    HeightEstimate h;
    if (P.inf) {
        h.torsion = h.conclusive = true;
        return h;
    }
    if (!G.on_curve(P)) throw domain_error("canonical_height: point not on curve");
    constexpr int kMaxDoublings = 16;
    std::vector<EllPoint> seen{P};
    EllPoint Q = P;
    double lo = 0, hi = 1e300, scale = 2;  // scale = 2 * 4^n
    for (int n = 0;; ++n) {
        const double dx = degree(Q.x);
        lo = std::max(lo, (dx - s.degj / 12 - 2 * s.chi) / scale);
        hi = std::min(hi, (dx + 2 * s.chi) / scale);
        h.doublings = n;
        if (hi - lo <= 2 * eps && lo > 0) break;
        if (n == kMaxDoublings) break;
        Q = G.dbl(Q);
        scale *= 4;
        if (Q.inf || std::find(seen.begin(), seen.end(), Q) != seen.end()) {
            h.torsion = h.conclusive = true;
            h.lo = h.hi = h.value = 0;
            h.doublings = n + 1;
            return h;
        }
        seen.push_back(Q);
    }
    h.lo = lo;
    h.hi = hi;
    h.value = (lo + hi) / 2;
    h.conclusive = hi - lo <= 2 * eps;
    return h;
}

ComparisonCheck check_comparison(const HyperellipticModel& m, const CurvePoint& P, double eps) {
    const ShortData s = short_data(m);
    const HeightEstimate h = canonical_height(m, to_ell(P), eps);
    ComparisonCheck c;
    c.lower = -2.0 * s.chi;
    c.upper = s.degj / 12 + 2.0 * s.chi;
    c.middle = P.height() - 2 * h.value;
    c.conclusive = h.conclusive;
    const double slack = 2 * eps;
    c.holds = c.conclusive && c.middle >= c.lower - slack && c.middle <= c.upper + slack;
    return c;
}

DavenportCheck check_davenport(const HyperellipticModel& m, const std::vector<CurvePoint>& pts) {
    if (m.d != 3 || !m.polynomial || !m.f[1].is_zero() || !m.f[2].is_zero())
        throw domain_error("Davenport check requires y^2 = x^3 + B");
    const Poly B = m.f[0].num();
    if (B.deg() <= 0) throw domain_error("constant curve");
    DavenportCheck d;
    d.bound = 2 * B.deg() - 2;
    bool simple = false;
    for (const auto& [g, e] : squarefree_decomposition(B.monic()))
        if (e == 1 && g.deg() > 0) simple = true;
    d.hypotheses_ok = m.field().p() > 3 && simple;
    for (const auto& P : pts) {
        d.max_degree = std::max(d.max_degree, P.height());
        if (P.height() > d.bound) d.holds = false;
    }
    return d;
}

MultiplesSearch integral_multiples(const HyperellipticModel& m, const CurvePoint& P, int c) {
    const ShortData s = short_data(m);
    const EllipticGroup G(m);
    MultiplesSearch r;
    r.height = canonical_height(m, to_ell(P), 0.01);
    const EllPoint P0 = to_ell(P);
    auto record = [&](const EllPoint& Q) {
        if (Q.inf || !Q.x.is_polynomial() || !Q.y.is_polynomial() || degree(Q.x) > c) return;
        r.points.push_back({Q.x, Q.y});
        r.points.push_back({Q.x, -Q.y});
    };
    if (r.height.torsion) {
        EllPoint Q = P0;
        for (int n = 1; n <= 64 && !Q.inf; ++n, Q = G.add(Q, P0)) {
            record(Q);
            r.n_max = n;
        }
    } else {
        if (r.height.lo <= 0) throw domain_error("integral_multiples: height lower bound not positive");
        EllPoint Q = P0;
        for (int n = 1; 2.0 * n * n * r.height.lo - 2 * s.chi <= c; ++n, Q = G.add(Q, P0)) {
            record(Q);
            r.n_max = n;
        }
    }
    sort_points(r.points);
    return r;
}

}  // namespace ffd
