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

#include "ffdescent/curvemodel.hpp"

#include <algorithm>
#include <sstream>

#include "ffdescent/factor.hpp"

namespace ffd {

std::string to_string(Triviality t) {
    switch (t) {
        case Triviality::constant:
            return "constant";
        case Triviality::isotrivial:
            return "isotrivial";
        case Triviality::nonisotrivial:
            return "non-isotrivial";
        default:
            return "unknown";
    }
}

BiPoly HyperellipticModel::fpoly() const {
    if (!polynomial) throw domain_error("model coefficients are not polynomials");
    std::vector<Poly> c;
    for (const auto& a : f) c.push_back(a.num());
    return BiPoly(*F, std::move(c));
}

RatFunc HyperellipticModel::eval(const RatFunc& x0) const {
    RatFunc r(*F);
    for (int i = d; i >= 0; --i) r = r * x0 + f[i];
    return r;
}

std::string HyperellipticModel::str() const {
    std::ostringstream os;
    os << "y^2 = ";
    bool first = true;
    for (int i = d; i >= 0; --i) {
        if (f[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!(f[i].is_constant() && f[i].num().lc() == 1 && i > 0)) os << "(" << f[i].str() << ")";
        if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

namespace {

bool valuations_divisible(const RatFunc& z, int k) {
    for (const Poly* p : {&z.num(), &z.den()})
        if (p->deg() > 0)
            for (const auto& [g, e] : factor(*p).factors)
                if (e % k) return false;
    return (z.num().deg() - z.den().deg()) % k == 0;
}

Triviality classify_cubic(const HyperellipticModel& m) {
    if (!m.j || !m.j->is_constant()) return Triviality::nonisotrivial;
    const RatFunc& A = *m.A;
    const RatFunc& B = *m.B;
    bool constant;
    if (A.is_zero())
        constant = valuations_divisible(B, 6);
    else if (B.is_zero())
        constant = valuations_divisible(A, 4);
    else
        constant = valuations_divisible(B / A, 2);
    return constant ? Triviality::constant : Triviality::isotrivial;
}

}  // namespace

HyperellipticModel validate_model(const GF& F, const std::vector<RatFunc>& coeffs) {
    if (F.p() == 2) throw domain_error("characteristic 2 is not supported");
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 3 || d % 2 == 0) throw domain_error("degree must be odd and at least 3");
    if (coeffs.back() != RatFunc(Poly::constant(F, 1))) throw domain_error("polynomial must be monic");
    HyperellipticModel m;
    m.F = &F;
    m.f = coeffs;
    m.d = d;
    m.genus = (d - 1) / 2;
    m.polynomial = std::all_of(coeffs.begin(), coeffs.end(), [](const RatFunc& a) { return a.is_polynomial(); });

    // Clear denominators with X = X'/D, then disc f = disc f' / D^{d(d-1)}.
    Poly D = Poly::constant(F, 1);
    for (const auto& a : coeffs) D = D / gcd(D, a.den()) * a.den();
    std::vector<Poly> c(static_cast<std::size_t>(d) + 1, Poly(F));
    for (int i = 0; i <= d; ++i) c[i] = (coeffs[i] * RatFunc(pow(D, static_cast<unsigned>(d - i)))).num();
    const Poly dc = discriminant_in_X(BiPoly(F, c));
    if (dc.is_zero()) throw domain_error("discriminant is zero (f not separable)");
    m.disc = RatFunc(dc, pow(D, static_cast<unsigned>(d * (d - 1))));
    m.height = poly_height(coeffs);

    if (d == 3 && F.p() != 3) {
        const RatFunc a2 = coeffs[2], a1 = coeffs[1], a0 = coeffs[0];
        const RatFunc third(Poly::constant(F, F.inv(3)));
        const RatFunc a2t = a2 * third;
        m.A = a1 - a2 * a2t;
        m.B = a0 - a1 * a2t + RatFunc(Poly::constant(F, 2)) * a2t * a2t * a2t;
        const RatFunc A3 = *m.A * *m.A * *m.A;
        const RatFunc den = RatFunc(Poly::constant(F, 4)) * A3 + RatFunc(Poly::constant(F, 27)) * *m.B * *m.B;
        m.j = RatFunc(Poly::constant(F, F.from_int(6912))) * A3 / den;
        m.triviality = classify_cubic(m);
    }
    return m;
}

HyperellipticModel validate_model(const BiPoly& f) {
    std::vector<RatFunc> c;
    for (int i = 0; i <= f.degX(); ++i) c.emplace_back(f.coeff(i));
    return validate_model(f.field(), c);
}

std::vector<Place> bad_places(const HyperellipticModel& m) {
    if (!m.polynomial) throw domain_error("bad_places: coefficients must lie in K[t]");
    std::vector<Place> out;
    if (m.disc.num().deg() <= 0) return out;
    for (const auto& [g, e] : factor(m.disc.num()).factors) out.push_back(Place::finite(g));
    return out;
}

namespace {

constexpr int kMaxFieldOrder = 1 << 23;

const GF* residue_field(const GF& F, int k) {
    double order = 1;
    for (int i = 0; i < F.n() * k; ++i) order *= F.p();
    if (order > kMaxFieldOrder) return nullptr;
    return &GF::get(F.p(), F.n() * k);
}

Component analyze_component(const BiPoly& comp) {
    const GF& F = comp.field();
    Component c;
    c.f = comp;
    c.degX = comp.degX();
    const int d = c.degX;
    if (d == 1) {
        c.genus = 0;
        c.x_pole_degree = std::max(0, comp[0].deg());
        return c;
    }
    int ram = 0;
    const Poly disc = discriminant_in_X(comp);
    if (disc.deg() > 0) {
        for (const auto& [pi, mult] : factor(disc).factors) {
            PlaceRamification pr;
            pr.place = Place::finite(pi);
            if (mult == 1) {
                // A simple zero of the discriminant is a simple branch point.
                pr.e.assign(static_cast<std::size_t>(d - 1), 1);
                pr.e[0] = 2;
                ram += pi.deg();
            } else {
                const GF* big = residue_field(F, pi.deg());
                if (!big) throw domain_error("bad place of too large degree for local analysis");
                const Elt tau = roots(embed(pi, Embedding::get(F, *big))).front();
                pr.branches = puiseux_branches(shift_to(comp, *big, tau));
                for (const auto& b : pr.branches) pr.e.push_back(b.e);
                ram += pi.deg() * (d - static_cast<int>(pr.e.size()));
            }
            std::sort(pr.e.rbegin(), pr.e.rend());
            c.ramification.push_back(std::move(pr));
        }
    }
    const int h = std::max(0, comp.degT());
    PlaceRamification pinf;
    pinf.place = Place::infinity(F);
    pinf.branches = puiseux_branches(infinity_chart(comp, h));
    int poles = 0;
    for (const auto& b : pinf.branches) {
        pinf.e.push_back(b.e);
        const long long num = static_cast<long long>(b.e) * (static_cast<long long>(h) * b.lam_den - b.lam_num);
        if (num > 0) poles += static_cast<int>(num / b.lam_den);
    }
    std::sort(pinf.e.rbegin(), pinf.e.rend());
    ram += d - static_cast<int>(pinf.e.size());
    c.ramification.push_back(std::move(pinf));
    c.x_pole_degree = poles;
    const int twice = -2 * d + ram + 2;
    if (twice % 2) throw domain_error("Riemann-Hurwitz: odd ramification total");
    c.genus = twice / 2;
    return c;
}

}  // namespace

PlaneCurveData analyze_plane_curve(const BiPoly& f, bool want_genus) {
    const GF& F = f.field();
    if (want_genus && F.p() <= f.degX()) throw domain_error("genus computation requires p > d");
    PlaneCurveData out;
    for (const auto& g : factor_bivariate(f)) {
        if (want_genus) {
            out.components.push_back(analyze_component(g));
        } else {
            Component c;
            c.f = g;
            c.degX = g.degX();
            out.components.push_back(std::move(c));
        }
    }
    out.omega = static_cast<int>(out.components.size());
    out.two_torsion_dim = out.omega - 1;
    if (out.omega == 1) out.genus = out.components[0].genus;
    return out;
}

PlaneCurveData plane_curve_analyze(const HyperellipticModel& m, bool want_genus) {
    return analyze_plane_curve(m.fpoly(), want_genus);
}

int trigonal_h0(int w, int m) {
    if (m < 0) return 0;
    int n = 0;
    for (int j = 0; j <= 2; ++j)
        if (j * w <= m) n += (m - j * w) / 3 + 1;
    return n;
}

int maroni_from_semigroup(int w) {
    for (int n = 1;; ++n)
        if (trigonal_h0(w, 3 * n) > n + 1) return n - 2;
}

bool affine_smooth(const BiPoly& Fc) {
    const GF& F = Fc.field();
    const Poly D = discriminant_in_X(Fc);
    if (D.is_zero()) return false;
    if (D.deg() <= 0) return true;
    const BiPoly Fx = Fc.derivativeX(), Ft = Fc.derivativeT();
    for (const auto& [pi, mult] : factor(D).factors) {
        if (mult == 1) continue;  // a singular point forces a double zero
        const GF* big = residue_field(F, pi.deg());
        if (!big) throw domain_error("smoothness test: place of too large degree");
        const Embedding& e = Embedding::get(F, *big);
        const Elt tau = roots(embed(pi, e)).front();
        const Poly g = gcd(gcd(Fc.spec_t(tau, e), Fx.spec_t(tau, e)), Ft.spec_t(tau, e));
        if (g.deg() > 0) return false;
    }
    return true;
}

TrigonalData trigonal_infinity_data(const BiPoly& Fc) {
    const GF& F = Fc.field();
    if (Fc.degX() != 3 || !Fc.is_monic()) throw domain_error("trigonal model must be a monic cubic in x");
    if (F.p() == 3) throw domain_error("trigonal analysis requires p != 3");
    const int w = Fc[0].deg();
    if (w < 0) throw domain_error("not totally ramified: a0 = 0");
    for (int i = 1; i <= 2; ++i)
        if (!Fc[i].is_zero() && 3 * Fc[i].deg() >= (3 - i) * w) throw domain_error("not totally ramified");
    if (w % 3 == 0) throw domain_error("not totally ramified: 3 divides the pole order");
    if (!affine_smooth(Fc)) throw domain_error("singular affine model");
    TrigonalData td;
    td.w = w;
    td.semigroup_generators = {3, w};
    td.genus = w - 1;
    for (int n = 0; n <= std::max(td.genus, 1); ++n) td.h0.push_back(trigonal_h0(w, 3 * n));
    if (td.genus > 4) td.maroni = maroni_from_semigroup(w);
    return td;
}

int j0_genus_formula(int d1, int d2) { return (d1 + 2 * d2) % 3 == 0 ? d1 + d2 - 2 : d1 + d2 - 1; }

int comparison_chi(const Poly& A, const Poly& B) {
    const int a = A.is_zero() ? 0 : (A.deg() + 3) / 4;
    const int b = B.is_zero() ? 0 : (B.deg() + 5) / 6;
    return std::max(a, b);
}

}  // namespace ffd
