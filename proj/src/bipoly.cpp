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

#include "ffdescent/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "ffdescent/factor.hpp"

namespace ffd {

BiPoly::BiPoly(const GF& f, std::vector<Poly> c) : F_(&f), c_(std::move(c)) {
    for (auto& p : c_)
        if (!p.field_ptr()) p = Poly(f);
    normalize();
}

void BiPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degT() const noexcept {
    int m = -1;
    for (const auto& p : c_) m = std::max(m, p.deg());
    return m;
}

void BiPoly::set(int i, const Poly& a) {
    if (i >= static_cast<int>(c_.size())) {
        if (a.is_zero()) return;
        c_.resize(static_cast<std::size_t>(i) + 1, Poly(*F_));
    }
    c_[i] = a;
    normalize();
}

BiPoly BiPoly::derivativeX() const {
    std::vector<Poly> d;
    for (int i = 1; i <= degX(); ++i) d.push_back(c_[i].scaled(F_->from_int(i)));
    return BiPoly(*F_, std::move(d));
}

BiPoly BiPoly::derivativeT() const {
    std::vector<Poly> d;
    for (const auto& p : c_) d.push_back(p.derivative());
    return BiPoly(*F_, std::move(d));
}

Poly BiPoly::eval_x(const Poly& x0) const {
    Poly r(*F_);
    for (int i = degX(); i >= 0; --i) r = r * x0 + c_[i];
    return r;
}

Poly BiPoly::spec_t(Elt a, const Embedding& e) const {
    const GF& big = e.big();
    std::vector<Elt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Elt s = 0;
        const auto& cs = c_[i].coeffs();
        for (std::size_t k = cs.size(); k-- > 0;) s = big.add(big.mul(s, a), e(cs[k]));
        v[i] = s;
    }
    return Poly(big, std::move(v));
}

Poly BiPoly::spec_t(Elt a) const {
    std::vector<Elt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].eval(a);
    return Poly(*F_, std::move(v));
}

BiPoly BiPoly::compose_t(const Poly& g) const {
    std::vector<Poly> d;
    d.reserve(c_.size());
    for (const auto& p : c_) d.push_back(compose(p, g));
    return BiPoly(*F_, std::move(d));
}

Poly BiPoly::coeff_t(int k) const {
    std::vector<Elt> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i][k];
    return Poly(*F_, std::move(v));
}

BiPoly BiPoly::embed(const Embedding& e) const {
    std::vector<Poly> d;
    for (const auto& p : c_) d.push_back(ffd::embed(p, e));
    return BiPoly(e.big(), std::move(d));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (!F_) F_ = o.F_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Poly(*F_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (!F_) F_ = o.F_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Poly(*F_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degX(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        if (i > 0) os << "*X" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

BiPoly operator+(BiPoly a, const BiPoly& b) {
    a += b;
    return a;
}

BiPoly operator-(BiPoly a, const BiPoly& b) {
    a -= b;
    return a;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    const GF& F = a.field();
    if (a.is_zero() || b.is_zero()) return BiPoly(F);
    std::vector<Poly> r(static_cast<std::size_t>(a.degX() + b.degX()) + 1, Poly(F));
    for (int i = 0; i <= a.degX(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j <= b.degX(); ++j) r[i + j] += a[i] * b[j];
    }
    return BiPoly(F, std::move(r));
}

BiPoly scale(const BiPoly& a, const Poly& s) {
    std::vector<Poly> r;
    for (const auto& c : a.coeffs()) r.push_back(c * s);
    return BiPoly(a.field(), std::move(r));
}

std::pair<BiPoly, BiPoly> divmodX(const BiPoly& a, const BiPoly& b) {
    if (!b.is_monic()) throw domain_error("divisor must be monic in X");
    const GF& F = b.field();
    const int db = b.degX();
    if (a.degX() < db) return {BiPoly(F), a};
    std::vector<Poly> r = a.coeffs();
    std::vector<Poly> q(static_cast<std::size_t>(a.degX() - db) + 1, Poly(F));
    for (int i = a.degX(); i >= db; --i) {
        const Poly m = r[i];
        if (m.is_zero()) continue;
        q[i - db] = m;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= m * b[j];
    }
    r.resize(static_cast<std::size_t>(db), Poly(F));
    return {BiPoly(F, std::move(q)), BiPoly(F, std::move(r))};
}

Poly interpolate_from(const GF& f, int bound, const std::function<Elt(const GF&, const Embedding&, Elt)>& eval) {
    if (bound < 0) return Poly(f);
    int m = 1;
    std::uint64_t order = f.q();
    while (order < static_cast<std::uint64_t>(bound) + 1) {
        ++m;
        order *= f.q();
    }
    const GF& big = GF::get(f.p(), f.n() * m);
    const Embedding& e = Embedding::get(f, big);
    const int npts = bound + 1;
    std::vector<Elt> xs(npts), dd(npts);
    for (int i = 0; i < npts; ++i) {
        xs[i] = static_cast<Elt>(i);
        dd[i] = eval(big, e, xs[i]);
    }
    // Newton divided differences.
    for (int j = 1; j < npts; ++j)
        for (int i = npts - 1; i >= j; --i)
            dd[i] = big.div(big.sub(dd[i], dd[i - 1]), big.sub(xs[i], xs[i - j]));
    Poly r(big);
    for (int i = npts - 1; i >= 0; --i) {
        r = r * Poly(big, {big.neg(xs[i]), 1});
        r += Poly::constant(big, dd[i]);
    }
    std::vector<Elt> c(r.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto v = e.pull(r.coeffs()[i]);
        if (!v) throw domain_error("interpolated value outside the base field");
        c[i] = *v;
    }
    return Poly(f, std::move(c));
}

Poly resultant_in_X(const BiPoly& f, const BiPoly& g) {
    if (!f.is_monic()) throw domain_error("resultant_in_X: first argument must be monic in X");
    if (g.is_zero()) return Poly(f.field());
    const int bound = f.degX() * std::max(0, g.degT()) + std::max(0, g.degX()) * std::max(0, f.degT());
    return interpolate_from(f.field(), bound, [&](const GF&, const Embedding& e, Elt a) {
        return resultant(f.spec_t(a, e), g.spec_t(a, e));
    });
}

Poly discriminant_in_X(const BiPoly& f) {
    if (!f.is_monic()) throw domain_error("discriminant_in_X: polynomial must be monic in X");
    const int d = f.degX();
    if (d < 2) throw domain_error("discriminant_in_X: degree must be at least 2");
    Poly r = resultant_in_X(f, f.derivativeX());
    if ((d * (d - 1) / 2) % 2) r = -r;
    return r;
}

namespace {

// Coefficients of s^k as polynomials in X.
using SPoly = std::vector<Poly>;

std::pair<SPoly, SPoly> lift2(const SPoly& f, const Poly& g0, const Poly& h0, int N) {
    const GF& F = g0.field();
    const auto bez = xgcd(g0, h0);
    if (bez.g.deg() != 0) throw domain_error("Hensel lift: local factors not coprime");
    SPoly G{g0}, H{h0};
    for (int k = 1; k < N; ++k) {
        Poly e = k < static_cast<int>(f.size()) ? f[k] : Poly(F);
        for (int i = 1; i < k; ++i) e -= G[i] * H[k - i];
        Poly dG = (bez.t * e) % g0;
        Poly dH = (e - h0 * dG) / g0;
        G.push_back(dG);
        H.push_back(dH);
    }
    return {G, H};
}

std::vector<SPoly> lift_all(const SPoly& f, const std::vector<Poly>& loc, int N) {
    if (loc.size() == 1) return {f};
    const std::size_t half = loc.size() / 2;
    const GF& F = loc[0].field();
    Poly g0 = Poly::constant(F, 1), h0 = Poly::constant(F, 1);
    for (std::size_t i = 0; i < loc.size(); ++i) (i < half ? g0 : h0) *= loc[i];
    auto [G, H] = lift2(f, g0, h0, N);
    auto a = lift_all(G, {loc.begin(), loc.begin() + static_cast<std::ptrdiff_t>(half)}, N);
    auto b = lift_all(H, {loc.begin() + static_cast<std::ptrdiff_t>(half), loc.end()}, N);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

SPoly mul_trunc(const SPoly& a, const SPoly& b, int N) {
    const GF& F = a[0].field();
    SPoly c(static_cast<std::size_t>(N), Poly(F));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < static_cast<std::size_t>(N); ++j) c[i + j] += a[i] * b[j];
    return c;
}

BiPoly to_bipoly(const SPoly& a) {
    const GF& F = a[0].field();
    int dx = -1;
    for (const auto& c : a) dx = std::max(dx, c.deg());
    std::vector<Poly> out(static_cast<std::size_t>(dx + 1), Poly(F));
    for (int i = 0; i <= dx; ++i) {
        std::vector<Elt> v(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k][i];
        out[i] = Poly(F, std::move(v));
    }
    return BiPoly(F, std::move(out));
}

bool bipoly_less(const BiPoly& a, const BiPoly& b) {
    if (a.degX() != b.degX()) return a.degX() < b.degX();
    for (int i = a.degX(); i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/// s^D a(1/s); requires deg a <= D.
Poly reversed(const Poly& a, int D) {
    if (a.deg() > D) throw domain_error("factor_bivariate: reversal degree too small");
    std::vector<Elt> c(static_cast<std::size_t>(D + 1), 0);
    for (int i = 0; i <= a.deg(); ++i) c[static_cast<std::size_t>(D - i)] = a[i];
    return Poly(a.field(), std::move(c));
}

/// s^{ne} f(1/s, Y / s^e) and back; e large enough to keep every coefficient
/// polynomial, so factorizations correspond through t = 1/s.
BiPoly invert_t(const BiPoly& f, int e) {
    const int n = f.degX();
    std::vector<Poly> c;
    for (int i = 0; i <= n; ++i) c.push_back(reversed(f[i], (n - i) * e));
    return BiPoly(f.field(), std::move(c));
}

std::vector<BiPoly> factor_bivariate_impl(const BiPoly& f, bool at_infinity);

}  // namespace

std::vector<BiPoly> factor_bivariate(const BiPoly& f) { return factor_bivariate_impl(f, true); }

namespace {

std::vector<BiPoly> factor_bivariate_impl(const BiPoly& f, bool at_infinity) {
    if (!f.is_monic()) throw domain_error("factor_bivariate: polynomial must be monic in X");
    if (f.degX() <= 1) return {f};
    const GF& F = f.field();
    std::optional<Elt> a;
    for (Elt c = 0; c < F.q() && !a; ++c)
        if (is_squarefree(f.spec_t(c))) a = c;
    if (!a && at_infinity) {
        // Every rational affine place is bad; try the place at infinity.
        const int n = f.degX();
        int e = 0;
        for (int i = 0; i < n; ++i)
            if (!f[i].is_zero()) e = std::max(e, (f[i].deg() + n - i - 1) / (n - i));
        std::vector<BiPoly> out;
        for (const auto& h : factor_bivariate_impl(invert_t(f, e), false)) out.push_back(invert_t(h, e));
        std::sort(out.begin(), out.end(), bipoly_less);
        return out;
    }
    if (!a) throw domain_error("factor_bivariate: no squarefree specialization over the constant field");
    const BiPoly fs = f.compose_t(Poly(F, {*a, 1}));
    std::vector<Poly> loc;
    for (const auto& [g, e] : factor(fs.spec_t(0)).factors) loc.push_back(g);
    if (loc.size() == 1) return {f};

    const int N = f.degX() * std::max(1, f.degT()) + 1;
    SPoly fsp(static_cast<std::size_t>(N), Poly(F));
    for (int k = 0; k < N; ++k) fsp[k] = fs.coeff_t(k);
    const auto lifted = lift_all(fsp, loc, N);

    std::vector<int> rem(lifted.size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = static_cast<int>(i);
    BiPoly cur = fs;
    std::vector<BiPoly> out;
    for (std::size_t k = 1; 2 * k <= rem.size();) {
        bool found = false;
        std::vector<bool> sel(rem.size(), false);
        std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            SPoly prod{Poly::constant(F, 1)};
            for (std::size_t i = 0; i < rem.size(); ++i)
                if (sel[i]) prod = mul_trunc(prod, lifted[rem[i]], N);
            const BiPoly cand = to_bipoly(prod);
            auto [qq, rr] = divmodX(cur, cand);
            if (rr.is_zero()) {
                out.push_back(cand);
                cur = qq;
                std::vector<int> keep;
                for (std::size_t i = 0; i < rem.size(); ++i)
                    if (!sel[i]) keep.push_back(rem[i]);
                rem = keep;
                found = true;
                break;
            }
        } while (std::prev_permutation(sel.begin(), sel.end()));
        if (!found) ++k;
    }
    if (cur.degX() >= 1) out.push_back(cur);
    const Poly back(F, {F.neg(*a), 1});
    for (auto& g : out) g = g.compose_t(back);
    std::sort(out.begin(), out.end(), bipoly_less);
    return out;
}

}  // namespace

}  // namespace ffd
