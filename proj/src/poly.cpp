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

#include "ffdescent/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ffd {

Poly Poly::monomial(const GF& f, Elt a, int k) {
    if (a == 0) return Poly(f);
    std::vector<Elt> c(static_cast<std::size_t>(k) + 1, 0);
    c[k] = a;
    return Poly(f, std::move(c));
}

Poly Poly::from_ints(const GF& f, const std::vector<long long>& c) {
    std::vector<Elt> e(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) e[i] = f.from_int(c[i]);
    return Poly(f, std::move(e));
}

void Poly::set(int i, Elt a) {
    if (i >= static_cast<int>(c_.size())) {
        if (a == 0) return;
        c_.resize(static_cast<std::size_t>(i) + 1, 0);
    }
    c_[i] = a;
    normalize();
}

Elt Poly::eval(Elt a) const {
    Elt v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = F_->add(F_->mul(v, a), c_[i]);
    return v;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(*F_);
    std::vector<Elt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i)), c_[i]);
    return Poly(*F_, std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(F_->inv(c_.back()));
}

Poly Poly::scaled(Elt a) const {
    if (a == 0) return Poly(*F_);
    std::vector<Elt> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = F_->mul(c_[i], a);
    return Poly(*F_, std::move(d));
}

Poly Poly::shifted(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<Elt> d(c_.size() + static_cast<std::size_t>(k), 0);
    std::copy(c_.begin(), c_.end(), d.begin() + k);
    return Poly(*F_, std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (!F_) F_ = o.F_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->add(c_[i], o.c_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!F_) F_ = o.F_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->sub(c_[i], o.c_[i]);
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::operator-() const {
    std::vector<Elt> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = F_->neg(c_[i]);
    return Poly(*F_, std::move(d));
}

bool Poly::operator<(const Poly& o) const noexcept {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i] == 1;
        if (i == 0 || !unit) {
            if (F_->n() == 1) {
                os << c_[i];
            } else {
                os << "[";
                const auto cs = F_->coeffs(c_[i]);
                for (std::size_t k = 0; k < cs.size(); ++k) os << (k ? "," : "") << cs[k];
                os << "]";
            }
        }
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
}

Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
}

Poly operator*(const Poly& a, const Poly& b) {
    const GF* F = a.field_ptr() ? a.field_ptr() : b.field_ptr();
    if (a.is_zero() || b.is_zero()) return Poly(*F);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Elt> r(x.size() + y.size() - 1, 0);
    if (F->n() == 1) {
        // Delayed reduction over the prime field.
        const std::uint64_t p = F->p();
        std::vector<std::uint64_t> acc(r.size(), 0);
        const std::size_t block = 1u << 12;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) acc[i + j] += static_cast<std::uint64_t>(x[i]) * y[j];
            if ((i + 1) % block == 0)
                for (auto& v : acc) v %= p;
        }
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = static_cast<Elt>(acc[k] % p);
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = F->add(r[i + j], F->mul(x[i], y[j]));
        }
    }
    return Poly(*F, std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw domain_error("division by zero polynomial");
    const GF& F = b.field();
    if (a.deg() < b.deg()) return {Poly(F), a.field_ptr() ? a : Poly(F)};
    std::vector<Elt> r = a.coeffs();
    const auto& d = b.coeffs();
    const int db = b.deg();
    std::vector<Elt> qc(static_cast<std::size_t>(a.deg() - db) + 1, 0);
    const Elt il = F.inv(b.lc());
    for (int i = a.deg(); i >= db; --i) {
        const Elt c = r[i];
        if (c == 0) continue;
        const Elt m = F.mul(c, il);
        qc[i - db] = m;
        for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(m, d[j]));
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(F, std::move(qc)), Poly(F, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
    const GF& F = a.field_ptr() ? a.field() : b.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, 1), s1(F);
    Poly t0(F), t1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [qq, rr] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rr);
        Poly s2 = s0 - qq * s1;
        Poly t2 = t0 - qq * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elt il = F.inv(r0.lc());
    return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

Poly invmod(const Poly& a, const Poly& m) {
    auto g = xgcd(a % m, m);
    if (g.g.deg() != 0) throw domain_error("polynomial not invertible modulo m");
    return g.s % m;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
    const GF& F = m.field();
    Poly r = Poly::constant(F, 1) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        e >>= 1;
        if (e) base = (base * base) % m;
    }
    return r;
}

Poly pow(const Poly& a, unsigned e) {
    Poly r = Poly::constant(a.field(), 1), b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Poly compose(const Poly& a, const Poly& b) {
    Poly r(a.field());
    for (int i = a.deg(); i >= 0; --i) r = r * b + Poly::constant(a.field(), a[i]);
    return r;
}

int ord(const Poly& a, const Poly& pi) {
    if (a.is_zero()) throw domain_error("valuation of zero");
    int k = 0;
    Poly x = a;
    while (true) {
        auto [qq, rr] = divmod(x, pi);
        if (!rr.is_zero()) break;
        x = std::move(qq);
        ++k;
    }
    return k;
}

Elt resultant(const Poly& f, const Poly& g) {
    const GF& F = f.field_ptr() ? f.field() : g.field();
    if (f.is_zero() && g.is_zero()) throw domain_error("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return 0;
    // Euclid: Res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r).
    Poly a = f, b = g;
    Elt acc = 1;
    while (true) {
        const int da = a.deg(), db = b.deg();
        if (db == 0) return F.mul(acc, F.pow(b.lc(), static_cast<std::uint64_t>(da)));
        if (da == 0) return F.mul(acc, F.pow(a.lc(), static_cast<std::uint64_t>(db)));
        Poly r = a % b;
        if (r.is_zero()) return 0;
        if ((da * db) % 2) acc = F.neg(acc);
        acc = F.mul(acc, F.pow(b.lc(), static_cast<std::uint64_t>(da - r.deg())));
        a = std::move(b);
        b = std::move(r);
    }
}

Poly random_poly(const GF& f, int deg, std::mt19937_64& rng, bool monic) {
    if (deg < 0) return Poly(f);
    std::uniform_int_distribution<Elt> u(0, f.q() - 1);
    std::vector<Elt> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = u(rng);
    if (monic) c.back() = 1;
    return Poly(f, std::move(c));
}

Poly embed(const Poly& a, const Embedding& e) {
    std::vector<Elt> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = e(a.coeffs()[i]);
    return Poly(e.big(), std::move(c));
}

}  // namespace ffd
