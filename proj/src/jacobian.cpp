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

#include "ffdescent/jacobian.hpp"

#include <algorithm>

#include "ffdescent/factor.hpp"

namespace ffd {

HyperellipticJacobian::HyperellipticJacobian(const Poly& F) : F_(F) {
    if (F.deg() < 3 || F.deg() % 2 == 0) throw domain_error("Jacobian requires F of odd degree >= 3");
    if (!is_squarefree(F)) throw domain_error("Jacobian requires squarefree F");
    g_ = (F.deg() - 1) / 2;
}

MumfordDivisor HyperellipticJacobian::zero() const {
    return {Poly::constant(field(), 1), Poly(field())};
}

bool HyperellipticJacobian::is_valid(const MumfordDivisor& a) const {
    if (!a.u.is_monic() || a.u.deg() > g_ || a.v.deg() >= a.u.deg()) return false;
    return ((a.v * a.v - F_) % a.u).is_zero();
}

MumfordDivisor HyperellipticJacobian::neg(const MumfordDivisor& a) const { return {a.u, -a.v}; }

MumfordDivisor HyperellipticJacobian::reduce(Poly u, Poly v) const {
    v = v % u;
    while (u.deg() > g_) {
        Poly u2 = (F_ - v * v) / u;
        u = u2.monic();
        v = (-v) % u;
    }
    return {u.monic(), v % u};
}

MumfordDivisor HyperellipticJacobian::add(const MumfordDivisor& a, const MumfordDivisor& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto x1 = xgcd(a.u, b.u);
    const auto x2 = xgcd(x1.g, a.v + b.v);
    const Poly& d = x2.g;
    const Poly s1 = x2.s * x1.s, s2 = x2.s * x1.t, s3 = x2.t;
    const Poly u = (a.u * b.u) / (d * d);
    const Poly num = s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + F_);
    const Poly v = (num / d) % u;
    return reduce(u, v);
}

MumfordDivisor HyperellipticJacobian::mul(long long n, const MumfordDivisor& a) const {
    if (n < 0) return mul(-n, neg(a));
    MumfordDivisor r = zero(), b = a;
    while (n) {
        if (n & 1) r = add(r, b);
        n >>= 1;
        if (n) b = add(b, b);
    }
    return r;
}

MumfordDivisor HyperellipticJacobian::point(Elt x, Elt y) const {
    const GF& K = field();
    if (K.mul(y, y) != F_.eval(x)) throw domain_error("point not on curve");
    return {Poly(K, {K.neg(x), 1}), Poly::constant(K, y)};
}

std::vector<MumfordDivisor> HyperellipticJacobian::enumerate_group(const GroupLimits& lim) const {
    const GF& K = field();
    if (g_ > lim.max_genus || K.q() > lim.max_q) throw domain_error("enumerate_group: limits exceeded");
    std::vector<MumfordDivisor> out{zero()};
    const std::uint64_t q = K.q();
    for (int k = 1; k <= g_; ++k) {
        std::uint64_t nu = 1;
        for (int i = 0; i < k; ++i) nu *= q;
        for (std::uint64_t iu = 0; iu < nu; ++iu) {
            std::vector<Elt> uc(static_cast<std::size_t>(k) + 1, 1);
            std::uint64_t r = iu;
            for (int i = 0; i < k; ++i, r /= q) uc[i] = static_cast<Elt>(r % q);
            const Poly u(K, std::move(uc));
            const Poly Fu = F_ % u;
            for (std::uint64_t iv = 0; iv < nu; ++iv) {
                std::vector<Elt> vc(static_cast<std::size_t>(k));
                std::uint64_t s = iv;
                for (int i = 0; i < k; ++i, s /= q) vc[i] = static_cast<Elt>(s % q);
                const Poly v(K, std::move(vc));
                if (((v * v - Fu) % u).is_zero()) out.push_back({u, v});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t HyperellipticJacobian::count_points(int i) const {
    const GF& K = field();
    const GF& big = GF::get(K.p(), K.n() * i);
    const Poly Fb = embed(F_, Embedding::get(K, big));
    std::uint64_t n = 1;
    for (Elt x = 0; x < big.q(); ++x) n += static_cast<std::uint64_t>(1 + big.chi(Fb.eval(x)));
    return n;
}

std::vector<long long> l_polynomial_from_counts(std::uint64_t q, int g, const std::vector<std::uint64_t>& counts) {
    if (static_cast<int>(counts.size()) < g) throw domain_error("l_polynomial: need #X(F_{q^i}) for i = 1..g");
    const long long Q = static_cast<long long>(q);
    std::vector<long long> S(static_cast<std::size_t>(g) + 1, 0), c(static_cast<std::size_t>(2 * g) + 1, 0);
    long long qi = 1;
    for (int i = 1; i <= g; ++i) {
        qi *= Q;
        S[i] = qi + 1 - static_cast<long long>(counts[i - 1]);
    }
    c[0] = 1;
    for (int k = 1; k <= g; ++k) {
        long long s = 0;
        for (int i = 1; i <= k; ++i) s += S[i] * c[k - i];
        if (s % k) throw domain_error("l_polynomial: Newton identity not integral");
        c[k] = -s / k;
    }
    long long qp = 1;
    for (int k = g - 1; k >= 0; --k) {
        qp *= Q;
        c[2 * g - k] = qp * c[k];
    }
    return c;
}

std::vector<long long> l_polynomial(const HyperellipticJacobian& J) {
    std::vector<std::uint64_t> counts;
    for (int i = 1; i <= J.genus(); ++i) counts.push_back(J.count_points(i));
    return l_polynomial_from_counts(J.field().q(), J.genus(), counts);
}

std::uint64_t torsion_count(const HyperellipticJacobian& J, const std::vector<MumfordDivisor>& group, long long ell) {
    std::uint64_t n = 0;
    for (const auto& x : group)
        if (J.mul(ell, x).is_zero()) ++n;
    return n;
}

}  // namespace ffd
