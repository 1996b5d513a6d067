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

#include "ffdescent/elliptic.hpp"

#include <algorithm>

#include "ffdescent/factor.hpp"

namespace ffd {

EllipticGroup::EllipticGroup(const HyperellipticModel& m) : m_(&m) {
    if (m.d != 3) throw domain_error("group law requires a cubic model");
    a2_ = m.f[2];
    a1_ = m.f[1];
    a0_ = m.f[0];
}

bool EllipticGroup::on_curve(const EllPoint& P) const {
    if (P.inf) return true;
    return P.y * P.y == m_->eval(P.x);
}

EllPoint EllipticGroup::neg(const EllPoint& P) const {
    if (P.inf) return P;
    return EllPoint::affine(P.x, -P.y);
}

EllPoint EllipticGroup::add(const EllPoint& P, const EllPoint& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    const GF& F = m_->field();
    RatFunc lam;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return EllPoint::zero();
        const RatFunc three(Poly::constant(F, 3)), two(Poly::constant(F, 2));
        lam = (three * P.x * P.x + two * a2_ * P.x + a1_) / (two * P.y);
    } else {
        lam = (Q.y - P.y) / (Q.x - P.x);
    }
    const RatFunc x3 = lam * lam - a2_ - P.x - Q.x;
    const RatFunc y3 = -(P.y + lam * (x3 - P.x));
    return EllPoint::affine(x3, y3);
}

EllPoint EllipticGroup::mul(long long n, const EllPoint& P) const {
    if (n < 0) return mul(-n, neg(P));
    EllPoint r = EllPoint::zero(), b = P;
    while (n) {
        if (n & 1) r = add(r, b);
        n >>= 1;
        if (n) b = dbl(b);
    }
    return r;
}

LocalReduction classify_reduction(int vA, int vB, int vD) {
    LocalReduction r;
    r.v_c4 = vA;
    r.v_c6 = vB;
    r.v_disc = vD;
    if (vD == 0) {
        r.kodaira = "I0";
        return r;
    }
    if (vA == 0) {
        r.kodaira = "I" + std::to_string(vD);
        r.component_group = vD;
        r.conductor_exponent = 1;
        return r;
    }
    r.conductor_exponent = 2;
    const long long vj = 3LL * vA - vD;
    if (vj < 0 && vD > 6) {
        r.kodaira = "I" + std::to_string(vD - 6) + "*";
        r.component_group = 4;
        return r;
    }
    switch (vD) {
        case 2:
            r.kodaira = "II";
            r.component_group = 1;
            break;
        case 3:
            r.kodaira = "III";
            r.component_group = 2;
            break;
        case 4:
            r.kodaira = "IV";
            r.component_group = 3;
            break;
        case 6:
            r.kodaira = "I0*";
            r.component_group = 4;
            break;
        case 8:
            r.kodaira = "IV*";
            r.component_group = 3;
            break;
        case 9:
            r.kodaira = "III*";
            r.component_group = 2;
            break;
        case 10:
            r.kodaira = "II*";
            r.component_group = 1;
            break;
        default:
            throw domain_error("non-minimal or wild local data (v(disc) = " + std::to_string(vD) + ")");
    }
    return r;
}

EllipticLocalData elliptic_local_data(const HyperellipticModel& m) {
    const GF& F = m.field();
    if (m.d != 3) throw domain_error("elliptic local data requires d = 3");
    if (F.p() < 5) throw domain_error("elliptic local data requires p >= 5");
    if (m.triviality == Triviality::constant) throw domain_error("constant curve");
    if (!m.A->is_polynomial() || !m.B->is_polynomial())
        throw domain_error("elliptic local data requires polynomial short Weierstrass coefficients");
    const Poly A = m.A->num(), B = m.B->num();
    const Poly D = A * A * A * Poly::constant(F, 4) + B * B * Poly::constant(F, 27);
    EllipticLocalData out;
    out.j = *m.j;
    auto record = [&](const Place& pl, int vA, int vB, int vD) {
        while (vA >= 4 && vB >= 6) {
            vA -= 4;
            vB -= 6;
            vD -= 12;
        }
        LocalReduction r = classify_reduction(vA, vB, vD);
        r.place = pl;
        if (r.conductor_exponent == 0) return;
        out.conductor_degree += pl.degree() * r.conductor_exponent;
        if (r.component_group % 2 == 0) out.sigma2.push_back(pl);
        out.places.push_back(std::move(r));
    };
    if (D.deg() > 0) {
        for (const auto& [pi, e] : factor(D).factors) {
            const int vA = A.is_zero() ? kInfiniteValuation : ord(A, pi);
            const int vB = B.is_zero() ? kInfiniteValuation : ord(B, pi);
            record(Place::finite(pi), vA, vB, e);
        }
    }
    const int chi = comparison_chi(A, B);
    const int vA = A.is_zero() ? kInfiniteValuation : 4 * chi - A.deg();
    const int vB = B.is_zero() ? kInfiniteValuation : 6 * chi - B.deg();
    record(Place::infinity(F), vA, vB, 12 * chi - D.deg());
    return out;
}

}  // namespace ffd
