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

#ifndef FFDESCENT_JACOBIAN_HPP
#define FFDESCENT_JACOBIAN_HPP

#include <cstdint>
#include <vector>

#include "ffdescent/poly.hpp"

namespace ffd {

/// Reduced divisor class (u, v): u monic, deg v < deg u <= g, v^2 = F mod u.
struct MumfordDivisor {
    Poly u, v;

    bool is_zero() const noexcept { return u.deg() == 0; }
    bool operator==(const MumfordDivisor& o) const noexcept { return u == o.u && v == o.v; }
    bool operator<(const MumfordDivisor& o) const noexcept {
        if (u != o.u) return u < o.u;
        return v < o.v;
    }
};

struct GroupLimits {
    int max_genus = 3;
    std::uint64_t max_q = 9;
};

/// Jacobian of y^2 = F(x) over K, F squarefree of odd degree 2g + 1.
class HyperellipticJacobian {
   public:
    explicit HyperellipticJacobian(const Poly& F);

    const GF& field() const { return F_.field(); }
    const Poly& F() const noexcept { return F_; }
    int genus() const noexcept { return g_; }

    MumfordDivisor zero() const;
    bool is_valid(const MumfordDivisor& a) const;
    MumfordDivisor neg(const MumfordDivisor& a) const;
    MumfordDivisor add(const MumfordDivisor& a, const MumfordDivisor& b) const;
    MumfordDivisor mul(long long n, const MumfordDivisor& a) const;
    /// Class of the point (x, y) minus the point at infinity.
    MumfordDivisor point(Elt x, Elt y) const;

    /// All reduced divisors, sorted.
    std::vector<MumfordDivisor> enumerate_group(const GroupLimits& lim = {}) const;

    /// #X(F_{q^i}) including the point at infinity.
    std::uint64_t count_points(int i) const;

   private:
    MumfordDivisor reduce(Poly u, Poly v) const;
    Poly F_;
    int g_;
};

/// L-polynomial coefficients from #X(F_{q^i}), i = 1..g.
std::vector<long long> l_polynomial_from_counts(std::uint64_t q, int g, const std::vector<std::uint64_t>& counts);
/// P(T) = sum c_k T^k of degree 2g, from point counts over F_{q^i}, i <= g.
std::vector<long long> l_polynomial(const HyperellipticJacobian& J);

/// #{x : ell x = 0} among the given group elements.
std::uint64_t torsion_count(const HyperellipticJacobian& J, const std::vector<MumfordDivisor>& group, long long ell);

}  // namespace ffd

#endif
