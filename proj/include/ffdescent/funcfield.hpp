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

#ifndef FFDESCENT_FUNCFIELD_HPP
#define FFDESCENT_FUNCFIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffdescent/poly.hpp"

namespace ffd {

/// Element num/den of K(t) in lowest terms with den monic; zero is 0/1.
class RatFunc {
   public:
    RatFunc() = default;
    explicit RatFunc(const GF& f) : num_(f), den_(Poly::constant(f, 1)) {}
    RatFunc(const Poly& n);  // NOLINT: polynomials embed implicitly
    RatFunc(const Poly& n, const Poly& d);

    const GF& field() const { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.deg() == 0; }
    bool is_constant() const noexcept { return num_.deg() <= 0 && den_.deg() == 0; }

    RatFunc derivative() const;
    RatFunc inverse() const;
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    bool operator==(const RatFunc& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const noexcept { return !(*this == o); }

    std::string str() const;

   private:
    Poly num_, den_;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);
RatFunc pow(const RatFunc& a, int e);

/// A place of K(t): a monic irreducible polynomial, or infinity.
struct Place {
    Poly pi;
    bool inf = false;

    static Place infinity(const GF& f) { return Place{Poly(f), true}; }
    static Place finite(const Poly& p) { return Place{p.monic(), false}; }
    int degree() const noexcept { return inf ? 1 : pi.deg(); }
    bool operator==(const Place& o) const noexcept { return inf == o.inf && (inf || pi == o.pi); }
    bool operator<(const Place& o) const noexcept {
        if (inf != o.inf) return !inf;
        return !inf && pi < o.pi;
    }
    std::string str() const { return inf ? "inf" : pi.str(); }
};

int valuation(const RatFunc& z, const Place& v);

/// Degree of the pole divisor, max(deg num, deg den).
int degree(const RatFunc& z);

/// Finite places appearing in num or den.
std::vector<Place> support(const RatFunc& z);

/// Height of the monic polynomial sum a_i X^i; `a` lists a_0..a_d with a_d = 1.
int poly_height(const std::vector<RatFunc>& a);

/// Largest p^s with z in K(t)^{p^s}.
std::uint64_t insep_degree(const RatFunc& z);

}  // namespace ffd

#endif
