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

#ifndef FFDESCENT_BIPOLY_HPP
#define FFDESCENT_BIPOLY_HPP

#include <functional>
#include <vector>

#include "ffdescent/poly.hpp"

namespace ffd {

/// Polynomial in X with coefficients in K[t]; c[i] is the coefficient of X^i.
class BiPoly {
   public:
    BiPoly() = default;
    explicit BiPoly(const GF& f) : F_(&f) {}
    BiPoly(const GF& f, std::vector<Poly> c);

    const GF& field() const { return *F_; }
    int degX() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// max_i deg c_i (-1 for zero).
    int degT() const noexcept;
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == Poly::constant(*F_, 1); }
    const Poly& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    Poly coeff(int i) const { return (i >= 0 && i <= degX()) ? c_[i] : Poly(*F_); }
    const std::vector<Poly>& coeffs() const noexcept { return c_; }
    void set(int i, const Poly& a);

    BiPoly derivativeX() const;
    BiPoly derivativeT() const;
    /// f(t, x0(t)).
    Poly eval_x(const Poly& x0) const;
    /// Specialize t = a where a lives in e.big(); result is a polynomial in X.
    Poly spec_t(Elt a, const Embedding& e) const;
    Poly spec_t(Elt a) const;
    /// Substitute t -> g(t) in all coefficients.
    BiPoly compose_t(const Poly& g) const;
    /// Coefficient of t^k as a polynomial in X.
    Poly coeff_t(int k) const;
    BiPoly embed(const Embedding& e) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    std::string str() const;

   private:
    void normalize();
    const GF* F_ = nullptr;
    std::vector<Poly> c_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly scale(const BiPoly& a, const Poly& s);
/// Division by a polynomial monic in X; returns quotient and remainder.
std::pair<BiPoly, BiPoly> divmodX(const BiPoly& a, const BiPoly& b);

/// Rebuild a polynomial in t of degree <= bound from values at bound+1 points,
/// evaluating in an extension large enough when K is too small.
Poly interpolate_from(const GF& f, int bound, const std::function<Elt(const GF&, const Embedding&, Elt)>& eval);

/// Res_X(f, g) for f monic in X.
Poly resultant_in_X(const BiPoly& f, const BiPoly& g);

/// Disc_X(f) = (-1)^{d(d-1)/2} Res_X(f, f_X) for f monic, degree d >= 2.
Poly discriminant_in_X(const BiPoly& f);

/// Monic irreducible factors of f (monic in X) over K(t), sorted.
std::vector<BiPoly> factor_bivariate(const BiPoly& f);

}  // namespace ffd

#endif
