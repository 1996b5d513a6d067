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

#ifndef FFDESCENT_POLY_HPP
#define FFDESCENT_POLY_HPP

#include <compare>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ffdescent/field.hpp"

namespace ffd {

/// Dense univariate polynomial over a table field, lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
   public:
    Poly() = default;
    explicit Poly(const GF& f) : F_(&f) {}
    Poly(const GF& f, std::vector<Elt> c) : F_(&f), c_(std::move(c)) { normalize(); }

    static Poly constant(const GF& f, Elt a) { return Poly(f, {a}); }
    static Poly monomial(const GF& f, Elt a, int k);
    static Poly x(const GF& f) { return monomial(f, 1, 1); }
    /// Coefficients given as small integers (reduced into the prime field).
    static Poly from_ints(const GF& f, const std::vector<long long>& c);

    const GF& field() const { return *F_; }
    const GF* field_ptr() const noexcept { return F_; }
    int deg() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elt lc() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elt operator[](int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    const std::vector<Elt>& coeffs() const noexcept { return c_; }
    void set(int i, Elt a);

    Elt eval(Elt a) const;
    Poly derivative() const;
    Poly monic() const;
    Poly scaled(Elt a) const;
    Poly shifted(int k) const;  // times t^k

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;

    bool operator==(const Poly& o) const noexcept { return c_ == o.c_; }
    bool operator!=(const Poly& o) const noexcept { return !(c_ == o.c_); }
    /// Deterministic total order: degree first, then coefficients from the
    /// top down.
    bool operator<(const Poly& o) const noexcept;

    std::string str(const std::string& var = "t") const;

   private:
    void normalize() noexcept {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const GF* F_ = nullptr;
    std::vector<Elt> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd (zero if both zero).
Poly gcd(const Poly& a, const Poly& b);
/// g = s a + t b with g monic.
struct XGcd {
    Poly g, s, t;
};
XGcd xgcd(const Poly& a, const Poly& b);
/// Inverse of a modulo m; throws if not coprime.
Poly invmod(const Poly& a, const Poly& m);

Poly powmod(Poly base, std::uint64_t e, const Poly& m);
Poly pow(const Poly& a, unsigned e);
/// a(b(t)).
Poly compose(const Poly& a, const Poly& b);

/// Valuation at the monic irreducible pi (a nonzero).
int ord(const Poly& a, const Poly& pi);

/// Resultant with the usual convention Res(f, g) = lc(f)^deg g prod g(alpha).
Elt resultant(const Poly& f, const Poly& g);

Poly random_poly(const GF& f, int deg, std::mt19937_64& rng, bool monic = false);

/// Map coefficients along a field embedding.
Poly embed(const Poly& a, const Embedding& e);

}  // namespace ffd

#endif
