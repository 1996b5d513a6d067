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

#ifndef FFDESCENT_FIELD_HPP
#define FFDESCENT_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ffd {

/// Field element: index of the coefficient vector (c_0, ..., c_{n-1}) read
/// as the base-p integer sum c_i p^i. Constants of F_p map to themselves.
using Elt = std::uint32_t;

class domain_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// F_{p^n} with p odd, modulus the smallest monic irreducible of degree n
/// (ordered by the index of its lower coefficients). Multiplication uses
/// discrete log tables, addition Zech logarithms. Instances are interned and
/// immutable, so references stay valid and may be shared across threads.
class GF {
   public:
    static const GF& get(int p, int n = 1);

    int p() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    Elt q() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elt add(Elt a, Elt b) const noexcept {
        if (n_ == 1) {
            Elt s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t la = log_[a], lb = log_[b];
        const std::uint32_t k = lb >= la ? lb - la : lb + q1_ - la;
        const std::uint32_t z = zech_[k];
        if (z == kNone) return 0;
        std::uint32_t r = la + z;
        if (r >= q1_) r -= q1_;
        return exp_[r];
    }
    Elt neg(Elt a) const noexcept {
        if (a == 0) return 0;
        if (n_ == 1) return q_ - a;
        std::uint32_t r = log_[a] + half_;
        if (r >= q1_) r -= q1_;
        return exp_[r];
    }
    Elt sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const noexcept {
        if (a == 0 || b == 0) return 0;
        if (n_ == 1) return static_cast<Elt>((static_cast<std::uint64_t>(a) * b) % q_);
        return exp_[log_[a] + log_[b]];
    }
    Elt inv(Elt a) const {
        if (a == 0) throw domain_error("inverse of zero");
        const std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q1_ - l];
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, std::uint64_t e) const noexcept;

    /// Quadratic character: 0, 1 or -1.
    int chi(Elt a) const noexcept {
        if (a == 0) return 0;
        return (log_[a] & 1u) ? -1 : 1;
    }
    bool is_square(Elt a) const noexcept { return chi(a) >= 0; }
    std::optional<Elt> sqrt(Elt a) const noexcept;
    /// Smallest non-square index.
    Elt nonsquare() const noexcept { return nonsquare_; }

    Elt frob(Elt a) const noexcept;
    Elt frob_inv(Elt a) const noexcept;

    Elt gen() const noexcept { return exp_[1 % q1_]; }
    std::uint32_t log(Elt a) const {
        if (a == 0) throw domain_error("log of zero");
        return log_[a];
    }
    Elt exp(std::uint64_t k) const noexcept { return exp_[k % q1_]; }

    Elt from_int(long long v) const noexcept {
        long long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<Elt>(r);
    }
    std::vector<int> coeffs(Elt a) const;
    Elt from_coeffs(const std::vector<int>& c) const;
    bool in_prime_field(Elt a) const noexcept { return a < static_cast<Elt>(p_); }

    std::string name() const;

    GF(const GF&) = delete;
    GF& operator=(const GF&) = delete;

   private:
    GF(int p, int n);

    static constexpr std::uint32_t kNone = 0xffffffffu;
    int p_, n_;
    Elt q_;
    std::uint32_t q1_, half_;
    Elt nonsquare_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<Elt> exp_;
    std::vector<std::uint32_t> zech_;
};

/// F_{p^a} -> F_{p^b} for a | b, via the smallest root of the small modulus.
class Embedding {
   public:
    static const Embedding& get(const GF& small, const GF& big);

    const GF& small() const noexcept { return *small_; }
    const GF& big() const noexcept { return *big_; }
    Elt operator()(Elt a) const noexcept { return fwd_[a]; }
    /// Inverse image, if the element lies in the subfield.
    std::optional<Elt> pull(Elt b) const;

   private:
    Embedding(const GF& small, const GF& big);
    const GF* small_;
    const GF* big_;
    std::vector<Elt> fwd_;
    std::unordered_map<Elt, Elt> back_;
};

/// Smallest prime factor list of m (distinct primes).
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

bool is_prime(std::uint64_t m);

}  // namespace ffd

#endif
