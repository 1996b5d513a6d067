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

#include "ffdescent/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ffd {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 23;

// Dense F_p polynomial helpers, used only while the tables do not exist yet.
using IP = std::vector<int>;

void trim(IP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IP mulmod(const IP& a, const IP& b, const IP& m, int p) {
    IP r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    const std::size_t n = m.size() - 1;  // m monic
    while (r.size() > n) {
        const int c = r.back();
        const std::size_t sh = r.size() - 1 - n;
        for (std::size_t i = 0; i <= n; ++i) r[sh + i] = ((r[sh + i] - c * m[i]) % p + p) % p;
        trim(r);
    }
    return r;
}

IP powmod(IP base, std::uint64_t e, const IP& m, int p) {
    IP r{1};
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

IP gcd_ip(IP a, IP b, int p) {
    trim(a);
    trim(b);
    auto inv = [p](int x) {
        int r = 1, e = p - 2, b0 = x % p;
        while (e) {
            if (e & 1) r = r * b0 % p;
            b0 = b0 * b0 % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        const int il = inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            const int c = a.back() * il % p;
            const std::size_t sh = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = ((a[sh + i] - c * b[i]) % p + p) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool irreducible_ip(const IP& m, int p) {
    const int n = static_cast<int>(m.size()) - 1;
    IP xp{0, 1};
    for (int i = 1; i <= n / 2; ++i) {
        xp = powmod(xp, static_cast<std::uint64_t>(p), m, p);
        IP d = xp;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] - 1 + p) % p;
        trim(d);
        if (gcd_ip(m, d, p).size() > 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

const GF& GF::get(int p, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<GF>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return *it->second;
    auto* f = new GF(p, n);
    cache.emplace(std::make_pair(p, n), std::unique_ptr<GF>(f));
    return *f;
}

GF::GF(int p, int n) : p_(p), n_(n) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw domain_error("characteristic must be an odd prime");
    if (n < 1) throw domain_error("extension degree must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxOrder) throw domain_error("field too large for table arithmetic");
    }
    q_ = static_cast<Elt>(q);
    q1_ = q_ - 1;
    half_ = q1_ / 2;

    // Smallest monic irreducible of degree n.
    if (n == 1) {
        modulus_ = {0, 1};
    } else {
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            IP m(n + 1, 0);
            std::uint64_t v = idx;
            for (int i = 0; i < n; ++i) {
                m[i] = static_cast<int>(v % p);
                v /= p;
            }
            m[n] = 1;
            if (m[0] == 0) continue;
            if (irreducible_ip(m, p)) {
                modulus_ = m;
                break;
            }
        }
    }

    auto to_ip = [&](std::uint64_t idx) {
        IP c(n, 0);
        for (int i = 0; i < n; ++i) {
            c[i] = static_cast<int>(idx % p);
            idx /= p;
        }
        trim(c);
        return c;
    };
    auto to_idx = [&](const IP& c) {
        std::uint64_t idx = 0, pw = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            idx += pw * static_cast<std::uint64_t>(c[i]);
            pw *= p;
        }
        return static_cast<Elt>(idx);
    };

    const auto primes = prime_factors(q1_);
    IP gpoly;
    if (n == 1) {
        for (Elt g = 2; g < q_; ++g) {
            bool ok = true;
            for (auto l : primes) {
                std::uint64_t r = 1, b = g, e = q1_ / l;
                while (e) {
                    if (e & 1) r = r * b % q_;
                    b = b * b % q_;
                    e >>= 1;
                }
                if (r == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gpoly = {static_cast<int>(g)};
                break;
            }
        }
    } else {
        for (std::uint64_t idx = 2; idx < q; ++idx) {
            IP c = to_ip(idx);
            bool ok = true;
            for (auto l : primes) {
                if (powmod(c, q1_ / l, modulus_, p) == IP{1}) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gpoly = c;
                break;
            }
        }
    }

    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<std::size_t>(q1_) + 1, 0);
    if (n == 1) {
        std::uint64_t cur = 1;
        for (std::uint32_t k = 0; k < q1_; ++k) {
            exp_[k] = static_cast<Elt>(cur);
            log_[cur] = k;
            cur = cur * static_cast<std::uint64_t>(gpoly[0]) % q_;
        }
    } else {
        IP cur{1};
        for (std::uint32_t k = 0; k < q1_; ++k) {
            const Elt e = to_idx(cur);
            exp_[k] = e;
            log_[e] = k;
            cur = mulmod(cur, gpoly, modulus_, p);
        }
        zech_.assign(q1_, kNone);
        for (std::uint32_t k = 0; k < q1_; ++k) {
            IP c = to_ip(exp_[k]);
            c.resize(n, 0);
            c[0] = (c[0] + 1) % p;
            trim(c);
            if (!c.empty()) zech_[k] = log_[to_idx(c)];
        }
    }
    for (std::uint32_t k = q1_; k < exp_.size(); ++k) exp_[k] = exp_[k - q1_];
    for (Elt a = 1; a < q_; ++a) {
        if (log_[a] & 1u) {
            nonsquare_ = a;
            break;
        }
    }
}

Elt GF::pow(Elt a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % q1_)) % q1_;
    return exp_[l];
}

std::optional<Elt> GF::sqrt(Elt a) const noexcept {
    if (a == 0) return Elt{0};
    const std::uint32_t l = log_[a];
    if (l & 1u) return std::nullopt;
    return exp_[l / 2];
}

Elt GF::frob(Elt a) const noexcept { return pow(a, static_cast<std::uint64_t>(p_)); }

Elt GF::frob_inv(Elt a) const noexcept {
    std::uint64_t e = 1;
    for (int i = 1; i < n_; ++i) e *= static_cast<std::uint64_t>(p_);
    return pow(a, e);
}

std::vector<int> GF::coeffs(Elt a) const {
    std::vector<int> c(n_, 0);
    for (int i = 0; i < n_; ++i) {
        c[i] = static_cast<int>(a % static_cast<Elt>(p_));
        a /= static_cast<Elt>(p_);
    }
    return c;
}

Elt GF::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > n_) throw domain_error("coefficient vector longer than extension degree");
    std::uint64_t idx = 0, pw = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        int v = c[i] % p_;
        if (v < 0) v += p_;
        idx += pw * static_cast<std::uint64_t>(v);
        pw *= static_cast<std::uint64_t>(p_);
    }
    return static_cast<Elt>(idx);
}

std::string GF::name() const {
    if (n_ == 1) return "F_" + std::to_string(p_);
    return "F_" + std::to_string(p_) + "^" + std::to_string(n_);
}

const Embedding& Embedding::get(const GF& small, const GF& big) {
    static std::mutex mu;
    static std::map<std::pair<const GF*, const GF*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(&small, &big);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto* e = new Embedding(small, big);
    cache.emplace(key, std::unique_ptr<Embedding>(e));
    return *e;
}

Embedding::Embedding(const GF& small, const GF& big) : small_(&small), big_(&big) {
    if (small.p() != big.p() || big.n() % small.n() != 0) throw domain_error("no embedding between these fields");
    const auto& m = small.modulus();
    Elt beta = 0;
    bool found = false;
    if (small.n() == 1) {
        found = true;
    } else {
        for (Elt b = 0; b < big.q() && !found; ++b) {
            Elt v = 0;
            for (std::size_t i = m.size(); i-- > 0;) v = big.add(big.mul(v, b), big.from_int(m[i]));
            if (v == 0) {
                beta = b;
                found = true;
            }
        }
    }
    if (!found) throw domain_error("subfield modulus has no root");
    fwd_.resize(small.q());
    for (Elt a = 0; a < small.q(); ++a) {
        if (small.n() == 1) {
            fwd_[a] = a;
        } else {
            const auto c = small.coeffs(a);
            Elt v = 0;
            for (std::size_t i = c.size(); i-- > 0;) v = big.add(big.mul(v, beta), big.from_int(c[i]));
            fwd_[a] = v;
        }
        back_.emplace(fwd_[a], a);
    }
}

std::optional<Elt> Embedding::pull(Elt b) const {
    auto it = back_.find(b);
    if (it == back_.end()) return std::nullopt;
    return it->second;
}

}  // namespace ffd
