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

#ifndef FFDESCENT_SERIES_HPP
#define FFDESCENT_SERIES_HPP

#include <vector>

#include "ffdescent/bipoly.hpp"

namespace ffd {

/// Wild ramification (slope denominator divisible by p).
class wild_error : public domain_error {
   public:
    using domain_error::domain_error;
};

/// One geometric place above s = 0 of G(s, X) = 0: ramification index e and
/// X-valuation lam_num/lam_den in units of v(s) = 1.
struct Branch {
    int e = 1;
    int lam_num = 0;
    int lam_den = 1;
};

/// Newton-Puiseux analysis of the roots of G (integral over K[[s]], all
/// X-valuations >= 0) above s = 0, over the algebraic closure. The constant
/// field is enlarged internally as residual equations require. Tame only.
std::vector<Branch> puiseux_branches(const BiPoly& G, int max_field_order = 1 << 23);

/// G(s, X) with s = t - tau: f(tau + s, X) over the field of tau.
BiPoly shift_to(const BiPoly& f, const GF& big, Elt tau);

/// s^{hd} f(1/s, X/s^h) for f monic with h = max deg of coefficients.
BiPoly infinity_chart(const BiPoly& f, int h);

}  // namespace ffd

#endif
