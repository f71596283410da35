/*
   Copyright 2026 The psplit Authors

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

#ifndef PSPLIT_TESTS_SUPPORT_HPP
#define PSPLIT_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "psplit/field.hpp"
#include "psplit/laurent.hpp"
#include "psplit/parse.hpp"

namespace psplit::testing {

inline FieldPtr f2() { return GroundField::prime(2); }
inline FieldPtr f3() { return GroundField::prime(3); }
inline FieldPtr f4() { return GroundField::extension(2, {1, 1, 1}); }

inline RatFn lit(const FieldPtr& F, const std::string& text) { return parse_ratfn(text, F); }
inline LaurentSeries series(const FieldPtr& F, const std::string& text, std::int64_t end = default_precision) {
    return parse_series(text, F, end);
}

inline PolyS random_poly(const FieldPtr& F, std::mt19937_64& rng, unsigned max_deg) {
    std::vector<FqElem> c(max_deg + 1);
    for (auto& x : c) x.value = static_cast<std::uint32_t>(rng() % F->q());
    return PolyS(F, std::move(c));
}

inline RatFn random_ratfn(const FieldPtr& F, std::mt19937_64& rng, unsigned max_deg = 3) {
    PolyS den = random_poly(F, rng, max_deg);
    while (den.is_zero()) den = random_poly(F, rng, max_deg);
    return RatFn(random_poly(F, rng, max_deg), den);
}

inline RatFn random_nonzero(const FieldPtr& F, std::mt19937_64& rng, unsigned max_deg = 3) {
    RatFn r = random_ratfn(F, rng, max_deg);
    while (r.is_zero()) r = random_ratfn(F, rng, max_deg);
    return r;
}

/// Every nonzero polynomial of s-degree <= deg, in code order.
inline std::vector<RatFn> all_polys(const FieldPtr& F, unsigned deg) {
    std::vector<RatFn> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i <= deg; ++i) count *= F->q();
    for (std::uint64_t code = 1; code < count; ++code) {
        std::vector<FqElem> c;
        for (std::uint64_t x = code; x; x /= F->q()) c.push_back({static_cast<std::uint32_t>(x % F->q())});
        out.emplace_back(PolyS(F, std::move(c)));
    }
    return out;
}

}  // namespace psplit::testing

#endif
