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

#ifndef PSPLIT_LAURENT_HPP
#define PSPLIT_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psplit/field.hpp"

namespace psplit {

inline constexpr std::int64_t default_precision = 16;

/// Truncated element of k((t)).
///
/// The series is known modulo t^end(): coefficients for exponents
/// anchor() .. end()-1 are stored, everything below the anchor is exactly
/// zero and everything from end() on is unknown. Arithmetic only ever shrinks
/// the known window.
class LaurentSeries {
   public:
    /// `coeffs` holds exponents anchor, anchor+1, ...; must be non-empty.
    LaurentSeries(FieldPtr field, std::int64_t anchor, std::vector<RatFn> coeffs);

    /// The zero series known on [anchor, end).
    static LaurentSeries zero(FieldPtr field, std::int64_t anchor, std::int64_t end);
    /// c * t^exponent known modulo t^end (needs exponent < end unless c = 0).
    static LaurentSeries monomial(const RatFn& c, std::int64_t exponent, std::int64_t end);
    /// Finite sum of terms, known modulo t^end. The anchor is min(lowest exponent, 0).
    static LaurentSeries from_terms(FieldPtr field, const std::map<std::int64_t, RatFn>& terms, std::int64_t end);

    const FieldPtr& field() const noexcept { return field_; }
    std::int64_t anchor() const noexcept { return anchor_; }
    std::int64_t end() const noexcept { return anchor_ + static_cast<std::int64_t>(coeffs_.size()); }
    std::int64_t precision() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
    const std::vector<RatFn>& coeffs() const noexcept { return coeffs_; }

    /// Smallest exponent with a nonzero coefficient; empty when every tracked
    /// coefficient vanishes.
    std::optional<std::int64_t> valuation() const noexcept;
    /// valuation() when defined, otherwise end(): a lower bound for the true valuation.
    std::int64_t valuation_lower_bound() const noexcept;
    bool is_tracked_zero() const noexcept { return !valuation().has_value(); }

    /// Throws PrecisionExceeded outside [anchor, end).
    const RatFn& coeff_at(std::int64_t j) const;

    LaurentSeries operator-() const;
    LaurentSeries scaled(const RatFn& c) const;
    /// Throws DivisionByZero when the tracked window is zero.
    LaurentSeries inverse() const;
    /// x -> x^(p^m), coefficient-wise Frobenius; the window scales by p^m.
    LaurentSeries frobenius(unsigned m) const;
    LaurentSeries pow(std::uint64_t n) const;
    /// Same series known only modulo t^new_end (new_end <= end()).
    LaurentSeries truncated(std::int64_t new_end) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) noexcept {
        return a.anchor_ == b.anchor_ && a.coeffs_ == b.coeffs_;
    }

    /// Two series agree on the common window.
    bool agrees_with(const LaurentSeries& other) const;

    /// Human-readable rendering, e.g. "t^-1 + (s+1)*t + O(t^16)".
    std::string to_string() const;

   private:
    FieldPtr field_;
    std::int64_t anchor_;
    std::vector<RatFn> coeffs_;
};

}  // namespace psplit

#endif
