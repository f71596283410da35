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

#ifndef PSPLIT_FIELD_HPP
#define PSPLIT_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "psplit/error.hpp"

namespace psplit {

/// Element of F_q, stored as the base-p digit encoding of its residue
/// polynomial (digit i is the coefficient of w^i, w the class of the modulus
/// variable). For q = p the value is simply the residue mod p.
struct FqElem {
    std::uint32_t value = 0;
    friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// The constant field F_q, q = p^e.
class GroundField {
   public:
    static std::shared_ptr<const GroundField> prime(std::uint32_t p);
    /// `modulus` is monic, coefficients low to high, of degree e >= 2, and
    /// must be irreducible over F_p.
    static std::shared_ptr<const GroundField> extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return e_; }
    std::uint64_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    FqElem zero() const noexcept { return {0}; }
    FqElem one() const noexcept { return {1}; }
    FqElem from_integer(std::int64_t n) const noexcept;
    /// The class of w (only meaningful when degree() > 1).
    FqElem generator() const;

    FqElem add(FqElem a, FqElem b) const noexcept;
    FqElem sub(FqElem a, FqElem b) const noexcept;
    FqElem neg(FqElem a) const noexcept;
    FqElem mul(FqElem a, FqElem b) const noexcept;
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, std::uint64_t n) const noexcept;
    /// a^(p^m)
    FqElem frobenius(FqElem a, unsigned m) const noexcept;
    /// The unique b with b^(p^m) = a; F_q is perfect.
    FqElem frobenius_inverse(FqElem a, unsigned m) const noexcept;

    std::string to_string(FqElem a) const;

    bool same_as(const GroundField& other) const noexcept {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

    GroundField(std::uint32_t p, std::vector<std::uint32_t> modulus);

   private:
    std::uint32_t p_;
    std::uint32_t e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    // Exp/log tables for e > 1 (multiplicative group is cyclic of order q-1).
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const GroundField>;

void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// Polynomial in s over F_q, coefficients indexed by exponent, trailing zeros
/// stripped.
class PolyS {
   public:
    explicit PolyS(FieldPtr field) : field_(std::move(field)) {}
    PolyS(FieldPtr field, std::vector<FqElem> coeffs);

    static PolyS constant(FieldPtr field, FqElem c);
    static PolyS monomial(FieldPtr field, FqElem c, std::size_t exponent);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].value == 1; }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    FqElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FqElem{}; }
    FqElem leading() const noexcept { return coeffs_.empty() ? FqElem{} : coeffs_.back(); }
    /// Exponent of the lowest nonzero term; empty for zero.
    std::optional<std::size_t> order_at_zero() const noexcept;

    PolyS operator-() const;
    PolyS scaled(FqElem c) const;
    PolyS monic() const;
    PolyS frobenius(unsigned m) const;
    /// Present iff this polynomial is a p^m-th power in F_q[s].
    std::optional<PolyS> p_root(unsigned m) const;

    friend PolyS operator+(const PolyS& a, const PolyS& b);
    friend PolyS operator-(const PolyS& a, const PolyS& b);
    friend PolyS operator*(const PolyS& a, const PolyS& b);
    friend bool operator==(const PolyS& a, const PolyS& b) noexcept { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; throws DivisionByZero for b = 0.
    static std::pair<PolyS, PolyS> divmod(const PolyS& a, const PolyS& b);
    /// Monic gcd (zero when both inputs are zero).
    static PolyS gcd(PolyS a, PolyS b);

    std::string to_string() const;

   private:
    void trim() noexcept;

    FieldPtr field_;
    std::vector<FqElem> coeffs_;
};

/// Element of k = F_q(s) in canonical form: monic denominator, coprime
/// numerator and denominator. Equal values have equal representations.
class RatFn {
   public:
    explicit RatFn(FieldPtr field);
    RatFn(FieldPtr field, std::int64_t n);
    explicit RatFn(PolyS numerator);
    RatFn(PolyS numerator, PolyS denominator);

    static RatFn s(FieldPtr field);
    static RatFn constant(FieldPtr field, FqElem c);

    const FieldPtr& field() const noexcept { return num_.field(); }
    const PolyS& numerator() const noexcept { return num_; }
    const PolyS& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    RatFn operator-() const;
    RatFn inverse() const;
    RatFn pow(std::int64_t n) const;
    RatFn frobenius(unsigned m) const;
    std::optional<RatFn> p_root(unsigned m) const;
    /// s-adic valuation; empty for zero.
    std::optional<std::int64_t> ord_s() const noexcept;

    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
    RatFn& operator*=(const RatFn& b) { return *this = *this * b; }
    friend bool operator==(const RatFn& a, const RatFn& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Rendered in the literal grammar accepted by parse_ratfn.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFn& a) { return os << a.to_string(); }

   private:
    PolyS num_;
    PolyS den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
RatFn ratfn_arith(const RatFn& a, const RatFn& b, ArithOp op);

/// Coordinates of c in the basis 1, s, ..., s^(p^m - 1) of k over k^(p^m).
/// Every returned u_j lies in k^(p^m) and sum_j u_j s^j == c.
std::vector<RatFn> pm_decompose(const RatFn& c, unsigned m);

/// p^m, throwing InvalidInput when it does not fit the supported range.
std::uint64_t checked_ppow(std::uint32_t p, unsigned m);

}  // namespace psplit

#endif
