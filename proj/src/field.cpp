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

#include "psplit/field.hpp"

#include <algorithm>
#include <sstream>

namespace psplit {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
        case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::HeightMismatch: return "HeightMismatch";
        case ErrorCode::EmptyForm: return "EmptyForm";
        case ErrorCode::NotSeparable: return "NotSeparable";
        case ErrorCode::PrincipalPartNotCertified: return "PrincipalPartNotCertified";
        case ErrorCode::TargetValuationOutOfRange: return "TargetValuationOutOfRange";
        case ErrorCode::NoLinearTerm: return "NoLinearTerm";
        case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorCode::NotPGroup: return "NotPGroup";
        case ErrorCode::TrivialGroup: return "TrivialGroup";
        case ErrorCode::InvalidGroupTable: return "InvalidGroupTable";
        case ErrorCode::ContradictoryEvidence: return "ContradictoryEvidence";
    }
    return "Unknown";
}

std::uint64_t checked_ppow(std::uint32_t p, unsigned m) {
    constexpr std::uint64_t limit = std::uint64_t{1} << 20;
    std::uint64_t r = 1;
    for (unsigned i = 0; i < m; ++i) {
        r *= p;
        if (r > limit) fail(ErrorCode::InvalidInput, "p^" + std::to_string(m) + " exceeds the supported range");
    }
    return r;
}

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over F_p used only while setting up F_q.
using Fp = std::vector<std::uint64_t>;

void fp_trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_mod(Fp a, const Fp& f, std::uint64_t p) {
    fp_trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = [&] {
        std::uint64_t r = 1, b = f.back() % p, n = p - 2;
        while (n) {
            if (n & 1) r = r * b % p;
            b = b * b % p;
            n >>= 1;
        }
        return r;
    }();
    while (a.size() > df) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        fp_trim(a);
    }
    return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_mod(std::move(r), f, p);
}

Fp fp_powmod(Fp a, std::uint64_t n, const Fp& f, std::uint64_t p) {
    Fp r{1};
    while (n) {
        if (n & 1) r = fp_mulmod(r, a, f, p);
        a = fp_mulmod(a, a, f, p);
        n >>= 1;
    }
    return r;
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        Fp r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree e is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= e/2.
bool fp_irreducible(const Fp& f, std::uint64_t p) {
    const std::size_t e = f.size() - 1;
    Fp h{0, 1};
    for (std::size_t i = 1; i <= e / 2; ++i) {
        h = fp_powmod(h, p, f, p);
        Fp d = h;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        if (fp_gcd(d, f, p).size() != 1) return false;
    }
    return true;
}

Fp digits_of(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
    Fp d(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        d[i] = v % p;
        v /= p;
    }
    fp_trim(d);
    return d;
}

std::uint32_t value_of(const Fp& d, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return static_cast<std::uint32_t>(v);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

GroundField::GroundField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(1), q_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p) || p >= (1u << 31)) fail(ErrorCode::InvalidInput, "p must be a prime below 2^31");
    if (modulus_.empty()) return;
    if (modulus_.size() < 3) fail(ErrorCode::InvalidInput, "extension modulus must have degree >= 2");
    for (auto& c : modulus_) c %= p;
    if (modulus_.back() != 1) fail(ErrorCode::InvalidInput, "extension modulus must be monic");
    e_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        q *= p;
        if (q > (1u << 16)) fail(ErrorCode::InvalidInput, "q = p^e must not exceed 2^16");
    }
    q_ = q;
    const Fp f(modulus_.begin(), modulus_.end());
    if (!fp_irreducible(f, p)) fail(ErrorCode::InvalidInput, "extension modulus is not irreducible over F_p");

    const auto factors = prime_factors(q_ - 1);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        const Fp c = digits_of(cand, p_, e_);
        const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t l) {
            return fp_powmod(c, (q_ - 1) / l, f, p_) != Fp{1};
        });
        if (primitive) {
            g = cand;
            break;
        }
    }
    if (q_ == 2) g = 1;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Fp cur{1};
    const Fp gen = digits_of(g, p_, e_);
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
        const std::uint32_t v = value_of(cur, p_);
        exp_[i] = v;
        log_[v] = static_cast<std::uint32_t>(i);
        cur = fp_mulmod(cur, gen, f, p_);
    }
}

std::shared_ptr<const GroundField> GroundField::prime(std::uint32_t p) {
    return std::make_shared<const GroundField>(p, std::vector<std::uint32_t>{});
}

std::shared_ptr<const GroundField> GroundField::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    return std::make_shared<const GroundField>(p, std::move(modulus));
}

FqElem GroundField::from_integer(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FqElem GroundField::generator() const {
    if (e_ == 1) fail(ErrorCode::InvalidInput, "the prime field has no extension generator");
    return {p_};
}

FqElem GroundField::add(FqElem a, FqElem b) const noexcept {
    if (e_ == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % p_)};
    std::uint32_t r = 0, scale = 1, x = a.value, y = b.value;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return {r};
}

FqElem GroundField::neg(FqElem a) const noexcept {
    if (e_ == 1) return {a.value == 0 ? 0 : p_ - a.value};
    std::uint32_t r = 0, scale = 1, x = a.value;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const std::uint32_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        x /= p_;
        scale *= p_;
    }
    return {r};
}

FqElem GroundField::sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }

FqElem GroundField::mul(FqElem a, FqElem b) const noexcept {
    if (e_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
    if (a.value == 0 || b.value == 0) return {0};
    return {exp_[(std::uint64_t{log_[a.value]} + log_[b.value]) % (q_ - 1)]};
}

FqElem GroundField::inv(FqElem a) const {
    if (a.value == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_q");
    if (e_ > 1) return {exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
    return pow(a, p_ - 2);
}

FqElem GroundField::pow(FqElem a, std::uint64_t n) const noexcept {
    FqElem r = one();
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

FqElem GroundField::frobenius(FqElem a, unsigned m) const noexcept {
    if (e_ == 1) return a;
    m %= e_;
    for (unsigned i = 0; i < m; ++i) a = pow(a, p_);
    return a;
}

FqElem GroundField::frobenius_inverse(FqElem a, unsigned m) const noexcept {
    if (e_ == 1) return a;
    return frobenius(a, (e_ - m % e_) % e_);
}

std::string GroundField::to_string(FqElem a) const {
    if (e_ == 1) return std::to_string(a.value);
    std::string out;
    std::uint32_t x = a.value;
    std::vector<std::uint32_t> d;
    for (std::uint32_t i = 0; i < e_; ++i) {
        d.push_back(x % p_);
        x /= p_;
    }
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += "w";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a != b && !a->same_as(*b)) fail(ErrorCode::FieldMismatch, "operands live over different constant fields");
}

// ---------------------------------------------------------------- PolyS

PolyS::PolyS(FieldPtr field, std::vector<FqElem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
}

PolyS PolyS::constant(FieldPtr field, FqElem c) { return PolyS(std::move(field), {c}); }

PolyS PolyS::monomial(FieldPtr field, FqElem c, std::size_t exponent) {
    std::vector<FqElem> v(exponent + 1);
    v[exponent] = c;
    return PolyS(std::move(field), std::move(v));
}

void PolyS::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

std::optional<std::size_t> PolyS::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::optional<std::size_t> PolyS::order_at_zero() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i].value != 0) return i;
    return std::nullopt;
}

PolyS PolyS::operator-() const {
    std::vector<FqElem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->neg(coeffs_[i]);
    return PolyS(field_, std::move(v));
}

PolyS PolyS::scaled(FqElem c) const {
    std::vector<FqElem> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
    return PolyS(field_, std::move(v));
}

PolyS PolyS::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

PolyS PolyS::frobenius(unsigned m) const {
    if (is_zero()) return *this;
    const std::uint64_t k = checked_ppow(field_->p(), m);
    std::vector<FqElem> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = field_->frobenius(coeffs_[i], m);
    return PolyS(field_, std::move(v));
}

std::optional<PolyS> PolyS::p_root(unsigned m) const {
    if (is_zero()) return *this;
    const std::uint64_t k = checked_ppow(field_->p(), m);
    std::vector<FqElem> v((coeffs_.size() - 1) / k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].value == 0) continue;
        if (i % k != 0) return std::nullopt;
        v[i / k] = field_->frobenius_inverse(coeffs_[i], m);
    }
    return PolyS(field_, std::move(v));
}

PolyS operator+(const PolyS& a, const PolyS& b) {
    require_same_field(a.field_, b.field_);
    std::vector<FqElem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->add(a.coeff(i), b.coeff(i));
    return PolyS(a.field_, std::move(v));
}

PolyS operator-(const PolyS& a, const PolyS& b) {
    require_same_field(a.field_, b.field_);
    std::vector<FqElem> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_->sub(a.coeff(i), b.coeff(i));
    return PolyS(a.field_, std::move(v));
}

PolyS operator*(const PolyS& a, const PolyS& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return PolyS(a.field_);
    const GroundField& F = *a.field_;
    std::vector<FqElem> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].value == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return PolyS(a.field_, std::move(v));
}

std::pair<PolyS, PolyS> PolyS::divmod(const PolyS& a, const PolyS& b) {
    require_same_field(a.field_, b.field_);
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    const GroundField& F = *a.field_;
    std::vector<FqElem> r = a.coeffs_;
    const std::size_t db = b.coeffs_.size() - 1;
    if (r.size() <= db) return {PolyS(a.field_), a};
    std::vector<FqElem> quo(r.size() - db);
    const FqElem lead_inv = F.inv(b.leading());
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].value == 0) continue;
        const FqElem c = F.mul(r[i], lead_inv);
        quo[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b.coeffs_[j]));
    }
    return {PolyS(a.field_, std::move(quo)), PolyS(a.field_, std::move(r))};
}

PolyS PolyS::gcd(PolyS a, PolyS b) {
    while (!b.is_zero()) {
        PolyS r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string PolyS::to_string() const {
    if (is_zero()) return "0";
    const GroundField& F = *field_;
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const FqElem c = coeffs_[i];
        if (c.value == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = F.to_string(c);
        const bool compound = F.degree() > 1 && cs.find('+') != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c.value != 1) out += cs + "*";
        out += "s";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

// ---------------------------------------------------------------- RatFn

RatFn::RatFn(FieldPtr field) : num_(field), den_(PolyS::constant(field, field->one())) {}

RatFn::RatFn(FieldPtr field, std::int64_t n)
    : num_(PolyS::constant(field, field->from_integer(n))), den_(PolyS::constant(field, field->one())) {}

RatFn::RatFn(PolyS numerator) : num_(std::move(numerator)), den_(PolyS::constant(num_.field(), num_.field()->one())) {}

RatFn::RatFn(PolyS numerator, PolyS denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    require_same_field(num_.field(), den_.field());
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = PolyS::constant(num_.field(), num_.field()->one());
        return;
    }
    PolyS g = PolyS::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = PolyS::divmod(num_, g).first;
        den_ = PolyS::divmod(den_, g).first;
    }
    const FqElem lead = den_.leading();
    if (lead.value != 1) {
        const FqElem li = num_.field()->inv(lead);
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFn RatFn::s(FieldPtr field) { return RatFn(PolyS::monomial(field, field->one(), 1)); }

RatFn RatFn::constant(FieldPtr field, FqElem c) { return RatFn(PolyS::constant(std::move(field), c)); }

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -num_;
    return r;
}

RatFn RatFn::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in F_q(s)");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(std::int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    RatFn r(field(), 1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

RatFn RatFn::frobenius(unsigned m) const {
    // Frobenius preserves coprimality and monicity, so no reduction is needed.
    RatFn r = *this;
    r.num_ = num_.frobenius(m);
    r.den_ = den_.frobenius(m);
    return r;
}

std::optional<RatFn> RatFn::p_root(unsigned m) const {
    auto n = num_.p_root(m);
    if (!n) return std::nullopt;
    auto d = den_.p_root(m);
    if (!d) return std::nullopt;
    RatFn r = *this;
    r.num_ = std::move(*n);
    r.den_ = std::move(*d);
    return r;
}

std::optional<std::int64_t> RatFn::ord_s() const noexcept {
    if (is_zero()) return std::nullopt;
    return static_cast<std::int64_t>(*num_.order_at_zero()) - static_cast<std::int64_t>(*den_.order_at_zero());
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ * b.num_);
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero in F_q(s)");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {
bool is_single_term(const PolyS& p) {
    std::size_t n = 0;
    for (const auto& c : p.coeffs()) n += c.value != 0;
    if (n != 1) return false;
    // A lone coefficient like "w+1" still needs grouping.
    return p.field()->degree() == 1 || p.field()->to_string(p.leading()).find('+') == std::string::npos;
}
}  // namespace

std::string RatFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.to_string(), d = den_.to_string();
    if (!is_single_term(num_)) n = "(" + n + ")";
    if (!is_single_term(den_)) d = "(" + d + ")";
    return n + "/" + d;
}

RatFn ratfn_arith(const RatFn& a, const RatFn& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    fail(ErrorCode::InvalidInput, "unknown arithmetic operation");
}

std::vector<RatFn> pm_decompose(const RatFn& c, unsigned m) {
    const FieldPtr& F = c.field();
    if (m == 0) return {c};
    const std::uint64_t k = checked_ppow(F->p(), m);
    // c = N / D^(p^m) with N = num * den^(p^m - 1); D^(p^m) already lies in k^(p^m).
    const PolyS& den = c.denominator();
    PolyS dk1 = PolyS::constant(F, F->one());
    for (std::uint64_t i = 0; i + 1 < k; ++i) dk1 = dk1 * den;
    const PolyS N = c.numerator() * dk1;
    const PolyS Dk = den.frobenius(m);
    std::vector<std::vector<FqElem>> parts(k);
    for (std::size_t i = 0; i < N.coeffs().size(); ++i) {
        const FqElem a = N.coeffs()[i];
        if (a.value == 0) continue;
        auto& part = parts[i % k];
        if (part.size() <= i - i % k) part.resize(i - i % k + 1);
        part[i - i % k] = a;
    }
    std::vector<RatFn> out;
    out.reserve(k);
    for (auto& part : parts) out.emplace_back(PolyS(F, std::move(part)), Dk);
    return out;
}

}  // namespace psplit
