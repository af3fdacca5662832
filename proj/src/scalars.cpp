/*
   Copyright 2026 The gri Authors

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

#include "gri/scalars.hpp"

#include <cctype>
#include <string>

namespace gri {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
        case ErrorKind::InvalidAntiAutomorphism: return "InvalidAntiAutomorphism";
        case ErrorKind::NoWitnessFound: return "NoWitnessFound";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::ZeroPolynomialDegree: return "ZeroPolynomialDegree";
        case ErrorKind::MissingAssignment: return "MissingAssignment";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::BlendCollapsed: return "BlendCollapsed";
        case ErrorKind::FreshVarCollision: return "FreshVarCollision";
        case ErrorKind::VariableAbsent: return "VariableAbsent";
        case ErrorKind::Collapsed: return "Collapsed";
        case ErrorKind::NotSingleVariable: return "NotSingleVariable";
        case ErrorKind::NotSigmaLinear: return "NotSigmaLinear";
        case ErrorKind::NoTopTwist: return "NoTopTwist";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::BaseUndefined: return "BaseUndefined";
        case ErrorKind::BaseNonzero: return "BaseNonzero";
        case ErrorKind::ExhaustedSampling: return "ExhaustedSampling";
        case ErrorKind::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
        case ErrorKind::NoneFound: return "NoneFound";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::UnknownEntry: return "UnknownEntry";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::TwistOutOfRange: return "TwistOutOfRange";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(mpz_class numerator, mpz_class denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (sgn(den_) == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    if (start == text.size()) return false;
    for (std::size_t k = start; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    mpz_class num, den(1);
    bool ok = parse_integer(trim(text.substr(0, slash)), num);
    if (ok && slash != std::string_view::npos) {
        auto den_text = trim(text.substr(slash + 1));
        ok = !den_text.empty() && den_text[0] != '-' && den_text[0] != '+' && parse_integer(den_text, den);
    }
    if (!ok) fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of 0");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) {
        Rational r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
        Rational r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

std::string Rational::to_string() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

// ------------------------------------------------------- PrimeFieldElement

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    residue_ = static_cast<std::uint32_t>(r);
}

PrimeFieldElement PrimeFieldElement::operator-() const {
    PrimeFieldElement r = *this;
    r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
    return r;
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    if (residue_ == 0) fail(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(modulus_));
    // Extended Euclid on (residue, modulus).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = modulus_, new_r = residue_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return PrimeFieldElement(t, modulus_);
}

namespace {

void check_same_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.modulus() != b.modulus()) {
        fail(ErrorKind::FieldMismatch,
             "F_" + std::to_string(a.modulus()) + " vs F_" + std::to_string(b.modulus()));
    }
}

}  // namespace

PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
    check_same_modulus(a, b);
    std::uint64_t s = std::uint64_t{a.residue_} + b.residue_;
    if (s >= a.modulus_) s -= a.modulus_;
    a.residue_ = static_cast<std::uint32_t>(s);
    return a;
}

PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) { return a + (-b); }

PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
    check_same_modulus(a, b);
    a.residue_ = static_cast<std::uint32_t>((std::uint64_t{a.residue_} * b.residue_) % a.modulus_);
    return a;
}

std::string PrimeFieldElement::to_string() const { return std::to_string(residue_) + " mod " + std::to_string(modulus_); }

// ------------------------------------------------------------------- Field

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
    if (kind_ == Kind::Prime) return PrimeFieldElement(value, p_);
    return Rational(static_cast<long>(value));
}

Scalar Field::from_rational(const Rational& value) const {
    if (kind_ == Kind::Rationals) return value;
    auto reduce = [this](const mpz_class& z) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
        return PrimeFieldElement(static_cast<std::int64_t>(r.get_ui()), p_);
    };
    PrimeFieldElement den = reduce(value.denominator());
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
    return reduce(value.numerator()) * den.inverse();
}

Scalar Field::parse(std::string_view text) const {
    text = trim(text);
    auto mod = text.find("mod");
    if (mod != std::string_view::npos) {
        mpz_class p;
        if (!parse_integer(trim(text.substr(mod + 3)), p)) {
            fail(ErrorKind::ParseError, "malformed modulus in '" + std::string(text) + "'");
        }
        if (kind_ != Kind::Prime || p != p_) {
            fail(ErrorKind::FieldMismatch, "'" + std::string(text) + "' is not an element of " + to_string());
        }
        text = trim(text.substr(0, mod));
    }
    return from_rational(Rational::parse(text));
}

std::string Field::to_string() const { return kind_ == Kind::Prime ? "F" + std::to_string(p_) : "Q"; }

// ------------------------------------------------------------------ Scalar

Field Scalar::field() const {
    if (is_rational()) return Field::rationals();
    return Field::prime(as_prime().modulus());
}

bool Scalar::is_zero() const noexcept {
    return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const noexcept {
    if (is_rational()) return as_rational().is_one();
    return as_prime().residue() == 1;
}

Scalar Scalar::operator-() const {
    return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

Scalar Scalar::inverse() const {
    return std::visit([](const auto& v) { return Scalar(v.inverse()); }, value_);
}

namespace {

[[noreturn]] void mixed_fields(const Scalar& a, const Scalar& b) {
    fail(ErrorKind::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& other) {
    if (auto* p = std::get_if<PrimeFieldElement>(&value_)) {
        auto* q = std::get_if<PrimeFieldElement>(&other.value_);
        if (!q) mixed_fields(*this, other);
        *p = *p + *q;
    } else {
        auto* q = std::get_if<Rational>(&other.value_);
        if (!q) mixed_fields(*this, other);
        auto& r = std::get<Rational>(value_);
        r = r + *q;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
    if (auto* p = std::get_if<PrimeFieldElement>(&value_)) {
        auto* q = std::get_if<PrimeFieldElement>(&other.value_);
        if (!q) mixed_fields(*this, other);
        *p = *p * *q;
    } else {
        auto* q = std::get_if<Rational>(&other.value_);
        if (!q) mixed_fields(*this, other);
        auto& r = std::get<Rational>(value_);
        r = r * *q;
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_rational()) return a.as_rational() == b.as_rational();
    return a.as_prime() == b.as_prime();
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() < b.value_.index();
    if (a.is_rational()) return a.as_rational() < b.as_rational();
    if (a.as_prime().modulus() != b.as_prime().modulus()) return a.as_prime().modulus() < b.as_prime().modulus();
    return a.as_prime().residue() < b.as_prime().residue();
}

std::string Scalar::to_string() const {
    return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

std::string Scalar::to_plain_string() const {
    if (is_rational()) return as_rational().to_string();
    return std::to_string(as_prime().residue());
}

Scalar field_arith(const Scalar& a, const Scalar& b, FieldOp op) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Neg: return -a;
        case FieldOp::Inv: return a.inverse();
    }
    return a;
}

}  // namespace gri
