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

#ifndef GRI_SCALARS_HPP
#define GRI_SCALARS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "gri/error.hpp"

namespace gri {

/*
 * Exact base-field arithmetic.
 *
 * Two fields are supported: the rationals Q (arbitrary precision) and prime
 * fields F_p for desk-scale moduli. A Scalar is a tagged union of the two; any
 * binary operation between scalars of different fields throws FieldMismatch.
 */

/// Reduced fraction with positive denominator. Zero is 0/1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(mpz_class numerator, mpz_class denominator);

    /// Accepts "n" or "n/d" with an optional leading sign.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const noexcept { return num_; }
    const mpz_class& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return sgn(num_) == 0; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator<(const Rational& a, const Rational& b);

    /// Reduces in place; a no-op on values that are already canonical.
    void normalize();

    std::string to_string() const;

  private:
    mpz_class num_;
    mpz_class den_;
};

/// Residue modulo a prime. The modulus travels with the value.
class PrimeFieldElement {
  public:
    PrimeFieldElement() = default;
    /// `modulus` is trusted here; construct through Field::prime to validate it.
    PrimeFieldElement(std::int64_t value, std::uint32_t modulus);

    std::uint32_t residue() const noexcept { return residue_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return residue_ == 0; }

    PrimeFieldElement operator-() const;
    PrimeFieldElement inverse() const;

    friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b);
    friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b);
    friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b);
    friend bool operator==(PrimeFieldElement a, PrimeFieldElement b) = default;

    std::string to_string() const;

  private:
    std::uint32_t residue_ = 0;
    std::uint32_t modulus_ = 2;
};

class Scalar;

/// Describes a base field: Q or F_p.
class Field {
  public:
    enum class Kind { Rationals, Prime };

    static Field rationals() noexcept { return Field(Kind::Rationals, 0); }
    /// Validates primality by trial division; throws NotPrime.
    static Field prime(std::uint32_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Prime; }
    /// 0 for Q.
    std::uint32_t characteristic() const noexcept { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t value) const;
    Scalar from_rational(const Rational& value) const;
    /// Parses "n", "n/d", or "n mod p" (the modulus must match this field).
    Scalar parse(std::string_view text) const;

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) = default;

  private:
    Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

class Scalar {
  public:
    Scalar() = default;
    Scalar(Rational value) : value_(std::move(value)) {}         // NOLINT(google-explicit-constructor)
    Scalar(PrimeFieldElement value) : value_(value) {}           // NOLINT(google-explicit-constructor)

    Field field() const;
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    bool is_rational() const noexcept { return std::holds_alternative<Rational>(value_); }
    const Rational& as_rational() const { return std::get<Rational>(value_); }
    const PrimeFieldElement& as_prime() const { return std::get<PrimeFieldElement>(value_); }

    Scalar operator-() const;
    /// Throws DivisionByZero on zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Total order used for canonical sorting only; it carries no field meaning.
    friend bool operator<(const Scalar& a, const Scalar& b);

    /// "n/d" or "n" for rationals, "n mod p" for prime-field elements.
    std::string to_string() const;
    /// Like to_string but without the " mod p" suffix; used inside expressions
    /// whose field is already fixed by context.
    std::string to_plain_string() const;

  private:
    std::variant<PrimeFieldElement, Rational> value_{Rational()};
};

/// Field operation dispatcher mirroring the {add, mul, neg, inv} interface.
enum class FieldOp { Add, Mul, Neg, Inv };
Scalar field_arith(const Scalar& a, const Scalar& b, FieldOp op);

}  // namespace gri

#endif
