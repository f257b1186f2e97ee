/*
 * Copyright 2026 The secgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SECGAME_RATIONAL_HPP
#define SECGAME_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace secgame {

// Exact rational number, always reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    template <std::signed_integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}
    template <std::unsigned_integral T>
    Rational(T v) : q_(static_cast<unsigned long>(v)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) : q_(z) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "p", "-p", "+p" and "p/q" with q > 0.
    static std::optional<Rational> parse(std::string_view text);

    std::string str() const { return q_.get_str(); }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    const mpq_class& raw() const { return q_; }

    bool fits_int64() const { return is_integer() && q_.get_num().fits_slong_p(); }
    // Only valid when the value is an integer that fits.
    std::int64_t to_int64() const;
    double to_double() const { return q_.get_d(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { q_ /= o.q_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& r);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

// Rational extended with +inf and -inf; used for threshold boxes only.
class ExtRational {
public:
    enum class Tag { Finite, PosInf, NegInf };

    ExtRational() = default;
    ExtRational(Rational v) : value_(std::move(v)) {}
    static ExtRational pos_inf() { ExtRational e; e.tag_ = Tag::PosInf; return e; }
    static ExtRational neg_inf() { ExtRational e; e.tag_ = Tag::NegInf; return e; }

    // Accepts the rational syntax plus "inf", "+inf", "-inf".
    static std::optional<ExtRational> parse(std::string_view text);

    Tag tag() const { return tag_; }
    bool finite() const { return tag_ == Tag::Finite; }
    const Rational& value() const { return value_; }
    std::string str() const;

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

private:
    Tag tag_ = Tag::Finite;
    Rational value_;
};

std::strong_ordering compare(const ExtRational& a, const Rational& b);

} // namespace secgame

#endif
