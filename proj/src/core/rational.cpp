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

#include "secgame/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace secgame {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    return Rational(n, d);
}

std::int64_t Rational::to_int64() const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) throw std::range_error("rational is not a small integer");
    return q_.get_num().get_si();
}

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(n, d);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::optional<ExtRational> ExtRational::parse(std::string_view text) {
    if (text == "inf" || text == "+inf") return pos_inf();
    if (text == "-inf") return neg_inf();
    auto r = Rational::parse(text);
    if (!r) return std::nullopt;
    return ExtRational(*r);
}

std::string ExtRational::str() const {
    switch (tag_) {
    case Tag::PosInf: return "inf";
    case Tag::NegInf: return "-inf";
    default: return value_.str();
    }
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    auto rank = [](ExtRational::Tag t) { return t == ExtRational::Tag::NegInf ? 0 : (t == ExtRational::Tag::Finite ? 1 : 2); };
    if (a.tag_ != b.tag_ || a.tag_ != ExtRational::Tag::Finite) return rank(a.tag_) <=> rank(b.tag_);
    return a.value_ <=> b.value_;
}

std::strong_ordering compare(const ExtRational& a, const Rational& b) {
    if (a.tag() == ExtRational::Tag::PosInf) return std::strong_ordering::greater;
    if (a.tag() == ExtRational::Tag::NegInf) return std::strong_ordering::less;
    return a.value() <=> b;
}

} // namespace secgame
