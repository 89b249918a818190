// Copyright 2026 The qseqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qseq/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qseq {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double rational_to_double(const Rational& r) {
    if (r == 0) {
        return 0.0;
    }
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    // Scale so the integer quotient carries ~62 significant bits.
    long shift = static_cast<long>(boost::multiprecision::msb(num)) -
                 static_cast<long>(boost::multiprecision::msb(den));
    long scale = 62 - shift;
    BigInt quotient = scale >= 0 ? BigInt(num << scale) / den : num / BigInt(den << -scale);
    double value = std::ldexp(quotient.convert_to<double>(), static_cast<int>(-scale));
    return negative ? -value : value;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) {
        out << "/" << boost::multiprecision::denominator(r);
    }
    return out.str();
}

}  // namespace

std::complex<double> OmegaInt::to_complex() const {
    const std::complex<double> w(1.0 / kSqrt2, 1.0 / kSqrt2);
    return a.convert_to<double>() * w * w * w + b.convert_to<double>() * w * w +
           c.convert_to<double>() * w + d.convert_to<double>();
}

OmegaInt operator+(const OmegaInt& u, const OmegaInt& v) {
    return {u.a + v.a, u.b + v.b, u.c + v.c, u.d + v.d};
}

OmegaInt operator-(const OmegaInt& u, const OmegaInt& v) {
    return {u.a - v.a, u.b - v.b, u.c - v.c, u.d - v.d};
}

OmegaInt operator-(const OmegaInt& v) { return {-v.a, -v.b, -v.c, -v.d}; }

std::ostream& operator<<(std::ostream& out, const OmegaInt& v) {
    return out << "(" << v.a << "," << v.b << "," << v.c << "," << v.d << ")";
}

OmegaInt omega_times_power(const OmegaInt& v, int e) {
    e = ((e % 8) + 8) % 8;
    OmegaInt r = v;
    for (int i = 0; i < e; ++i) {
        // w * (a w^3 + b w^2 + c w + d) = b w^3 + c w^2 + d w - a, since w^4 = -1.
        r = OmegaInt(std::move(r.b), std::move(r.c), std::move(r.d), -r.a);
    }
    return r;
}

OmegaInt omega_add(const OmegaInt& u, const OmegaInt& v) { return u + v; }

RootTwoRational omega_sq_norm(const OmegaInt& v) {
    BigInt rational = v.a * v.a + v.b * v.b + v.c * v.c + v.d * v.d;
    BigInt root = v.a * v.b + v.b * v.c + v.c * v.d - v.a * v.d;
    return {Rational(rational), Rational(root)};
}

Rational pow2(int e) {
    if (e >= 0) {
        return Rational(BigInt(1) << e);
    }
    return Rational(BigInt(1), BigInt(1) << -e);
}

int RootTwoRational::sign() const {
    int sp = p_.sign();
    int sq = q_.sign();
    if (sq == 0) {
        return sp;
    }
    if (sp == 0 || sp == sq) {
        return sq;
    }
    // Opposite signs: the larger of p^2 and 2 q^2 wins. Equality is impossible
    // for nonzero rationals since sqrt(2) is irrational.
    Rational pp = p_ * p_;
    Rational qq = 2 * q_ * q_;
    return pp > qq ? sp : sq;
}

double RootTwoRational::to_double() const {
    return rational_to_double(p_) + kSqrt2 * rational_to_double(q_);
}

std::string RootTwoRational::to_string() const {
    return rational_to_string(p_) + " + " + rational_to_string(q_) + "*sqrt(2)";
}

std::string RootTwoRational::to_float_string() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", to_double());
    return buf;
}

RootTwoRational& RootTwoRational::operator+=(const RootTwoRational& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

RootTwoRational& RootTwoRational::operator-=(const RootTwoRational& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

RootTwoRational& RootTwoRational::operator*=(const RootTwoRational& o) {
    Rational p = p_ * o.p_ + 2 * q_ * o.q_;
    Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

RootTwoRational& RootTwoRational::operator/=(const RootTwoRational& o) {
    if (o.is_zero()) {
        throw std::domain_error("RootTwoRational: division by zero");
    }
    // Multiply through by the conjugate; the norm p^2 - 2q^2 is nonzero.
    Rational norm = o.p_ * o.p_ - 2 * o.q_ * o.q_;
    *this *= RootTwoRational(o.p_ / norm, -o.q_ / norm);
    return *this;
}

std::strong_ordering operator<=>(const RootTwoRational& a, const RootTwoRational& b) {
    int s = (a - b).sign();
    if (s < 0) {
        return std::strong_ordering::less;
    }
    return s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const RootTwoRational& v) { return out << v.to_string(); }

}  // namespace qseq
