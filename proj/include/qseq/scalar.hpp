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

#pragma once

#include <complex>
#include <compare>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element of Z[w] with w = exp(i*pi/4), stored in the basis
/// (w^3, w^2, w, 1): value = a*w^3 + b*w^2 + c*w + d.
struct OmegaInt {
    BigInt a;
    BigInt b;
    BigInt c;
    BigInt d;

    OmegaInt() = default;
    OmegaInt(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    std::complex<double> to_complex() const;

    friend bool operator==(const OmegaInt&, const OmegaInt&) = default;
};

OmegaInt operator+(const OmegaInt& u, const OmegaInt& v);
OmegaInt operator-(const OmegaInt& u, const OmegaInt& v);
OmegaInt operator-(const OmegaInt& v);
std::ostream& operator<<(std::ostream& out, const OmegaInt& v);

/// Returns w^e * v. Negative exponents are taken modulo 8.
OmegaInt omega_times_power(const OmegaInt& v, int e);
OmegaInt omega_add(const OmegaInt& u, const OmegaInt& v);

class RootTwoRational;

/// |v|^2 as an element of Q(sqrt 2).
RootTwoRational omega_sq_norm(const OmegaInt& v);

/// Exact value p + q*sqrt(2) with rational p, q.
class RootTwoRational {
  public:
    RootTwoRational() = default;
    RootTwoRational(Rational p, Rational q = 0) : p_(std::move(p)), q_(std::move(q)) {}
    RootTwoRational(int p) : p_(p) {}

    const Rational& rational_part() const { return p_; }
    const Rational& sqrt2_part() const { return q_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    /// -1, 0 or +1, decided exactly.
    int sign() const;
    double to_double() const;

    /// "p + q*sqrt(2)" in lowest terms, e.g. "1/2 + 0*sqrt(2)".
    std::string to_string() const;
    /// 15 significant digits.
    std::string to_float_string() const;

    RootTwoRational operator-() const { return {-p_, -q_}; }
    RootTwoRational& operator+=(const RootTwoRational& o);
    RootTwoRational& operator-=(const RootTwoRational& o);
    RootTwoRational& operator*=(const RootTwoRational& o);
    /// Throws std::domain_error on division by zero.
    RootTwoRational& operator/=(const RootTwoRational& o);

    friend RootTwoRational operator+(RootTwoRational a, const RootTwoRational& b) { return a += b; }
    friend RootTwoRational operator-(RootTwoRational a, const RootTwoRational& b) { return a -= b; }
    friend RootTwoRational operator*(RootTwoRational a, const RootTwoRational& b) { return a *= b; }
    friend RootTwoRational operator/(RootTwoRational a, const RootTwoRational& b) { return a /= b; }

    friend bool operator==(const RootTwoRational& a, const RootTwoRational& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend std::strong_ordering operator<=>(const RootTwoRational& a, const RootTwoRational& b);

  private:
    Rational p_;
    Rational q_;
};

std::ostream& operator<<(std::ostream& out, const RootTwoRational& v);

/// Exact power of two as a rational, 2^e for any integer e.
Rational pow2(int e);

}  // namespace qseq
