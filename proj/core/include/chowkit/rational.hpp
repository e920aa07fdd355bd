// Copyright 2026 The chowkit Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chowkit {

/// Exact arbitrary-precision rational used for all symbolic field algebra.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Always "p/q" with q > 0, e.g. "3/2", "-1/1", "0/1".
std::string to_string(const Rational& r);

/// Accepts "p/q", "p" or a finite decimal such as "-0.125".
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

}  // namespace chowkit
