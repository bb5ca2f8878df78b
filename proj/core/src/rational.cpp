/*
 * Copyright 2026 The crystile Authors
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

#include "crystile/rational.hpp"

#include <cctype>
#include <cmath>

namespace crystile {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);

  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den[0] == '-') {
    throw InputError("malformed rational '" + std::string(text) + "' (expected p/q or an integer)");
  }
  Integer p(num, 10);
  Integer q(den, 10);
  if (q == 0) throw InputError("zero denominator in rational '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Rational frac(const Rational& value) {
  Rational out = value - Rational(floor(value));
  out.canonicalize();
  return out;
}

Integer ceil_sqrt(const Rational& value) {
  if (value <= 0) return 0;
  Integer c = ceil(value);
  Integer k;
  mpz_sqrt(k.get_mpz_t(), c.get_mpz_t());
  while (Rational(k * k) < value) ++k;
  return k;
}

Rational rational_below(double value, double rel) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw DomainError("rational_below needs a finite positive value");
  }
  // A double converts to its exact dyadic value.
  Rational r(value * (1.0 - rel));
  r.canonicalize();
  return r;
}

}  // namespace crystile
