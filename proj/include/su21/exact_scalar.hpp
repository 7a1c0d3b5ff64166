#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals.
// Every coefficient, product, threshold and squared norm in the library is
// one of these two types; there is no floating point anywhere in the core.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "su21/errors.hpp"

namespace su21 {

/// Reduced fraction p/q with q > 0, backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DegenerateInput("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Whitespace is rejected.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view digits, bool allow_sign) {
      std::string_view body = digits;
      if (allow_sign && !body.empty() && (body.front() == '-' || body.front() == '+')) {
        body.remove_prefix(1);
      }
      if (body.empty()) throw ParseError("malformed rational '" + std::string(text) + "'");
      for (char ch : body) {
        if (ch < '0' || ch > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
      }
      std::string s(digits);
      if (!s.empty() && s.front() == '+') s.erase(0, 1);
      return mpz_class(s, 10);
    };
    mpz_class num = parse_int(text.substr(0, slash), true);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
      den = parse_int(text.substr(slash + 1), false);
      if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
  }

  /// Canonical text: "p" for integers, otherwise "p/q".
  [[nodiscard]] std::string str() const { return value_.get_str(); }

  [[nodiscard]] const mpq_class& raw() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DegenerateInput("rational division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// Binomial coefficient as an exact rational.
inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(out));
}

enum class SignClass { negative_real, zero, positive_real, nonreal };

inline const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::negative_real: return "negative_real";
    case SignClass::zero: return "zero";
    case SignClass::positive_real: return "positive_real";
    case SignClass::nonreal: return "nonreal";
  }
  return "?";
}

/// re + im*i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(std::int64_t re) : re_(re) {}         // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  /// x * conj(x), always a nonnegative rational.
  [[nodiscard]] Rational norm2() const { return re_ * re_ + im_ * im_; }

  [[nodiscard]] SignClass sign_class() const {
    if (!im_.is_zero()) return SignClass::nonreal;
    switch (re_.sign()) {
      case -1: return SignClass::negative_real;
      case 0: return SignClass::zero;
      default: return SignClass::positive_real;
    }
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw DegenerateInput("Gaussian rational division by zero");
    if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
    Rational d = b.norm2();
    GaussianRational num = a * b.conj();
    return {num.re_ / d, num.im_ / d};
  }
  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form accepted back by parse(): "-1/2", "3/2*i", "1/2-1/3*i".
  [[nodiscard]] std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.str() + "*i";
    if (re_.is_zero()) return imag;
    return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
  }

  /// Grammar: rational | rational*i | i | -i | rational(+|-)rational*i | rational(+|-)i.
  static GaussianRational parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty complex number");
    auto imag_part = [&](std::string_view part) -> Rational {
      // part ends in "i", optionally preceded by "*".
      std::string_view body = part.substr(0, part.size() - 1);
      if (!body.empty() && body.back() == '*') {
        body.remove_suffix(1);
        if (body.empty() || body == "-" || body == "+") throw ParseError("malformed complex '" + std::string(text) + "'");
        return Rational::parse(body);
      }
      if (body.empty() || body == "+") return Rational(1);
      if (body == "-") return Rational(-1);
      throw ParseError("malformed complex '" + std::string(text) + "'");
    };
    if (text.back() != 'i') return {Rational::parse(text)};
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t pos = text.size(); pos-- > 1;) {
      if (text[pos] == '+' || text[pos] == '-') {
        split = pos;
        break;
      }
    }
    if (split == std::string_view::npos) return {Rational(0), imag_part(text)};
    return {Rational::parse(text.substr(0, split)), imag_part(text.substr(split))};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

 private:
  Rational re_;
  Rational im_;
};

inline SignClass sign_class(const GaussianRational& x) { return x.sign_class(); }

// JSON: rationals as "p/q" strings, Gaussian rationals as {"re": ..., "im": ...}.
inline void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }
inline void from_json(const nlohmann::json& j, Rational& r) {
  if (!j.is_string()) throw ParseError("rational must be a JSON string");
  r = Rational::parse(j.get<std::string>());
}
inline void to_json(nlohmann::json& j, const GaussianRational& z) {
  j = nlohmann::json{{"re", z.re().str()}, {"im", z.im().str()}};
}
inline void from_json(const nlohmann::json& j, GaussianRational& z) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw ParseError("Gaussian rational must be {\"re\":..,\"im\":..}");
  }
  z = GaussianRational(j.at("re").get<Rational>(), j.at("im").get<Rational>());
}

}  // namespace su21
