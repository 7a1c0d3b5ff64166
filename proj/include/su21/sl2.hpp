#pragma once

// (sl(2), SO(2))-modules with weights k in a parity class S:
//   X w^k = a_k w^{k+2},  Y w^k = b_k w^{k-2},
//   a_k = (lambda + k + 1)/2,  b_k = (lambda - k + 1)/2,
// so a_k b_{k+2} = (lambda^2 - (k+1)^2)/4. Also the n-dimensional su(2) module.

#include <map>
#include <string>
#include <utility>

#include "json.hpp"
#include "su21/exact_scalar.hpp"

namespace su21 {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw ParseError("parity must be 'even' or 'odd', got '" + s + "'");
}

struct Sl2Params {
  GaussianRational lambda;
  Parity parity = Parity::even;
};

enum class Sl2Kind {
  principal,
  complementary,
  reducible_with_discrete_parts,
  mock_discrete_point,
  finite_dim_point,
  nonunitary,
};

inline const char* to_string(Sl2Kind k) {
  switch (k) {
    case Sl2Kind::principal: return "principal";
    case Sl2Kind::complementary: return "complementary";
    case Sl2Kind::reducible_with_discrete_parts: return "reducible_with_discrete_parts";
    case Sl2Kind::mock_discrete_point: return "mock_discrete_point";
    case Sl2Kind::finite_dim_point: return "finite_dim_point";
    case Sl2Kind::nonunitary: return "nonunitary";
  }
  return "?";
}

struct Sl2Classification {
  Sl2Kind kind = Sl2Kind::nonunitary;
  std::string note;
};

/// (a_k, b_k); k must lie in the parity class.
inline std::pair<GaussianRational, GaussianRational> sl2_coeffs(const Sl2Params& params, long k) {
  const bool k_even = k % 2 == 0;
  if (k_even != (params.parity == Parity::even)) {
    throw InvalidParameter("weight k = " + std::to_string(k) + " is not " + to_string(params.parity));
  }
  const GaussianRational half(Rational(1, 2));
  return {half * (params.lambda + GaussianRational(k + 1)), half * (params.lambda - GaussianRational(k - 1))};
}

/// Unitary iff lambda^2 - (k+1)^2 < 0 for every k in S. The least (k+1)^2 is 1
/// for even S and 0 (at k = -1) for odd S. Points where some product vanishes are
/// reducible.
inline Sl2Classification sl2_classify(const Sl2Params& params) {
  const GaussianRational& lambda = params.lambda;
  const GaussianRational sq = lambda * lambda;
  const Rational bound = params.parity == Parity::even ? Rational(1) : Rational(0);
  if (sq.is_real() && sq.re() < bound) {
    if (lambda.re().is_zero()) return {Sl2Kind::principal, "lambda purely imaginary"};
    return {Sl2Kind::complementary, "lambda real in (-1, 1)"};
  }
  // Some a_k b_{k+2} vanishes iff lambda is an integer with lambda + k + 1 = 0 for k in S.
  if (lambda.is_real() && lambda.re().is_integer()) {
    const mpz_class value = lambda.re().numerator();
    const bool lambda_odd = mpz_odd_p(value.get_mpz_t()) != 0;
    if (params.parity == Parity::even && lambda_odd) {
      if (abs(value) == 1) return {Sl2Kind::finite_dim_point, "lambda = +-1: trivial constituent"};
      return {Sl2Kind::reducible_with_discrete_parts, "odd integer lambda: discrete series constituents"};
    }
    if (params.parity == Parity::odd && !lambda_odd) {
      if (value == 0) return {Sl2Kind::mock_discrete_point, "lambda = 0: mock discrete series constituents"};
      return {Sl2Kind::reducible_with_discrete_parts, "even integer lambda: discrete series constituents"};
    }
  }
  return {Sl2Kind::nonunitary, "some a_k b_{k+2} is not a negative real"};
}

/// X v^k = -(k-1) v^{k-1}, Y v^k = -(n-k) v^{k+1}, H v^k = (n+1-2k) v^k with v^0 = v^{n+1} = 0.
struct Su2Rows {
  std::map<long, Rational> x, y, h;
};

inline Su2Rows su2_finite_action(long n, long k) {
  if (n < 1 || k < 1 || k > n) throw InvalidParameter("su(2) row needs 1 <= k <= n");
  Su2Rows rows;
  if (k > 1) rows.x.emplace(k - 1, Rational(-(k - 1)));
  if (k < n) rows.y.emplace(k + 1, Rational(-(n - k)));
  if (n + 1 - 2 * k != 0) rows.h.emplace(k, Rational(n + 1 - 2 * k));
  return rows;
}

inline void to_json(nlohmann::json& j, const Sl2Classification& c) {
  j = nlohmann::json{{"kind", to_string(c.kind)}, {"note", c.note}};
}

}  // namespace su21
