#pragma once

// Coefficient functions of the modules V(c, 2t) and W(r, s).
//
// In cone coordinates (p, q) of V(c, 2t), with n = 1 + p + q:
//   a(p, q) = 2c - (p + 1) t - p (p + 2)
//   b(p, q) = 2c + (q + 1) t - q (q + 2)
//   c(p, q) = q / n
//   d(p, q) = p / n
// so that c_{1m} = d_{1m} = 0 at the vertex. The products
//   ad(p, q) = a_{nm} d_{n+1, m+3},   bc(p, q) = b_{nm} c_{n+1, m-3}
// do not depend on this choice of gauge.

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "json.hpp"
#include "su21/exact_scalar.hpp"
#include "su21/ktype.hpp"

namespace su21 {

struct ConeParams {
  GaussianRational c;
  long t = 0;
  friend bool operator==(const ConeParams&, const ConeParams&) = default;
};

struct VertexParams {
  long r = 2;
  long s = 1;
  friend bool operator==(const VertexParams&, const VertexParams&) = default;
};

/// Either V(c, 2t) or W(r, s).
class ModuleParams {
 public:
  ModuleParams() = default;
  static ModuleParams cone(GaussianRational c, long t) { return ModuleParams(ConeParams{std::move(c), t}); }
  static ModuleParams vertex(long r, long s) {
    if (r <= 1) throw InvalidParameter("W(r,s) needs r > 1, got r = " + std::to_string(r));
    if ((r + s) % 2 == 0) throw InvalidParameter("W(r,s) needs r + s odd");
    return ModuleParams(VertexParams{r, s});
  }

  [[nodiscard]] bool is_cone() const { return std::holds_alternative<ConeParams>(value_); }
  [[nodiscard]] bool is_vertex() const { return std::holds_alternative<VertexParams>(value_); }
  [[nodiscard]] const ConeParams& as_cone() const {
    if (!is_cone()) throw InvalidParameter("expected cone parameters V(c,2t)");
    return std::get<ConeParams>(value_);
  }
  [[nodiscard]] const VertexParams& as_vertex() const {
    if (!is_vertex()) throw InvalidParameter("expected vertex parameters W(r,s)");
    return std::get<VertexParams>(value_);
  }

  /// The cone module whose coefficients realize these parameters: V(c, 2t)
  /// itself, or the first embedding of W(r, s).
  [[nodiscard]] ConeParams ambient() const;

  /// Cone coordinate of the lowest K-type (the module's vertex) in the ambient cone.
  [[nodiscard]] ConeCoord anchor() const {
    if (is_cone()) return {0, 0};
    return {as_vertex().r - 1, 0};
  }

  [[nodiscard]] std::string str() const {
    if (is_cone()) {
      const auto& c = as_cone();
      return "V(c=" + c.c.str() + ",2t=" + std::to_string(2 * c.t) + ")";
    }
    const auto& v = as_vertex();
    return "W(" + std::to_string(v.r) + "," + std::to_string(v.s) + ")";
  }

  friend bool operator==(const ModuleParams&, const ModuleParams&) = default;

 private:
  explicit ModuleParams(ConeParams p) : value_(std::move(p)) {}
  explicit ModuleParams(VertexParams p) : value_(p) {}
  std::variant<ConeParams, VertexParams> value_{ConeParams{}};
};

struct CoefficientQuad {
  GaussianRational a, b, c, d;
};

struct ProductPair {
  GaussianRational ad;
  GaussianRational bc;
  friend bool operator==(const ProductPair&, const ProductPair&) = default;
};

/// The two cone modules containing W(r, s):
/// V(((r-1)(-r+1+s) - 2)/4, -3r+3+s) and V(((r-1)(-r+1-s) - 2)/4, 3r-3+s).
/// Returned as (c, t) pairs, i.e. the second component is half the printed label.
inline std::pair<ConeParams, ConeParams> embed_W(long r, long s) {
  if (r <= 1) throw InvalidParameter("W(r,s) needs r > 1");
  if ((r + s) % 2 == 0) throw InvalidParameter("W(r,s) needs r + s odd");
  ConeParams first{Rational((r - 1) * (-r + 1 + s) - 2, 4), (-3 * r + 3 + s) / 2};
  ConeParams second{Rational((r - 1) * (-r + 1 - s) - 2, 4), (3 * r - 3 + s) / 2};
  return {first, second};
}

inline ConeParams ModuleParams::ambient() const {
  if (is_cone()) return as_cone();
  const auto& v = as_vertex();
  return embed_W(v.r, v.s).first;
}

/// a(p, q): depends on p only.
inline GaussianRational coeff_a(const ConeParams& cp, long p) {
  return GaussianRational(2) * cp.c - GaussianRational((p + 1) * cp.t + p * (p + 2));
}

/// b(p, q): depends on q only.
inline GaussianRational coeff_b(const ConeParams& cp, long q) {
  return GaussianRational(2) * cp.c + GaussianRational((q + 1) * cp.t - q * (q + 2));
}

/// The canonical coefficient quad at a cone vertex.
inline CoefficientQuad coeff_quad(const ConeParams& cp, ConeCoord v) {
  if (v.p < 0 || v.q < 0) throw InvalidParameter("cone coordinates must be nonnegative");
  long n = v.n();
  return {coeff_a(cp, v.p), coeff_b(cp, v.q), GaussianRational(Rational(v.q, n)), GaussianRational(Rational(v.p, n))};
}

inline CoefficientQuad coeff_quad(const ModuleParams& params, ConeCoord v) { return coeff_quad(params.as_cone(), v); }

/// Closed-form products at a cone vertex.
inline ProductPair products(const ConeParams& cp, ConeCoord v) {
  if (v.p < 0 || v.q < 0) throw InvalidParameter("cone coordinates must be nonnegative");
  long denom = v.p + v.q + 2;
  return {GaussianRational(Rational(v.p + 1, denom)) * coeff_a(cp, v.p),
          GaussianRational(Rational(v.q + 1, denom)) * coeff_b(cp, v.q)};
}

inline ProductPair products(const ModuleParams& params, ConeCoord v) { return products(params.as_cone(), v); }

/// Products at the vertex V_{rs} of W(r, s).
inline ProductPair wrs_products(long r, long s) {
  if (r <= 1) throw InvalidParameter("W(r,s) needs r > 1");
  if ((r + s) % 2 == 0) throw InvalidParameter("W(r,s) needs r + s odd");
  return {GaussianRational(Rational(-r * (s + r + 1), 2 * (r + 1))),
          GaussianRational(Rational(r * (s - r - 1), 2 * (r + 1)))};
}

/// Products flowing into V_{nm} from its lower neighbours:
/// inflow_c = c_{nm} b_{n-1, m+3}, inflow_d = d_{nm} a_{n-1, m-3}.
/// Zero when the neighbour is not a K-type of the module.
struct Inflow {
  GaussianRational c;
  GaussianRational d;
};

/// Solves the two vertex relations
///   -(1/n) ad + bc - inflow_c = (m - n + 1)/2
///   -ad + (1/n) bc + inflow_d = (m + n - 1)/2
/// for (ad, bc). At n = 1 the equations coincide and ad must be supplied.
inline ProductPair solve_vertex_system(const Inflow& inflow, long n, long m,
                                       const std::optional<GaussianRational>& known_ad = std::nullopt) {
  if (n < 1) throw InvalidParameter("vertex dimension must be >= 1");
  GaussianRational rhs1 = GaussianRational(Rational(m - n + 1, 2)) + inflow.c;
  GaussianRational rhs2 = GaussianRational(Rational(m + n - 1, 2)) - inflow.d;
  if (n == 1) {
    if (!known_ad) throw UnderdeterminedVertex("n = 1 vertex system needs ad as input");
    if (!(rhs1 == rhs2)) throw DegenerateInput("inconsistent n = 1 vertex system");
    return {*known_ad, rhs1 + *known_ad};
  }
  // [-1/n 1; -1 1/n] [ad; bc] = [rhs1; rhs2], determinant (n^2 - 1)/n^2.
  GaussianRational inv_n(Rational(1, n));
  GaussianRational det = GaussianRational(Rational(n * n - 1, n * n));
  GaussianRational ad = (rhs1 * inv_n - rhs2) / det;
  GaussianRational bc = (rhs1 - rhs2 * inv_n) / det;
  return {ad, bc};
}

inline void to_json(nlohmann::json& j, const ModuleParams& p) {
  if (p.is_cone()) {
    j = nlohmann::json{{"kind", "cone"}, {"c", p.as_cone().c}, {"t", p.as_cone().t}};
  } else {
    j = nlohmann::json{{"kind", "vertex"}, {"r", p.as_vertex().r}, {"s", p.as_vertex().s}};
  }
}

inline void from_json(const nlohmann::json& j, ModuleParams& p) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cone") p = ModuleParams::cone(j.at("c").get<GaussianRational>(), j.at("t").get<long>());
  else if (kind == "vertex") p = ModuleParams::vertex(j.at("r").get<long>(), j.at("s").get<long>());
  else throw ParseError("unknown parameter kind '" + kind + "'");
}

}  // namespace su21
