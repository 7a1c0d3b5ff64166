#pragma once

// K-type bookkeeping. A K-type V_{nm} is the n-dimensional su(2) module on
// which Z acts by m. Inside a module V(c, 2t) the K-types are addressed by
// cone coordinates (p, q): p steps in the alpha+beta direction and q steps
// in the -beta direction from the vertex V_{1, 2t}.

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "su21/errors.hpp"

namespace su21 {

struct KType {
  long n = 1;
  long m = 0;

  KType() = default;
  KType(long n_, long m_) : n(n_), m(m_) {
    if (n < 1) throw InvalidParameter("K-type dimension must be >= 1, got " + std::to_string(n));
    if ((n + m) % 2 == 0) {
      throw InvalidParameter("K-type V_{" + std::to_string(n) + "," + std::to_string(m) + "} needs n + m odd");
    }
  }

  friend auto operator<=>(const KType&, const KType&) = default;
  friend bool operator==(const KType&, const KType&) = default;

  [[nodiscard]] std::string str() const { return "V_{" + std::to_string(n) + "," + std::to_string(m) + "}"; }
};

struct ConeCoord {
  long p = 0;
  long q = 0;
  friend auto operator<=>(const ConeCoord&, const ConeCoord&) = default;
  friend bool operator==(const ConeCoord&, const ConeCoord&) = default;
  [[nodiscard]] long n() const { return 1 + p + q; }
};

inline KType to_ktype(long t, ConeCoord c) {
  if (c.p < 0 || c.q < 0) throw InvalidParameter("cone coordinates must be nonnegative");
  return KType(1 + c.p + c.q, 2 * t + 3 * c.p - 3 * c.q);
}

inline std::optional<ConeCoord> from_ktype(long t, const KType& v) {
  long diff = v.m - 2 * t;
  if (diff % 3 != 0) return std::nullopt;
  long sum = v.n - 1;
  long d = diff / 3;  // p - q
  if ((sum + d) % 2 != 0) return std::nullopt;
  ConeCoord c{(sum + d) / 2, (sum - d) / 2};
  if (c.p < 0 || c.q < 0) return std::nullopt;
  return c;
}

/// (n+1, m+3), (n+1, m-3), (n-1, m+3), (n-1, m-3); the last two are absent at n = 1.
inline std::array<std::optional<KType>, 4> neighbors(const KType& v) {
  std::array<std::optional<KType>, 4> out;
  out[0] = KType(v.n + 1, v.m + 3);
  out[1] = KType(v.n + 1, v.m - 3);
  if (v.n > 1) {
    out[2] = KType(v.n - 1, v.m + 3);
    out[3] = KType(v.n - 1, v.m - 3);
  }
  return out;
}

/// Axis-aligned rectangle of cone coordinates inside the cone of parameter t.
/// Missing upper bounds mean the rectangle is unbounded in that direction.
struct ConeBox {
  long t = 0;
  long p_lo = 0;
  std::optional<long> p_hi;
  long q_lo = 0;
  std::optional<long> q_hi;

  [[nodiscard]] bool contains(ConeCoord c) const {
    return c.p >= p_lo && (!p_hi || c.p <= *p_hi) && c.q >= q_lo && (!q_hi || c.q <= *q_hi);
  }
  [[nodiscard]] bool contains(const KType& v) const {
    auto c = from_ktype(t, v);
    return c && contains(*c);
  }
  friend bool operator==(const ConeBox&, const ConeBox&) = default;
};

enum class RegionKind {
  full_cone,      // every (p, q)
  strip_q,        // q in [0, l]
  strip_p,        // p in [0, l]
  parallelogram,  // p in [0, l], q in [0, l2]
  vertex_cone,    // {V_{r+p+q, s+3p-3q}}
  ray_pos,        // {V_{s-1+p, s+3p}}
  ray_neg,        // {V_{-s-1+q, s-3q}}
  point,          // {V_{1, m}}
  box,            // explicit ConeBox, used when no named shape applies
};

inline const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::full_cone: return "full_cone";
    case RegionKind::strip_q: return "strip_q";
    case RegionKind::strip_p: return "strip_p";
    case RegionKind::parallelogram: return "parallelogram";
    case RegionKind::vertex_cone: return "vertex_cone";
    case RegionKind::ray_pos: return "ray_pos";
    case RegionKind::ray_neg: return "ray_neg";
    case RegionKind::point: return "point";
    case RegionKind::box: return "box";
  }
  return "?";
}

/// Parameter t of the cone V(c, 2t) that first embeds W(r, s).
inline long vertex_embedding_t(long r, long s) {
  if ((r + s) % 2 == 0) throw InvalidParameter("W(r,s) needs r + s odd");
  return (-3 * r + 3 + s) / 2;
}

class SupportRegion {
 public:
  SupportRegion() : SupportRegion(RegionKind::full_cone, {0}) {}

  static SupportRegion full_cone(long t) { return SupportRegion(RegionKind::full_cone, {t}); }
  static SupportRegion strip_q(long t, long l) { return checked(RegionKind::strip_q, {t, l}, l >= 0); }
  static SupportRegion strip_p(long t, long l) { return checked(RegionKind::strip_p, {t, l}, l >= 0); }
  static SupportRegion parallelogram(long t, long lp, long lq) {
    return checked(RegionKind::parallelogram, {t, lp, lq}, lp >= 0 && lq >= 0);
  }
  static SupportRegion vertex_cone(long r, long s) {
    return checked(RegionKind::vertex_cone, {r, s}, r >= 1 && (r + s) % 2 != 0);
  }
  static SupportRegion ray_pos(long s) { return checked(RegionKind::ray_pos, {s}, s >= 2); }
  static SupportRegion ray_neg(long s) { return checked(RegionKind::ray_neg, {s}, s <= -2); }
  static SupportRegion point(long m) { return checked(RegionKind::point, {m}, m % 2 == 0); }
  static SupportRegion box(const ConeBox& b) {
    if (b.p_lo < 0 || b.q_lo < 0 || (b.p_hi && *b.p_hi < b.p_lo) || (b.q_hi && *b.q_hi < b.q_lo)) {
      throw InvalidParameter("empty or negative cone box");
    }
    SupportRegion out(RegionKind::box, {});
    out.box_ = b;
    return out;
  }

  [[nodiscard]] RegionKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<long>& params() const { return params_; }

  /// The region as a rectangle of cone coordinates of its ambient cone.
  [[nodiscard]] ConeBox cone_box() const {
    const auto& a = params_;
    switch (kind_) {
      case RegionKind::full_cone: return {a[0], 0, std::nullopt, 0, std::nullopt};
      case RegionKind::strip_q: return {a[0], 0, std::nullopt, 0, a[1]};
      case RegionKind::strip_p: return {a[0], 0, a[1], 0, std::nullopt};
      case RegionKind::parallelogram: return {a[0], 0, a[1], 0, a[2]};
      case RegionKind::vertex_cone: return {vertex_embedding_t(a[0], a[1]), a[0] - 1, std::nullopt, 0, std::nullopt};
      case RegionKind::ray_pos: {
        long r = a[0] - 1;
        return {vertex_embedding_t(r, a[0]), r - 1, std::nullopt, 0, 0};
      }
      case RegionKind::ray_neg: {
        long r = -a[0] - 1;
        return {vertex_embedding_t(r, a[0]), r - 1, r - 1, 0, std::nullopt};
      }
      case RegionKind::point: return {a[0] / 2, 0, 0, 0, 0};
      case RegionKind::box: return box_;
    }
    return box_;
  }

  [[nodiscard]] long ambient_t() const { return cone_box().t; }
  [[nodiscard]] bool contains(const KType& v) const { return cone_box().contains(v); }

  friend bool operator==(const SupportRegion&, const SupportRegion&) = default;

  [[nodiscard]] std::string str() const {
    std::string out = to_string(kind_);
    out += "(";
    if (kind_ == RegionKind::box) {
      const ConeBox& b = box_;
      auto bound = [](const std::optional<long>& x) { return x ? std::to_string(*x) : std::string("inf"); };
      out += "t=" + std::to_string(b.t) + ",p=" + std::to_string(b.p_lo) + ".." + bound(b.p_hi) +
             ",q=" + std::to_string(b.q_lo) + ".." + bound(b.q_hi);
    } else {
      for (std::size_t i = 0; i < params_.size(); ++i) out += (i ? "," : "") + std::to_string(params_[i]);
    }
    return out + ")";
  }

  /// Names of the integer parameters of each kind, in storage order.
  static std::vector<std::string> param_names(RegionKind k) {
    switch (k) {
      case RegionKind::full_cone: return {"t"};
      case RegionKind::strip_q:
      case RegionKind::strip_p: return {"t", "l"};
      case RegionKind::parallelogram: return {"t", "lp", "lq"};
      case RegionKind::vertex_cone: return {"r", "s"};
      case RegionKind::ray_pos:
      case RegionKind::ray_neg: return {"s"};
      case RegionKind::point: return {"m"};
      case RegionKind::box: return {};
    }
    return {};
  }

 private:
  SupportRegion(RegionKind kind, std::vector<long> params) : kind_(kind), params_(std::move(params)) {}
  static SupportRegion checked(RegionKind kind, std::vector<long> params, bool ok) {
    if (!ok) throw InvalidParameter(std::string("invalid parameters for region ") + to_string(kind));
    return SupportRegion(kind, std::move(params));
  }

  RegionKind kind_ = RegionKind::full_cone;
  std::vector<long> params_;
  ConeBox box_{};
};

/// All K-types of the region with n <= max_n, sorted by (n, m).
inline std::vector<KType> members(const SupportRegion& region, long max_n) {
  if (max_n < 1) throw InvalidParameter("max_n must be >= 1");
  ConeBox b = region.cone_box();
  std::vector<KType> out;
  for (long p = b.p_lo; 1 + p + b.q_lo <= max_n && (!b.p_hi || p <= *b.p_hi); ++p) {
    for (long q = b.q_lo; 1 + p + q <= max_n && (!b.q_hi || q <= *b.q_hi); ++q) {
      out.push_back(to_ktype(b.t, {p, q}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void to_json(nlohmann::json& j, const KType& v) { j = nlohmann::json{{"n", v.n}, {"m", v.m}}; }
inline void from_json(const nlohmann::json& j, KType& v) { v = KType(j.at("n").get<long>(), j.at("m").get<long>()); }

inline void to_json(nlohmann::json& j, const SupportRegion& r) {
  nlohmann::json params = nlohmann::json::object();
  if (r.kind() == RegionKind::box) {
    ConeBox b = r.cone_box();
    params["t"] = b.t;
    params["p_lo"] = b.p_lo;
    params["p_hi"] = b.p_hi ? nlohmann::json(*b.p_hi) : nlohmann::json(nullptr);
    params["q_lo"] = b.q_lo;
    params["q_hi"] = b.q_hi ? nlohmann::json(*b.q_hi) : nlohmann::json(nullptr);
  } else {
    auto names = SupportRegion::param_names(r.kind());
    for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = r.params()[i];
  }
  j = nlohmann::json{{"kind", to_string(r.kind())}, {"params", params}};
}

inline void from_json(const nlohmann::json& j, SupportRegion& r) {
  std::string kind = j.at("kind").get<std::string>();
  const auto& p = j.at("params");
  auto opt = [&](const char* key) -> std::optional<long> {
    if (p.at(key).is_null()) return std::nullopt;
    return p.at(key).get<long>();
  };
  if (kind == "full_cone") r = SupportRegion::full_cone(p.at("t").get<long>());
  else if (kind == "strip_q") r = SupportRegion::strip_q(p.at("t").get<long>(), p.at("l").get<long>());
  else if (kind == "strip_p") r = SupportRegion::strip_p(p.at("t").get<long>(), p.at("l").get<long>());
  else if (kind == "parallelogram")
    r = SupportRegion::parallelogram(p.at("t").get<long>(), p.at("lp").get<long>(), p.at("lq").get<long>());
  else if (kind == "vertex_cone") r = SupportRegion::vertex_cone(p.at("r").get<long>(), p.at("s").get<long>());
  else if (kind == "ray_pos") r = SupportRegion::ray_pos(p.at("s").get<long>());
  else if (kind == "ray_neg") r = SupportRegion::ray_neg(p.at("s").get<long>());
  else if (kind == "point") r = SupportRegion::point(p.at("m").get<long>());
  else if (kind == "box")
    r = SupportRegion::box({p.at("t").get<long>(), p.at("p_lo").get<long>(), opt("p_hi"), p.at("q_lo").get<long>(), opt("q_hi")});
  else throw ParseError("unknown region kind '" + kind + "'");
}

}  // namespace su21
