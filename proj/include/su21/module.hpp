#pragma once

// Truncated (g,K)-modules: the basis v_{nm}^k of every supported K-type with
// n <= max_n together with the sparse action of all nine generators.
//
// Within a K-type (su(2) conventions):
//   H_alpha v^k = (n + 1 - 2k) v^k,  X_alpha v^k = -(k-1) v^{k-1},
//   Y_alpha v^k = -(n-k) v^{k+1},    Z v^k = m v^k.
// Across K-types:
//   X_{a+b} v^k = a v_{n+1,m+3}^k     + (k-1)/(n-1) c v_{n-1,m+3}^{k-1}
//   X_b     v^k = -a v_{n+1,m+3}^{k+1} + (n-k)/(n-1) c v_{n-1,m+3}^k
//   Y_{a+b} v^k = b v_{n+1,m-3}^{k+1} + (n-k)/(n-1) d v_{n-1,m-3}^k
//   Y_b     v^k = b v_{n+1,m-3}^k     - (k-1)/(n-1) d v_{n-1,m-3}^{k-1}

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "su21/algebra.hpp"
#include "su21/coefficients.hpp"
#include "su21/ktype.hpp"

namespace su21 {

struct BasisIndex {
  KType ktype;
  long k = 1;

  BasisIndex() = default;
  BasisIndex(KType v, long k_) : ktype(v), k(k_) {
    if (k < 1 || k > ktype.n) throw InvalidBasisIndex("basis index k=" + std::to_string(k) + " outside [1, n]");
  }
  BasisIndex(long n, long m, long k_) : BasisIndex(KType(n, m), k_) {}

  [[nodiscard]] long n() const { return ktype.n; }
  [[nodiscard]] long m() const { return ktype.m; }

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;

  [[nodiscard]] std::string str() const {
    return "v_{" + std::to_string(n()) + "," + std::to_string(m()) + "}^" + std::to_string(k);
  }
};

/// Sparse vector over the basis; zero coefficients are never stored.
using Vector = std::map<BasisIndex, GaussianRational>;

inline void add_term(Vector& v, const BasisIndex& idx, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = v.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) v.erase(it);
  }
}

/// out += s * v
inline void axpy(Vector& out, const GaussianRational& s, const Vector& v) {
  if (s.is_zero()) return;
  for (const auto& [idx, c] : v) add_term(out, idx, s * c);
}

inline Vector operator-(const Vector& a, const Vector& b) {
  Vector out = a;
  axpy(out, GaussianRational(-1), b);
  return out;
}

inline Vector unit_vector(const BasisIndex& idx) { return Vector{{idx, GaussianRational(1)}}; }

struct Applied {
  Vector result;
  bool truncated = false;  // some target lies above max_n
};

class TruncatedModule {
 public:
  using Action = std::map<Generator, std::map<BasisIndex, Vector>>;

  TruncatedModule(ModuleParams params, long max_n, SupportRegion support, std::vector<BasisIndex> basis,
                  Action action)
      : params_(std::move(params)),
        max_n_(max_n),
        support_(std::move(support)),
        basis_(std::move(basis)),
        action_(std::move(action)) {
    if (max_n_ < 1) throw InvalidParameter("max_n must be >= 1");
    std::sort(basis_.begin(), basis_.end());
    basis_set_ = std::set<BasisIndex>(basis_.begin(), basis_.end());
    if (basis_set_.size() != basis_.size()) throw InvalidBasisIndex("duplicate basis index");
    for (const auto& idx : basis_) {
      if (idx.n() > max_n_ || !support_.contains(idx.ktype)) {
        throw InvalidBasisIndex(idx.str() + " is not in the truncated support");
      }
    }
    for (const auto& [g, rows] : action_) {
      for (const auto& [src, vec] : rows) {
        if (!is_basis(src)) throw InvalidBasisIndex("action row for " + src.str() + " outside the basis");
        for (const auto& [dst, c] : vec) {
          if (!is_basis(dst) && !is_truncated(dst)) {
            throw InvalidBasisIndex("action of " + std::string(to_string(g)) + " on " + src.str() + " hits " +
                                    dst.str() + " outside the support");
          }
        }
      }
    }
  }

  [[nodiscard]] const ModuleParams& params() const { return params_; }
  [[nodiscard]] long max_n() const { return max_n_; }
  [[nodiscard]] const SupportRegion& support() const { return support_; }
  [[nodiscard]] const std::vector<BasisIndex>& basis() const { return basis_; }
  [[nodiscard]] const Action& action() const { return action_; }

  /// Number of nonzero terms removed during build because their target left the support.
  [[nodiscard]] std::size_t dropped_terms() const { return dropped_terms_; }

  [[nodiscard]] bool is_basis(const BasisIndex& idx) const { return basis_set_.contains(idx); }
  /// In the support but one layer above the truncation.
  [[nodiscard]] bool is_truncated(const BasisIndex& idx) const {
    return idx.n() == max_n_ + 1 && support_.contains(idx.ktype);
  }
  /// All K-types reachable by `depth` generator applications stay within max_n.
  [[nodiscard]] bool is_interior(const BasisIndex& idx, long depth = 2) const {
    return is_basis(idx) && idx.n() + depth <= max_n_;
  }

  [[nodiscard]] const Vector& row(Generator g, const BasisIndex& idx) const {
    static const Vector kEmpty;
    auto git = action_.find(g);
    if (git == action_.end()) return kEmpty;
    auto it = git->second.find(idx);
    return it == git->second.end() ? kEmpty : it->second;
  }

  [[nodiscard]] Applied apply(const AlgebraElement& x, const Vector& vec) const {
    Applied out;
    for (const auto& [idx, coeff] : vec) {
      if (!is_basis(idx)) throw InvalidBasisIndex(idx.str() + " is not a basis vector of the truncated module");
      for (const auto& [g, gc] : x.terms()) axpy(out.result, gc * coeff, row(g, idx));
    }
    for (const auto& [idx, c] : out.result) {
      if (idx.n() > max_n_) {
        out.truncated = true;
        break;
      }
    }
    return out;
  }

  [[nodiscard]] Applied apply(Generator g, const Vector& vec) const { return apply(AlgebraElement(g), vec); }

 private:
  friend TruncatedModule build(const ModuleParams& params, const SupportRegion& region, long max_n);

  ModuleParams params_;
  long max_n_;
  SupportRegion support_;
  std::vector<BasisIndex> basis_;
  std::set<BasisIndex> basis_set_;
  Action action_;
  std::size_t dropped_terms_ = 0;
};

/// Default support of the module itself: the full cone for V(c, 2t), the
/// vertex cone for W(r, s).
inline SupportRegion default_support(const ModuleParams& params) {
  if (params.is_cone()) return SupportRegion::full_cone(params.as_cone().t);
  return SupportRegion::vertex_cone(params.as_vertex().r, params.as_vertex().s);
}

/// Builds the module on `region`, which must live in the ambient cone of `params`.
/// Terms whose target falls outside the region are dropped, so the result is the
/// subquotient supported on the region.
inline TruncatedModule build(const ModuleParams& params, const SupportRegion& region, long max_n) {
  if (max_n < 1) throw InvalidParameter("max_n must be >= 1");
  const ConeParams ambient = params.ambient();
  const ConeBox box = region.cone_box();
  if (box.t != ambient.t) {
    throw InvalidParameter("region " + region.str() + " does not live in the cone of " + params.str());
  }
  if (params.is_vertex() && max_n < params.as_vertex().r) {
    throw EmptyTruncation("W(r,s) needs max_n >= r = " + std::to_string(params.as_vertex().r));
  }
  std::vector<KType> ktypes = members(region, max_n);
  if (ktypes.empty()) throw EmptyTruncation("no K-type of " + region.str() + " has n <= " + std::to_string(max_n));

  std::vector<BasisIndex> basis;
  TruncatedModule::Action action;
  std::size_t dropped = 0;

  for (const KType& v : ktypes) {
    const ConeCoord at = *from_ktype(ambient.t, v);
    const CoefficientQuad cq = coeff_quad(ambient, at);
    const long n = v.n;
    const long m = v.m;

    auto target = [&](ConeCoord c, long k) -> std::optional<BasisIndex> {
      if (c.p < 0 || c.q < 0) return std::nullopt;
      KType w = to_ktype(ambient.t, c);
      if (k < 1 || k > w.n) return std::nullopt;
      if (!box.contains(c) || w.n > max_n + 1) return std::nullopt;
      return BasisIndex(w, k);
    };

    for (long k = 1; k <= n; ++k) {
      const BasisIndex src(v, k);
      basis.push_back(src);
      auto emit = [&](Generator g, ConeCoord c, long tk, const GaussianRational& coeff) {
        if (coeff.is_zero()) return;
        if (auto dst = target(c, tk)) {
          add_term(action[g][src], *dst, coeff);
        } else if (c.p >= 0 && c.q >= 0 && to_ktype(ambient.t, c).n <= max_n + 1) {
          ++dropped;
        }
      };

      emit(Generator::H_alpha, at, k, GaussianRational(n + 1 - 2 * k));
      emit(Generator::H_beta, at, k, GaussianRational(Rational(m - n - 1 + 2 * k, 2)));
      emit(Generator::Z, at, k, GaussianRational(m));
      if (k > 1) emit(Generator::X_alpha, at, k - 1, GaussianRational(-(k - 1)));
      if (k < n) emit(Generator::Y_alpha, at, k + 1, GaussianRational(-(n - k)));

      const ConeCoord up_plus{at.p + 1, at.q};     // V_{n+1, m+3}
      const ConeCoord up_minus{at.p, at.q + 1};    // V_{n+1, m-3}
      const ConeCoord down_plus{at.p, at.q - 1};   // V_{n-1, m+3}
      const ConeCoord down_minus{at.p - 1, at.q};  // V_{n-1, m-3}

      emit(Generator::X_alphabeta, up_plus, k, cq.a);
      emit(Generator::X_beta, up_plus, k + 1, -cq.a);
      emit(Generator::Y_alphabeta, up_minus, k + 1, cq.b);
      emit(Generator::Y_beta, up_minus, k, cq.b);
      if (n > 1) {
        const GaussianRational lower(Rational(k - 1, n - 1));
        const GaussianRational upper(Rational(n - k, n - 1));
        emit(Generator::X_alphabeta, down_plus, k - 1, lower * cq.c);
        emit(Generator::X_beta, down_plus, k, upper * cq.c);
        emit(Generator::Y_alphabeta, down_minus, k, upper * cq.d);
        emit(Generator::Y_beta, down_minus, k - 1, -(lower * cq.d));
      }
    }
  }

  TruncatedModule out(params, max_n, region, std::move(basis), std::move(action));
  out.dropped_terms_ = dropped;
  return out;
}

inline TruncatedModule build(const ModuleParams& params, long max_n) {
  return build(params, default_support(params), max_n);
}

inline Applied apply(const TruncatedModule& mod, const AlgebraElement& x, const Vector& vec) {
  return mod.apply(x, vec);
}

/// The support of the constituent that contains the module's vertex, as far
/// as it can be seen with K-types up to max_n: an edge whose product vanishes
/// closes the region in that direction.
inline SupportRegion support_of(const ModuleParams& params, long max_n) {
  if (max_n < 1) throw InvalidParameter("max_n must be >= 1");
  const ConeParams ambient = params.ambient();
  const ConeCoord anchor = params.anchor();

  std::optional<long> p_hi;
  for (long p = anchor.p; 1 + (p + 1) + anchor.q <= max_n; ++p) {
    if (products(ambient, {p, anchor.q}).ad.is_zero()) {
      p_hi = p;
      break;
    }
  }
  std::optional<long> q_hi;
  for (long q = anchor.q; 1 + anchor.p + (q + 1) <= max_n; ++q) {
    if (products(ambient, {anchor.p, q}).bc.is_zero()) {
      q_hi = q;
      break;
    }
  }

  const long t = ambient.t;
  if (params.is_cone()) {
    if (!p_hi && !q_hi) return SupportRegion::full_cone(t);
    if (!p_hi) return SupportRegion::strip_q(t, *q_hi);
    if (!q_hi) return SupportRegion::strip_p(t, *p_hi);
    if (*p_hi == 0 && *q_hi == 0) return SupportRegion::point(2 * t);
    return SupportRegion::parallelogram(t, *p_hi, *q_hi);
  }
  const auto& w = params.as_vertex();
  if (!p_hi && !q_hi) return SupportRegion::vertex_cone(w.r, w.s);
  if (p_hi && *p_hi == anchor.p && !q_hi && w.s == -w.r - 1) return SupportRegion::ray_neg(w.s);
  if (q_hi && *q_hi == 0 && !p_hi && w.s == w.r + 1) return SupportRegion::ray_pos(w.s);
  return SupportRegion::box({t, anchor.p, p_hi, anchor.q, q_hi});
}

inline void to_json(nlohmann::json& j, const BasisIndex& idx) { j = nlohmann::json::array({idx.n(), idx.m(), idx.k}); }

inline BasisIndex basis_index_from_json(const nlohmann::json& j) {
  if (j.is_array() && j.size() == 3) return BasisIndex(j[0].get<long>(), j[1].get<long>(), j[2].get<long>());
  if (j.is_object()) return BasisIndex(j.at("n").get<long>(), j.at("m").get<long>(), j.at("k").get<long>());
  throw ParseError("basis index must be [n,m,k] or {\"n\",\"m\",\"k\"}");
}

/// Module JSON: params, max_n, support, basis, action (rationals as strings).
inline nlohmann::json module_to_json(const TruncatedModule& mod) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& idx : mod.basis()) basis.push_back({{"n", idx.n()}, {"m", idx.m()}, {"k", idx.k}});
  nlohmann::json action = nlohmann::json::object();
  for (Generator g : kAllGenerators) {
    nlohmann::json rows = nlohmann::json::array();
    auto git = mod.action().find(g);
    if (git != mod.action().end()) {
      for (const auto& [src, vec] : git->second) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [dst, c] : vec) terms.push_back({dst, c.re().str(), c.im().str()});
        rows.push_back({{"from", src}, {"terms", terms}});
      }
    }
    action[std::string(to_string(g))] = rows;
  }
  return nlohmann::json{{"params", mod.params()},
                        {"max_n", mod.max_n()},
                        {"support", mod.support()},
                        {"basis", basis},
                        {"action", action}};
}

inline TruncatedModule module_from_json(const nlohmann::json& j) {
  try {
    ModuleParams params = j.at("params").get<ModuleParams>();
    long max_n = j.at("max_n").get<long>();
    SupportRegion support = j.at("support").get<SupportRegion>();
    std::vector<BasisIndex> basis;
    for (const auto& b : j.at("basis")) basis.push_back(basis_index_from_json(b));
    TruncatedModule::Action action;
    for (const auto& [name, rows] : j.at("action").items()) {
      auto g = generator_from_string(name);
      if (!g) throw ParseError("unknown generator '" + name + "'");
      for (const auto& row : rows) {
        BasisIndex src = basis_index_from_json(row.at("from"));
        Vector vec;
        for (const auto& term : row.at("terms")) {
          if (!term.is_array() || term.size() != 3) throw ParseError("action term must be [[n,m,k],re,im]");
          GaussianRational c(Rational::parse(term[1].get<std::string>()), Rational::parse(term[2].get<std::string>()));
          add_term(vec, basis_index_from_json(term[0]), c);
        }
        action[*g][src] = std::move(vec);
      }
    }
    return TruncatedModule(std::move(params), max_n, std::move(support), std::move(basis), std::move(action));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed module JSON: ") + e.what());
  }
}

}  // namespace su21
