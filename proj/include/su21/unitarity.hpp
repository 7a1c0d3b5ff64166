#pragma once

// Invariant Hermitian forms on truncated modules and the unitarity test.
//
// A module is unitary iff every product ad, bc across an edge inside its
// support is a negative real. Since ad(p, q) has the sign of a(p) and bc(p, q)
// the sign of b(q), both concave quadratics, scanning past the vertex of each
// parabola certifies the sign on the whole infinite support.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "su21/verifier.hpp"

namespace su21 {

enum class UnitarityKind { unitary, nonunitary, boundary_reducible };

inline const char* to_string(UnitarityKind k) {
  switch (k) {
    case UnitarityKind::unitary: return "unitary";
    case UnitarityKind::nonunitary: return "nonunitary";
    case UnitarityKind::boundary_reducible: return "boundary_reducible";
  }
  return "?";
}

struct UnitarityWitness {
  ConeCoord at;           // ambient cone coordinates of V_{nm}
  KType ktype;
  std::string product;    // "ad" or "bc"
  GaussianRational value;
  std::string reason;
};

struct UnitarityVerdict {
  UnitarityKind kind = UnitarityKind::unitary;
  std::optional<UnitarityWitness> witness;
  bool certified = false;  // sign analysis covers every vertex, not only n <= max_n
  std::size_t products_checked = 0;

  [[nodiscard]] bool is_unitary() const { return kind == UnitarityKind::unitary; }
};

namespace detail {

struct EdgeScan {
  UnitarityVerdict verdict;
  std::optional<UnitarityWitness> zero;
  std::optional<UnitarityWitness> bad;

  void inspect(const ConeParams& cp, ConeCoord x, bool along_p, bool inside, bool lower) {
    ++verdict.products_checked;
    ConeCoord base = x;
    if (lower) {
      if (along_p) --base.p;
      else --base.q;
    }
    ProductPair pp = products(cp, base);
    const GaussianRational& value = along_p ? pp.ad : pp.bc;
    const char* name = along_p ? "ad" : "bc";
    UnitarityWitness w{base, to_ktype(cp.t, base), name, value, ""};
    if (inside) {
      switch (value.sign_class()) {
        case SignClass::negative_real: return;
        case SignClass::zero:
          if (!zero) {
            w.reason = "zero product inside the support";
            zero = w;
          }
          return;
        case SignClass::positive_real: w.reason = "positive product"; break;
        case SignClass::nonreal: w.reason = "nonreal product"; break;
      }
      if (!bad) bad = w;
    } else if (!value.is_zero() && !bad) {
      w.reason = "nonzero product across the edge of the support";
      bad = w;
    }
  }
};

/// Largest integer strictly below the vertex x* = num/2 of a concave parabola.
inline long past_vertex(long num) { return num >= 0 ? num / 2 + 1 : 0; }

}  // namespace detail

inline UnitarityVerdict is_unitary(const ModuleParams& params, const SupportRegion& region, long max_n) {
  if (max_n < 1) throw InvalidParameter("max_n must be >= 1");
  const ConeParams cp = params.ambient();
  const ConeBox box = region.cone_box();
  if (box.t != cp.t) throw InvalidParameter("region " + region.str() + " does not live in the cone of " + params.str());

  detail::EdgeScan scan;
  const auto check_edges = [&](ConeCoord x) {
    scan.inspect(cp, x, false, box.contains(ConeCoord{x.p, x.q + 1}), false);
    scan.inspect(cp, x, true, box.contains(ConeCoord{x.p + 1, x.q}), false);
    if (x.q >= 1 && x.q == box.q_lo) scan.inspect(cp, x, false, false, true);
    if (x.p >= 1 && x.p == box.p_lo) scan.inspect(cp, x, true, false, true);
  };

  // Explicit scan of every K-type up to the truncation.
  for (const KType& v : members(region, max_n)) check_edges(*from_ktype(cp.t, v));

  // Beyond the truncation: ad depends on p only, bc on q only, each through a
  // concave quadratic. Walk each axis of the box until past the parabola's
  // vertex; from there on the sign can only decrease.
  const bool certified = cp.c.is_real();
  if (cp.c.is_real()) {
    const long p_stop = std::max(box.p_lo + max_n, detail::past_vertex(-(cp.t + 2)) + 1);
    const long p_end = box.p_hi ? std::min(*box.p_hi, p_stop) : p_stop;
    for (long p = box.p_lo; p <= p_end; ++p) check_edges({p, box.q_lo});
    const long q_stop = std::max(box.q_lo + max_n, detail::past_vertex(cp.t - 2) + 1);
    const long q_end = box.q_hi ? std::min(*box.q_hi, q_stop) : q_stop;
    for (long q = box.q_lo; q <= q_end; ++q) check_edges({box.p_lo, q});
  }

  UnitarityVerdict& out = scan.verdict;
  if (scan.bad) {
    out.kind = UnitarityKind::nonunitary;
    out.witness = scan.bad;
  } else if (scan.zero) {
    out.kind = UnitarityKind::boundary_reducible;
    out.witness = scan.zero;
  } else {
    out.kind = UnitarityKind::unitary;
  }
  // A witness is an explicit product, hence decisive.
  out.certified = certified || out.kind != UnitarityKind::unitary;
  return out;
}

inline UnitarityVerdict is_unitary(const ModuleParams& params, long max_n) {
  return is_unitary(params, default_support(params), max_n);
}

/// Squared norms ||v_{nm}^1||^2 relative to the anchor K-type.
struct NormTable {
  KType anchor{1, 0};
  std::map<KType, Rational> base;

  [[nodiscard]] const Rational& at(const KType& v) const {
    auto it = base.find(v);
    if (it == base.end()) throw InvalidBasisIndex("no norm stored for " + v.str());
    return it->second;
  }

  /// ||v^k||^2 = ||v^1||^2 / C(n-1, k-1).
  [[nodiscard]] Rational norm2(const BasisIndex& idx) const {
    return at(idx.ktype) / binomial(idx.n() - 1, idx.k - 1);
  }
};

/// Breadth-first (by n) construction of the norm table from the anchor:
///   a_{n-1,m-3} ||v_{nm}||^2 = -conj(d_{nm}) ||v_{n-1,m-3}||^2
///   conj(b_{n-1,m+3}) ||v_{nm}||^2 = -c_{nm} ||v_{n-1,m+3}||^2
/// Every K-type reached along two edges is checked for agreement.
inline NormTable build_norms(const TruncatedModule& mod) {
  const ConeParams cp = mod.params().ambient();
  const ConeBox box = mod.support().cone_box();
  std::vector<KType> ktypes = members(mod.support(), mod.max_n());

  NormTable table;
  table.anchor = ktypes.front();
  table.base.emplace(table.anchor, Rational(1));

  for (const KType& v : ktypes) {
    if (v == table.anchor) continue;
    const ConeCoord x = *from_ktype(cp.t, v);
    std::optional<GaussianRational> value;
    auto offer = [&](const GaussianRational& candidate, const char* path) {
      if (!value) {
        value = candidate;
      } else if (!(*value == candidate)) {
        throw InconsistentGauge("norm of " + v.str() + " differs along the " + path + " edge: " + value->str() +
                                " vs " + candidate.str());
      }
    };
    const CoefficientQuad here = coeff_quad(cp, x);
    if (x.p >= 1 && box.contains(ConeCoord{x.p - 1, x.q})) {
      const ConeCoord y{x.p - 1, x.q};
      const GaussianRational a = coeff_a(cp, y.p);
      if (a.is_zero()) throw NonUnitaryModule("a vanishes on an interior edge at " + to_ktype(cp.t, y).str());
      offer(-here.d.conj() * GaussianRational(table.at(to_ktype(cp.t, y))) / a, "d");
    }
    if (x.q >= 1 && box.contains(ConeCoord{x.p, x.q - 1})) {
      const ConeCoord y{x.p, x.q - 1};
      const GaussianRational b = coeff_b(cp, y.q);
      if (b.is_zero()) throw NonUnitaryModule("b vanishes on an interior edge at " + to_ktype(cp.t, y).str());
      offer(-here.c * GaussianRational(table.at(to_ktype(cp.t, y))) / b.conj(), "c");
    }
    if (!value) throw InconsistentGauge(v.str() + " is not connected to the anchor");
    if (value->sign_class() != SignClass::positive_real) {
      throw NonUnitaryModule("squared norm of " + v.str() + " is " + value->str());
    }
    table.base.emplace(v, value->re());
  }
  return table;
}

/// <C u, w> + <u, C w> = 0 for every real-form basis element C and every pair of
/// basis vectors whose images are fully inside the truncation.
inline VerificationReport check_adjoint(const TruncatedModule& mod, const NormTable& norms) {
  VerificationReport report;
  for (const RealFormElement& element : real_form_basis()) {
    std::map<BasisIndex, Vector> image;
    for (const BasisIndex& u : mod.basis()) {
      if (mod.is_interior(u, 1)) image.emplace(u, mod.apply(element.element, unit_vector(u)).result);
      else ++report.skipped_boundary;
    }
    auto coefficient = [&](const BasisIndex& from, const BasisIndex& to) {
      const Vector& v = image.at(from);
      auto it = v.find(to);
      return it == v.end() ? GaussianRational() : it->second;
    };
    std::set<std::pair<BasisIndex, BasisIndex>> pairs;
    for (const auto& [u, cu] : image) {
      pairs.insert({u, u});
      for (const auto& [w, c] : cu) {
        if (!image.contains(w)) continue;
        pairs.insert({u, w});
        pairs.insert({w, u});
      }
    }
    for (const auto& [u, w] : pairs) {
      ++report.checked;
      GaussianRational lhs = coefficient(u, w) * GaussianRational(norms.norm2(w)) +
                             coefficient(w, u).conj() * GaussianRational(norms.norm2(u));
      if (!lhs.is_zero()) report.failures.push_back({"adjoint_" + element.name, u, Vector{{w, lhs}}});
    }
  }
  return report;
}

/// ||v^k||^2 = 1 / C(n-1, k-1), k = 1..n, for the n-dimensional su(2) module.
inline std::vector<Rational> su2_norms(long n) {
  if (n < 1) throw InvalidParameter("su(2) dimension must be >= 1");
  std::vector<Rational> out;
  for (long k = 1; k <= n; ++k) out.push_back(Rational(1) / binomial(n - 1, k - 1));
  return out;
}

inline void to_json(nlohmann::json& j, const NormTable& t) {
  nlohmann::json base = nlohmann::json::array();
  for (const auto& [v, value] : t.base) base.push_back({{"n", v.n}, {"m", v.m}, {"value", value.str()}});
  j = nlohmann::json{{"anchor", {{"n", t.anchor.n}, {"m", t.anchor.m}}}, {"base", base}};
}

inline void from_json(const nlohmann::json& j, NormTable& t) {
  t.anchor = KType(j.at("anchor").at("n").get<long>(), j.at("anchor").at("m").get<long>());
  t.base.clear();
  for (const auto& e : j.at("base")) {
    t.base.emplace(KType(e.at("n").get<long>(), e.at("m").get<long>()),
                   Rational::parse(e.at("value").get<std::string>()));
  }
}

inline void to_json(nlohmann::json& j, const UnitarityVerdict& v) {
  j = nlohmann::json{{"verdict", to_string(v.kind)},
                     {"certified", v.certified},
                     {"products_checked", v.products_checked}};
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"p", w.at.p},
                    {"q", w.at.q},
                    {"n", w.ktype.n},
                    {"m", w.ktype.m},
                    {"product", w.product},
                    {"value", w.value},
                    {"reason", w.reason}};
  }
}

}  // namespace su21
