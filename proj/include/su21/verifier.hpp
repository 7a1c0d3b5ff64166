#pragma once

// Brute-force certification of truncated modules: every sl(3,C) commutator
// on interior vectors, and the coefficient relations that characterize the
// module (vertex relations, edge vanishing, gauge identities, and the
// k-dependent combination of the two vertex relations).

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "su21/module.hpp"

namespace su21 {

struct Failure {
  std::string relation;
  BasisIndex at;
  Vector discrepancy;
};

struct VerificationReport {
  std::size_t checked = 0;
  std::vector<Failure> failures;
  std::size_t skipped_boundary = 0;

  [[nodiscard]] bool verified() const { return failures.empty(); }

  void merge(const VerificationReport& other) {
    checked += other.checked;
    skipped_boundary += other.skipped_boundary;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

/// [x, y] v = x(y v) - y(x v) for all 64 ordered pairs of independent generators
/// and every basis vector whose K-type neighbours at distance two lie within max_n.
inline VerificationReport check_commutators(const TruncatedModule& mod) {
  VerificationReport report;
  std::array<std::array<AlgebraElement, 8>, 8> brackets;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      brackets[i][j] = bracket(kIndependentGenerators[i], kIndependentGenerators[j]);

  for (const BasisIndex& v : mod.basis()) {
    if (!mod.is_interior(v, 2)) {
      report.skipped_boundary += 64;
      continue;
    }
    std::array<Vector, 8> once;
    for (std::size_t j = 0; j < 8; ++j) once[j] = mod.row(kIndependentGenerators[j], v);
    const Vector unit = unit_vector(v);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        ++report.checked;
        Vector lhs = mod.apply(kIndependentGenerators[i], once[j]).result -
                     mod.apply(kIndependentGenerators[j], once[i]).result;
        Vector diff = lhs - mod.apply(brackets[i][j], unit).result;
        if (!diff.empty()) {
          report.failures.push_back({"[" + std::string(to_string(kIndependentGenerators[i])) + "," +
                                         std::string(to_string(kIndependentGenerators[j])) + "]",
                                     v, std::move(diff)});
        }
      }
    }
  }
  return report;
}

namespace detail {

/// Coefficients of the module restricted to a region; neighbours outside the
/// region contribute nothing.
class RegionCoefficients {
 public:
  RegionCoefficients(ConeParams cp, ConeBox box) : cp_(std::move(cp)), box_(box) {}

  [[nodiscard]] bool in(ConeCoord x) const { return x.p >= 0 && x.q >= 0 && box_.contains(x); }
  [[nodiscard]] CoefficientQuad quad(ConeCoord x) const { return coeff_quad(cp_, x); }

  // a_{nm} d_{n+1,m+3}, b_{nm} c_{n+1,m-3}, c_{nm} b_{n-1,m+3}, d_{nm} a_{n-1,m-3},
  // with `raw` ignoring whether the neighbour belongs to the region.
  [[nodiscard]] GaussianRational ad(ConeCoord x, bool raw = false) const {
    ConeCoord y{x.p + 1, x.q};
    if (!raw && !in(y)) return {};
    return quad(x).a * quad(y).d;
  }
  [[nodiscard]] GaussianRational bc(ConeCoord x, bool raw = false) const {
    ConeCoord y{x.p, x.q + 1};
    if (!raw && !in(y)) return {};
    return quad(x).b * quad(y).c;
  }
  [[nodiscard]] GaussianRational cb(ConeCoord x, bool raw = false) const {
    ConeCoord y{x.p, x.q - 1};
    if (y.q < 0 || (!raw && !in(y))) return {};
    return quad(x).c * quad(y).b;
  }
  [[nodiscard]] GaussianRational da(ConeCoord x, bool raw = false) const {
    ConeCoord y{x.p - 1, x.q};
    if (y.p < 0 || (!raw && !in(y))) return {};
    return quad(x).d * quad(y).a;
  }

 private:
  ConeParams cp_;
  ConeBox box_;
};

inline void record(VerificationReport& report, const char* relation, const BasisIndex& at,
                   const GaussianRational& residual) {
  ++report.checked;
  if (!residual.is_zero()) report.failures.push_back({relation, at, Vector{{at, residual}}});
}

}  // namespace detail

/// The coefficient relations on every K-type of `region` with n <= max_n.
inline VerificationReport check_coefficient_relations(const ModuleParams& params, const SupportRegion& region,
                                                long max_n) {
  const ConeParams cp = params.ambient();
  const ConeBox box = region.cone_box();
  if (box.t != cp.t) throw InvalidParameter("region " + region.str() + " does not live in the cone of " + params.str());
  const detail::RegionCoefficients rc(cp, box);
  VerificationReport report;

  for (const KType& v : members(region, max_n)) {
    const ConeCoord x = *from_ktype(cp.t, v);
    const long n = v.n;
    const long m = v.m;
    const BasisIndex at(v, 1);
    const GaussianRational inv_n(Rational(1, n));
    const GaussianRational ad = rc.ad(x), bc = rc.bc(x), cb = rc.cb(x), da = rc.da(x);

    // Vertex relations.
    const GaussianRational res1 = -(inv_n * ad) + bc - cb - GaussianRational(Rational(m - n + 1, 2));
    const GaussianRational res2 = -ad + inv_n * bc + da - GaussianRational(Rational(m + n - 1, 2));
    detail::record(report, "vertex_relation_first", at, res1);
    detail::record(report, "vertex_relation_second", at, res2);

    // Products across a missing neighbour vanish.
    if (!rc.in({x.p + 1, x.q})) detail::record(report, "edge_vanishing_ad", at, rc.ad(x, true));
    if (!rc.in({x.p, x.q + 1})) detail::record(report, "edge_vanishing_bc", at, rc.bc(x, true));
    if (x.q >= 1 && !rc.in({x.p, x.q - 1})) detail::record(report, "edge_vanishing_cb", at, rc.cb(x, true));
    if (x.p >= 1 && !rc.in({x.p - 1, x.q})) detail::record(report, "edge_vanishing_da", at, rc.da(x, true));

    const CoefficientQuad here = rc.quad(x);
    // b_{nm} a_{n+1,m-3} = a_{nm} b_{n+1,m+3}
    if (rc.in({x.p + 1, x.q}) && rc.in({x.p, x.q + 1})) {
      detail::record(report, "square_ab", at,
                     here.b * rc.quad({x.p, x.q + 1}).a - here.a * rc.quad({x.p + 1, x.q}).b);
    }
    // d_{nm} c_{n-1,m-3} = c_{nm} d_{n-1,m+3}
    if (x.p >= 1 && x.q >= 1 && rc.in({x.p - 1, x.q}) && rc.in({x.p, x.q - 1})) {
      detail::record(report, "square_cd", at,
                     here.d * rc.quad({x.p - 1, x.q}).c - here.c * rc.quad({x.p, x.q - 1}).d);
    }
    // (n+1) a_{nm} c_{n+1,m+3} = n c_{nm} a_{n-1,m+3}
    if (x.q >= 1 && rc.in({x.p + 1, x.q}) && rc.in({x.p, x.q - 1})) {
      detail::record(report, "gauge_ac", at,
                     GaussianRational(n + 1) * here.a * rc.quad({x.p + 1, x.q}).c -
                         GaussianRational(n) * here.c * rc.quad({x.p, x.q - 1}).a);
    }
    // (n+1) b_{nm} d_{n+1,m-3} = n d_{nm} b_{n-1,m-3}
    if (x.p >= 1 && rc.in({x.p, x.q + 1}) && rc.in({x.p - 1, x.q})) {
      detail::record(report, "gauge_bd", at,
                     GaussianRational(n + 1) * here.b * rc.quad({x.p, x.q + 1}).d -
                         GaussianRational(n) * here.d * rc.quad({x.p - 1, x.q}).b);
    }

    // H_beta eigenvalue relation at each k, and its expression as the
    // combination (n-k)/(n-1) first + (k-1)/(n-1) second.
    for (long k = 1; k <= n; ++k) {
      const BasisIndex atk(v, k);
      GaussianRational lhs = -(GaussianRational(Rational(k, n)) * ad) +
                             GaussianRational(Rational(n + 1 - k, n)) * bc;
      if (n > 1) {
        lhs += -(GaussianRational(Rational(n - k, n - 1)) * cb) + GaussianRational(Rational(k - 1, n - 1)) * da;
      } else {
        lhs += -cb + da;
      }
      const GaussianRational res = lhs - GaussianRational(Rational(m - n - 1 + 2 * k, 2));
      detail::record(report, "k_relation", atk, res);
      GaussianRational combo = n > 1 ? GaussianRational(Rational(n - k, n - 1)) * res1 +
                                           GaussianRational(Rational(k - 1, n - 1)) * res2
                                     : res1;
      detail::record(report, "k_combination", atk, res - combo);
    }
  }
  return report;
}

inline VerificationReport check_coefficient_relations(const ModuleParams& params, long max_n) {
  return check_coefficient_relations(params, default_support(params), max_n);
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, c] : f.discrepancy) terms.push_back({idx, c.re().str(), c.im().str()});
    failures.push_back({{"relation", f.relation}, {"at", f.at}, {"discrepancy", terms}});
  }
  j = nlohmann::json{{"verified", r.verified()},
                     {"checked", r.checked},
                     {"skipped_boundary", r.skipped_boundary},
                     {"failures", failures}};
}

}  // namespace su21
