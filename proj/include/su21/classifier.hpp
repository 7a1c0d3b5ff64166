#pragma once

// The unitary dual of SU(2,1) as executable logic: thresholds c(t), c(l,t),
// family labels, classification of parameter points and bounded enumeration.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "json.hpp"
#include "su21/module.hpp"

namespace su21 {

/// c(0) = 0, c(1) = -1/2, c(2k) = -(k^2+1)/2, c(2k+1) = -(k^2+k+1)/2, c(-t) = c(t).
inline Rational c_threshold(long t) {
  const long a = std::labs(t);
  if (a == 0) return Rational(0);
  if (a == 1) return Rational(-1, 2);
  const long k = a / 2;
  if (a % 2 == 0) return Rational(-(k * k + 1), 2);
  return Rational(-(k * k + k + 1), 2);
}

/// c(l, 2k) = (l^2 - 2(k-1)l - 2k)/2, c(l, 2k+1) = (l^2 - (2k-1)l - 2k - 1)/2,
/// c(l, -t) = c(l, t); defined for |t| >= 2 and 0 <= l <= floor(|t|/2) - 1.
inline Rational c_special(long l, long t) {
  const long a = std::labs(t);
  if (a < 2) throw InvalidParameter("c(l,t) needs |t| >= 2");
  const long k = a / 2;
  if (l < 0 || l > k - 1) {
    throw InvalidParameter("c(l,t) needs 0 <= l <= " + std::to_string(k - 1) + ", got l = " + std::to_string(l));
  }
  if (a % 2 == 0) return Rational(l * l - 2 * (k - 1) * l - 2 * k, 2);
  return Rational(l * l - (2 * k - 1) * l - 2 * k - 1, 2);
}

enum class Family { V, V_interval, U0, U2, Uminus2, U_l, W, Z };

/// Name of a member of the dual (or of a nonunitary parameter point).
/// Grammar: "V(c=-1/2,2t=-6)", "V(c<-1,2t=4)", "U(0)", "U(2)", "U(-2)",
/// "U(l=1,2t=4)", "W(4,3)", "Z(-3)".
struct FamilyLabel {
  Family family = Family::U0;
  GaussianRational c;  // V: the point; V_interval: the upper bound
  long two_t = 0;
  long l = 0;
  long r = 0;
  long s = 0;

  static FamilyLabel V(GaussianRational c, long two_t) {
    check_even(two_t);
    return {Family::V, std::move(c), two_t};
  }
  static FamilyLabel V_interval(long two_t) {
    check_even(two_t);
    return {Family::V_interval, GaussianRational(c_threshold(two_t / 2)), two_t};
  }
  static FamilyLabel U0() { return {Family::U0, {}}; }
  static FamilyLabel U2() { return {Family::U2, {}}; }
  static FamilyLabel Uminus2() { return {Family::Uminus2, {}}; }
  static FamilyLabel U(long l, long two_t) {
    check_even(two_t);
    (void)c_special(l, two_t / 2);
    return {Family::U_l, {}, two_t, l};
  }
  static FamilyLabel W(long r, long s) {
    if (r <= 1 || (r + s) % 2 == 0) throw InvalidParameter("W(r,s) needs r > 1 and r + s odd");
    return {Family::W, {}, 0, 0, r, s};
  }
  static FamilyLabel Z(long s) {
    if (s >= -1 && s <= 1) throw InvalidParameter("Z(s) needs s outside {-1, 0, 1}");
    return {Family::Z, {}, 0, 0, 0, s};
  }

  [[nodiscard]] long t() const { return two_t / 2; }

  [[nodiscard]] std::string str() const {
    switch (family) {
      case Family::V: return "V(c=" + c.str() + ",2t=" + std::to_string(two_t) + ")";
      case Family::V_interval: return "V(c<" + c.str() + ",2t=" + std::to_string(two_t) + ")";
      case Family::U0: return "U(0)";
      case Family::U2: return "U(2)";
      case Family::Uminus2: return "U(-2)";
      case Family::U_l: return "U(l=" + std::to_string(l) + ",2t=" + std::to_string(two_t) + ")";
      case Family::W: return "W(" + std::to_string(r) + "," + std::to_string(s) + ")";
      case Family::Z: return "Z(" + std::to_string(s) + ")";
    }
    return "?";
  }

  static FamilyLabel parse(const std::string& text) {
    static const std::regex v_point(R"(V\(c=([^,]+),2t=(-?\d+)\))");
    static const std::regex v_interval(R"(V\(c<([^,]+),2t=(-?\d+)\))");
    static const std::regex u_l(R"(U\(l=(\d+),2t=(-?\d+)\))");
    static const std::regex w(R"(W\((-?\d+),(-?\d+)\))");
    static const std::regex z(R"(Z\((-?\d+)\))");
    std::smatch mt;
    try {
      if (text == "U(0)") return U0();
      if (text == "U(2)") return U2();
      if (text == "U(-2)") return Uminus2();
      if (std::regex_match(text, mt, v_point)) return V(GaussianRational::parse(mt[1].str()), std::stol(mt[2].str()));
      if (std::regex_match(text, mt, v_interval)) {
        FamilyLabel out = V_interval(std::stol(mt[2].str()));
        if (!(out.c == GaussianRational::parse(mt[1].str()))) {
          throw ParseError("interval bound in '" + text + "' is not c(t) = " + out.c.str());
        }
        return out;
      }
      if (std::regex_match(text, mt, u_l)) return U(std::stol(mt[1].str()), std::stol(mt[2].str()));
      if (std::regex_match(text, mt, w)) return W(std::stol(mt[1].str()), std::stol(mt[2].str()));
      if (std::regex_match(text, mt, z)) return Z(std::stol(mt[1].str()));
    } catch (const InvalidParameter& e) {
      throw ParseError("invalid family label '" + text + "': " + e.what());
    } catch (const std::out_of_range&) {
      throw ParseError("number out of range in '" + text + "'");
    }
    throw ParseError("unrecognized family label '" + text + "'");
  }

  friend bool operator==(const FamilyLabel& a, const FamilyLabel& b) { return a.str() == b.str(); }

 private:
  static void check_even(long two_t) {
    if (two_t % 2 != 0) throw InvalidParameter("2t must be even, got " + std::to_string(two_t));
  }
};

/// K-type support of a family member, in the coordinates of its ambient cone.
inline SupportRegion support_of_label(const FamilyLabel& label) {
  switch (label.family) {
    case Family::V:
    case Family::V_interval: return SupportRegion::full_cone(label.t());
    case Family::U0: return SupportRegion::point(0);
    case Family::U2: return SupportRegion::strip_q(1, 0);
    case Family::Uminus2: return SupportRegion::strip_p(-1, 0);
    case Family::U_l:
      return label.t() > 0 ? SupportRegion::strip_q(label.t(), label.l) : SupportRegion::strip_p(label.t(), label.l);
    case Family::W: return SupportRegion::vertex_cone(label.r, label.s);
    case Family::Z: return label.s > 0 ? SupportRegion::ray_pos(label.s) : SupportRegion::ray_neg(label.s);
  }
  throw InvalidParameter("unknown family");
}

/// Parameters whose module contains the family member as the constituent at its vertex.
/// For an interval the representative is c(t) - 1.
inline ModuleParams representative_params(const FamilyLabel& label) {
  switch (label.family) {
    case Family::V: return ModuleParams::cone(label.c, label.t());
    case Family::V_interval: return ModuleParams::cone(label.c - GaussianRational(1), label.t());
    case Family::U0: return ModuleParams::cone(GaussianRational(0), 0);
    case Family::U2: return ModuleParams::cone(GaussianRational(Rational(-1, 2)), 1);
    case Family::Uminus2: return ModuleParams::cone(GaussianRational(Rational(-1, 2)), -1);
    case Family::U_l: return ModuleParams::cone(GaussianRational(c_special(label.l, label.t())), label.t());
    case Family::W: return ModuleParams::vertex(label.r, label.s);
    case Family::Z:
      if (label.s == 2) return ModuleParams::cone(GaussianRational(Rational(-1, 2)), 1);
      if (label.s == -2) return ModuleParams::cone(GaussianRational(Rational(-1, 2)), -1);
      return ModuleParams::vertex(std::labs(label.s) - 1, label.s);
  }
  throw InvalidParameter("unknown family");
}

struct ClassificationRecord {
  FamilyLabel label;
  ModuleParams params;
  SupportRegion support;
  bool unitary = false;
  std::vector<std::string> notes;

  friend bool operator==(const ClassificationRecord& a, const ClassificationRecord& b) {
    return a.label == b.label && a.params == b.params && a.support == b.support && a.unitary == b.unitary &&
           a.notes == b.notes;
  }
};

namespace detail {

/// Bound on the n of any K-type where a(p) or b(q) can vanish for real c.
inline long wall_bound(const Rational& c, long t) {
  const mpz_class two_c = (2 * c.raw().get_num()) / c.raw().get_den() + 1;
  const mpz_class k = abs(two_c) + std::labs(t) + 1;
  return static_cast<long>(mpz_class(sqrt(k)).get_si()) + 2 * std::labs(t) + 6;
}

}  // namespace detail

/// Assigns a parameter point to its family.
inline ClassificationRecord classify(const ModuleParams& point) {
  ClassificationRecord rec;
  rec.params = point;
  if (point.is_vertex()) {
    const auto [r, s] = point.as_vertex();
    if (s + r + 1 > 0 && s - r - 1 < 0) {
      rec.label = FamilyLabel::W(r, s);
      rec.unitary = true;
      rec.support = SupportRegion::vertex_cone(r, s);
      rec.notes.push_back("s+r+1 > 0 and s-r-1 < 0");
    } else if (s + r + 1 == 0) {
      rec.label = FamilyLabel::Z(s);
      rec.unitary = true;
      rec.support = SupportRegion::ray_neg(s);
      rec.notes.push_back("s+r+1 = 0");
    } else if (s - r - 1 == 0) {
      rec.label = FamilyLabel::Z(s);
      rec.unitary = true;
      rec.support = SupportRegion::ray_pos(s);
      rec.notes.push_back("s-r-1 = 0");
    } else {
      rec.label = FamilyLabel::W(r, s);
      rec.unitary = false;
      rec.support = SupportRegion::vertex_cone(r, s);
      rec.notes.push_back("outside the unitary range s+r+1 > 0, s-r-1 < 0");
    }
    return rec;
  }

  const ConeParams cp = point.as_cone();
  const long t = cp.t;
  rec.label = FamilyLabel::V(cp.c, 2 * t);
  if (!cp.c.is_real()) {
    rec.unitary = false;
    rec.support = SupportRegion::full_cone(t);
    rec.notes.push_back("nonreal c gives nonreal products");
    return rec;
  }
  const Rational c = cp.c.re();
  const Rational ct = c_threshold(t);
  if (c < ct) {
    rec.unitary = true;
    rec.support = SupportRegion::full_cone(t);
    rec.notes.push_back("c < c(t) = " + ct.str());
    return rec;
  }
  if (c == ct) {
    rec.unitary = true;
    if (t == 0) {
      rec.label = FamilyLabel::U0();
    } else if (t == 1) {
      rec.label = FamilyLabel::U2();
    } else if (t == -1) {
      rec.label = FamilyLabel::Uminus2();
    } else {
      const long l = std::labs(t) / 2 - 1;
      rec.label = FamilyLabel::U(l, 2 * t);
      rec.notes.push_back("c(t) coincides with c(l,t) at l = " + std::to_string(l));
    }
    rec.support = support_of_label(rec.label);
    rec.notes.push_back("c = c(t) = " + ct.str());
    return rec;
  }
  if (std::labs(t) >= 2) {
    for (long l = 0; l <= std::labs(t) / 2 - 1; ++l) {
      if (c == c_special(l, t)) {
        rec.label = FamilyLabel::U(l, 2 * t);
        rec.unitary = true;
        rec.support = support_of_label(rec.label);
        rec.notes.push_back("c = c(l,t) = " + c.str() + " with l = " + std::to_string(l));
        return rec;
      }
    }
  }
  rec.unitary = false;
  rec.support = support_of(point, detail::wall_bound(c, t));
  rec.notes.push_back("c > c(t) = " + ct.str() + " and c is no c(l,t)");
  return rec;
}

/// Every discrete member of the dual within the bounds, plus one interval
/// record per t for the continuous family V(c, 2t), c < c(t).
inline std::vector<ClassificationRecord> enumerate(long t_max, long r_max) {
  if (t_max < 0 || r_max < 0) throw InvalidParameter("enumeration bounds must be nonnegative");
  std::vector<ClassificationRecord> out;
  auto emit = [&](const FamilyLabel& label, std::vector<std::string> notes) {
    out.push_back({label, representative_params(label), support_of_label(label), true, std::move(notes)});
  };
  for (long t = -t_max; t <= t_max; ++t) {
    emit(FamilyLabel::V_interval(2 * t), {"c in (-inf, c(t))"});
    if (t == 0) emit(FamilyLabel::U0(), {"c = c(0) = 0"});
    if (t == 1) emit(FamilyLabel::U2(), {"c = c(1) = -1/2"});
    if (t == -1) emit(FamilyLabel::Uminus2(), {"c = c(-1) = -1/2"});
    for (long l = 0; std::labs(t) >= 2 && l <= std::labs(t) / 2 - 1; ++l) {
      std::vector<std::string> notes{"c = c(l,t) = " + c_special(l, t).str()};
      if (l == std::labs(t) / 2 - 1) notes.push_back("c(l,t) coincides with c(t)");
      emit(FamilyLabel::U(l, 2 * t), std::move(notes));
    }
  }
  for (long r = 2; r <= r_max; ++r) {
    for (long s = -r; s <= r; ++s) {
      if ((r + s) % 2 != 0) emit(FamilyLabel::W(r, s), {"s+r+1 > 0 and s-r-1 < 0"});
    }
  }
  for (long a = 2; a <= r_max + 1; ++a) {
    for (long s : {-a, a}) {
      std::vector<std::string> notes;
      if (a == 2) notes.push_back(std::string("same K-types and products as ") + (s > 0 ? "U(2)" : "U(-2)"));
      emit(FamilyLabel::Z(s), std::move(notes));
    }
  }
  return out;
}

inline void to_json(nlohmann::json& j, const ClassificationRecord& rec) {
  j = nlohmann::json{{"label", rec.label.str()},
                     {"params", rec.params},
                     {"support", rec.support},
                     {"unitary", rec.unitary},
                     {"notes", rec.notes}};
}

}  // namespace su21
