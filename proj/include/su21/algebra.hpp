#pragma once

// sl(3,C) with the generating set H_alpha, H_beta, X_*, Y_* and the
// dependent element Z = H_alpha + 2 H_beta. Structure constants are obtained
// from the explicit 3x3 matrices, never entered by hand.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su21/exact_scalar.hpp"

namespace su21 {

enum class Generator {
  H_alpha,
  H_beta,
  Z,
  X_alpha,
  X_beta,
  X_alphabeta,
  Y_alpha,
  Y_beta,
  Y_alphabeta,
};

inline constexpr std::array<Generator, 9> kAllGenerators = {
    Generator::H_alpha, Generator::H_beta,      Generator::Z,
    Generator::X_alpha, Generator::X_beta,      Generator::X_alphabeta,
    Generator::Y_alpha, Generator::Y_beta,      Generator::Y_alphabeta,
};

/// The eight linearly independent generators (Z omitted).
inline constexpr std::array<Generator, 8> kIndependentGenerators = {
    Generator::H_alpha, Generator::H_beta,  Generator::X_alpha,     Generator::X_beta,
    Generator::X_alphabeta, Generator::Y_alpha, Generator::Y_beta, Generator::Y_alphabeta,
};

inline std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::H_alpha: return "H_alpha";
    case Generator::H_beta: return "H_beta";
    case Generator::Z: return "Z";
    case Generator::X_alpha: return "X_alpha";
    case Generator::X_beta: return "X_beta";
    case Generator::X_alphabeta: return "X_alphabeta";
    case Generator::Y_alpha: return "Y_alpha";
    case Generator::Y_beta: return "Y_beta";
    case Generator::Y_alphabeta: return "Y_alphabeta";
  }
  return "?";
}

inline std::optional<Generator> generator_from_string(std::string_view name) {
  for (Generator g : kAllGenerators) {
    if (to_string(g) == name) return g;
  }
  return std::nullopt;
}

using Matrix3 = std::array<std::array<GaussianRational, 3>, 3>;

inline Matrix3 defining_matrix(Generator g) {
  Matrix3 m{};
  switch (g) {
    case Generator::H_alpha: m[0][0] = 1; m[1][1] = -1; break;
    case Generator::H_beta: m[1][1] = 1; m[2][2] = -1; break;
    case Generator::Z: m[0][0] = 1; m[1][1] = 1; m[2][2] = -2; break;
    case Generator::X_alpha: m[0][1] = 1; break;
    case Generator::X_beta: m[1][2] = 1; break;
    case Generator::X_alphabeta: m[0][2] = 1; break;
    case Generator::Y_alpha: m[1][0] = 1; break;
    case Generator::Y_beta: m[2][1] = 1; break;
    case Generator::Y_alphabeta: m[2][0] = 1; break;
  }
  return m;
}

inline Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) out[i][j] += a[i][l] * b[l][j];
  return out;
}

inline Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = a[i][j] - b[i][j];
  return out;
}

inline Matrix3 commutator(const Matrix3& a, const Matrix3& b) { return a * b - b * a; }

/// Finite linear combination of generators in canonical form: Z is expanded
/// into H_alpha + 2 H_beta and zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Generator, GaussianRational>;

  AlgebraElement() = default;
  AlgebraElement(Generator g) { add(g, GaussianRational(1)); }  // NOLINT

  static AlgebraElement from_terms(std::initializer_list<std::pair<Generator, GaussianRational>> terms) {
    AlgebraElement out;
    for (const auto& [g, c] : terms) out.add(g, c);
    return out;
  }

  void add(Generator g, const GaussianRational& coeff) {
    if (g == Generator::Z) {
      add(Generator::H_alpha, coeff);
      add(Generator::H_beta, coeff * GaussianRational(2));
      return;
    }
    auto [it, inserted] = terms_.try_emplace(g, coeff);
    if (!inserted) it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] GaussianRational coefficient(Generator g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  [[nodiscard]] Matrix3 matrix() const {
    Matrix3 out{};
    for (const auto& [g, c] : terms_) {
      Matrix3 m = defining_matrix(g);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] += c * m[i][j];
    }
    return out;
  }

  /// Inverse of matrix() on traceless matrices.
  static AlgebraElement from_matrix(const Matrix3& m) {
    if (!(m[0][0] + m[1][1] + m[2][2]).is_zero()) throw InvalidParameter("matrix is not traceless");
    AlgebraElement out;
    out.add(Generator::X_alpha, m[0][1]);
    out.add(Generator::X_beta, m[1][2]);
    out.add(Generator::X_alphabeta, m[0][2]);
    out.add(Generator::Y_alpha, m[1][0]);
    out.add(Generator::Y_beta, m[2][1]);
    out.add(Generator::Y_alphabeta, m[2][0]);
    out.add(Generator::H_alpha, m[0][0]);
    out.add(Generator::H_beta, -m[2][2]);
    return out;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    for (const auto& [g, c] : b.terms_) a.add(g, c);
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    for (const auto& [g, c] : b.terms_) a.add(g, -c);
    return a;
  }
  friend AlgebraElement operator*(const GaussianRational& s, const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [g, c] : x.terms_) out.add(g, s * c);
    return out;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*" + std::string(to_string(g));
    }
    return out;
  }

 private:
  Terms terms_;
};

namespace detail {

inline const std::map<std::pair<Generator, Generator>, AlgebraElement>& structure_constants() {
  static const auto table = [] {
    std::map<std::pair<Generator, Generator>, AlgebraElement> out;
    for (Generator x : kIndependentGenerators) {
      for (Generator y : kIndependentGenerators) {
        out[{x, y}] = AlgebraElement::from_matrix(commutator(defining_matrix(x), defining_matrix(y)));
      }
    }
    return out;
  }();
  return table;
}

}  // namespace detail

/// Lie bracket, extended bilinearly from the generator table.
inline AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  const auto& table = detail::structure_constants();
  AlgebraElement out;
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) {
      out = out + (cx * cy) * table.at({gx, gy});
    }
  }
  return out;
}

struct RealFormElement {
  std::string name;
  AlgebraElement element;
};

/// Basis of su(2,1): iH_alpha, iH_beta, A_alpha, B_alpha, A_beta, B_beta,
/// A_alphabeta, B_alphabeta. The compact alpha pair uses X - Y and i(X + Y);
/// the noncompact pairs use X + Y and i(X - Y).
inline std::vector<RealFormElement> real_form_basis() {
  using G = Generator;
  const GaussianRational i = GaussianRational::i();
  const GaussianRational one(1);
  return {
      {"iH_alpha", AlgebraElement::from_terms({{G::H_alpha, i}})},
      {"iH_beta", AlgebraElement::from_terms({{G::H_beta, i}})},
      {"A_alpha", AlgebraElement::from_terms({{G::X_alpha, one}, {G::Y_alpha, -one}})},
      {"B_alpha", AlgebraElement::from_terms({{G::X_alpha, i}, {G::Y_alpha, i}})},
      {"A_beta", AlgebraElement::from_terms({{G::X_beta, one}, {G::Y_beta, one}})},
      {"B_beta", AlgebraElement::from_terms({{G::X_beta, i}, {G::Y_beta, -i}})},
      {"A_alphabeta", AlgebraElement::from_terms({{G::X_alphabeta, one}, {G::Y_alphabeta, one}})},
      {"B_alphabeta", AlgebraElement::from_terms({{G::X_alphabeta, i}, {G::Y_alphabeta, -i}})},
  };
}

}  // namespace su21
