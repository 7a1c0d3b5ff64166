#pragma once

// K-type spectra: a JSON listing, and text/SVG lattice drawings computed from
// that JSON alone (x-axis m, y-axis n).

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "su21/classifier.hpp"

namespace su21 {

/// {"family", "max_n", "support", "ktypes": [{"n","m","p","q","boundary"}]}, sorted by (n, m).
/// A K-type is on the boundary when it lies on an edge of the region.
inline nlohmann::json spectrum_json(const FamilyLabel& label, long max_n) {
  if (max_n < 1) throw InvalidParameter("max_n must be >= 1");
  const SupportRegion region = support_of_label(label);
  const ConeBox box = region.cone_box();
  nlohmann::json ktypes = nlohmann::json::array();
  for (const KType& v : members(region, max_n)) {
    const ConeCoord x = *from_ktype(box.t, v);
    const bool boundary = x.p == box.p_lo || x.q == box.q_lo || (box.p_hi && x.p == *box.p_hi) ||
                          (box.q_hi && x.q == *box.q_hi);
    ktypes.push_back({{"n", v.n}, {"m", v.m}, {"p", x.p}, {"q", x.q}, {"boundary", boundary}});
  }
  return {{"family", label.str()}, {"max_n", max_n}, {"support", region}, {"ktypes", ktypes}};
}

namespace detail {

struct LatticeExtent {
  long m_min = 0, m_max = 0, max_n = 1;
};

inline LatticeExtent extent(const nlohmann::json& spectrum) {
  LatticeExtent e;
  e.max_n = spectrum.at("max_n").get<long>();
  bool first = true;
  for (const auto& k : spectrum.at("ktypes")) {
    const long m = k.at("m").get<long>();
    e.m_min = first ? m : std::min(e.m_min, m);
    e.m_max = first ? m : std::max(e.m_max, m);
    first = false;
  }
  return e;
}

}  // namespace detail

/// One row per n (top row max_n), one column per m. Boundary K-types are
/// drawn as "●", the others as "○".
inline std::string render_text(const nlohmann::json& spectrum) {
  const auto e = detail::extent(spectrum);
  const long width = e.m_max - e.m_min + 1;
  std::ostringstream out;
  out << spectrum.at("family").get<std::string>() << "  m = " << e.m_min << ".." << e.m_max << "\n";
  for (long n = e.max_n; n >= 1; --n) {
    std::vector<std::string> row(static_cast<std::size_t>(width), " ");
    for (const auto& k : spectrum.at("ktypes")) {
      if (k.at("n").get<long>() != n) continue;
      row[static_cast<std::size_t>(k.at("m").get<long>() - e.m_min)] = k.at("boundary").get<bool>() ? "●" : "○";
    }
    std::string line;
    for (const auto& cell : row) line += cell;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::string label = std::to_string(n);
    out << std::string(4 - std::min<std::size_t>(4, label.size()), ' ') << label << " |" << line << "\n";
  }
  return out.str();
}

inline std::string render_svg(const nlohmann::json& spectrum) {
  const auto e = detail::extent(spectrum);
  constexpr long kDx = 12, kDy = 24, kMargin = 40;
  const long width = (e.m_max - e.m_min) * kDx + 2 * kMargin;
  const long height = (e.max_n - 1) * kDy + 2 * kMargin;
  auto x_of = [&](long m) { return kMargin + (m - e.m_min) * kDx; };
  auto y_of = [&](long n) { return kMargin + (e.max_n - n) * kDy; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "  <title>" << spectrum.at("family").get<std::string>() << "</title>\n"
      << "  <line x1=\"" << kMargin / 2 << "\" y1=\"" << height - kMargin / 2 << "\" x2=\"" << width - kMargin / 2
      << "\" y2=\"" << height - kMargin / 2 << "\" stroke=\"#999\"/>\n"
      << "  <line x1=\"" << kMargin / 2 << "\" y1=\"" << height - kMargin / 2 << "\" x2=\"" << kMargin / 2
      << "\" y2=\"" << kMargin / 2 << "\" stroke=\"#999\"/>\n"
      << "  <text x=\"" << width - kMargin / 2 << "\" y=\"" << height - 4 << "\" font-size=\"10\">m</text>\n"
      << "  <text x=\"4\" y=\"" << kMargin / 2 << "\" font-size=\"10\">n</text>\n";
  for (const auto& k : spectrum.at("ktypes")) {
    const bool boundary = k.at("boundary").get<bool>();
    out << "  <circle cx=\"" << x_of(k.at("m").get<long>()) << "\" cy=\"" << y_of(k.at("n").get<long>())
        << "\" r=\"" << (boundary ? 4 : 3) << "\" fill=\"" << (boundary ? "#c0392b" : "#2c3e50") << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace su21
