#include "qgsmooth/config.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qgs {

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Enriques: return "enriques";
    case SurfaceKind::K3: return "k3";
    case SurfaceKind::En: return "e";
    case SurfaceKind::Other: return "other";
  }
  return "other";
}

bool CurveClass::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::optional<std::size_t> Configuration::find(std::string_view name) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].name == name) return i;
  return std::nullopt;
}

std::size_t Configuration::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownCurve, "unknown curve '" + std::string(name) + "'");
}

long long Configuration::pair(std::size_t i, std::size_t j) const {
  const Rational& v = pairing(i, j);
  return v.num().convert_to<long long>();
}

void Configuration::add_curve(CurveClass curve) {
  const std::size_t n = curves.size();
  RatMatrix grown(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) grown(r, c) = pairing(r, c);
  grown(n, n) = curve.self_int;
  pairing = std::move(grown);
  curves.push_back(std::move(curve));
}

void Configuration::set_pair(std::size_t i, std::size_t j, long long value) {
  pairing(i, j) = value;
  pairing(j, i) = value;
}

// ---------------------------------------------------------------------------

Violations validate(const Configuration& c) {
  Violations out;
  const std::size_t n = c.curves.size();
  if (c.pairing.rows() != n || c.pairing.cols() != n) {
    out.push_back({"pairing-shape", "pairing is not " + std::to_string(n) + "x" + std::to_string(n)});
    return out;
  }
  const SurfaceInvariants& s = c.surface;
  const bool consistent = s.kind == SurfaceKind::Enriques ? (s.chi == 1 && s.K2 == 0 && s.K_num_trivial)
                          : s.kind == SurfaceKind::K3     ? (s.chi == 2 && s.K2 == 0 && s.K_num_trivial)
                          : s.kind == SurfaceKind::En     ? (s.chi == s.n && s.K2 == 0)
                                                          : true;
  if (!consistent)
    out.push_back({"surface-invariants", std::string(to_string(s.kind)) + " surface with chi = " +
                                             std::to_string(s.chi) + ", K^2 = " + std::to_string(s.K2)});
  for (std::size_t i = 0; i < n; ++i) {
    const CurveClass& cv = c.curves[i];
    if (cv.genus < 0) out.push_back({"genus", cv.name + " has negative genus"});
    if (!cv.satisfies_adjunction())
      out.push_back({"adjunction", cv.name + ": 2g-2 = " + std::to_string(2 * cv.genus - 2) +
                                       " but C^2 + K.C = " + std::to_string(cv.self_int + cv.K_deg)});
    if (c.pairing(i, i) != Rational(cv.self_int))
      out.push_back({"pairing-diagonal", cv.name + ": pairing diagonal " + c.pairing(i, i).to_string() +
                                             " differs from self-intersection " + std::to_string(cv.self_int)});
    if (c.blowup_count == 0 && c.surface.K_num_trivial && cv.K_deg != 0)
      out.push_back({"k-trivial", cv.name + " has K.C = " + std::to_string(cv.K_deg) +
                                      " on a surface with numerically trivial K"});
    if (c.blowup_count == 0 && c.surface.kind == SurfaceKind::Enriques && cv.genus == 0 && cv.self_int != -2)
      out.push_back({"enriques-rational", cv.name + " is rational with C^2 = " + std::to_string(cv.self_int) +
                                              ", expected -2 on an Enriques surface"});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& v = c.pairing(i, j);
      if (v != c.pairing(j, i))
        out.push_back({"pairing-symmetry", c.curves[i].name + "." + c.curves[j].name + " is not symmetric"});
      if (!v.is_integer() || v.sign() < 0)
        out.push_back({"pairing-entry", c.curves[i].name + "." + c.curves[j].name + " = " + v.to_string() +
                                            " is not a nonnegative integer"});
    }

  // Point data may not claim more intersection than the pairing provides.
  std::map<std::pair<std::size_t, std::size_t>, long long> claimed;
  std::set<std::string> point_names;
  for (const auto& p : c.points) {
    if (!point_names.insert(p.name).second) out.push_back({"point-name", "point " + p.name + " declared twice"});
    std::vector<std::pair<std::size_t, int>> idx;
    for (const auto& b : p.branches) {
      auto i = c.find(b.curve);
      if (!i) {
        out.push_back({"point-curve", "point " + p.name + " references unknown curve " + b.curve});
        continue;
      }
      if (b.multiplicity < 1)
        out.push_back({"point-multiplicity", "point " + p.name + " has multiplicity < 1 on " + b.curve});
      if (c.curves[*i].genus * 2 < static_cast<long long>(b.multiplicity) * (b.multiplicity - 1))
        out.push_back({"point-multiplicity", "point " + p.name + " is a multiplicity-" +
                                                 std::to_string(b.multiplicity) + " point of " + b.curve +
                                                 ", more than its genus allows"});
      idx.emplace_back(*i, b.multiplicity);
    }
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y) {
        auto key = std::minmax(idx[x].first, idx[y].first);
        claimed[{key.first, key.second}] += static_cast<long long>(idx[x].second) * idx[y].second;
      }
  }
  for (const auto& [key, total] : claimed) {
    if (key.first == key.second) continue;
    if (total > c.pair(key.first, key.second))
      out.push_back({"point-overcount", c.curves[key.first].name + "." + c.curves[key.second].name + " = " +
                                            std::to_string(c.pair(key.first, key.second)) + " but points claim " +
                                            std::to_string(total)});
  }

  if (c.fibration) {
    for (auto& v : validate_fibration(*c.fibration)) out.push_back(std::move(v));
    bool resolved = true;
    auto check_name = [&](const std::string& name) {
      if (!c.find(name)) {
        resolved = false;
        out.push_back({"fibration-curve", "fibration references unknown curve " + name});
      }
    };
    for (const auto& fiber : c.fibration->fibers)
      for (const auto& comp : fiber.components) check_name(comp);
    for (const auto& s : c.fibration->two_sections) check_name(s);
    if (resolved && c.blowup_count == 0 && c.surface.kind == SurfaceKind::Enriques)
      for (auto& v : two_section_incidence_check(c)) out.push_back(std::move(v));
  }
  return out;
}

IndependenceCertificate independence_certificate(const Configuration& c,
                                                 const std::vector<std::string>& candidates) {
  IndependenceCertificate cert;
  cert.candidates = candidates;
  cert.test_matrix = RatMatrix(candidates.size(), c.curves.size());
  for (std::size_t r = 0; r < candidates.size(); ++r) {
    const std::size_t i = c.index_of(candidates[r]);
    for (std::size_t col = 0; col < c.curves.size(); ++col) cert.test_matrix(r, col) = c.pairing(i, col);
  }
  cert.rank = rank(cert.test_matrix);
  cert.verdict = cert.rank == candidates.size();
  return cert;
}

Violations snc_certificate(const Configuration& c, const std::vector<std::string>& divisor) {
  Violations out;
  std::vector<std::size_t> idx;
  for (const auto& name : divisor) idx.push_back(c.index_of(name));
  std::set<std::size_t> in_divisor(idx.begin(), idx.end());

  for (std::size_t i : idx) {
    const CurveClass& cv = c.curves[i];
    if (cv.genus != 0)
      out.push_back({"singular-component", cv.name + " has arithmetic genus " + std::to_string(cv.genus) +
                                               " and is not a smooth rational component"});
  }

  std::map<std::pair<std::size_t, std::size_t>, long long> accounted;
  for (const auto& p : c.points) {
    std::vector<std::pair<std::size_t, int>> on_divisor;
    for (const auto& b : p.branches) {
      const std::size_t i = c.index_of(b.curve);
      if (in_divisor.count(i)) on_divisor.emplace_back(i, b.multiplicity);
    }
    if (on_divisor.empty()) continue;
    for (const auto& [i, m] : on_divisor)
      if (m > 1)
        out.push_back({"singular-point", "point " + p.name + " is a multiplicity-" + std::to_string(m) +
                                             " point of " + c.curves[i].name});
    if (on_divisor.size() > 2) out.push_back({"triple-point", "point " + p.name + " lies on three or more divisor curves"});
    for (std::size_t x = 0; x < on_divisor.size(); ++x)
      for (std::size_t y = x + 1; y < on_divisor.size(); ++y) {
        auto key = std::minmax(on_divisor[x].first, on_divisor[y].first);
        accounted[{key.first, key.second}] +=
            static_cast<long long>(on_divisor[x].second) * on_divisor[y].second;
      }
  }

  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y) {
      auto key = std::minmax(idx[x], idx[y]);
      const long long want = c.pair(key.first, key.second);
      if (want <= 0) continue;
      auto it = accounted.find({key.first, key.second});
      const std::string pair_name = c.curves[key.first].name + "." + c.curves[key.second].name;
      if (it == accounted.end())
        throw Error(ErrorKind::MissingPointData,
                    pair_name + " = " + std::to_string(want) + " but no intersection point is declared");
      if (it->second != want)
        out.push_back({"unaccounted-intersection", pair_name + " = " + std::to_string(want) +
                                                       " but declared points account for " +
                                                       std::to_string(it->second)});
    }
  return out;
}

std::string export_dot(const Configuration& c) {
  std::ostringstream os;
  os << "graph configuration {\n";
  for (const auto& cv : c.curves) os << "  \"" << cv.name << "\" [label=\"" << cv.name << " (" << cv.self_int << ")\"];\n";
  for (std::size_t i = 0; i < c.curves.size(); ++i)
    for (std::size_t j = i + 1; j < c.curves.size(); ++j)
      for (long long k = 0; k < c.pair(i, j); ++k)
        os << "  \"" << c.curves[i].name << "\" -- \"" << c.curves[j].name << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qgs
