#include "qgsmooth/blowup.hpp"

#include <algorithm>

namespace qgs {

namespace {

bool same_branches(std::vector<Branch> a, std::vector<Branch> b) {
  auto by_name = [](const Branch& x, const Branch& y) {
    return std::tie(x.curve, x.multiplicity) < std::tie(y.curve, y.multiplicity);
  };
  std::sort(a.begin(), a.end(), by_name);
  std::sort(b.begin(), b.end(), by_name);
  return a == b;
}

}  // namespace

Configuration blow_up(const Configuration& c, const BlowupStep& step) {
  std::vector<std::pair<std::size_t, long long>> br;
  for (const auto& b : step.branches) {
    const std::size_t i = c.index_of(b.curve);
    if (b.multiplicity < 1)
      throw Error(ErrorKind::ExcessMultiplicity, "multiplicity of " + b.curve + " must be at least 1");
    for (const auto& [j, m] : br)
      if (j == i) throw Error(ErrorKind::ExcessMultiplicity, b.curve + " appears twice in one blow-up");
    br.emplace_back(i, b.multiplicity);
  }
  for (const auto& [i, m] : br)
    if (c.curves[i].genus < m * (m - 1) / 2)
      throw Error(ErrorKind::NegativeGenus, c.curves[i].name + " has genus " + std::to_string(c.curves[i].genus) +
                                                " and cannot have a point of multiplicity " + std::to_string(m));
  for (std::size_t x = 0; x < br.size(); ++x)
    for (std::size_t y = x + 1; y < br.size(); ++y)
      if (c.pair(br[x].first, br[y].first) < br[x].second * br[y].second)
        throw Error(ErrorKind::ExcessMultiplicity,
                    c.curves[br[x].first].name + "." + c.curves[br[y].first].name + " = " +
                        std::to_string(c.pair(br[x].first, br[y].first)) + " is too small for multiplicities " +
                        std::to_string(br[x].second) + " and " + std::to_string(br[y].second));

  Configuration out = c;
  out.blowup_count += 1;
  const std::string label = step.label.value_or("e" + std::to_string(out.blowup_count));
  if (out.find(label)) throw Error(ErrorKind::Name, "curve name '" + label + "' is already taken");

  for (const auto& [i, m] : br) {
    CurveClass& cv = out.curves[i];
    cv.self_int -= m * m;
    cv.K_deg += m;
    cv.genus -= m * (m - 1) / 2;
    out.pairing(i, i) = cv.self_int;
  }
  for (std::size_t x = 0; x < br.size(); ++x)
    for (std::size_t y = x + 1; y < br.size(); ++y) {
      const auto [i, m] = br[x];
      const auto [j, mp] = br[y];
      out.set_pair(i, j, c.pair(i, j) - m * mp);
    }

  out.add_curve(CurveClass{label, -1, -1, 0, {"exceptional"}});
  const std::size_t e = out.curves.size() - 1;
  for (const auto& [i, m] : br) out.set_pair(i, e, m);

  auto consumed = out.points.end();
  if (step.at) {
    consumed = std::find_if(out.points.begin(), out.points.end(), [&](const PointSpec& p) { return p.name == *step.at; });
    if (consumed == out.points.end()) throw Error(ErrorKind::Name, "no declared point '" + *step.at + "'");
    if (!same_branches(consumed->branches, step.branches))
      throw Error(ErrorKind::Validation, "point '" + *step.at + "' does not lie on exactly the given branches");
  } else {
    consumed = std::find_if(out.points.begin(), out.points.end(),
                            [&](const PointSpec& p) { return same_branches(p.branches, step.branches); });
  }
  if (consumed != out.points.end()) out.points.erase(consumed);
  for (const auto& b : step.branches)
    for (int k = 1; k <= b.multiplicity; ++k) {
      std::string name = label + "." + b.curve;
      if (b.multiplicity > 1) name += "." + std::to_string(k);
      out.points.push_back({std::move(name), {{label, 1}, {b.curve, 1}}});
    }
  return out;
}

Configuration apply_blowups(const Configuration& c, const std::vector<BlowupStep>& steps) {
  Configuration cur = c;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    try {
      cur = blow_up(cur, steps[k]);
    } catch (const Error& err) {
      throw Error(err.kind(), "blow-up step " + std::to_string(k + 1) + ": " + err.what());
    }
  }
  return cur;
}

}  // namespace qgs
