#include "qgsmooth/fibration.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "qgsmooth/config.hpp"

namespace qgs {

namespace {

Error unknown_tag(std::string_view tag) {
  return Error(ErrorKind::UnknownTag, "unknown Kodaira fiber type '" + std::string(tag) + "'");
}

}  // namespace

KodairaType KodairaType::parse(std::string_view tag) {
  if (tag == "II") return {KodairaFamily::II, 0};
  if (tag == "III") return {KodairaFamily::III, 0};
  if (tag == "IV") return {KodairaFamily::IV, 0};
  if (tag == "IV*") return {KodairaFamily::IVStar, 0};
  if (tag == "III*") return {KodairaFamily::IIIStar, 0};
  if (tag == "II*") return {KodairaFamily::IIStar, 0};
  if (tag.size() < 2 || tag.front() != 'I') throw unknown_tag(tag);
  std::string_view digits = tag.substr(1);
  bool star = digits.back() == '*';
  if (star) digits.remove_suffix(1);
  int n = -1;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) throw unknown_tag(tag);
  // I0 is a smooth fiber; I_n* starts at n = 0.
  if (star ? n < 0 : n < 1) throw unknown_tag(tag);
  return {star ? KodairaFamily::InStar : KodairaFamily::In, n};
}

std::string KodairaType::to_string() const {
  switch (family) {
    case KodairaFamily::In: return "I" + std::to_string(n);
    case KodairaFamily::InStar: return "I" + std::to_string(n) + "*";
    case KodairaFamily::II: return "II";
    case KodairaFamily::III: return "III";
    case KodairaFamily::IV: return "IV";
    case KodairaFamily::IVStar: return "IV*";
    case KodairaFamily::IIIStar: return "III*";
    case KodairaFamily::IIStar: return "II*";
  }
  return "?";
}

std::string FiberSpec::tag() const {
  return (multiplicity > 1 ? std::to_string(multiplicity) : std::string()) + type.to_string();
}

FiberSpec parse_fiber_tag(std::string_view tag) {
  FiberSpec f;
  if (tag.size() > 1 && tag.front() == '2') {
    f.multiplicity = 2;
    tag.remove_prefix(1);
  }
  f.type = KodairaType::parse(tag);
  return f;
}

int euler_number(const KodairaType& type) {
  switch (type.family) {
    case KodairaFamily::In: return type.n;
    case KodairaFamily::InStar: return type.n + 6;
    case KodairaFamily::II: return 2;
    case KodairaFamily::III: return 3;
    case KodairaFamily::IV: return 4;
    case KodairaFamily::IVStar: return 8;
    case KodairaFamily::IIIStar: return 9;
    case KodairaFamily::IIStar: return 10;
  }
  return 0;
}

int euler_number(std::string_view tag) { return euler_number(KodairaType::parse(tag)); }

EulerSumResult euler_sum_check(const FibrationData& f, int chi) {
  EulerSumResult r;
  for (const auto& fiber : f.fibers) r.total += euler_number(fiber.type);
  r.expected = 12 * chi;
  r.deficit = r.expected - r.total;
  r.verdict = r.deficit == 0;
  r.unlisted_fibers = r.deficit > 0;
  return r;
}

Violations two_section_incidence_check(const Configuration& c) {
  Violations out;
  if (!c.fibration) return out;
  for (const auto& s : c.fibration->two_sections) {
    const std::size_t si = c.index_of(s);
    for (const auto& fiber : c.fibration->fibers) {
      if (fiber.components.empty()) continue;
      long long sum = 0;
      for (const auto& comp : fiber.components) sum += c.pair(si, c.index_of(comp));
      const long long want = fiber.multiplicity > 1 ? 1 : 2;
      if (sum != want)
        out.push_back({"two-section-incidence",
                       s + " meets the " + fiber.tag() + " fiber with total multiplicity " +
                           std::to_string(sum) + ", expected " + std::to_string(want)});
    }
  }
  return out;
}

std::vector<std::string> i9_forces_i1_lint(const FibrationData& f) {
  const bool has_i9 = std::any_of(f.fibers.begin(), f.fibers.end(), [](const FiberSpec& s) {
    return s.type == KodairaType{KodairaFamily::In, 9};
  });
  if (!has_i9) return {};
  const auto ones = std::count_if(f.fibers.begin(), f.fibers.end(), [](const FiberSpec& s) {
    return s.type == KodairaType{KodairaFamily::In, 1};
  });
  if (ones >= 3) return {};
  return {"an I9 fiber forces three I1 or 2I1 fibers; only " + std::to_string(ones) +
          " declared (configuration may be under-declared)"};
}

Violations validate_fibration(const FibrationData& f) {
  Violations out;
  std::set<std::string> used;
  int multiple = 0;
  for (const auto& fiber : f.fibers) {
    if (fiber.multiplicity != 1 && fiber.multiplicity != 2)
      out.push_back({"fiber-multiplicity", fiber.tag() + " has multiplicity outside {1,2}"});
    if (fiber.multiplicity == 2) {
      ++multiple;
      if (fiber.type.family != KodairaFamily::In)
        out.push_back({"multiple-fiber-type", fiber.tag() + " is multiple but not of type In"});
    }
    for (const auto& comp : fiber.components)
      if (!used.insert(comp).second)
        out.push_back({"fiber-components", comp + " is listed in more than one fiber"});
  }
  if (multiple > 2)
    out.push_back({"multiple-fibers", std::to_string(multiple) + " multiple fibers declared, at most 2 exist"});
  return out;
}

}  // namespace qgs
