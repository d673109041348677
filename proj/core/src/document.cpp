#include "qgsmooth/document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qgs {

namespace {

using Json = nlohmann::ordered_json;

Error schema(const std::string& where, const std::string& what) {
  return Error(ErrorKind::Schema, where + ": " + what);
}

void only_keys(const Json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw schema(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw schema(where, "unknown field '" + key + "'");
  }
}

const Json& required(const Json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw schema(where, std::string("missing required field '") + key + "'");
  return *it;
}

long long as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw schema(where, "expected an integer");
  return v.get<long long>();
}

bool as_bool(const Json& v, const std::string& where) {
  if (!v.is_boolean()) throw schema(where, "expected true or false");
  return v.get<bool>();
}

std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw schema(where, "expected a string");
  return v.get<std::string>();
}

const Json& as_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw schema(where, "expected an array");
  return v;
}

std::vector<std::string> string_list(const Json& v, const std::string& where) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < as_array(v, where).size(); ++i)
    out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Branch> branch_list(const Json& v, const std::string& where) {
  std::vector<Branch> out;
  for (std::size_t i = 0; i < as_array(v, where).size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const Json& b = as_array(v[i], w);
    if (b.size() != 2) throw schema(w, "expected [curve, multiplicity]");
    const long long m = as_int(b[1], w + "[1]");
    if (m < 1 || m > 1000) throw schema(w + "[1]", "multiplicity must be a positive integer");
    out.push_back({as_string(b[0], w + "[0]"), static_cast<int>(m)});
  }
  return out;
}

SurfaceInvariants parse_surface(const Json& j) {
  const std::string w = "surface";
  only_keys(j, w, {"kind", "n", "chi", "K2", "K_num_trivial"});
  const std::string kind = as_string(required(j, w, "kind"), w + ".kind");
  SurfaceInvariants s;
  if (kind == "enriques") {
    s = SurfaceInvariants::enriques();
  } else if (kind == "k3") {
    s = SurfaceInvariants::k3();
  } else if (kind == "e") {
    const long long n = as_int(required(j, w, "n"), w + ".n");
    if (n < 1) throw schema(w + ".n", "E(n) needs n >= 1");
    s = SurfaceInvariants::elliptic(static_cast<int>(n));
  } else if (kind == "other") {
    s.kind = SurfaceKind::Other;
    required(j, w, "chi");
    required(j, w, "K2");
  } else {
    throw schema(w + ".kind", "unknown surface kind '" + kind + "'");
  }
  if (kind != "e" && j.contains("n")) throw schema(w + ".n", "only allowed for kind \"e\"");
  if (j.contains("chi")) s.chi = static_cast<int>(as_int(j["chi"], w + ".chi"));
  if (j.contains("K2")) s.K2 = static_cast<int>(as_int(j["K2"], w + ".K2"));
  if (j.contains("K_num_trivial")) s.K_num_trivial = as_bool(j["K_num_trivial"], w + ".K_num_trivial");
  return s;
}

FibrationData parse_fibration(const Json& j) {
  const std::string w = "fibration";
  only_keys(j, w, {"fibers", "two_sections", "multiple_fiber_disjoint_from", "generic_fiber_class_known"});
  FibrationData f;
  if (j.contains("fibers")) {
    const Json& fibers = as_array(j["fibers"], w + ".fibers");
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      const std::string fw = w + ".fibers[" + std::to_string(i) + "]";
      only_keys(fibers[i], fw, {"type", "components"});
      FiberSpec spec = parse_fiber_tag(as_string(required(fibers[i], fw, "type"), fw + ".type"));
      if (fibers[i].contains("components")) spec.components = string_list(fibers[i]["components"], fw + ".components");
      f.fibers.push_back(std::move(spec));
    }
  }
  if (j.contains("two_sections")) f.two_sections = string_list(j["two_sections"], w + ".two_sections");
  if (j.contains("multiple_fiber_disjoint_from"))
    f.multiple_fiber_disjoint_from = string_list(j["multiple_fiber_disjoint_from"], w + ".multiple_fiber_disjoint_from");
  if (j.contains("generic_fiber_class_known"))
    f.generic_fiber_class_known = as_bool(j["generic_fiber_class_known"], w + ".generic_fiber_class_known");
  return f;
}

std::vector<Chain> chain_list(const Json& v, const std::string& where) {
  std::vector<Chain> out;
  for (std::size_t i = 0; i < as_array(v, where).size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    std::vector<int> entries;
    for (std::size_t k = 0; k < as_array(v[i], w).size(); ++k)
      entries.push_back(static_cast<int>(as_int(v[i][k], w + "[" + std::to_string(k) + "]")));
    try {
      out.emplace_back(std::move(entries));
    } catch (const Error& e) {
      throw schema(w, e.what());
    }
  }
  return out;
}

ExpectedValues parse_expected(const Json& j) {
  const std::string w = "expected";
  only_keys(j, w, {"K2", "indices", "gcd", "blowup_count", "chains", "pi1"});
  ExpectedValues e;
  if (j.contains("K2")) e.K2 = as_int(j["K2"], w + ".K2");
  if (j.contains("indices")) {
    std::vector<long long> idx;
    for (std::size_t i = 0; i < as_array(j["indices"], w + ".indices").size(); ++i)
      idx.push_back(as_int(j["indices"][i], w + ".indices[" + std::to_string(i) + "]"));
    e.indices = std::move(idx);
  }
  if (j.contains("gcd")) e.gcd = as_int(j["gcd"], w + ".gcd");
  if (j.contains("blowup_count")) e.blowup_count = static_cast<int>(as_int(j["blowup_count"], w + ".blowup_count"));
  if (j.contains("chains")) e.chains = chain_list(j["chains"], w + ".chains");
  if (j.contains("pi1")) e.pi1 = as_string(j["pi1"], w + ".pi1");
  return e;
}

void resolve(const std::set<std::string>& names, const std::string& name, const std::string& where) {
  if (!names.count(name)) throw Error(ErrorKind::Name, where + ": unknown curve '" + name + "'");
}

}  // namespace

Document parse_document(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
  }
  only_keys(root, "document",
            {"name", "notes", "surface", "curves", "pairing", "points", "fibration", "blowups", "plan", "expected"});

  Document doc;
  if (root.contains("name")) doc.name = as_string(root["name"], "name");
  if (root.contains("notes")) doc.notes = string_list(root["notes"], "notes");

  Configuration& c = doc.base;
  c.surface = parse_surface(required(root, "document", "surface"));

  const Json& curves = as_array(required(root, "document", "curves"), "curves");
  std::set<std::string> names;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string w = "curves[" + std::to_string(i) + "]";
    only_keys(curves[i], w, {"name", "self", "genus", "Kdeg", "tags"});
    CurveClass cv;
    cv.name = as_string(required(curves[i], w, "name"), w + ".name");
    if (cv.name.empty()) throw schema(w + ".name", "empty curve name");
    cv.self_int = as_int(required(curves[i], w, "self"), w + ".self");
    cv.genus = as_int(required(curves[i], w, "genus"), w + ".genus");
    cv.K_deg = as_int(required(curves[i], w, "Kdeg"), w + ".Kdeg");
    if (curves[i].contains("tags")) cv.tags = string_list(curves[i]["tags"], w + ".tags");
    if (!names.insert(cv.name).second) throw Error(ErrorKind::Name, w + ": curve '" + cv.name + "' declared twice");
    c.add_curve(std::move(cv));
  }

  if (root.contains("pairing")) {
    const Json& pairing = as_array(root["pairing"], "pairing");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < pairing.size(); ++i) {
      const std::string w = "pairing[" + std::to_string(i) + "]";
      const Json& e = as_array(pairing[i], w);
      if (e.size() != 3) throw schema(w, "expected [curveA, curveB, value]");
      const std::string a = as_string(e[0], w + "[0]");
      const std::string b = as_string(e[1], w + "[1]");
      resolve(names, a, w);
      resolve(names, b, w);
      if (a == b) throw schema(w, "self-intersections belong in the curve's \"self\" field");
      const std::size_t ia = c.index_of(a);
      const std::size_t ib = c.index_of(b);
      if (!seen.insert(std::minmax(ia, ib)).second) throw schema(w, "pair " + a + "," + b + " listed twice");
      c.set_pair(ia, ib, as_int(e[2], w + "[2]"));
    }
  }

  if (root.contains("points")) {
    const Json& points = as_array(root["points"], "points");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::string w = "points[" + std::to_string(i) + "]";
      only_keys(points[i], w, {"name", "branches"});
      PointSpec p;
      p.name = as_string(required(points[i], w, "name"), w + ".name");
      p.branches = branch_list(required(points[i], w, "branches"), w + ".branches");
      for (const auto& b : p.branches) resolve(names, b.curve, w);
      c.points.push_back(std::move(p));
    }
  }

  if (root.contains("fibration")) {
    c.fibration = parse_fibration(root["fibration"]);
    for (const auto& fiber : c.fibration->fibers)
      for (const auto& comp : fiber.components) resolve(names, comp, "fibration");
    for (const auto& s : c.fibration->two_sections) resolve(names, s, "fibration.two_sections");
    for (const auto& s : c.fibration->multiple_fiber_disjoint_from)
      resolve(names, s, "fibration.multiple_fiber_disjoint_from");
  }

  // Blow-up labels extend the name space for everything that follows.
  std::set<std::string> all_names = names;
  if (root.contains("blowups")) {
    const Json& steps = as_array(root["blowups"], "blowups");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const std::string w = "blowups[" + std::to_string(i) + "]";
      only_keys(steps[i], w, {"label", "branches", "at"});
      BlowupStep step;
      if (steps[i].contains("label")) step.label = as_string(steps[i]["label"], w + ".label");
      if (steps[i].contains("at")) step.at = as_string(steps[i]["at"], w + ".at");
      step.branches = branch_list(required(steps[i], w, "branches"), w + ".branches");
      for (const auto& b : step.branches) resolve(all_names, b.curve, w);
      const std::string label = step.label.value_or("e" + std::to_string(c.blowup_count + static_cast<int>(i) + 1));
      if (!all_names.insert(label).second) throw Error(ErrorKind::Name, w + ": label '" + label + "' already in use");
      doc.blowups.push_back(std::move(step));
    }
  }

  if (root.contains("plan")) {
    const Json& j = root["plan"];
    only_keys(j, "plan", {"chains", "q", "assumptions", "certificates"});
    ContractionPlan plan;
    const Json& chains = as_array(required(j, "plan", "chains"), "plan.chains");
    for (std::size_t i = 0; i < chains.size(); ++i) {
      const std::string w = "plan.chains[" + std::to_string(i) + "]";
      plan.chains.push_back(string_list(chains[i], w));
      for (const auto& n : plan.chains.back()) resolve(all_names, n, w);
    }
    if (j.contains("q")) plan.q = as_int(j["q"], "plan.q");
    if (j.contains("assumptions")) plan.assumptions = string_list(j["assumptions"], "plan.assumptions");
    if (j.contains("certificates")) {
      const Json& cj = j["certificates"];
      const std::string w = "plan.certificates";
      only_keys(cj, w, {"stage", "candidates", "divisor", "exceptional"});
      CertificateRequest req;
      if (cj.contains("stage")) req.stage = static_cast<int>(as_int(cj["stage"], w + ".stage"));
      if (req.stage < 0 || req.stage > static_cast<int>(doc.blowups.size()))
        throw schema(w + ".stage", "must lie between 0 and the number of blow-ups");
      if (cj.contains("candidates")) req.candidates = string_list(cj["candidates"], w + ".candidates");
      if (cj.contains("divisor")) req.divisor = string_list(cj["divisor"], w + ".divisor");
      if (cj.contains("exceptional")) req.exceptional = as_string(cj["exceptional"], w + ".exceptional");
      for (const auto& n : req.candidates) resolve(all_names, n, w + ".candidates");
      for (const auto& n : req.divisor) resolve(all_names, n, w + ".divisor");
      if (req.exceptional) resolve(all_names, *req.exceptional, w + ".exceptional");
      doc.certificates = std::move(req);
    }
    doc.plan = std::move(plan);
  }

  if (root.contains("expected")) doc.expected = parse_expected(root["expected"]);
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

namespace {

Json branches_json(const std::vector<Branch>& branches) {
  Json out = Json::array();
  for (const auto& b : branches) out.push_back(Json::array({b.curve, b.multiplicity}));
  return out;
}

Json chains_json(const std::vector<Chain>& chains) {
  Json out = Json::array();
  for (const auto& c : chains) out.push_back(c.entries());
  return out;
}

}  // namespace

std::string serialize(const Document& doc) {
  const Configuration& c = doc.base;
  Json root = Json::object();
  if (!doc.name.empty()) root["name"] = doc.name;
  if (!doc.notes.empty()) root["notes"] = doc.notes;

  Json s = Json::object();
  s["kind"] = std::string(to_string(c.surface.kind));
  if (c.surface.kind == SurfaceKind::En) s["n"] = c.surface.n;
  s["chi"] = c.surface.chi;
  s["K2"] = c.surface.K2;
  s["K_num_trivial"] = c.surface.K_num_trivial;
  root["surface"] = s;

  Json curves = Json::array();
  for (const auto& cv : c.curves) {
    Json j = Json::object();
    j["name"] = cv.name;
    j["self"] = cv.self_int;
    j["genus"] = cv.genus;
    j["Kdeg"] = cv.K_deg;
    j["tags"] = cv.tags;
    curves.push_back(std::move(j));
  }
  root["curves"] = std::move(curves);

  Json pairing = Json::array();
  for (std::size_t i = 0; i < c.curves.size(); ++i)
    for (std::size_t j = i + 1; j < c.curves.size(); ++j)
      if (c.pair(i, j) != 0) pairing.push_back(Json::array({c.curves[i].name, c.curves[j].name, c.pair(i, j)}));
  root["pairing"] = std::move(pairing);

  Json points = Json::array();
  for (const auto& p : c.points) points.push_back(Json{{"name", p.name}, {"branches", branches_json(p.branches)}});
  root["points"] = std::move(points);

  if (c.fibration) {
    Json fibers = Json::array();
    for (const auto& f : c.fibration->fibers) {
      Json j = Json::object();
      j["type"] = f.tag();
      if (!f.components.empty()) j["components"] = f.components;
      fibers.push_back(std::move(j));
    }
    Json f = Json::object();
    f["fibers"] = std::move(fibers);
    f["two_sections"] = c.fibration->two_sections;
    f["multiple_fiber_disjoint_from"] = c.fibration->multiple_fiber_disjoint_from;
    f["generic_fiber_class_known"] = c.fibration->generic_fiber_class_known;
    root["fibration"] = std::move(f);
  }

  if (!doc.blowups.empty()) {
    Json steps = Json::array();
    for (const auto& step : doc.blowups) {
      Json j = Json::object();
      if (step.label) j["label"] = *step.label;
      j["branches"] = branches_json(step.branches);
      if (step.at) j["at"] = *step.at;
      steps.push_back(std::move(j));
    }
    root["blowups"] = std::move(steps);
  }

  if (doc.plan) {
    Json p = Json::object();
    p["chains"] = doc.plan->chains;
    p["q"] = doc.plan->q;
    p["assumptions"] = doc.plan->assumptions;
    if (doc.certificates) {
      Json cj = Json::object();
      cj["stage"] = doc.certificates->stage;
      cj["candidates"] = doc.certificates->candidates;
      cj["divisor"] = doc.certificates->divisor;
      if (doc.certificates->exceptional) cj["exceptional"] = *doc.certificates->exceptional;
      p["certificates"] = std::move(cj);
    }
    root["plan"] = std::move(p);
  }

  if (doc.expected) {
    const ExpectedValues& e = *doc.expected;
    Json j = Json::object();
    if (e.K2) j["K2"] = *e.K2;
    if (e.indices) j["indices"] = *e.indices;
    if (e.gcd) j["gcd"] = *e.gcd;
    if (e.blowup_count) j["blowup_count"] = *e.blowup_count;
    if (e.chains) j["chains"] = chains_json(*e.chains);
    if (e.pi1) j["pi1"] = *e.pi1;
    root["expected"] = std::move(j);
  }
  return root.dump(2) + "\n";
}

Configuration parse(std::string_view json_text) {
  Document doc = parse_document(json_text);
  const Violations v = validate(doc.base);
  if (!v.empty()) throw Error(ErrorKind::Validation, v.front().code + ": " + v.front().detail);
  return std::move(doc.base);
}

}  // namespace qgs
