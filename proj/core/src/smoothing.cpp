#include "qgsmooth/smoothing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qgs {

bool ContractionPlan::claims_pi1_Z2() const {
  return std::find(assumptions.begin(), assumptions.end(), kPi1IsZ2) != assumptions.end();
}

Chain chain_of(const Configuration& c, const std::vector<std::string>& names) {
  std::vector<int> entries;
  entries.reserve(names.size());
  for (const auto& name : names) {
    const long long s = c.curve(name).self_int;
    if (s > -2 || s < -1000000)
      throw Error(ErrorKind::InvalidChain, name + " has self-intersection " + std::to_string(s));
    entries.push_back(static_cast<int>(-s));
  }
  return Chain(std::move(entries));
}

Violations validate_plan(const Configuration& c, const ContractionPlan& p) {
  Violations out;
  std::map<std::string, std::size_t> owner;
  for (std::size_t k = 0; k < p.chains.size(); ++k) {
    const auto& names = p.chains[k];
    const std::string label = "chain " + std::to_string(k + 1);
    if (names.empty()) {
      out.push_back({"plan-empty-chain", label + " is empty"});
      continue;
    }
    bool resolved = true;
    for (const auto& name : names) {
      if (!c.find(name)) {
        out.push_back({"plan-unknown-curve", label + " names unknown curve " + name});
        resolved = false;
        continue;
      }
      auto [it, fresh] = owner.emplace(name, k);
      if (!fresh)
        out.push_back({"plan-overlap", name + " appears in chain " + std::to_string(it->second + 1) + " and " + label});
    }
    if (!resolved) continue;

    bool linear = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const CurveClass& cv = c.curve(names[i]);
      if (cv.genus != 0) {
        out.push_back({"plan-not-rational", label + ": " + cv.name + " has genus " + std::to_string(cv.genus)});
        linear = false;
      }
      if (cv.self_int > -2) {
        out.push_back({"plan-self-intersection", label + ": " + cv.name + " has C^2 = " + std::to_string(cv.self_int)});
        linear = false;
      }
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        const long long v = c.pair(names[i], names[j]);
        const long long want = j == i + 1 ? 1 : 0;
        if (v != want) {
          out.push_back({"plan-not-linear", label + ": " + names[i] + "." + names[j] + " = " + std::to_string(v) +
                                                ", expected " + std::to_string(want)});
          linear = false;
        }
      }
    }
    if (!linear) continue;
    const Chain chain = chain_of(c, names);
    if (!recognize_class_T(chain))
      out.push_back({"plan-not-class-T", label + " [" + chain.to_string() + "] is not of class T"});
  }
  return out;
}

namespace {

void require_valid(const Configuration& c, const ContractionPlan& p) {
  const Violations v = validate_plan(c, p);
  if (!v.empty()) throw Error(ErrorKind::PlanInvalid, v.front().detail);
}

bool is_contracted(const ContractionPlan& p, std::string_view curve) {
  for (const auto& chain : p.chains)
    if (std::find(chain.begin(), chain.end(), curve) != chain.end()) return true;
  return false;
}

}  // namespace

ContractionInvariants contract_invariants(const Configuration& c, const ContractionPlan& p) {
  require_valid(c, p);
  ContractionInvariants inv;
  inv.K2_X = c.ambient_K2();
  for (const auto& names : p.chains) inv.K2_X += k2_contribution(chain_of(c, names));
  inv.chi = c.surface.chi;
  inv.p_g = inv.chi - 1 + p.q;
  return inv;
}

Rational chain_contact(const Configuration& c, const ContractionPlan& p, std::string_view curve) {
  if (is_contracted(p, curve))
    throw Error(ErrorKind::CurveContracted, std::string(curve) + " is contracted by the plan");
  const std::size_t ci = c.index_of(curve);
  Rational sum;
  for (const auto& names : p.chains) {
    const RatVector a = discrepancies(chain_of(c, names));
    for (std::size_t i = 0; i < names.size(); ++i) {
      const long long meet = c.pair(c.index_of(names[i]), ci);
      if (meet != 0) sum -= a[i] * Rational(meet);
    }
  }
  return sum;
}

Rational pullback_degree(const Configuration& c, const ContractionPlan& p, std::string_view curve) {
  return Rational(c.curve(curve).K_deg) + chain_contact(c, p, curve);
}

AmplenessCertificate ampleness_certificate(const Configuration& c, const ContractionPlan& p) {
  AmplenessCertificate cert;
  cert.verdict = true;
  for (const auto& cv : c.curves) {
    if (is_contracted(p, cv.name)) continue;
    AmpleEntry e;
    e.curve = cv.name;
    e.contact = chain_contact(c, p, cv.name);
    e.degree = Rational(cv.K_deg) + e.contact;
    e.positive = e.degree.sign() > 0;
    cert.verdict = cert.verdict && e.positive;
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

std::string_view to_string(Pi1Verdict v) {
  return v == Pi1Verdict::CriterionSatisfied ? "criterion-satisfied" : "inconclusive";
}

Pi1Report pi1_criterion(const Configuration& c, const ContractionPlan& p) {
  require_valid(c, p);
  Pi1Report r;
  r.gcd = 0;
  for (const auto& names : p.chains) {
    r.indices.push_back(index(chain_of(c, names)));
    r.gcd = boost::multiprecision::gcd(r.gcd, r.indices.back());
  }
  const bool coprime = !r.indices.empty() && r.gcd == 1;
  if (coprime && c.surface.kind == SurfaceKind::Enriques) {
    r.verdict = Pi1Verdict::CriterionSatisfied;
    return r;
  }
  r.verdict = Pi1Verdict::Inconclusive;
  if (!coprime) r.notes.push_back("indices share the factor " + r.gcd.str());
  if (c.surface.kind != SurfaceKind::Enriques) r.notes.push_back("ambient surface is not an Enriques surface");

  std::set<std::string> ends;
  for (const auto& names : p.chains) {
    ends.insert(names.front());
    ends.insert(names.back());
  }
  for (const auto& cv : c.curves) {
    if (cv.genus != 0 || is_contracted(p, cv.name)) continue;
    const std::size_t ci = c.index_of(cv.name);
    long long total = 0;
    std::string met;
    for (const auto& names : p.chains)
      for (const auto& n : names) {
        const long long v = c.pair(ci, c.index_of(n));
        if (v > 0) {
          total += v;
          met = n;
        }
      }
    if (total == 1 && ends.count(met))
      r.notes.push_back(cv.name + " meets only one end curve (" + met + ") of the contracted chains");
  }
  return r;
}

long long moduli_dimension(long long chi, long long K2) { return 10 * chi - 2 * K2; }

TopologyReport topology_report(long long K2, long long chi, bool pi1_is_Z2) {
  if (chi != 1) throw Error(ErrorKind::Domain, "topology report needs chi = 1, got " + std::to_string(chi));
  TopologyReport t;
  t.c2 = 12 - K2;
  t.b2_plus = 1;
  t.b2_minus = 9 - K2;
  if (pi1_is_Z2) {
    CoverTopology cov;
    cov.chi = 2;
    cov.c1_squared = 2 * K2;
    cov.c2 = 24 - 2 * K2;
    cov.b2_plus = 3;
    cov.b2_minus = 19 - 2 * K2;
    cov.sigma = cov.b2_plus - cov.b2_minus;
    cov.sigma_divisible_by_16 = (cov.sigma < 0 ? -cov.sigma : cov.sigma) % 16 == 0;
    cov.target = "3CP²#" + std::to_string(cov.b2_minus) + "CP²bar";
    t.cover = cov;
  }
  return t;
}

std::vector<std::vector<std::string>> extract_chains(const Configuration& c,
                                                     const std::vector<std::string>& curves) {
  std::vector<std::size_t> idx;
  for (const auto& n : curves) idx.push_back(c.index_of(n));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (std::size_t x : idx) {
    adj[x];
    for (std::size_t y : idx) {
      if (x == y) continue;
      const long long v = c.pair(x, y);
      if (v > 1)
        throw Error(ErrorKind::InvalidChain, c.curves[x].name + " and " + c.curves[y].name + " meet more than once");
      if (v == 1) adj[x].push_back(y);
    }
  }

  std::vector<std::vector<std::string>> out;
  std::set<std::size_t> seen;
  for (std::size_t start : idx) {
    if (seen.count(start)) continue;
    // Collect the component, then walk it from its lowest-index end.
    std::vector<std::size_t> comp{start};
    seen.insert(start);
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t y : adj[comp[k]])
        if (seen.insert(y).second) comp.push_back(y);
    std::size_t edges = 0;
    std::vector<std::size_t> ends;
    for (std::size_t x : comp) {
      edges += adj[x].size();
      if (adj[x].size() > 2)
        throw Error(ErrorKind::InvalidChain, c.curves[x].name + " has more than two neighbours");
      if (adj[x].size() <= 1) ends.push_back(x);
    }
    if (edges / 2 != comp.size() - 1)
      throw Error(ErrorKind::InvalidChain, "curves around " + c.curves[start].name + " form a cycle");
    std::size_t cur = *std::min_element(ends.begin(), ends.end());
    std::size_t prev = cur;
    std::vector<std::string> chain;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      chain.push_back(c.curves[cur].name);
      std::size_t next = cur;
      for (std::size_t y : adj[cur])
        if (y != prev) next = y;
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(chain));
  }
  return out;
}

SingularSurfaceReport analyze_plan(const Configuration& c, const ContractionPlan& p) {
  require_valid(c, p);
  SingularSurfaceReport r;
  r.chain_curves = p.chains;
  for (const auto& names : p.chains) {
    r.chains.push_back(chain_of(c, names));
    r.class_t.push_back(*recognize_class_T(r.chains.back()));
    r.contributions.push_back(k2_contribution(r.chains.back()));
  }
  const ContractionInvariants inv = contract_invariants(c, p);
  r.ambient_K2 = c.ambient_K2();
  r.K2_X = inv.K2_X;
  r.chi = inv.chi;
  r.p_g = inv.p_g;
  r.q = p.q;
  r.pi1 = pi1_criterion(c, p);
  r.ampleness = ampleness_certificate(c, p);
  r.general_type = r.K2_X.sign() > 0 && r.ampleness.verdict;
  r.assumptions = p.assumptions;
  if (r.K2_X.is_integer()) {
    const long long k2 = r.K2_X.num().convert_to<long long>();
    r.moduli_dim = moduli_dimension(r.chi, k2);
    if (r.chi == 1 && r.p_g == 0 && r.q == 0) r.topology = topology_report(k2, r.chi, p.claims_pi1_Z2());
  }
  return r;
}

}  // namespace qgs
