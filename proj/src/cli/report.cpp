#include <sstream>

#include "hgc/cli.hpp"

namespace hgc::cli {

using nlohmann::json;

std::string type_id(const AbstractGroup& g) {
  if (g.catalog_id) return *g.catalog_id;
  return group_label(g);
}

json embedding_json(const Embedding& e) {
  json j;
  j["constraint"] = to_string(e.constraint);
  j["generators"] = e.generators;
  json imgs = json::array();
  for (const auto& p : e.images) imgs.push_back(p.to_cycle_string());
  j["images"] = std::move(imgs);
  return j;
}

json certificate_json(const Certificate& c) {
  json j;
  j["rule"] = c.rule;
  j["verdict"] = to_string(c.verdict);
  j["G"] = group_label(*c.g);
  j["G_prime"] = subgroup_string(c.sub);
  j["N"] = type_id(*c.n);
  j["facts"] = c.facts;
  if (!c.premises.empty()) {
    json ps = json::array();
    for (const auto& p : c.premises) ps.push_back(certificate_json(p));
    j["premises"] = std::move(ps);
  }
  if (c.witness) j["witness"] = embedding_json(*c.witness);
  return j;
}

json report_json(const ClassificationReport& r, const std::string& group_text) {
  json j;
  j["group"] = group_text;
  j["order"] = r.order;
  json types = json::array();
  for (const auto& t : r.types) {
    json e;
    e["id"] = type_id(*t.type);
    e["names"] = t.type->names;
    e["status"] = to_string(t.status);
    e["certificate"] = certificate_json(t.certificate);
    if (t.witness) e["witness"] = embedding_json(*t.witness);
    if (!t.alternates.empty()) {
      json alts = json::array();
      for (const auto& a : t.alternates) alts.push_back(certificate_json(a));
      e["alternates"] = std::move(alts);
    }
    types.push_back(std::move(e));
  }
  j["types"] = std::move(types);
  return j;
}

std::string explain(const Certificate& c, int indent) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad << c.rule << " -> " << to_string(c.verdict) << "  [G=" << group_label(*c.g)
     << ", |G'|=" << c.sub.size() << ", N=" << group_label(*c.n) << "]\n";
  for (const auto& [k, v] : c.facts) os << pad << "  " << k << " = " << v << "\n";
  if (c.witness) os << pad << "  witness: " << c.witness->images.size() << " generator images\n";
  for (const auto& p : c.premises) os << explain(p, indent + 1);
  return os.str();
}

}  // namespace hgc::cli
