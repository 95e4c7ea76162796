#include "hgc/criteria.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "hgc/catalog.hpp"
#include "hgc/construct.hpp"
#include "hgc/iso.hpp"

namespace hgc {

namespace {

// Subgroup classes of g, memoized per group object.
const std::vector<std::vector<Subgroup>>& classes_of(const GroupPtr& g) {
  static std::mutex mu;
  static std::deque<std::pair<GroupPtr, std::vector<std::vector<Subgroup>>>> memo;
  std::lock_guard lock(mu);
  for (const auto& [k, v] : memo)
    if (k.get() == g.get() || k->table() == g->table()) return v;
  memo.emplace_back(g, subgroup_classes(*g, all_subgroups(*g)));
  return memo.back().second;
}

std::vector<Subgroup> class_reps_of_order(const GroupPtr& g, std::size_t order) {
  std::vector<Subgroup> out;
  for (const auto& cls : classes_of(g))
    if (cls.front().size() == order) out.push_back(cls.front());
  return out;
}

GroupPtr identify_or_self(const AbstractGroup& g) {
  if (catalog_supported(g.order()) || g.order() <= 60)
    if (auto e = identify(g)) return e;
  return std::make_shared<AbstractGroup>(g);
}

bool same_type(const GroupPtr& a, const GroupPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->catalog_id && b->catalog_id) return *a->catalog_id == *b->catalog_id;
  return are_isomorphic(*a, *b);
}

// No nontrivial normal subgroup of g fits inside a subgroup of index d.
bool core_free_by_order(const AbstractGroup& g, std::size_t d) {
  const std::size_t sub_order = g.order() / d;
  for (const auto& m : normal_subgroups(g))
    if (m.size() > 1 && sub_order % m.size() == 0) return false;
  return true;
}

Certificate conclusion(std::string rule, Verdict v, GroupPtr g, Subgroup sub, GroupPtr n) {
  Certificate c;
  c.rule = std::move(rule);
  c.verdict = v;
  c.g = std::move(g);
  c.sub = std::move(sub);
  c.n = std::move(n);
  return c;
}

std::string type_list(const std::vector<GroupPtr>& types) {
  std::set<std::string> names;
  for (const auto& t : types) names.insert(t ? t->display_name() : "?");
  std::string s;
  for (const auto& x : names) s += (s.empty() ? "" : ",") + x;
  return s;
}

}  // namespace

std::string group_label(const AbstractGroup& g) {
  if (!g.names.empty() || g.catalog_id) return g.display_name();
  if (catalog_supported(g.order()))
    if (auto e = identify(g)) return e->display_name();
  return "order-" + std::to_string(g.order()) + " group";
}

std::string subgroup_string(const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::optional<Certificate> order_rule(GroupPtr g, const Subgroup& sub, GroupPtr n) {
  if (sub.empty() || n->order() * sub.size() != g->order()) return std::nullopt;
  const auto hol = holomorph(n);
  if (hol->hol_order % g->order() == 0) return std::nullopt;
  Certificate c = conclusion("order_rule", Verdict::RuledOut, g, sub, n);
  c.facts["order_G"] = std::to_string(g->order());
  c.facts["order_hol_N"] = std::to_string(hol->hol_order);
  c.facts["index"] = std::to_string(n->order());
  return c;
}

std::optional<Certificate> solvable_rule(GroupPtr g, const Subgroup& sub, GroupPtr n) {
  if (sub.empty() || n->order() * sub.size() != g->order()) return std::nullopt;
  if (is_solvable(*g)) return std::nullopt;
  const auto hol = holomorph(n);
  if (!is_solvable(hol->hol)) return std::nullopt;
  Certificate c = conclusion("solvable_rule", Verdict::RuledOut, g, sub, n);
  c.facts["G_solvable"] = "false";
  c.facts["hol_N_solvable"] = "true";
  c.facts["order_hol_N"] = std::to_string(hol->hol_order);
  return c;
}

Certificate direct_search(GroupPtr g, const Subgroup& sub, GroupPtr n, std::uint64_t budget, std::size_t gp_cap) {
  const std::size_t d = g->order() / sub.size();
  const bool core_free = is_core_free(*g, sub);
  if ((gp_cap && d <= gp_cap && d > 1) || !core_free) {
    if (d > 10) throw Error("direct_search: G' is not core-free and the degree is above 10");
    const auto structs = gp_enumerate(g, sub, std::max<std::size_t>(kGpDegreeCap, std::min<std::size_t>(gp_cap, 10)));
    std::vector<GroupPtr> types;
    std::size_t hits = 0;
    for (const auto& s : structs) {
      types.push_back(s.type);
      if (s.type && same_type(s.type, n)) ++hits;
    }
    Certificate c = conclusion("direct_search", hits ? Verdict::Occurs : Verdict::RuledOut, g, sub, n);
    c.facts["method"] = "gp_enumerate";
    c.facts["degree"] = std::to_string(d);
    c.facts["structures"] = std::to_string(structs.size());
    c.facts["types"] = type_list(types);
    c.facts["structures_of_type"] = std::to_string(hits);
    return c;
  }
  auto r = byott_exists(g, sub, n, budget);
  Certificate c = conclusion("direct_search", r.verdict, g, sub, n);
  c.facts["method"] = "byott_exists";
  c.facts["constraint"] = to_string(sub.size() == 1 ? Constraint::Regular : Constraint::StabilizerMatches);
  c.facts["hol_order"] = std::to_string(r.hol_order);
  c.facts["nodes"] = std::to_string(r.nodes);
  c.facts["budget"] = std::to_string(budget);
  c.facts["result"] = r.verdict == Verdict::Occurs ? "found" : r.verdict == Verdict::RuledOut ? "exhausted" : "budget";
  c.witness = std::move(r.witness);
  return c;
}

Certificate almost_classical(GroupPtr g, const Subgroup& sub, const Subgroup& complement) {
  const GroupPtr h = identify_or_self(subgroup_as_group(*g, complement));
  Certificate c = conclusion("almost_classical", Verdict::Occurs, g, sub, h);
  c.aux = complement;
  c.facts["complement"] = subgroup_string(complement);
  c.facts["complement_type"] = group_label(*h);
  c.facts["index"] = std::to_string(complement.size());
  return c;
}

Certificate classical(GroupPtr g, GroupPtr n) {
  const auto phi = find_isomorphism(*g, *n);
  if (!phi) throw Error("classical: G and N are not isomorphic");
  Certificate c = conclusion("classical", Verdict::Occurs, g, Subgroup{0}, n);
  c.facts["isomorphic"] = "true";
  const auto lambda = left_regular_perms(*n);
  Embedding e;
  e.domain = g;
  e.generators = generating_sequence(*g);
  e.constraint = Constraint::Regular;
  for (Elem x : e.generators) e.images.push_back(lambda[(*phi)[x]]);
  for (std::size_t x = 0; x < g->order(); ++x) e.images_all.push_back(lambda[(*phi)[x]]);
  c.witness = std::move(e);
  return c;
}

std::optional<Certificate> kktu_at(GroupPtr g, GroupPtr n, std::size_t d, const RuleOptions& options,
                                   const std::optional<Subgroup>& chosen_sub) {
  const std::size_t order = g->order();
  if (n->order() != order || d <= 1 || d >= order || order % d) return std::nullopt;
  const auto np = unique_normal_of_index(*n, d);
  if (!np) return std::nullopt;
  const GroupPtr q = identify_or_self(quotient(*n, *np));

  Certificate c = conclusion("kktu_rule", Verdict::RuledOut, g, Subgroup{0}, n);
  c.aux = *np;
  c.facts["d"] = std::to_string(d);
  c.facts["normal_subgroup"] = subgroup_string(*np);
  c.facts["quotient_type"] = group_label(*q);

  std::vector<Subgroup> reps;
  bool enumerated = false;
  auto enumerate = [&] {
    if (!enumerated) reps = class_reps_of_order(g, order / d);
    enumerated = true;
  };
  if (chosen_sub) {
    if (chosen_sub->size() * d != order || !is_subgroup(*g, *chosen_sub)) return std::nullopt;
  } else {
    enumerate();
    if (reps.empty()) return std::nullopt;
  }
  if (core_free_by_order(*g, d)) {
    c.facts["core_free"] = "by_order";
  } else {
    enumerate();
    for (const auto& s : reps)
      if (!is_core_free(*g, s)) return std::nullopt;
    if (chosen_sub && !is_core_free(*g, *chosen_sub)) return std::nullopt;
    c.facts["core_free"] = "by_classes";
  }
  const Subgroup rep = chosen_sub ? *chosen_sub : reps.front();
  if (auto o = order_rule(g, rep, q)) {
    c.facts["method"] = "order_rule";
    c.premises.push_back(std::move(*o));
    return c;
  }
  if (auto s = solvable_rule(g, rep, q)) {
    c.facts["method"] = "solvable_rule";
    c.premises.push_back(std::move(*s));
    return c;
  }
  enumerate();
  for (const auto& s : reps) {
    Certificate sub = direct_search(g, s, q, options.budget, options.gp_cap);
    if (sub.verdict != Verdict::RuledOut) return std::nullopt;
    c.premises.push_back(std::move(sub));
  }
  c.facts["method"] = "per_class";
  c.facts["classes"] = std::to_string(reps.size());
  return c;
}

std::optional<Certificate> kktu_rule(GroupPtr g, GroupPtr n, const RuleOptions& options) {
  const std::size_t order = n->order();
  std::vector<std::size_t> ds;
  for (auto p : prime_factors(order))
    if (auto s = sylow_normal(*n, p); s && s->size() < order) ds.push_back(order / s->size());
  std::sort(ds.begin(), ds.end());
  const std::size_t sylow_count = ds.size();
  for (std::size_t d = 2; d < order; ++d)
    if (order % d == 0 && std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (auto c = kktu_at(g, n, ds[i], options)) {
      c->facts["choice"] = i < sylow_count ? "normal_sylow" : "ascending_d";
      return c;
    }
  return std::nullopt;
}

ClassificationReport classify_impl(GroupPtr g, const ClassifyOptions& options, bool top);

std::vector<Certificate> induced_rule(GroupPtr g, const RuleOptions& options) {
  const std::size_t order = g->order();
  const auto& types = group_list(order);
  std::vector<std::optional<Certificate>> by_type(types.size());
  ClassifyOptions sub_opts;
  sub_opts.budget = options.budget;
  sub_opts.witnesses = false;
  sub_opts.alternates = false;
  for (const auto& cls : classes_of(g)) {
    const Subgroup& s = cls.front();
    if (s.size() <= 1 || s.size() >= order) continue;
    const auto complements = normal_complements(*g, s);
    if (complements.empty()) continue;
    // Types occurring for G' as a Galois group.
    const GroupPtr gs = std::make_shared<AbstractGroup>(subgroup_as_group(*g, s));
    std::vector<Certificate> n2s;
    if (catalog_supported(s.size())) {
      for (auto& t : classify_impl(gs, sub_opts, false).types)
        if (t.status == Verdict::Occurs) n2s.push_back(std::move(t.certificate));
    } else {
      n2s.push_back(classical(gs, gs));
    }
    for (const auto& h : complements) {
      const Certificate ac = almost_classical(g, s, h);
      for (const auto& n2 : n2s) {
        const AbstractGroup prod = direct_product(*ac.n, *n2.n);
        std::size_t idx = 0;
        while (idx < types.size() && !(types[idx]->fingerprint() == prod.fingerprint() &&
                                        are_isomorphic(*types[idx], prod)))
          ++idx;
        if (idx == types.size()) throw Error("induced_rule: product type missing from catalog");
        if (by_type[idx]) continue;
        Certificate c = conclusion("induced", Verdict::Occurs, g, Subgroup{0}, types[idx]);
        c.aux = h;
        c.facts["subgroup"] = subgroup_string(s);
        c.facts["complement"] = subgroup_string(h);
        c.facts["n1"] = group_label(*ac.n);
        c.facts["n2"] = group_label(*n2.n);
        c.facts["product_type"] = types[idx]->display_name();
        c.premises = {ac, n2};
        by_type[idx] = std::move(c);
      }
    }
  }
  std::vector<Certificate> out;
  for (auto& c : by_type)
    if (c) out.push_back(std::move(*c));
  return out;
}

std::optional<Certificate> holomorph_transfer_rule(GroupPtr g, GroupPtr n2, const Certificate& decided) {
  const GroupPtr n1 = decided.n;
  if (decided.verdict == Verdict::Inconclusive || n1->order() != n2->order() || n1->order() > 60)
    return std::nullopt;
  if (holomorph(n1)->hol_order != holomorph(n2)->hol_order) return std::nullopt;
  if (!holomorph_equal(*n1, *n2)) return std::nullopt;
  Certificate c = conclusion("holomorph_transfer", decided.verdict, g, decided.sub, n2);
  c.facts["source"] = group_label(*n1);
  c.facts["holomorph_equal"] = "true";
  c.facts["hol_order"] = std::to_string(holomorph(n2)->hol_order);
  c.premises.push_back(decided);
  return c;
}

Certificate cyclic_rule(std::size_t n, bool alternating) {
  if (n != 5 && n != 6) throw Error("cyclic_rule: only n = 5 and n = 6 are supported");
  const auto elems = alternating ? alternating_elements(n) : symmetric_elements(n);
  auto gm = std::make_shared<AbstractGroup>(AbstractGroup::from_perms(elems));
  gm->names = {(alternating ? "A" : "S") + std::to_string(n)};
  Subgroup stab;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i](static_cast<Point>(n - 1)) == n - 1) stab.push_back(static_cast<Elem>(i));
  auto cyc = std::make_shared<AbstractGroup>(cyclic(elems.size()));
  cyc->names = {"C" + std::to_string(elems.size())};
  auto c = kktu_at(gm, cyc, n, {}, stab);
  if (!c || c->facts.at("method") != "order_rule") throw Error("cyclic_rule: argument did not close");
  c->facts["choice"] = "point_stabilizer";
  return *c;
}

bool ClassificationReport::any_inconclusive() const {
  return std::any_of(types.begin(), types.end(), [](const TypeReport& t) { return t.status == Verdict::Inconclusive; });
}

std::vector<GroupPtr> ClassificationReport::with_status(Verdict v) const {
  std::vector<GroupPtr> out;
  for (const auto& t : types)
    if (t.status == v) out.push_back(t.type);
  return out;
}

ClassificationReport classify_impl(GroupPtr g, const ClassifyOptions& options, bool top) {
  const std::size_t order = g->order();
  if (!catalog_supported(order)) throw Error("classify: unsupported order " + std::to_string(order));
  const auto& types = catalog(order);
  const RuleOptions ropts{options.budget, kGpDegreeCap};
  const auto induced = induced_rule(g, ropts);

  ClassificationReport report;
  report.group = g;
  report.order = order;
  std::vector<std::vector<Certificate>> cands(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    const GroupPtr& n = types[i];
    auto& list = cands[i];
    if (are_isomorphic(*g, *n)) list.push_back(classical(g, n));
    for (const auto& c : induced)
      if (c.n.get() == n.get()) list.push_back(c);
    const bool occurs = !list.empty();
    if (occurs && !options.alternates) continue;
    if (auto c = order_rule(g, Subgroup{0}, n)) list.push_back(std::move(*c));
    if (auto c = solvable_rule(g, Subgroup{0}, n)) list.push_back(std::move(*c));
    if (!occurs && (options.alternates || list.empty()))
      if (auto c = kktu_rule(g, n, ropts)) list.push_back(std::move(*c));
    if (occurs && list.size() > 1)
      for (const auto& c : list)
        if (c.verdict == Verdict::RuledOut)
          throw Error("classify: rule " + c.rule + " contradicts an occurrence of " + n->display_name());
  }

  // Second pass: holomorph transfer.
  for (std::size_t i = 0; i < types.size(); ++i) {
    const bool undecided = cands[i].empty();
    if (!undecided && (!options.alternates || types[i]->order() > 24)) continue;
    for (std::size_t j = 0; j < types.size(); ++j) {
      if (j == i || cands[j].empty() || cands[j].front().rule == "holomorph_transfer") continue;
      if (auto t = holomorph_transfer_rule(g, types[i], cands[j].front())) {
        cands[i].push_back(std::move(*t));
        break;
      }
    }
  }

  for (std::size_t i = 0; i < types.size(); ++i) {
    TypeReport t;
    t.type = types[i];
    if (cands[i].empty()) cands[i].push_back(direct_search(g, Subgroup{0}, types[i], options.budget));
    t.certificate = std::move(cands[i].front());
    t.alternates.assign(std::make_move_iterator(cands[i].begin() + 1), std::make_move_iterator(cands[i].end()));
    t.status = t.certificate.verdict;
    for (const auto& a : t.alternates)
      if (a.verdict != t.status) throw Error("classify: conflicting certificates for " + types[i]->display_name());
    if (t.status == Verdict::Occurs && options.witnesses) {
      if (t.certificate.witness) {
        t.witness = t.certificate.witness;
      } else {
        auto r = byott_exists(g, Subgroup{0}, types[i], options.budget);
        if (r.verdict == Verdict::RuledOut)
          throw Error("classify: no witness exists for occurring type " + types[i]->display_name());
        t.witness = std::move(r.witness);
      }
    }
    report.types.push_back(std::move(t));
  }
  (void)top;
  return report;
}

ClassificationReport classify(GroupPtr g, const ClassifyOptions& options) { return classify_impl(g, options, true); }

void for_each_node(const Certificate& c, const std::function<void(const Certificate&)>& f) {
  f(c);
  for (const auto& p : c.premises) for_each_node(p, f);
}

namespace {

bool fail(std::string* why, const Certificate& c, const std::string& msg) {
  if (why) *why = c.rule + " (N = " + (c.n ? group_label(*c.n) : "?") + "): " + msg;
  return false;
}

bool facts_match(const Certificate& c, const Certificate& redo, std::string* why) {
  if (redo.facts != c.facts) return fail(why, c, "recomputed facts differ");
  if (redo.verdict != c.verdict) return fail(why, c, "recomputed verdict differs");
  return true;
}

bool fact_is(const Certificate& c, const std::string& key, const std::string& value, std::string* why) {
  const auto it = c.facts.find(key);
  if (it == c.facts.end() || it->second != value) return fail(why, c, "fact " + key + " does not match");
  return true;
}

bool same_conclusion_group(const Certificate& a, const Certificate& b) {
  return a.g.get() == b.g.get() || a.g->table() == b.g->table();
}

}  // namespace

bool verify_certificate(const Certificate& c, std::string* why) {
  if (!c.g || !c.n) return fail(why, c, "missing conclusion");
  if (c.sub.empty() || !is_subgroup(*c.g, c.sub)) return fail(why, c, "G' is not a subgroup");
  if (c.rule != "kktu_rule" && c.n->order() * c.sub.size() != c.g->order())
    return fail(why, c, "|N| differs from [G:G']");
  for (const auto& p : c.premises)
    if (!verify_certificate(p, why)) return false;

  if (c.rule == "order_rule" || c.rule == "solvable_rule") {
    const auto redo = c.rule == "order_rule" ? order_rule(c.g, c.sub, c.n) : solvable_rule(c.g, c.sub, c.n);
    if (!redo) return fail(why, c, "rule no longer applies");
    if (c.rule == "order_rule" && holomorph(c.n)->hol.order() % c.g->order() == 0)
      return fail(why, c, "|G| divides |Hol(N)|");
    return facts_match(c, *redo, why);
  }
  if (c.rule == "classical") {
    if (!are_isomorphic(*c.g, *c.n) || c.verdict != Verdict::Occurs) return fail(why, c, "G is not isomorphic to N");
    if (c.facts.size() != 1 || !fact_is(c, "isomorphic", "true", why)) return fail(why, c, "unexpected facts");
    if (c.witness && !verify_embedding(*c.witness, holomorph(c.n)->hol, Constraint::Regular))
      return fail(why, c, "witness embedding rejected");
    return true;
  }
  if (c.rule == "almost_classical") {
    const auto& h = c.aux;
    if (!is_subgroup(*c.g, h) || !is_normal(*c.g, h) || intersection(h, c.sub).size() != 1 ||
        h.size() * c.sub.size() != c.g->order())
      return fail(why, c, "complement check failed");
    if (!are_isomorphic(subgroup_as_group(*c.g, h), *c.n)) return fail(why, c, "complement type differs");
    return facts_match(c, almost_classical(c.g, c.sub, h), why);
  }
  if (c.rule == "induced") {
    if (c.premises.size() != 2) return fail(why, c, "expected two premises");
    const auto& ac = c.premises[0];
    const auto& n2 = c.premises[1];
    if (ac.rule != "almost_classical" || ac.aux != c.aux || !same_conclusion_group(ac, c) ||
        c.facts.at("subgroup") != subgroup_string(ac.sub))
      return fail(why, c, "first premise is not the almost classical structure on G'");
    if (n2.verdict != Verdict::Occurs || n2.sub.size() != 1 ||
        !are_isomorphic(*n2.g, subgroup_as_group(*c.g, ac.sub)))
      return fail(why, c, "second premise is not an occurrence for G'");
    if (!are_isomorphic(direct_product(*ac.n, *n2.n), *c.n)) return fail(why, c, "N is not N1 x N2");
    if (!fact_is(c, "complement", subgroup_string(c.aux), why) || !fact_is(c, "n1", group_label(*ac.n), why) ||
        !fact_is(c, "n2", group_label(*n2.n), why) || !fact_is(c, "product_type", c.n->display_name(), why))
      return false;
    return c.verdict == Verdict::Occurs || fail(why, c, "verdict must be occurs");
  }
  if (c.rule == "kktu_rule") {
    const std::size_t d = std::stoul(c.facts.at("d"));
    const std::size_t order = c.g->order();
    if (c.n->order() != order || c.sub.size() != 1 || c.verdict != Verdict::RuledOut)
      return fail(why, c, "bad conclusion");
    const auto np = unique_normal_of_index(*c.n, d);
    if (!np || *np != c.aux) return fail(why, c, "N' is not the unique normal subgroup of index d");
    if (c.premises.empty()) return fail(why, c, "no premises");
    const AbstractGroup q = quotient(*c.n, *np);
    if (!fact_is(c, "normal_subgroup", subgroup_string(*np), why) || !fact_is(c, "quotient_type", group_label(q), why))
      return false;
    static const std::set<std::string> choices{"normal_sylow", "ascending_d", "point_stabilizer"};
    if (!c.facts.count("choice") || !choices.count(c.facts.at("choice"))) return fail(why, c, "unknown choice");
    for (const auto& p : c.premises) {
      if (!same_conclusion_group(p, c) || p.sub.size() * d != order) return fail(why, c, "premise is not on a degree-d subextension");
      if (p.verdict != Verdict::RuledOut) return fail(why, c, "premise does not rule out N/N'");
      if (!are_isomorphic(*p.n, q)) return fail(why, c, "premise type is not N/N'");
    }
    const std::string& cf = c.facts.at("core_free");
    std::vector<Subgroup> reps;
    bool have_reps = false;
    if (cf == "by_order") {
      if (!core_free_by_order(*c.g, d)) return fail(why, c, "core-freeness by order fails");
    } else {
      reps = class_reps_of_order(c.g, order / d);
      have_reps = true;
      for (const auto& s : reps)
        if (!is_core_free(*c.g, s)) return fail(why, c, "an index-d subgroup is not core-free");
    }
    const std::string& method = c.facts.at("method");
    if (method == "order_rule" || method == "solvable_rule") {
      if (c.premises.size() != 1 || c.premises[0].rule != method) return fail(why, c, "premise rule mismatch");
      return true;
    }
    if (method != "per_class") return fail(why, c, "unknown method");
    if (!have_reps) reps = class_reps_of_order(c.g, order / d);
    if (reps.size() != c.premises.size() || !fact_is(c, "classes", std::to_string(reps.size()), why))
      return fail(why, c, "premises do not cover every class of index d");
    for (const auto& cls : classes_of(c.g)) {
      if (cls.front().size() * d != order) continue;
      std::size_t hits = 0;
      for (const auto& p : c.premises)
        if (std::binary_search(cls.begin(), cls.end(), p.sub)) ++hits;
      if (hits != 1) return fail(why, c, "a class of index d is not covered exactly once");
    }
    return true;
  }
  if (c.rule == "direct_search") {
    const std::string& method = c.facts.at("method");
    if (method == "gp_enumerate") return facts_match(c, direct_search(c.g, c.sub, c.n, 0, 10), why);
    const Constraint k = c.sub.size() == 1 ? Constraint::Regular : Constraint::StabilizerMatches;
    const auto hol = holomorph(c.n);
    if (method != "byott_exists") return fail(why, c, "unknown method");
    if (std::to_string(hol->hol_order) != c.facts.at("hol_order")) return fail(why, c, "holomorph order differs");
    if (!fact_is(c, "constraint", to_string(k), why)) return false;
    const char* result = c.verdict == Verdict::Occurs ? "found" : c.verdict == Verdict::RuledOut ? "exhausted" : "budget";
    if (!fact_is(c, "result", result, why)) return false;
    if (c.verdict == Verdict::Occurs) {
      if (!c.witness || !verify_embedding(*c.witness, hol->hol, k, c.sub)) return fail(why, c, "witness rejected");
      return true;
    }
    if (c.verdict == Verdict::RuledOut) {
      const auto redo = byott_exists(c.g, c.sub, c.n, 0);
      if (redo.verdict != Verdict::RuledOut) return fail(why, c, "search no longer exhausts");
      if (std::to_string(redo.nodes) != c.facts.at("nodes")) return fail(why, c, "node count differs");
    }
    return true;
  }
  if (c.rule == "holomorph_transfer") {
    if (c.premises.size() != 1) return fail(why, c, "expected one premise");
    const auto& p = c.premises[0];
    if (p.verdict != c.verdict || p.sub != c.sub || !same_conclusion_group(p, c))
      return fail(why, c, "premise conclusion mismatch");
    if (!holomorph_equal(*p.n, *c.n)) return fail(why, c, "holomorphs differ");
    if (!fact_is(c, "source", group_label(*p.n), why) || !fact_is(c, "holomorph_equal", "true", why) ||
        !fact_is(c, "hol_order", std::to_string(holomorph(c.n)->hol_order), why))
      return false;
    return true;
  }
  return fail(why, c, "unknown rule");
}

bool verify_report(const ClassificationReport& r, std::string* why) {
  const auto& types = catalog(r.order);
  if (r.types.size() != types.size()) {
    if (why) *why = "report does not cover the catalog";
    return false;
  }
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& t = r.types[i];
    if (t.type.get() != types[i].get() || t.certificate.n.get() != types[i].get() || t.certificate.verdict != t.status) {
      if (why) *why = "entry " + std::to_string(i) + " is inconsistent";
      return false;
    }
    if (t.status == Verdict::Occurs && t.witness &&
        !verify_embedding(*t.witness, holomorph(t.type)->hol, Constraint::Regular)) {
      if (why) *why = "witness for " + t.type->display_name() + " rejected";
      return false;
    }
    if (!verify_certificate(t.certificate, why)) return false;
    for (const auto& a : t.alternates)
      if (a.verdict != t.status || !verify_certificate(a, why)) return false;
  }
  return true;
}

}  // namespace hgc
