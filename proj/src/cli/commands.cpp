#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "hgc/catalog.hpp"
#include "hgc/cli.hpp"
#include "hgc/hgs.hpp"

namespace hgc::cli {

namespace {

struct StoreGuard {
  explicit StoreGuard(AutStore* s) { set_aut_store(s); }
  ~StoreGuard() { set_aut_store(nullptr); }
  StoreGuard(const StoreGuard&) = delete;
  StoreGuard& operator=(const StoreGuard&) = delete;
};

GroupPtr build(const std::string& text, std::string* canonical = nullptr) {
  const GroupExpr e = parse_group_expr(text);
  if (canonical) *canonical = e.to_string();
  auto g = std::make_shared<AbstractGroup>(construct(e));
  if (g->names.empty() && !g->catalog_id) g->names = {e.to_string()};
  return g;
}

void print_generators(std::ostream& out, const PermGroup& g) {
  for (const auto& p : g.generators()) out << "  " << p.to_cycle_string() << "\n";
}

int cmd_catalog(std::ostream& out, std::size_t order, bool as_json) {
  const auto& list = catalog(order);
  if (as_json) {
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : list) {
      nlohmann::json e;
      e["id"] = *g->catalog_id;
      e["names"] = g->names;
      e["structure"] = g->structure;
      e["fingerprint"] = g->fingerprint().to_string();
      groups.push_back(std::move(e));
    }
    nlohmann::json j;
    j["order"] = order;
    j["groups"] = std::move(groups);
    out << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& g : list) {
    std::string names;
    for (const auto& n : g->names) names += (names.empty() ? "" : " = ") + n;
    out << std::left << std::setw(9) << *g->catalog_id << std::setw(14) << (names.empty() ? "-" : names)
        << g->fingerprint().to_string() << "\n";
  }
  return 0;
}

int cmd_aut(std::ostream& out, const std::string& text) {
  std::string canon;
  const GroupPtr g = build(text, &canon);
  const PermGroup a = automorphisms(*g);
  out << "group " << canon << " (order " << g->order() << ")\n";
  out << "aut order " << a.order() << "\n";
  out << "generators (acting on element indices):\n";
  print_generators(out, a);
  return 0;
}

int cmd_hol(std::ostream& out, const std::string& text) {
  std::string canon;
  const GroupPtr g = build(text, &canon);
  const auto h = holomorph(g);
  out << "group " << canon << " (order " << g->order() << ")\n";
  out << "aut order " << h->aut_order << "\n";
  out << "hol order " << h->hol_order << "\n";
  out << "generators (acting on element indices):\n";
  print_generators(out, h->hol);
  return 0;
}

int cmd_holeq(std::ostream& out, const std::string& a, const std::string& b) {
  const GroupPtr g1 = build(a), g2 = build(b);
  out << (holomorph_equal(*g1, *g2) ? "true" : "false") << "\n";
  return 0;
}

GroupPtr parse_hol_target(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.rfind("hol(", 0) != 0 || t.back() != ')')
    throw ParseError("target must be written hol(<expr>)", 0);
  return build(t.substr(4, t.size() - 5));
}

struct EmbedArgs {
  std::string from, into, stab;
  bool transitive = false, regular = false, all = false;
  std::uint64_t budget = 0;
};

int cmd_embed(std::ostream& out, const EmbedArgs& a) {
  const GroupPtr g = build(a.from);
  const GroupPtr n = parse_hol_target(a.into);
  const auto hol = holomorph(n);
  EmbeddingQuery q;
  q.all = a.all;
  q.budget = a.budget;
  if (a.regular) q.constraint = Constraint::Regular;
  if (a.transitive) q.constraint = Constraint::Transitive;
  if (!a.stab.empty()) {
    q.constraint = Constraint::StabilizerMatches;
    q.stabilizer = parse_subgroup_spec(*g, a.stab);
  }
  const auto r = find_embeddings(g, hol->hol, q);
  if (r.found.empty()) {
    out << (r.budget_exhausted ? "inconclusive" : "none") << "\n";
    return r.budget_exhausted ? 2 : 0;
  }
  if (a.all) out << "found " << r.found.size() << (r.budget_exhausted ? " (budget exhausted, list incomplete)" : "") << "\n";
  for (std::size_t k = 0; k < r.found.size(); ++k) {
    const auto& e = r.found[k];
    out << "embedding " << (k + 1) << " (" << to_string(e.constraint) << "):\n";
    for (std::size_t i = 0; i < e.generators.size(); ++i)
      out << "  " << e.generators[i] << " -> " << e.images[i].to_cycle_string() << "\n";
  }
  return r.budget_exhausted ? 2 : 0;
}

struct GpArgs {
  std::string group, subgroup;
  std::size_t index = 0;
  std::size_t max_degree = kGpDegreeCap;
};

int cmd_gp(std::ostream& out, const GpArgs& a) {
  const GroupPtr g = build(a.group);
  std::vector<std::pair<std::string, Subgroup>> subs;
  if (!a.subgroup.empty()) {
    Subgroup s = parse_subgroup_spec(*g, a.subgroup);
    if (a.index && s.size() * a.index != g->order())
      throw Error("--index " + std::to_string(a.index) + " does not match the subgroup");
    subs.emplace_back(a.subgroup, std::move(s));
  } else {
    if (!a.index || g->order() % a.index) throw Error("gp needs --subgroup or an --index dividing |G|");
    std::vector<Subgroup> of_order;
    for (auto& s : all_subgroups(*g))
      if (s.size() * a.index == g->order()) of_order.push_back(std::move(s));
    std::size_t k = 0;
    for (const auto& cls : subgroup_classes(*g, of_order))
      subs.emplace_back("class " + std::to_string(++k), cls.front());
    if (subs.empty()) throw Error("no subgroup of index " + std::to_string(a.index));
  }
  for (const auto& [label, s] : subs) {
    const auto structs = gp_enumerate(g, s, a.max_degree);
    out << "subgroup " << label << " " << subgroup_string(s) << " (order " << s.size() << ", "
        << group_label(subgroup_as_group(*g, s)) << "), degree " << g->order() / s.size() << ", "
        << structs.size() << " structures\n";
    std::vector<std::pair<std::string, std::size_t>> counts;
    for (const auto& h : structs) {
      const std::string id = h.type ? h.type->display_name() : "?";
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == id; });
      if (it == counts.end()) counts.emplace_back(id, 1);
      else ++it->second;
    }
    std::sort(counts.begin(), counts.end());
    for (const auto& [id, c] : counts) out << "  " << std::left << std::setw(12) << id << c << "\n";
  }
  return 0;
}

struct ClassifyArgs {
  std::string group;
  std::uint64_t budget = 0;
  bool json = false, explain_flag = false;
};

int cmd_classify(std::ostream& out, std::ostream& err, const ClassifyArgs& a) {
  std::string canon;
  const GroupPtr g = build(a.group, &canon);
  ClassifyOptions opts;
  opts.budget = a.budget;
  const auto report = classify(g, opts);
  if (a.json) {
    out << report_json(report, canon).dump(2) << "\n";
  } else {
    out << "classify " << canon << " (order " << report.order << ", " << report.types.size() << " types)\n";
    for (const auto& t : report.types) {
      out << "  " << std::left << std::setw(9) << type_id(*t.type) << std::setw(14) << t.type->display_name()
          << std::setw(14) << to_string(t.status) << t.certificate.rule << "\n";
      if (a.explain_flag) {
        out << explain(t.certificate, 3);
        for (const auto& alt : t.alternates) out << "      alternate:\n" << explain(alt, 4);
      }
    }
    for (Verdict v : {Verdict::Occurs, Verdict::RuledOut, Verdict::Inconclusive}) {
      const auto list = report.with_status(v);
      out << to_string(v) << ":";
      for (const auto& t : list) out << " " << t->display_name();
      out << "\n";
    }
  }
  if (report.any_inconclusive()) {
    err << "warning: some types are INCONCLUSIVE (search budget exhausted); raise --budget\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf Galois structure types of finite Galois groups", "hgc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_dir;
  unsigned threads = 1;
  app.add_option("--cache-dir", cache_dir, "Directory for cached automorphism groups (default: $HGC_CACHE_DIR)");
  app.add_option("--threads", threads, "Worker threads (accepted; work is currently sequential)")
      ->check(CLI::PositiveNumber);

  std::size_t cat_order = 0;
  bool cat_json = false;
  auto* cat = app.add_subcommand("catalog", "List the isomorphism classes of a given order");
  cat->add_option("order", cat_order, "Group order (1..16, 24, 40, 60, 120)")->required();
  cat->add_flag("--json", cat_json, "JSON output");

  std::string aut_expr, hol_expr, eq1, eq2;
  auto* aut = app.add_subcommand("aut", "Automorphism group of a group");
  aut->add_option("expr", aut_expr, "Group expression")->required();
  auto* hol = app.add_subcommand("hol", "Holomorph of a group");
  hol->add_option("expr", hol_expr, "Group expression")->required();
  auto* holeq = app.add_subcommand("holeq", "Do two groups have the same holomorph?");
  holeq->add_option("expr1", eq1)->required();
  holeq->add_option("expr2", eq2)->required();

  EmbedArgs ea;
  auto* embed = app.add_subcommand("embed", "Search embeddings of a group into a holomorph");
  embed->add_option("--from", ea.from, "Domain group expression")->required();
  embed->add_option("--into", ea.into, "Target, written hol(<expr>)")->required();
  auto* f_tr = embed->add_flag("--transitive", ea.transitive, "Image must be transitive");
  auto* f_reg = embed->add_flag("--regular", ea.regular, "Image must be regular");
  auto* f_stab = embed->add_option("--stab", ea.stab, "Transitive, point stabilizer = image of this subgroup");
  f_tr->excludes(f_reg)->excludes(f_stab);
  f_reg->excludes(f_stab);
  embed->add_option("--budget", ea.budget, "Node budget (0 = unlimited)");
  embed->add_flag("--all", ea.all, "Enumerate every embedding");

  GpArgs ga;
  auto* gp = app.add_subcommand("gp", "Regular subgroups normalized by the coset action");
  gp->add_option("--group", ga.group, "Galois group expression")->required();
  gp->add_option("--index", ga.index, "Degree of the subextension");
  gp->add_option("--subgroup", ga.subgroup, "Subgroup: <i,j,...> or <expr>[@k]");
  gp->add_option("--max-degree", ga.max_degree, "Degree cap (8 by default, at most 10)");

  ClassifyArgs ca;
  auto* cl = app.add_subcommand("classify", "Decide every type for a Galois group");
  cl->add_option("expr", ca.group, "Galois group expression")->required();
  cl->add_option("--budget", ca.budget, "Node budget per direct search (0 = unlimited)");
  cl->add_flag("--json", ca.json, "JSON report");
  cl->add_flag("--explain", ca.explain_flag, "Print certificate trees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (cache_dir.empty())
    if (const char* env = std::getenv("HGC_CACHE_DIR")) cache_dir = env;
  std::optional<FileCache> cache;
  if (!cache_dir.empty()) cache.emplace(cache_dir, err);
  StoreGuard guard(cache ? &*cache : nullptr);

  try {
    if (*cat) return cmd_catalog(out, cat_order, cat_json);
    if (*aut) return cmd_aut(out, aut_expr);
    if (*hol) return cmd_hol(out, hol_expr);
    if (*holeq) return cmd_holeq(out, eq1, eq2);
    if (*embed) return cmd_embed(out, ea);
    if (*gp) return cmd_gp(out, ga);
    if (*cl) return cmd_classify(out, err, ca);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace hgc::cli
