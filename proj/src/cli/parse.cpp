#include <algorithm>
#include <cctype>

#include "hgc/catalog.hpp"
#include "hgc/cli.hpp"
#include "hgc/iso.hpp"

namespace hgc::cli {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}

namespace {

using K = GroupExpr::Kind;

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_.push_back(text[i]);
        pos_.push_back(i);
      }
    end_ = text.size();
  }

  GroupExpr expr() {
    if (s_.empty()) throw ParseError("empty expression", 0);
    GroupExpr e = term();
    while (i_ < s_.size() && s_[i_] == 'x') {
      ++i_;
      e = GroupExpr::product(std::move(e), term());
    }
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", at());
    return e;
  }

 private:
  std::size_t at() const { return i_ < pos_.size() ? pos_[i_] : end_; }

  bool eat(std::string_view word) {
    if (s_.compare(i_, word.size(), word) != 0) return false;
    i_ += word.size();
    return true;
  }

  std::size_t number() {
    const std::size_t start = at();
    std::size_t v = 0, digits = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[i_] - '0');
      if (v > 1'000'000) throw ParseError("number too large", start);
      ++i_;
      ++digits;
    }
    if (!digits) throw ParseError("expected a number", start);
    return v;
  }

  GroupExpr leaf(K kind, std::size_t start) {
    const std::size_t p = number();
    try {
      check_leaf(kind, p);
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
    return GroupExpr::leaf(kind, p);
  }

  GroupExpr term() {
    const std::size_t start = at();
    if (i_ >= s_.size()) throw ParseError("expected a group name", start);
    if (eat("SL(2,3)")) return GroupExpr::leaf(K::SL23);
    if (eat("SL(2,5)")) return GroupExpr::leaf(K::SL25);
    if (eat("SL")) throw ParseError("only SL(2,3) and SL(2,5) are supported", start);
    if (eat("Dic")) return leaf(K::Dicyclic, start);
    if (eat("V4")) return GroupExpr::leaf(K::V4);
    if (eat("Q8")) return GroupExpr::leaf(K::Q8);
    if (eat("o")) {
      const std::size_t order = number();
      if (!eat("#")) throw ParseError("catalog id needs '#'", at());
      const std::size_t idx_pos = at();
      const std::size_t idx = number();
      if (!catalog_supported(order)) throw ParseError("no catalog for order " + std::to_string(order), start);
      if (idx < 1 || idx > catalog(order).size())
        throw ParseError("catalog index out of range (1.." + std::to_string(catalog(order).size()) + ")", idx_pos);
      GroupExpr e = GroupExpr::leaf(K::CatalogId, order);
      e.index = idx;
      return e;
    }
    const char c = s_[i_];
    ++i_;
    switch (c) {
      case 'C': return leaf(K::Cyclic, start);
      case 'D': return leaf(K::Dihedral, start);
      case 'E': return leaf(K::Elementary, start);
      case 'A': return leaf(K::Alternating, start);
      case 'S': return leaf(K::Symmetric, start);
      default: break;
    }
    --i_;
    throw ParseError(std::string("unknown group name starting with '") + c + "'", start);
  }

  std::string s_;
  std::vector<std::size_t> pos_;
  std::size_t end_ = 0;
  std::size_t i_ = 0;
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).expr(); }

Subgroup parse_subgroup_spec(const AbstractGroup& g, std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (!t.empty() && t.front() == '<') {
    if (t.back() != '>') throw ParseError("subgroup generator list must end with '>'", text.size());
    std::vector<Elem> gens;
    std::size_t i = 1;
    while (i + 1 < t.size()) {
      std::size_t v = 0, digits = 0;
      while (i + 1 < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        v = v * 10 + static_cast<std::size_t>(t[i++] - '0');
        ++digits;
      }
      if (!digits) throw ParseError("expected an element index", i);
      if (v >= g.order()) throw ParseError("element index " + std::to_string(v) + " out of range", i);
      gens.push_back(static_cast<Elem>(v));
      if (i + 1 < t.size() && t[i] != ',') throw ParseError("expected ','", i);
      if (i + 1 < t.size()) ++i;
    }
    return generated_subgroup(g, gens);
  }
  std::size_t cls = 1;
  const auto at = t.find('@');
  std::string expr_text = t;
  if (at != std::string::npos) {
    expr_text = t.substr(0, at);
    const std::string k = t.substr(at + 1);
    if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("class number after '@' must be a positive integer", at + 1);
    cls = std::stoul(k);
    if (cls == 0) throw ParseError("class numbers start at 1", at + 1);
  }
  const AbstractGroup want = construct(parse_group_expr(expr_text));
  std::vector<Subgroup> candidates;
  for (auto& s : all_subgroups(g))
    if (s.size() == want.order()) candidates.push_back(std::move(s));
  std::size_t seen = 0;
  for (const auto& c : subgroup_classes(g, candidates)) {
    if (!are_isomorphic(subgroup_as_group(g, c.front()), want)) continue;
    if (++seen == cls) return c.front();
  }
  throw Error("no subgroup class " + std::to_string(cls) + " isomorphic to " + expr_text);
}

}  // namespace hgc::cli
