#pragma once

#include <cstdlib>
#include <filesystem>
#include <functional>

#include "dblcat/io.hpp"

namespace dblcat {

// ---------------------------------------------------------------------------
// Pasting expressions: trees whose nodes are hcomp/vcomp and whose leaves name
// structure cells. Axiom schemas pair two trees per axiom; the checker binds
// leaf names per enumerated instance and compares the evaluated squares.
//
// Term syntax inside leaves:
//   object terms:  context variables (single tokens), "I", "J",
//                  "(o.o)" for a tensor/action pairing (type-dispatched)
//   hcell terms:   u(o) identity, a(o,o,o), lam(o), ro(o), phi(o,o),
//                  b(o,o,o), nu(o), lamM(o), roM(o), aM(o,o,o),
//                  t(o,o,o), s(o,o,o),
//                  ten(h,h) tensor/action on hcells, seq(h,h) composition
//   square leaves: Id(h), p(..), m(..), l(..), r(..), b1(..), b2(..),
//                  pt(..), mt(..), lt(..),
//                  adelta(h,h,h), ldelta(h), rdelta(h), bdelta(h,h,h),
//                  nudelta(h), tdelta(h,h,h), sdelta(h,h,h),
//                  tcomp(h,h,h,h), xmod(..), ...  plus *_inv variants,
//                  x(q,q) tensor of squares, xa(q,q) action on squares.

struct PastingExpr {
  enum class Kind : std::uint8_t { leaf, hcomp, vcomp };
  Kind kind = Kind::leaf;
  std::string leaf;
  std::vector<PastingExpr> args;
};

inline PastingExpr pasting_from_json(const Json& j) {
  PastingExpr e;
  if (j.is_string()) {
    e.kind = PastingExpr::Kind::leaf;
    e.leaf = j.get<std::string>();
    return e;
  }
  if (!j.is_object() || j.size() != 1)
    throw IoError("pasting expression must be a string or a single-key object");
  auto it = j.begin();
  if (it.key() == "h") e.kind = PastingExpr::Kind::hcomp;
  else if (it.key() == "v") e.kind = PastingExpr::Kind::vcomp;
  else throw IoError("pasting node must be 'h' or 'v'");
  for (const auto& c : it.value()) e.args.push_back(pasting_from_json(c));
  if (e.args.empty()) throw IoError("empty pasting node");
  return e;
}

struct SchemaAxiom {
  std::string name;
  std::string structure;                       // which checker consumes it
  std::vector<std::pair<std::string, char>> context;  // variable -> sort tag ('M','D')
  PastingExpr lhs, rhs;
  std::string source;
};

struct AxiomSchema {
  std::string version;
  std::vector<SchemaAxiom> axioms;

  std::vector<const SchemaAxiom*> for_structure(const std::string& s) const {
    std::vector<const SchemaAxiom*> out;
    for (const auto& a : axioms)
      if (a.structure == s) out.push_back(&a);
    return out;
  }
};

inline AxiomSchema schema_from_json(const Json& j) {
  reject_unknown_fields(j, {"schema_version", "axioms"}, "axiom schema");
  AxiomSchema s;
  s.version = get_field<std::string>(j, "schema_version", "axiom schema");
  for (const auto& a : j.at("axioms")) {
    reject_unknown_fields(a, {"name", "structure", "for", "lhs", "rhs", "source"}, "axiom");
    SchemaAxiom ax;
    ax.name = get_field<std::string>(a, "name", "axiom");
    ax.structure = get_field<std::string>(a, "structure", "axiom");
    for (auto it = a.at("for").begin(); it != a.at("for").end(); ++it)
      ax.context.emplace_back(it.key(), it.value().get<std::string>().at(0));
    ax.lhs = pasting_from_json(a.at("lhs"));
    ax.rhs = pasting_from_json(a.at("rhs"));
    ax.source = a.value("source", "");
    s.axioms.push_back(std::move(ax));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Leaf parsing: NAME or NAME(arg,...) with balanced nesting.

struct ParsedLeaf {
  std::string name;
  std::vector<std::string> args;
};

inline ParsedLeaf parse_leaf(const std::string& s) {
  ParsedLeaf out;
  auto p = s.find('(');
  if (p == std::string::npos) {
    out.name = s;
    return out;
  }
  if (s.back() != ')') throw StructuralError("bad leaf syntax: " + s);
  out.name = s.substr(0, p);
  int depth = 0;
  std::string cur;
  for (size_t i = p + 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.args.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.args.push_back(cur);
  return out;
}

// Typed values flowing through term evaluation.
struct ObjVal {
  char sort;  // 'M' or 'D'
  Idx idx;
};
struct HVal {
  char sort;
  Idx idx;
};

// A binder resolves terms against one concrete structure. Implementations
// live with the structures (monoidal, action, strength, premonoidal).
struct SchemaBinder {
  virtual ~SchemaBinder() = default;
  virtual const DoubleCategory& target() const = 0;
  virtual ObjVal var(const std::string& name) = 0;
  virtual ObjVal unit(char which) = 0;                      // 'I' or 'J'
  virtual ObjVal tensor_obj(ObjVal a, ObjVal b) = 0;
  virtual HVal id_h(ObjVal a) = 0;
  virtual HVal tensor_h(HVal a, HVal b) = 0;
  virtual HVal named_h(const std::string& name, const std::vector<ObjVal>& args) = 0;
  virtual Idx named_square(const std::string& name, const std::vector<ObjVal>& oargs,
                           const std::vector<HVal>& hargs, const std::vector<Idx>& qargs) = 0;
  // kind: 'x' tensor in the target, 'm' tensor in the acting category,
  //       'a' action pairing (left square acting, right square acted on)
  virtual Idx tensor_sq(Idx a, Idx b, char kind) = 0;

  std::map<std::string, ObjVal> bindings;

  ObjVal eval_obj(const std::string& term) {
    if (term.empty()) throw StructuralError("empty object term");
    if (term.front() == '(') {
      // (o.o) — find the top-level dot
      int depth = 0;
      for (size_t i = 1; i + 1 < term.size(); ++i) {
        char c = term[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '.' && depth == 0) {
          ObjVal a = eval_obj(term.substr(1, i - 1));
          ObjVal b = eval_obj(term.substr(i + 1, term.size() - i - 2));
          return tensor_obj(a, b);
        }
      }
      throw StructuralError("bad object term: " + term);
    }
    if (term == "I") return unit('I');
    if (term == "J") return unit('J');
    auto it = bindings.find(term);
    if (it != bindings.end()) return it->second;
    return var(term);
  }

  HVal eval_h(const std::string& term) {
    ParsedLeaf l = parse_leaf(term);
    if (l.name == "u") return id_h(eval_obj(l.args.at(0)));
    if (l.name == "ten") return tensor_h(eval_h(l.args.at(0)), eval_h(l.args.at(1)));
    if (l.name == "seq") {
      HVal a = eval_h(l.args.at(0)), b = eval_h(l.args.at(1));
      if (a.sort != b.sort) throw StructuralError("seq across sorts");
      const DoubleCategory& d = sort_category(a.sort);
      return HVal{a.sort, d.hcomp_h(a.idx, b.idx)};
    }
    std::vector<ObjVal> os;
    for (auto& a : l.args) os.push_back(eval_obj(a));
    return named_h(l.name, os);
  }

  virtual const DoubleCategory& sort_category(char sort) const = 0;

  Idx eval_square_leaf(const std::string& term) {
    ParsedLeaf l = parse_leaf(term);
    const DoubleCategory& d = target();
    if (l.name == "Id") {
      HVal h = eval_h(l.args.at(0));
      if (&sort_category(h.sort) != &d)
        throw StructuralError("Id leaf must name a target hcell");
      return d.id_sq_h[h.idx];
    }
    if (l.name == "IdM") {
      HVal h = eval_h(l.args.at(0));
      return sort_category('M').id_sq_h[h.idx];
    }
    if (l.name == "x" || l.name == "xM" || l.name == "xa") {
      Idx a = eval(parse_square_arg(l.args.at(0)));
      Idx b = eval(parse_square_arg(l.args.at(1)));
      return tensor_sq(a, b, l.name == "x" ? 'x' : (l.name == "xM" ? 'm' : 'a'));
    }
    // general named leaf: split args into object terms, hcell terms and
    // square terms by inspecting their head
    std::vector<ObjVal> os;
    std::vector<HVal> hs;
    std::vector<Idx> qs;
    for (auto& a : l.args) {
      ParsedLeaf inner = parse_leaf(a);
      if (inner.name == "u" || inner.name == "ten" || inner.name == "seq" || is_h_head(inner.name))
        hs.push_back(eval_h(a));
      else if (is_sq_head(inner.name))
        qs.push_back(eval_square_leaf(a));
      else
        os.push_back(eval_obj(a));
    }
    return named_square(l.name, os, hs, qs);
  }

  virtual bool is_h_head(const std::string& n) const {
    return n == "a" || n == "lam" || n == "ro" || n == "phi" || n == "b" || n == "nu" ||
           n == "aM" || n == "lamM" || n == "roM" || n == "t" || n == "s";
  }
  virtual bool is_sq_head(const std::string& n) const {
    return n == "Id" || n == "IdM" || n == "x" || n == "xM" || n == "xa";
  }

  static PastingExpr parse_square_arg(const std::string& s) {
    PastingExpr e;
    e.kind = PastingExpr::Kind::leaf;
    e.leaf = s;
    return e;
  }

  Idx eval(const PastingExpr& e) {
    const DoubleCategory& d = target();
    switch (e.kind) {
      case PastingExpr::Kind::leaf:
        return eval_square_leaf(e.leaf);
      case PastingExpr::Kind::hcomp: {
        Idx acc = kNone;
        for (const auto& c : e.args) {
          Idx v = eval(c);
          acc = acc == kNone ? v : d.hcomp_sq(acc, v);
        }
        return acc;
      }
      case PastingExpr::Kind::vcomp: {
        Idx acc = kNone;
        for (const auto& c : e.args) {
          Idx v = eval(c);
          acc = acc == kNone ? v : d.vcomp_sq(acc, v);
        }
        return acc;
      }
    }
    throw StructuralError("unreachable pasting kind");
  }
};

// Enumerate all context assignments and compare both sides of each axiom.
// `is_strict` short-circuits evaluation with an annotation when the structure
// reports all of its structure squares as identities.
inline void run_schema_axioms(const std::vector<const SchemaAxiom*>& axioms, SchemaBinder& binder,
                              const std::function<Idx(char)>& sort_object_count, bool is_strict,
                              ValidationReport& rep) {
  for (const SchemaAxiom* ax : axioms) {
    if (is_strict) {
      rep.note("strict-shortcut: " + ax->name);
      continue;
    }
    // odometer over the context
    std::vector<Idx> counts, cur;
    for (auto& [v, sort] : ax->context) counts.push_back(sort_object_count(sort));
    cur.assign(counts.size(), 0);
    bool done = counts.empty() ? false : false;
    if (counts.empty()) {
      Idx l = binder.eval(ax->lhs);
      Idx r = binder.eval(ax->rhs);
      if (l != r) rep.add(ax->name, "()", std::to_string(l), std::to_string(r));
      rep.note("evaluated: " + ax->name);
      continue;
    }
    int instances = 0;
    while (!done) {
      binder.bindings.clear();
      std::string witness = "(";
      for (size_t i = 0; i < cur.size(); ++i) {
        binder.bindings[ax->context[i].first] = ObjVal{ax->context[i].second, cur[i]};
        witness += (i ? "," : "") + std::to_string(cur[i]);
      }
      witness += ")";
      Idx l = binder.eval(ax->lhs);
      Idx r = binder.eval(ax->rhs);
      ++instances;
      if (l != r) rep.add(ax->name, witness, std::to_string(l), std::to_string(r));
      // advance
      size_t k = 0;
      while (k < cur.size()) {
        if (++cur[k] < counts[k]) break;
        cur[k] = 0;
        ++k;
      }
      if (k == cur.size()) done = true;
    }
    rep.note("evaluated: " + ax->name + " over " + std::to_string(instances) + " instances");
  }
}

// ---------------------------------------------------------------------------
// Schema loading: env override first, then the bundled default.

std::string default_axiom_schema_text();  // defined in schema_data.hpp

inline AxiomSchema load_axiom_schema() {
  if (const char* dir = std::getenv("DBLCAT_SCHEMA_DIR")) {
    std::filesystem::path p = std::filesystem::path(dir) / "axioms.json";
    if (std::filesystem::exists(p)) return schema_from_json(read_json_file(p.string()));
    throw IoError("DBLCAT_SCHEMA_DIR is set but axioms.json was not found there");
  }
  return schema_from_json(Json::parse(default_axiom_schema_text()));
}

}  // namespace dblcat

#include "dblcat/schema_data.hpp"
