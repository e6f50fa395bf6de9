#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>

#include <json.hpp>

#include "dblcat/companion.hpp"
#include "dblcat/modification.hpp"
#include "dblcat/transform.hpp"

namespace dblcat {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "dblcat/1";

// FNV-1a over the canonical (sorted-key) dump.
inline std::string content_hash(const Json& j) {
  std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

inline void reject_unknown_fields(const Json& j, std::initializer_list<const char*> allowed,
                                  const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) { ok = true; break; }
    if (!ok) throw IoError("unknown field '" + it.key() + "' in " + where);
  }
}

template <typename T>
T get_field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw IoError("missing field '" + std::string(key) + "' in " + where);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw IoError("bad field '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// DoubleCategory

inline Json to_json(const DoubleCategory& d) {
  Json j;
  j["name"] = d.name;
  j["objects"] = d.n_objects;
  j["hcells"] = Json{{"src", d.h_src}, {"tgt", d.h_tgt}};
  j["vcells"] = Json{{"src", d.v_src}, {"tgt", d.v_tgt}};
  Json sq = Json::array();
  for (const auto& f : d.sq) sq.push_back(Json::array({f.top, f.bottom, f.left, f.right}));
  j["squares"] = sq;
  j["identities"] = Json{{"id_h", d.id_h}, {"id_v", d.id_v},
                         {"id_sq_h", d.id_sq_h}, {"id_sq_v", d.id_sq_v}};
  j["hcomp_hcells"] = d.hcomp_h_tab;
  j["vcomp_vcells"] = d.vcomp_v_tab;
  j["hcomp_squares"] = d.hcomp_sq_tab;
  j["vcomp_squares"] = d.vcomp_sq_tab;
  if (d.has_pseudo_overlay()) {
    Json as = Json::array();
    for (const auto& [k, v] : d.assoc) as.push_back(Json::array({k[0], k[1], k[2], v}));
    j["associators"] = as;
    if (!d.lunit.empty()) j["lunit"] = d.lunit;
    if (!d.runit.empty()) j["runit"] = d.runit;
  }
  return j;
}

inline DoubleCategory double_category_from_json(const Json& j) {
  reject_unknown_fields(j, {"name", "objects", "hcells", "vcells", "squares", "identities",
                            "hcomp_hcells", "vcomp_vcells", "hcomp_squares", "vcomp_squares",
                            "associators", "lunit", "runit"},
                        "double_category");
  DoubleCategory d;
  d.name = get_field<std::string>(j, "name", "double_category");
  d.n_objects = get_field<Idx>(j, "objects", "double_category");
  const Json& h = j.at("hcells");
  d.h_src = get_field<std::vector<Idx>>(h, "src", "hcells");
  d.h_tgt = get_field<std::vector<Idx>>(h, "tgt", "hcells");
  const Json& v = j.at("vcells");
  d.v_src = get_field<std::vector<Idx>>(v, "src", "vcells");
  d.v_tgt = get_field<std::vector<Idx>>(v, "tgt", "vcells");
  for (const auto& row : j.at("squares")) {
    if (!row.is_array() || row.size() != 4) throw IoError("square rows must be 4-tuples");
    d.sq.push_back({row[0].get<Idx>(), row[1].get<Idx>(), row[2].get<Idx>(), row[3].get<Idx>()});
  }
  const Json& ids = j.at("identities");
  d.id_h = get_field<std::vector<Idx>>(ids, "id_h", "identities");
  d.id_v = get_field<std::vector<Idx>>(ids, "id_v", "identities");
  d.id_sq_h = get_field<std::vector<Idx>>(ids, "id_sq_h", "identities");
  d.id_sq_v = get_field<std::vector<Idx>>(ids, "id_sq_v", "identities");
  d.hcomp_h_tab = get_field<std::vector<Idx>>(j, "hcomp_hcells", "double_category");
  d.vcomp_v_tab = get_field<std::vector<Idx>>(j, "vcomp_vcells", "double_category");
  d.hcomp_sq_tab = get_field<std::vector<Idx>>(j, "hcomp_squares", "double_category");
  d.vcomp_sq_tab = get_field<std::vector<Idx>>(j, "vcomp_squares", "double_category");
  if (j.contains("associators"))
    for (const auto& row : j.at("associators"))
      d.assoc[{row[0].get<Idx>(), row[1].get<Idx>(), row[2].get<Idx>()}] = row[3].get<Idx>();
  if (j.contains("lunit")) d.lunit = j.at("lunit").get<std::vector<Idx>>();
  if (j.contains("runit")) d.runit = j.at("runit").get<std::vector<Idx>>();
  return d;
}

inline std::string category_hash(const DoubleCategory& d) {
  Json j = to_json(d);
  j.erase("name");  // the hash identifies tables, not labels
  return content_hash(j);
}

// ---------------------------------------------------------------------------
// Functors and transformations (embedded forms; categories referenced by hash)

inline Json to_json(const LaxDoubleFunctor& f) {
  Json j;
  j["name"] = f.name;
  j["variant"] = f.variant == FunctorVariant::lax ? "lax"
               : f.variant == FunctorVariant::pseudo ? "pseudo" : "strict";
  j["source_hash"] = category_hash(*f.src);
  j["target_hash"] = category_hash(*f.dst);
  j["obj_map"] = f.obj_map;
  j["h_map"] = f.h_map;
  j["v_map"] = f.v_map;
  j["sq_map"] = f.sq_map;
  Json comp = Json::array();
  for (const auto& [k, c] : f.comp) comp.push_back(Json::array({k.first, k.second, c}));
  j["compositors"] = comp;
  j["unitors"] = f.unit;
  return j;
}

inline LaxDoubleFunctor functor_from_json(const Json& j, DcPtr src, DcPtr dst) {
  reject_unknown_fields(j, {"name", "variant", "source_hash", "target_hash", "obj_map", "h_map",
                            "v_map", "sq_map", "compositors", "unitors"},
                        "functor");
  LaxDoubleFunctor f;
  f.name = get_field<std::string>(j, "name", "functor");
  std::string var = get_field<std::string>(j, "variant", "functor");
  f.variant = var == "lax" ? FunctorVariant::lax
            : var == "pseudo" ? FunctorVariant::pseudo
            : var == "strict" ? FunctorVariant::strict
            : throw IoError("bad functor variant '" + var + "'");
  if (get_field<std::string>(j, "source_hash", "functor") != category_hash(*src))
    throw IoError("functor source hash does not match the supplied category");
  if (get_field<std::string>(j, "target_hash", "functor") != category_hash(*dst))
    throw IoError("functor target hash does not match the supplied category");
  f.src = std::move(src);
  f.dst = std::move(dst);
  f.obj_map = get_field<std::vector<Idx>>(j, "obj_map", "functor");
  f.h_map = get_field<std::vector<Idx>>(j, "h_map", "functor");
  f.v_map = get_field<std::vector<Idx>>(j, "v_map", "functor");
  f.sq_map = get_field<std::vector<Idx>>(j, "sq_map", "functor");
  for (const auto& row : j.at("compositors"))
    f.comp[{row[0].get<Idx>(), row[1].get<Idx>()}] = row[2].get<Idx>();
  f.unit = get_field<std::vector<Idx>>(j, "unitors", "functor");
  return f;
}

inline Json to_json(const HorizontalTransformation& t) {
  Json j;
  j["name"] = t.name;
  j["variant"] = hvariant_name(t.variant);
  j["delta_oplax"] = t.delta_oplax;
  j["F"] = to_json(t.F);
  j["G"] = to_json(t.G);
  j["at_obj"] = t.at_obj;
  j["at_v"] = t.at_v;
  j["delta"] = t.delta;
  j["delta_inv"] = t.delta_inv;
  return j;
}

inline HorizontalTransformation htransform_from_json(const Json& j, DcPtr src, DcPtr dst) {
  reject_unknown_fields(j, {"name", "variant", "delta_oplax", "F", "G", "at_obj", "at_v",
                            "delta", "delta_inv"},
                        "htransform");
  HorizontalTransformation t;
  t.name = get_field<std::string>(j, "name", "htransform");
  std::string var = get_field<std::string>(j, "variant", "htransform");
  t.variant = var == "oplax" ? HVariant::oplax
            : var == "lax" ? HVariant::lax
            : var == "pseudo" ? HVariant::pseudo
            : var == "strict" ? HVariant::strict
            : throw IoError("bad htransform variant '" + var + "'");
  t.delta_oplax = get_field<bool>(j, "delta_oplax", "htransform");
  t.F = functor_from_json(j.at("F"), src, dst);
  t.G = functor_from_json(j.at("G"), src, dst);
  t.at_obj = get_field<std::vector<Idx>>(j, "at_obj", "htransform");
  t.at_v = get_field<std::vector<Idx>>(j, "at_v", "htransform");
  t.delta = get_field<std::vector<Idx>>(j, "delta", "htransform");
  t.delta_inv = get_field<std::vector<Idx>>(j, "delta_inv", "htransform");
  return t;
}

inline Json to_json(const VerticalTransformation& t) {
  Json j;
  j["name"] = t.name;
  j["variant"] = vvariant_name(t.variant);
  j["au_lax"] = t.au_lax;
  j["F"] = to_json(t.F);
  j["G"] = to_json(t.G);
  j["at_obj"] = t.at_obj;
  j["at_h"] = t.at_h;
  j["at_v"] = t.at_v;
  return j;
}

inline VerticalTransformation vtransform_from_json(const Json& j, DcPtr src, DcPtr dst) {
  reject_unknown_fields(j, {"name", "variant", "au_lax", "F", "G", "at_obj", "at_h", "at_v"},
                        "vtransform");
  VerticalTransformation t;
  t.name = get_field<std::string>(j, "name", "vtransform");
  std::string var = get_field<std::string>(j, "variant", "vtransform");
  t.variant = var == "lax" ? VVariant::lax
            : var == "oplax" ? VVariant::oplax
            : var == "pseudo" ? VVariant::pseudo
            : var == "strict" ? VVariant::strict
            : var == "invertible" ? VVariant::invertible
            : throw IoError("bad vtransform variant '" + var + "'");
  t.au_lax = get_field<bool>(j, "au_lax", "vtransform");
  t.F = functor_from_json(j.at("F"), src, dst);
  t.G = functor_from_json(j.at("G"), src, dst);
  t.at_obj = get_field<std::vector<Idx>>(j, "at_obj", "vtransform");
  t.at_h = get_field<std::vector<Idx>>(j, "at_h", "vtransform");
  t.at_v = get_field<std::vector<Idx>>(j, "at_v", "vtransform");
  return t;
}

inline Json to_json(const CompanionChoice& c, const DoubleCategory& d) {
  Json j;
  j["category_hash"] = category_hash(d);
  Json rows = Json::array();
  for (const auto& [u, w] : c.at)
    rows.push_back(Json::array({u, w.u_hat, w.eps, w.eta}));
  j["witnesses"] = rows;
  return j;
}

inline CompanionChoice companion_choice_from_json(const Json& j, const DoubleCategory& d) {
  reject_unknown_fields(j, {"category_hash", "witnesses"}, "companion_choice");
  if (get_field<std::string>(j, "category_hash", "companion_choice") != category_hash(d))
    throw IoError("companion choice hash does not match the supplied category");
  CompanionChoice c;
  for (const auto& row : j.at("witnesses")) {
    Idx u = row[0].get<Idx>();
    c.at[u] = CompanionWitness{u, row[1].get<Idx>(), row[2].get<Idx>(), row[3].get<Idx>()};
  }
  return c;
}

// ---------------------------------------------------------------------------
// Documents: a typed wrapper with schema version and hash.

inline Json wrap_document(const std::string& kind, Json content) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["hash"] = content_hash(content);
  j["content"] = std::move(content);
  return j;
}

inline Json unwrap_document(const Json& j, const std::string& expect_kind) {
  reject_unknown_fields(j, {"schema_version", "kind", "hash", "content"}, "document");
  if (get_field<std::string>(j, "schema_version", "document") != kSchemaVersion)
    throw IoError("unsupported schema version");
  std::string kind = get_field<std::string>(j, "kind", "document");
  if (!expect_kind.empty() && kind != expect_kind)
    throw IoError("expected document kind '" + expect_kind + "', found '" + kind + "'");
  if (!j.contains("content")) throw IoError("document missing content");
  if (get_field<std::string>(j, "hash", "document") != content_hash(j.at("content")))
    throw IoError("document content hash mismatch");
  return j.at("content");
}

inline std::string document_kind(const Json& j) {
  return get_field<std::string>(j, "kind", "document");
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw IoError("parse error in '" + path + "': " + e.what());
  }
  return j;
}

inline void write_document(const std::string& path, const std::string& kind, Json content) {
  write_text_file(path, wrap_document(kind, std::move(content)).dump(2) + "\n");
}

}  // namespace dblcat
