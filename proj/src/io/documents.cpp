#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <tuple>

#include "hsep/error.hpp"
#include "hsep/io.hpp"

namespace hsep::io {

using exactalg::Residue;
using exactalg::Vec;
using finring::FiniteRing;
using finring::RingHom;
using finring::StandardRing;

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error("SchemaError", where + ": " + what);
}

const Json& member(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) schema(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, "missing \"" + key + "\"");
  return *it;
}

const Json* optional_member(const Json& obj, const std::string& key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

Residue as_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<Residue>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t used = 0;
    try {
      Residue v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  schema(where, "expected a decimal integer");
}

std::size_t as_size(const Json& j, const std::string& where) {
  Residue v = as_int(j, where);
  if (v < 0) schema(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

const std::string& as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get_ref<const std::string&>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

Vec as_vec(const Json& j, const std::string& where) {
  as_array(j, where);
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

/// Reads a referenced document and moves the context into its directory for
/// the duration of fn.
template <class Fn>
auto with_reference(const std::string& ref, Context& ctx, Fn fn) {
  fs::path path = ctx.base_dir / ref;
  Json doc = read_document(path);
  fs::path saved = ctx.base_dir;
  ctx.base_dir = path.parent_path();
  try {
    auto out = fn(doc, ref + ":$");
    ctx.base_dir = saved;
    return out;
  } catch (...) {
    ctx.base_dir = saved;
    throw;
  }
}

// ---- rings ----------------------------------------------------------------

struct FieldShorthand {
  Residue q;
  Residue p;
  std::vector<Residue> f;
};

const std::vector<FieldShorthand>& field_table() {
  static const std::vector<FieldShorthand> table = {
      {4, 2, {1, 1, 1}},    {8, 2, {1, 1, 0, 1}}, {9, 3, {1, 0, 1}}, {16, 2, {1, 1, 0, 0, 1}},
      {25, 5, {3, 0, 1}},   {27, 3, {1, 2, 0, 1}}, {49, 7, {1, 0, 1}},
  };
  return table;
}

bool is_prime(Residue n) {
  if (n < 2) return false;
  for (Residue d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<FiniteRing> shorthand_ring(const std::string& s) {
  auto number = [](const std::string& digits) -> std::optional<Residue> {
    if (digits.empty() || digits.size() > 18 || digits.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return std::stoll(digits);
  };
  if (s.rfind("Z/", 0) == 0) {
    if (auto n = number(s.substr(2))) return finring::modular_ring(*n).ring;
    return std::nullopt;
  }
  if (s.rfind("F_", 0) == 0) {
    auto q = number(s.substr(2));
    if (!q) return std::nullopt;
    if (is_prime(*q)) {
      FiniteRing R = finring::modular_ring(*q).ring;
      R.set_label(s);
      return R;
    }
    for (const auto& row : field_table()) {
      if (row.q != *q) continue;
      FiniteRing R = finring::polynomial_quotient(row.p, row.f).ring;
      R.set_label(s);
      return R;
    }
  }
  return std::nullopt;
}

FiniteRing ring_at(const Json& doc, Context& ctx, const std::string& where);
StandardRing standard_at(const Json& doc, Context& ctx, const std::string& where);
RingHom hom_at(const Json& doc, Context& ctx, const std::string& where);

FiniteRing explicit_ring(const Json& doc, const std::string& where) {
  Vec moduli = as_vec(member(doc, "moduli", where), at(where, "moduli"));
  Vec unit = as_vec(member(doc, "unit", where), at(where, "unit"));
  const Json& mul = as_array(member(doc, "mul", where), at(where, "mul"));
  finring::MulTable table;
  for (std::size_t i = 0; i < mul.size(); ++i) {
    const std::string wi = at(at(where, "mul"), i);
    const Json& row = as_array(mul[i], wi);
    std::vector<Vec> out;
    for (std::size_t j = 0; j < row.size(); ++j) out.push_back(as_vec(row[j], at(wi, j)));
    table.push_back(std::move(out));
  }
  std::string label = "R";
  if (const Json* l = optional_member(doc, "label")) label = as_string(*l, at(where, "label"));
  std::vector<std::string> names;
  if (const Json* b = optional_member(doc, "basis")) {
    as_array(*b, at(where, "basis"));
    for (std::size_t i = 0; i < b->size(); ++i) names.push_back(as_string((*b)[i], at(at(where, "basis"), i)));
  }
  return FiniteRing::construct(std::move(moduli), std::move(table), std::move(unit), std::move(label),
                               std::move(names));
}

FiniteRing ring_at(const Json& doc, Context& ctx, const std::string& where) {
  if (doc.is_string()) {
    const std::string& s = doc.get_ref<const std::string&>();
    if (auto R = shorthand_ring(s)) return *R;
    return with_reference(s, ctx, [&](const Json& d, const std::string& w) { return ring_at(d, ctx, w); });
  }
  if (optional_member(doc, "kind")) return standard_at(doc, ctx, where).ring;
  return explicit_ring(doc, where);
}

StandardRing standard_at(const Json& doc, Context& ctx, const std::string& where) {
  if (doc.is_string()) {
    return with_reference(doc.get_ref<const std::string&>(), ctx,
                          [&](const Json& d, const std::string& w) { return standard_at(d, ctx, w); });
  }
  const std::string& kind = as_string(member(doc, "kind", where), at(where, "kind"));
  static const Json empty = Json::object();
  const Json* pp = optional_member(doc, "params");
  const Json& params = pp ? *pp : empty;
  const std::string pw = at(where, "params");
  auto param = [&](const std::string& key) -> const Json& { return member(params, key, pw); };

  StandardRing out;
  if (kind == "modular") {
    out = finring::modular_ring(as_int(param("n"), at(pw, "n")));
  } else if (kind == "matrix" || kind == "triangular") {
    FiniteRing base = ring_at(param("base"), ctx, at(pw, "base"));
    std::size_t n = as_size(param("n"), at(pw, "n"));
    out = kind == "matrix" ? finring::matrix_ring(base, n) : finring::triangular_ring(base, n);
  } else if (kind == "product") {
    out = finring::product_ring(ring_at(param("left"), ctx, at(pw, "left")),
                                ring_at(param("right"), ctx, at(pw, "right")));
  } else if (kind == "group_ring") {
    FiniteRing base = ring_at(param("base"), ctx, at(pw, "base"));
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::string> names;
    if (const Json* c = optional_member(params, "cyclic")) {
      table = finring::cyclic_group_table(as_size(*c, at(pw, "cyclic")));
    } else {
      const Json& t = as_array(param("table"), at(pw, "table"));
      for (std::size_t i = 0; i < t.size(); ++i) {
        Vec row = as_vec(t[i], at(at(pw, "table"), i));
        std::vector<std::size_t> r;
        for (Residue x : row) {
          if (x < 0) schema(at(at(pw, "table"), i), "negative group index");
          r.push_back(static_cast<std::size_t>(x));
        }
        table.push_back(std::move(r));
      }
      if (const Json* e = optional_member(params, "elements")) {
        as_array(*e, at(pw, "elements"));
        for (std::size_t i = 0; i < e->size(); ++i) names.push_back(as_string((*e)[i], at(at(pw, "elements"), i)));
      }
    }
    out = finring::group_ring(base, table, names);
  } else if (kind == "polynomial_quotient") {
    out = finring::polynomial_quotient(as_int(param("p"), at(pw, "p")), as_vec(param("f"), at(pw, "f")));
  } else if (kind == "tensor_product") {
    out = finring::tensor_product(hom_at(param("left"), ctx, at(pw, "left")),
                                  hom_at(param("right"), ctx, at(pw, "right")));
  } else if (kind == "quotient") {
    FiniteRing base = ring_at(param("base"), ctx, at(pw, "base"));
    const Json& ideal = as_array(param("ideal"), at(pw, "ideal"));
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < ideal.size(); ++i) gens.push_back(as_vec(ideal[i], at(at(pw, "ideal"), i)));
    out = finring::quotient_ring(base, gens);
  } else {
    throw Error("UnknownKind", at(where, "kind") + ": " + kind);
  }
  if (const Json* l = optional_member(doc, "label")) out.ring.set_label(as_string(*l, at(where, "label")));
  for (const auto& w : out.warnings) ctx.warnings.push_back(w);
  return out;
}

RingHom hom_at(const Json& doc, Context& ctx, const std::string& where) {
  if (doc.is_string()) {
    return with_reference(doc.get_ref<const std::string&>(), ctx,
                          [&](const Json& d, const std::string& w) { return hom_at(d, ctx, w); });
  }
  if (!doc.is_object()) schema(where, "expected a homomorphism document");
  if (const Json* s = optional_member(doc, "standard")) {
    StandardRing std_ring = standard_at(*s, ctx, at(where, "standard"));
    const std::string& name = as_string(member(doc, "hom", where), at(where, "hom"));
    auto it = std_ring.homs.find(name);
    if (it == std_ring.homs.end()) {
      std::string known;
      for (const auto& [k, _] : std_ring.homs) known += (known.empty() ? "" : ",") + k;
      throw Error("UnknownHom", at(where, "hom") + ": " + name + " (available: " + known + ")");
    }
    return it->second;
  }
  if (const Json* r = optional_member(doc, "identity")) return finring::identity_hom(ring_at(*r, ctx, at(where, "identity")));
  if (const Json* c = optional_member(doc, "compose")) {
    const std::string cw = at(where, "compose");
    if (!c->is_array() || c->size() != 2) schema(cw, "expected [second, first]");
    RingHom second = hom_at((*c)[0], ctx, at(cw, 0));
    RingHom first = hom_at((*c)[1], ctx, at(cw, 1));
    if (second.source.moduli() != first.target.moduli() || second.source.mul_table() != first.target.mul_table())
      throw Error("DimensionMismatch", cw + ": the first hom does not land in the source of the second");
    return finring::compose(second, first);
  }
  if (const Json* p = optional_member(doc, "pair")) {
    const std::string pw = at(where, "pair");
    if (!p->is_array() || p->size() != 2) schema(pw, "expected [hom, hom]");
    return finring::product_hom(hom_at((*p)[0], ctx, at(pw, 0)), hom_at((*p)[1], ctx, at(pw, 1)));
  }

  FiniteRing source = ring_at(member(doc, "source", where), ctx, at(where, "source"));
  FiniteRing target = ring_at(member(doc, "target", where), ctx, at(where, "target"));
  std::vector<Vec> images;
  if (const Json* m = optional_member(doc, "matrix")) {
    const std::string mw = at(where, "matrix");
    as_array(*m, mw);
    if (m->size() != target.dim()) schema(mw, "expected " + std::to_string(target.dim()) + " rows");
    images.assign(source.dim(), Vec(target.dim(), 0));
    for (std::size_t i = 0; i < m->size(); ++i) {
      Vec row = as_vec((*m)[i], at(mw, i));
      if (row.size() != source.dim()) schema(at(mw, i), "expected " + std::to_string(source.dim()) + " columns");
      for (std::size_t j = 0; j < row.size(); ++j) images[j][i] = row[j];
    }
  } else {
    const std::string iw = at(where, "images");
    const Json& im = as_array(member(doc, "images", where), iw);
    for (std::size_t j = 0; j < im.size(); ++j) images.push_back(as_vec(im[j], at(iw, j)));
  }
  return finring::check_ring_hom(std::move(images), source, target);
}

// ---- categories -------------------------------------------------------------

using fincat::CategoryRef;
using fincat::FunctorData;

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  as_array(j, where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], at(where, i)));
  return out;
}

CategoryRef example_category(const std::string& name, const std::string& where) {
  for (const auto& e : fincat::example_categories())
    if (e.name == name) return e.category;
  throw Error("UnknownExample", where + ": " + name);
}

CategoryRef category_at(const Json& doc, Context& ctx, const std::string& where) {
  if (doc.is_string()) {
    return with_reference(doc.get_ref<const std::string&>(), ctx,
                          [&](const Json& d, const std::string& w) { return category_at(d, ctx, w); });
  }
  std::string label = "C";
  if (const Json* l = optional_member(doc, "label")) label = as_string(*l, at(where, "label"));
  if (const Json* k = optional_member(doc, "kind")) {
    const std::string& kind = as_string(*k, at(where, "kind"));
    if (kind == "terminal") return fincat::terminal_category();
    if (kind == "chain") return fincat::chain_category(as_size(member(doc, "n", where), at(where, "n")));
    if (kind == "example") return example_category(as_string(member(doc, "name", where), at(where, "name")), where);
    if (kind == "poset") {
      std::vector<std::pair<std::string, std::string>> leq;
      if (const Json* l = optional_member(doc, "leq")) {
        as_array(*l, at(where, "leq"));
        for (std::size_t i = 0; i < l->size(); ++i) {
          auto pair = string_list((*l)[i], at(at(where, "leq"), i));
          if (pair.size() != 2) schema(at(at(where, "leq"), i), "expected [a, b]");
          leq.emplace_back(pair[0], pair[1]);
        }
      }
      return fincat::poset_category(label, string_list(member(doc, "objects", where), at(where, "objects")), leq);
    }
    if (kind == "monoid") {
      auto elements = string_list(member(doc, "elements", where), at(where, "elements"));
      auto index = [&](const Json& j, const std::string& w) -> std::size_t {
        if (j.is_string()) {
          for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == j.get_ref<const std::string&>()) return i;
          schema(w, "unknown element " + j.get<std::string>());
        }
        std::size_t i = as_size(j, w);
        if (i >= elements.size()) schema(w, "element index out of range");
        return i;
      };
      const std::string tw = at(where, "table");
      const Json& t = as_array(member(doc, "table", where), tw);
      std::vector<std::vector<std::size_t>> table;
      for (std::size_t a = 0; a < t.size(); ++a) {
        as_array(t[a], at(tw, a));
        std::vector<std::size_t> row;
        for (std::size_t b = 0; b < t[a].size(); ++b) row.push_back(index(t[a][b], at(at(tw, a), b)));
        table.push_back(std::move(row));
      }
      std::size_t e = index(member(doc, "identity", where), at(where, "identity"));
      return fincat::monoid_category(label, elements, table, e);
    }
    throw Error("UnknownKind", at(where, "kind") + ": " + kind);
  }

  auto objects = string_list(member(doc, "objects", where), at(where, "objects"));
  std::vector<std::string> identities;
  const Json& ids = member(doc, "identities", where);
  if (ids.is_object()) {
    for (const auto& x : objects) identities.push_back(as_string(member(ids, x, at(where, "identities")), at(at(where, "identities"), x)));
  } else {
    identities = string_list(ids, at(where, "identities"));
  }
  if (identities.size() != objects.size()) schema(at(where, "identities"), "one identity per object expected");

  std::vector<fincat::HomSpec> homs;
  if (const Json* h = optional_member(doc, "homs")) {
    const std::string hw = at(where, "homs");
    as_array(*h, hw);
    for (std::size_t i = 0; i < h->size(); ++i) {
      const std::string w = at(hw, i);
      homs.push_back({as_string(member((*h)[i], "source", w), at(w, "source")),
                      as_string(member((*h)[i], "target", w), at(w, "target")),
                      string_list(member((*h)[i], "labels", w), at(w, "labels"))});
    }
  }
  for (std::size_t i = 0; i < objects.size(); ++i) {
    auto it = std::find_if(homs.begin(), homs.end(),
                           [&](const fincat::HomSpec& s) { return s.source == objects[i] && s.target == objects[i]; });
    if (it == homs.end()) {
      homs.push_back({objects[i], objects[i], {identities[i]}});
    } else if (std::find(it->labels.begin(), it->labels.end(), identities[i]) == it->labels.end()) {
      it->labels.insert(it->labels.begin(), identities[i]);
    }
  }

  std::vector<fincat::CompositionSpec> compositions;
  if (const Json* c = optional_member(doc, "compose")) {
    const std::string cw = at(where, "compose");
    as_array(*c, cw);
    for (std::size_t i = 0; i < c->size(); ++i) {
      auto row = string_list((*c)[i], at(cw, i));
      if (row.size() != 6) schema(at(cw, i), "expected [x, y, z, f, g, h]");
      compositions.push_back({row[0], row[1], row[2], row[3], row[4], row[5]});
    }
  }
  return fincat::FiniteCategory::construct(label, objects, homs, identities, compositions);
}

/// "x->y:f"
std::tuple<std::string, std::string, std::string> split_morphism_key(const std::string& key, const std::string& where) {
  auto arrow = key.find("->");
  auto colon = arrow == std::string::npos ? std::string::npos : key.find(':', arrow + 2);
  if (colon == std::string::npos) schema(where, "morphism keys look like \"x->y:label\", got " + key);
  return {key.substr(0, arrow), key.substr(arrow + 2, colon - arrow - 2), key.substr(colon + 1)};
}

fincat::Obj object_in(const CategoryRef& C, const std::string& name, const std::string& where) {
  try {
    return C->find_object(name);
  } catch (const Error&) {
    throw Error("UnknownObject", where + ": " + name + " in " + C->label());
  }
}

FunctorData functor_body(const Json& doc, const CategoryRef& S, const CategoryRef& T, const std::string& where) {
  const Json& om = member(doc, "objects", where);
  if (!om.is_object()) schema(at(where, "objects"), "expected an object map");
  std::vector<fincat::Obj> objects(S->object_count());
  for (fincat::Obj x = 0; x < S->object_count(); ++x) {
    const std::string w = at(at(where, "objects"), S->object_label(x));
    objects[x] = object_in(T, as_string(member(om, S->object_label(x), at(where, "objects")), w), w);
  }

  std::map<fincat::Mor, std::string> listed;
  if (const Json* mm = optional_member(doc, "morphisms")) {
    const std::string mw = at(where, "morphisms");
    if (!mm->is_object()) schema(mw, "expected a map from \"x->y:label\" to labels");
    for (const auto& [key, value] : mm->items()) {
      auto [xs, ys, f] = split_morphism_key(key, at(mw, key));
      fincat::Obj x = object_in(S, xs, at(mw, key));
      fincat::Obj y = object_in(S, ys, at(mw, key));
      fincat::Mor m;
      try {
        m = S->find_morphism(x, y, f);
      } catch (const Error&) {
        throw Error("UnknownMorphism", at(mw, key));
      }
      listed[m] = as_string(value, at(mw, key));
    }
  }

  std::vector<fincat::Mor> morphisms(S->morphism_count());
  for (fincat::Mor f = 0; f < S->morphism_count(); ++f) {
    const auto& mf = S->morphism(f);
    fincat::Obj fx = objects[mf.source], fy = objects[mf.target];
    if (auto it = listed.find(f); it != listed.end()) {
      try {
        morphisms[f] = T->find_morphism(fx, fy, it->second);
      } catch (const Error&) {
        throw Error("WrongTarget", at(at(where, "morphisms"), S->describe(f)) + " -> " + it->second);
      }
    } else if (f == S->identity(mf.source)) {
      morphisms[f] = T->identity(fx);
    } else if (T->hom(fx, fy).size() == 1) {
      morphisms[f] = T->hom(fx, fy)[0];
    } else {
      schema(at(where, "morphisms"), "no image given for " + S->describe(f));
    }
  }
  return fincat::make_functor(S, T, std::move(objects), std::move(morphisms));
}

std::vector<fincat::Mor> components(const Json* doc, const CategoryRef& C, const FunctorData& from,
                                    const FunctorData& to, const std::string& where) {
  std::vector<fincat::Mor> out(C->object_count());
  for (fincat::Obj x = 0; x < C->object_count(); ++x) {
    const auto& hom = C->hom(from(x), to(x));
    const Json* given = doc ? optional_member(*doc, C->object_label(x)) : nullptr;
    const std::string w = at(where, C->object_label(x));
    if (given) {
      try {
        out[x] = C->find_morphism(from(x), to(x), as_string(*given, w));
      } catch (const Error& e) {
        if (e.kind() == "SchemaError") throw;
        throw Error("WrongComponent", w + ": " + given->dump());
      }
    } else if (hom.size() == 1) {
      out[x] = hom[0];
    } else {
      schema(where, "component at " + C->object_label(x) + " must be given");
    }
  }
  return out;
}

fincat::AdjunctionData adjunction_at(const Json& doc, Context& ctx, const std::string& where) {
  if (doc.is_string()) {
    return with_reference(doc.get_ref<const std::string&>(), ctx,
                          [&](const Json& d, const std::string& w) { return adjunction_at(d, ctx, w); });
  }
  if (const Json* e = optional_member(doc, "example")) {
    const std::string& name = as_string(*e, at(where, "example"));
    for (const auto& a : fincat::example_adjunctions())
      if (a.name == name) return a.adjunction;
    throw Error("UnknownExample", at(where, "example") + ": " + name);
  }
  CategoryRef B = category_at(member(doc, "B", where), ctx, at(where, "B"));
  CategoryRef A = category_at(member(doc, "A", where), ctx, at(where, "A"));
  FunctorData L = functor_body(member(doc, "L", where), B, A, at(where, "L"));
  FunctorData R = functor_body(member(doc, "R", where), A, B, at(where, "R"));
  FunctorData RL = fincat::compose(R, L), LR = fincat::compose(L, R);
  auto unit = components(optional_member(doc, "unit"), B, fincat::identity_functor(B), RL, at(where, "unit"));
  auto counit = components(optional_member(doc, "counit"), A, LR, fincat::identity_functor(A), at(where, "counit"));
  return fincat::make_adjunction(std::move(L), std::move(R), std::move(unit), std::move(counit));
}

}  // namespace

Json read_document(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileNotFound", path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw Error("ParseError", path.string() + ": " + msg);
  }
}

FiniteRing ring_from_json(const Json& doc, Context& ctx) { return ring_at(doc, ctx, "$"); }
StandardRing standard_ring_from_json(const Json& doc, Context& ctx) { return standard_at(doc, ctx, "$"); }
RingHom hom_from_json(const Json& doc, Context& ctx) { return hom_at(doc, ctx, "$"); }

Json ring_to_json(const FiniteRing& R) {
  Json mul = Json::array();
  for (std::size_t i = 0; i < R.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < R.dim(); ++j) row.push_back(R.product(i, j));
    mul.push_back(std::move(row));
  }
  return Json{{"label", R.label()}, {"moduli", R.moduli()}, {"unit", R.unit()}, {"mul", mul}, {"basis", R.basis_names()}};
}

Json hom_to_json(const RingHom& phi) {
  Json matrix = Json::array();
  for (std::size_t i = 0; i < phi.target.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < phi.source.dim(); ++j) row.push_back(phi.images[j][i]);
    matrix.push_back(std::move(row));
  }
  return Json{{"source", ring_to_json(phi.source)}, {"target", ring_to_json(phi.target)}, {"matrix", matrix}};
}

DocumentKind classify(const Json& doc) {
  if (!doc.is_object()) schema("$", "expected an object");
  auto has = [&](const char* k) { return doc.contains(k); };
  if (has("L") || has("R") || has("example")) return DocumentKind::Adjunction;
  bool hom_composite = has("compose") && doc["compose"].is_array() && doc["compose"].size() == 2 &&
                       !doc["compose"][0].is_array();
  if (hom_composite || has("standard") || has("identity") || has("pair") || has("matrix") || has("images"))
    return DocumentKind::Hom;
  if (has("source") && has("target") && has("objects")) return DocumentKind::Functor;
  if (has("moduli") || has("mul")) return DocumentKind::Ring;
  if (has("kind")) {
    static const std::vector<std::string> ring_kinds = {"modular", "matrix", "triangular", "product", "group_ring",
                                                        "polynomial_quotient", "tensor_product", "quotient"};
    const Json& k = doc["kind"];
    if (k.is_string() && std::find(ring_kinds.begin(), ring_kinds.end(), k.get<std::string>()) != ring_kinds.end())
      return DocumentKind::Ring;
  }
  return DocumentKind::Category;
}

CategoryRef category_from_json(const Json& doc, Context& ctx) { return category_at(doc, ctx, "$"); }

FunctorData functor_from_json(const Json& doc, Context& ctx) {
  if (doc.is_string()) {
    return with_reference(doc.get_ref<const std::string&>(), ctx,
                          [&](const Json& d, const std::string&) { return functor_from_json(d, ctx); });
  }
  CategoryRef S = category_at(member(doc, "source", "$"), ctx, "$.source");
  CategoryRef T = category_at(member(doc, "target", "$"), ctx, "$.target");
  return functor_body(doc, S, T, "$");
}

fincat::AdjunctionData adjunction_from_json(const Json& doc, Context& ctx) { return adjunction_at(doc, ctx, "$"); }

}  // namespace hsep::io
