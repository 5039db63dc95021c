#include <algorithm>
#include <map>

#include "hsep/error.hpp"
#include "hsep/fincat.hpp"

namespace hsep::fincat {

namespace {

constexpr Mor kNone = static_cast<Mor>(-1);

}  // namespace

CategoryRef FiniteCategory::construct(std::string label, std::vector<std::string> objects,
                                      const std::vector<HomSpec>& homs, const std::vector<std::string>& identities,
                                      const std::vector<CompositionSpec>& compositions) {
  auto C = std::make_shared<FiniteCategory>();
  C->label_ = std::move(label);
  C->objects_ = std::move(objects);
  const std::size_t n = C->objects_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (C->objects_[i] == C->objects_[j]) throw Error("DuplicateLabel", C->label_ + ": object " + C->objects_[i]);

  C->homs_.assign(n * n, {});
  for (const auto& h : homs) {
    Obj x = C->find_object(h.source), y = C->find_object(h.target);
    auto& set = C->homs_[x * n + y];
    for (const auto& l : h.labels) {
      for (Mor f : set)
        if (C->morphisms_[f].label == l)
          throw Error("DuplicateLabel", C->label_ + ": " + h.source + "->" + h.target + ":" + l);
      set.push_back(C->morphisms_.size());
      C->morphisms_.push_back({l, x, y});
    }
  }
  for (auto& set : C->homs_)
    std::sort(set.begin(), set.end(),
              [&](Mor a, Mor b) { return C->morphisms_[a].label < C->morphisms_[b].label; });

  if (identities.size() != n) throw Error("DimensionMismatch", C->label_ + ": one identity per object");
  for (Obj x = 0; x < n; ++x) C->identities_.push_back(C->find_morphism(x, x, identities[x]));

  const std::size_t m = C->morphisms_.size();
  C->compose_.assign(m * m, kNone);
  for (Mor f = 0; f < m; ++f) {
    C->compose_[f * m + C->identities_[C->morphisms_[f].source]] = f;
    C->compose_[C->identities_[C->morphisms_[f].target] * m + f] = f;
  }
  for (const auto& c : compositions) {
    Obj x = C->find_object(c.x), y = C->find_object(c.y), z = C->find_object(c.z);
    Mor f = C->find_morphism(y, z, c.f), g = C->find_morphism(x, y, c.g), h = C->find_morphism(x, z, c.h);
    Mor& slot = C->compose_[f * m + g];
    if (slot != kNone && slot != h)
      throw Error("CompositeMismatch", C->label_ + ": " + C->describe(f) + " o " + C->describe(g) + " given as " +
                                           C->describe(h) + " but already " + C->describe(slot));
    slot = h;
  }
  for (Mor f = 0; f < m; ++f)
    for (Mor g = 0; g < m; ++g)
      if (C->morphisms_[g].target == C->morphisms_[f].source && C->compose_[f * m + g] == kNone)
        throw Error("MissingComposite", C->label_ + ": " + C->describe(f) + " o " + C->describe(g));
  for (Mor f = 0; f < m; ++f)
    for (Mor g = 0; g < m; ++g) {
      if (C->morphisms_[g].target != C->morphisms_[f].source) continue;
      for (Mor h = 0; h < m; ++h) {
        if (C->morphisms_[h].target != C->morphisms_[g].source) continue;
        if (C->compose(C->compose(f, g), h) != C->compose(f, C->compose(g, h)))
          throw Error("NotAssociative", C->label_ + ": (" + C->describe(f) + ", " + C->describe(g) + ", " +
                                            C->describe(h) + ")");
      }
    }
  return C;
}

Obj FiniteCategory::find_object(const std::string& name) const {
  for (Obj x = 0; x < objects_.size(); ++x)
    if (objects_[x] == name) return x;
  throw Error("UnknownObject", label_ + ": " + name);
}

Mor FiniteCategory::find_morphism(Obj x, Obj y, const std::string& name) const {
  for (Mor f : hom(x, y))
    if (morphisms_[f].label == name) return f;
  throw Error("UnknownMorphism", label_ + ": " + objects_[x] + "->" + objects_[y] + ":" + name);
}

std::string FiniteCategory::describe(Mor f) const {
  const auto& m = morphisms_[f];
  return objects_[m.source] + "->" + objects_[m.target] + ":" + m.label;
}

bool same_category(const FiniteCategory& a, const FiniteCategory& b) {
  if (&a == &b) return true;
  if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
  for (Obj x = 0; x < a.object_count(); ++x)
    if (a.object_label(x) != b.object_label(x) || a.identity(x) != b.identity(x)) return false;
  for (Mor f = 0; f < a.morphism_count(); ++f) {
    const auto &p = a.morphism(f), &q = b.morphism(f);
    if (p.label != q.label || p.source != q.source || p.target != q.target) return false;
  }
  for (Mor f = 0; f < a.morphism_count(); ++f)
    for (Mor g = 0; g < a.morphism_count(); ++g)
      if (a.morphism(g).target == a.morphism(f).source && a.compose(f, g) != b.compose(f, g)) return false;
  return true;
}

CategoryRef poset_category(std::string label, std::vector<std::string> objects,
                           const std::vector<std::pair<std::string, std::string>>& leq) {
  const std::size_t n = objects.size();
  auto index = [&](const std::string& s) {
    for (std::size_t i = 0; i < n; ++i)
      if (objects[i] == s) return i;
    throw Error("UnknownObject", label + ": " + s);
  };
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : leq) le[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;

  auto name = [](std::size_t i, std::size_t j) { return std::string(i == j ? "id" : "le"); };
  std::vector<HomSpec> homs;
  std::vector<std::string> ids;
  std::vector<CompositionSpec> comps;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("id");
    for (std::size_t j = 0; j < n; ++j)
      if (le[i][j]) homs.push_back({objects[i], objects[j], {name(i, j)}});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && i != j && j != k)
          comps.push_back({objects[i], objects[j], objects[k], name(j, k), name(i, j), name(i, k)});
  return FiniteCategory::construct(std::move(label), std::move(objects), homs, ids, comps);
}

CategoryRef chain_category(std::size_t n) {
  std::vector<std::string> objs;
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < n; ++i) {
    objs.push_back(std::to_string(i));
    if (i > 0) leq.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return poset_category("chain" + std::to_string(n), objs, leq);
}

CategoryRef terminal_category() { return poset_category("terminal", {"*"}, {}); }

CategoryRef monoid_category(std::string label, std::vector<std::string> elements,
                            const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
  const std::size_t k = elements.size();
  if (table.size() != k || identity >= k) throw Error("DimensionMismatch", label + ": monoid table");
  std::vector<CompositionSpec> comps;
  for (std::size_t a = 0; a < k; ++a) {
    if (table[a].size() != k) throw Error("DimensionMismatch", label + ": monoid table row " + elements[a]);
    for (std::size_t b = 0; b < k; ++b) {
      if (table[a][b] >= k) throw Error("UnknownMorphism", label + ": table entry out of range");
      comps.push_back({"*", "*", "*", elements[a], elements[b], elements[table[a][b]]});
    }
  }
  return FiniteCategory::construct(std::move(label), {"*"}, {{"*", "*", elements}}, {elements[identity]}, comps);
}

// ---- functors --------------------------------------------------------------

FunctorData make_functor(CategoryRef source, CategoryRef target, std::vector<Obj> object_map,
                         std::vector<Mor> morphism_map) {
  const auto& S = *source;
  const auto& T = *target;
  const std::string where = S.label() + " -> " + T.label();
  if (object_map.size() != S.object_count() || morphism_map.size() != S.morphism_count())
    throw Error("DimensionMismatch", where + ": functor tables");
  for (Obj x : object_map)
    if (x >= T.object_count()) throw Error("UnknownObject", where + ": object image out of range");
  for (Mor f = 0; f < S.morphism_count(); ++f) {
    Mor g = morphism_map[f];
    if (g >= T.morphism_count()) throw Error("UnknownMorphism", where + ": image of " + S.describe(f));
    if (T.morphism(g).source != object_map[S.morphism(f).source])
      throw Error("WrongSource", where + ": image of " + S.describe(f));
    if (T.morphism(g).target != object_map[S.morphism(f).target])
      throw Error("WrongTarget", where + ": image of " + S.describe(f));
  }
  for (Obj x = 0; x < S.object_count(); ++x)
    if (morphism_map[S.identity(x)] != T.identity(object_map[x]))
      throw Error("IdentityNotPreserved", where + ": object " + S.object_label(x));
  for (Mor f = 0; f < S.morphism_count(); ++f)
    for (Mor g = 0; g < S.morphism_count(); ++g)
      if (S.morphism(g).target == S.morphism(f).source &&
          morphism_map[S.compose(f, g)] != T.compose(morphism_map[f], morphism_map[g]))
        throw Error("CompositionNotPreserved", where + ": (" + S.describe(f) + ", " + S.describe(g) + ")");
  return {std::move(source), std::move(target), std::move(object_map), std::move(morphism_map)};
}

FunctorData identity_functor(const CategoryRef& C) {
  std::vector<Obj> objs(C->object_count());
  std::vector<Mor> mors(C->morphism_count());
  for (Obj x = 0; x < objs.size(); ++x) objs[x] = x;
  for (Mor f = 0; f < mors.size(); ++f) mors[f] = f;
  return {C, C, std::move(objs), std::move(mors)};
}

FunctorData compose(const FunctorData& second, const FunctorData& first) {
  if (!same_category(*first.target, *second.source))
    throw Error("DimensionMismatch", "compose: " + first.target->label() + " vs " + second.source->label());
  std::vector<Obj> objs;
  std::vector<Mor> mors;
  for (Obj x : first.object_map) objs.push_back(second.object_map[x]);
  for (Mor f : first.morphism_map) mors.push_back(second.morphism_map[f]);
  return {first.source, second.target, std::move(objs), std::move(mors)};
}

bool functor_equal(const FunctorData& a, const FunctorData& b) {
  return same_category(*a.source, *b.source) && same_category(*a.target, *b.target) &&
         a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

bool is_full(const FunctorData& F) {
  const auto& S = *F.source;
  for (Obj x = 0; x < S.object_count(); ++x)
    for (Obj y = 0; y < S.object_count(); ++y)
      for (Mor g : F.target->hom(F(x), F(y)))
        if (std::none_of(S.hom(x, y).begin(), S.hom(x, y).end(), [&](Mor f) { return F.map(f) == g; }))
          return false;
  return true;
}

bool is_faithful(const FunctorData& F) {
  const auto& S = *F.source;
  for (Obj x = 0; x < S.object_count(); ++x)
    for (Obj y = 0; y < S.object_count(); ++y) {
      const auto& h = S.hom(x, y);
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (F.map(h[i]) == F.map(h[j])) return false;
    }
  return true;
}

NatTransform make_nat_transform(FunctorData from, FunctorData to, std::vector<Mor> components) {
  const auto& C = *from.source;
  const auto& D = *from.target;
  if (!same_category(C, *to.source) || !same_category(D, *to.target))
    throw Error("DimensionMismatch", "natural transformation between functors with different ends");
  if (components.size() != C.object_count()) throw Error("DimensionMismatch", "one component per object");
  for (Obj x = 0; x < C.object_count(); ++x) {
    Mor c = components[x];
    if (c >= D.morphism_count() || D.morphism(c).source != from(x) || D.morphism(c).target != to(x))
      throw Error("WrongComponent", "component at " + C.object_label(x));
  }
  for (Mor f = 0; f < C.morphism_count(); ++f) {
    Obj x = C.morphism(f).source, y = C.morphism(f).target;
    if (D.compose(to.map(f), components[x]) != D.compose(components[y], from.map(f)))
      throw Error("NotNatural", "square at " + C.describe(f));
  }
  return {std::move(from), std::move(to), std::move(components)};
}

AdjunctionData make_adjunction(FunctorData L, FunctorData R, std::vector<Mor> unit, std::vector<Mor> counit) {
  if (!same_category(*L.source, *R.target) || !same_category(*L.target, *R.source))
    throw Error("DimensionMismatch", "adjoint functors must run in opposite directions");
  const auto& B = *L.source;
  const auto& A = *L.target;
  NatTransform eta = make_nat_transform(identity_functor(L.source), compose(R, L), std::move(unit));
  NatTransform eps = make_nat_transform(compose(L, R), identity_functor(L.target), std::move(counit));
  for (Obj b = 0; b < B.object_count(); ++b)
    if (A.compose(eps[L(b)], L.map(eta[b])) != A.identity(L(b)))
      throw Error("TriangleIdentityFails", "eps L o L eta at " + B.object_label(b));
  for (Obj a = 0; a < A.object_count(); ++a)
    if (B.compose(R.map(eps[a]), eta[R(a)]) != B.identity(R(a)))
      throw Error("TriangleIdentityFails", "R eps o eta R at " + A.object_label(a));
  return {std::move(L), std::move(R), std::move(eta), std::move(eps)};
}

AdjunctionData identity_adjunction(const CategoryRef& C) {
  std::vector<Mor> ids;
  for (Obj x = 0; x < C->object_count(); ++x) ids.push_back(C->identity(x));
  return make_adjunction(identity_functor(C), identity_functor(C), ids, ids);
}

}  // namespace hsep::fincat
