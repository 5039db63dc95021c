#include <algorithm>
#include <functional>

#include <gmpxx.h>

#include "hsep/error.hpp"
#include "hsep/fincat.hpp"

namespace hsep::fincat {

namespace {

// Counts candidate evaluations against the cap; the reported size is the full
// product space, which is what a search without pruning would visit.
class Budget {
 public:
  Budget(std::string what, mpz_class size, std::size_t cap)
      : what_(std::move(what)), size_(std::move(size)), cap_(cap) {}
  void tick() {
    if (++used_ > cap_) throw CapExceeded(what_, size_.get_str());
  }

 private:
  std::string what_;
  mpz_class size_;
  std::size_t cap_;
  std::size_t used_ = 0;
};

mpz_class power(std::size_t base, std::size_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

std::size_t position(const std::vector<Mor>& set, Mor f) {
  auto it = std::find(set.begin(), set.end(), f);
  if (it == set.end()) throw Error("InternalError", "morphism outside its hom-set");
  return static_cast<std::size_t>(it - set.begin());
}

// All families of components c_x in Hom(from x, to x) that pass `keep` and are
// natural, in lexicographic order.
std::vector<std::vector<Mor>> search_components(const FunctorData& from, const FunctorData& to,
                                                const std::function<bool(Obj, Mor)>& keep, std::size_t cap,
                                                const std::string& what) {
  const auto& C = *from.source;
  const auto& D = *from.target;
  const std::size_t n = C.object_count();
  mpz_class size = 1;
  for (Obj x = 0; x < n; ++x) size *= static_cast<unsigned long>(D.hom(from(x), to(x)).size());
  Budget budget(what, size, cap);

  std::vector<std::vector<Mor>> closing(n);  // morphisms whose later endpoint is x
  for (Mor f = 0; f < C.morphism_count(); ++f)
    closing[std::max(C.morphism(f).source, C.morphism(f).target)].push_back(f);

  std::vector<std::vector<Mor>> out;
  std::vector<Mor> comp(n);
  std::function<void(Obj)> go = [&](Obj x) {
    if (x == n) {
      out.push_back(comp);
      return;
    }
    for (Mor c : D.hom(from(x), to(x))) {
      budget.tick();
      if (!keep(x, c)) continue;
      comp[x] = c;
      bool ok = true;
      for (Mor f : closing[x]) {
        Obj s = C.morphism(f).source, t = C.morphism(f).target;
        if (D.compose(to.map(f), comp[s]) != D.compose(comp[t], from.map(f))) {
          ok = false;
          break;
        }
      }
      if (ok) go(x + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace

// ---- h-separability structures ---------------------------------------------

Mor HSepStructure::apply(Obj x, Obj y, Mor g) const {
  return P[x][y][position(functor.target->hom(functor(x), functor(y)), g)];
}

namespace {

struct Variable {
  Obj x, y;
  Mor g;  // in Hom(Fx, Fy)
};

// Constraint P(v0) = b o P(v1) o a (naturality, a or b may be identities) or
// P(v0) = P(v1) o P(v2) (multiplicativity).
struct Constraint {
  bool multiplicative;
  std::size_t v0, v1, v2;
  Mor a, b;
};

}  // namespace

std::vector<HSepStructure> find_h_separability_structures(const FunctorData& F, std::size_t cap) {
  const auto& C = *F.source;
  const auto& D = *F.target;
  const std::size_t n = C.object_count();

  std::vector<Variable> vars;
  std::vector<std::size_t> offset(n * n);
  mpz_class size = 1;
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) {
      offset[x * n + y] = vars.size();
      const auto& fh = D.hom(F(x), F(y));
      for (Mor g : fh) vars.push_back({x, y, g});
      size *= power(C.hom(x, y).size(), fh.size());
    }
  auto var_of = [&](Obj x, Obj y, Mor g) { return offset[x * n + y] + position(D.hom(F(x), F(y)), g); };

  // retraction P(Ff) = f fixes some variables outright
  std::vector<Mor> forced(vars.size(), static_cast<Mor>(-1));
  for (Mor f = 0; f < C.morphism_count(); ++f) {
    std::size_t v = var_of(C.morphism(f).source, C.morphism(f).target, F.map(f));
    if (forced[v] != static_cast<Mor>(-1) && forced[v] != f) return {};  // not faithful
    forced[v] = f;
  }
  for (const auto& v : vars)
    if (C.hom(v.x, v.y).empty()) return {};

  std::vector<std::vector<Constraint>> closing(vars.size());
  auto add = [&](Constraint c) {
    std::size_t last = std::max({c.v0, c.v1, c.multiplicative ? c.v2 : 0});
    closing[last].push_back(c);
  };
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const auto& [x, y, g] = vars[v];
    for (Obj x2 = 0; x2 < n; ++x2)
      for (Mor a : C.hom(x2, x))
        for (Obj y2 = 0; y2 < n; ++y2)
          for (Mor b : C.hom(y, y2)) {
            std::size_t w = var_of(x2, y2, D.compose(F.map(b), g, F.map(a)));
            add({false, w, v, 0, a, b});
          }
    for (Obj z = 0; z < n; ++z)
      for (Mor f : D.hom(F(y), F(z))) add({true, var_of(x, z, D.compose(f, g)), var_of(y, z, f), v, 0, 0});
  }

  Budget budget("h-separability structures of " + C.label() + " -> " + D.label(), size, cap);
  std::vector<Mor> value(vars.size());
  std::vector<HSepStructure> out;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == vars.size()) {
      HSepStructure s{F, std::vector<std::vector<std::vector<Mor>>>(n, std::vector<std::vector<Mor>>(n))};
      for (std::size_t i = 0; i < vars.size(); ++i) s.P[vars[i].x][vars[i].y].push_back(value[i]);
      out.push_back(std::move(s));
      return;
    }
    for (Mor p : C.hom(vars[v].x, vars[v].y)) {
      if (forced[v] != static_cast<Mor>(-1) && p != forced[v]) continue;
      budget.tick();
      value[v] = p;
      bool ok = std::all_of(closing[v].begin(), closing[v].end(), [&](const Constraint& c) {
        Mor rhs = c.multiplicative ? C.compose(value[c.v1], value[c.v2]) : C.compose(c.b, value[c.v1], c.a);
        return value[c.v0] == rhs;
      });
      if (ok) go(v + 1);
    }
  };
  go(0);
  return out;
}

bool is_h_separability_structure(const HSepStructure& s) {
  const auto& F = s.functor;
  const auto& C = *F.source;
  const auto& D = *F.target;
  const std::size_t n = C.object_count();
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) {
      if (s.P[x][y].size() != D.hom(F(x), F(y)).size()) return false;
      for (Mor p : s.P[x][y])
        if (C.morphism(p).source != x || C.morphism(p).target != y) return false;
    }
  for (Mor f = 0; f < C.morphism_count(); ++f)
    if (s.apply(C.morphism(f).source, C.morphism(f).target, F.map(f)) != f) return false;
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (Mor g : D.hom(F(x), F(y))) {
        for (Obj x2 = 0; x2 < n; ++x2)
          for (Mor a : C.hom(x2, x))
            for (Obj y2 = 0; y2 < n; ++y2)
              for (Mor b : C.hom(y, y2))
                if (s.apply(x2, y2, D.compose(F.map(b), g, F.map(a))) != C.compose(b, s.apply(x, y, g), a))
                  return false;
        for (Obj z = 0; z < n; ++z)
          for (Mor f : D.hom(F(y), F(z)))
            if (s.apply(x, z, D.compose(f, g)) != C.compose(s.apply(y, z, f), s.apply(x, y, g))) return false;
      }
  return true;
}

HSepStructure compose_structures(const HSepStructure& PG, const HSepStructure& PF) {
  const FunctorData& F = PF.functor;
  const FunctorData& G = PG.functor;
  FunctorData GF = compose(G, F);
  const std::size_t n = F.source->object_count();
  HSepStructure s{GF, std::vector<std::vector<std::vector<Mor>>>(n, std::vector<std::vector<Mor>>(n))};
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (Mor h : GF.target->hom(GF(x), GF(y))) s.P[x][y].push_back(PF.apply(x, y, PG.apply(F(x), F(y), h)));
  return s;
}

// ---- Rafael-type retractions ------------------------------------------------

RafaelWitnesses find_rafael_retractions(const AdjunctionData& adj, Side side, std::size_t cap) {
  const auto& L = adj.L;
  const auto& R = adj.R;
  const auto& eta = adj.unit;
  const auto& eps = adj.counit;
  RafaelWitnesses w;
  if (side == Side::Left) {
    const auto& B = *adj.B();
    FunctorData RL = compose(R, L);
    FunctorData id = identity_functor(adj.B());
    auto found = search_components(
        RL, id, [&](Obj b, Mor g) { return B.compose(g, eta[b]) == B.identity(b); }, cap,
        "gamma: RL -> Id on " + B.label());
    for (auto& comp : found) {
      NatTransform gamma{RL, id, comp};
      bool h = true;
      for (Obj b = 0; b < B.object_count() && h; ++b)
        h = B.compose(comp[b], comp[RL(b)]) == B.compose(comp[b], R.map(eps[L(b)]));
      if (h) w.h_separable.push_back(gamma);
      w.separable.push_back(std::move(gamma));
    }
  } else {
    const auto& A = *adj.A();
    FunctorData LR = compose(L, R);
    FunctorData id = identity_functor(adj.A());
    auto found = search_components(
        id, LR, [&](Obj a, Mor d) { return A.compose(eps[a], d) == A.identity(a); }, cap,
        "delta: Id -> LR on " + A.label());
    for (auto& comp : found) {
      NatTransform delta{id, LR, comp};
      bool h = true;
      for (Obj a = 0; a < A.object_count() && h; ++a)
        h = A.compose(comp[LR(a)], comp[a]) == A.compose(L.map(eta[R(a)]), comp[a]);
      if (h) w.h_separable.push_back(delta);
      w.separable.push_back(std::move(delta));
    }
  }
  return w;
}

// ---- monads ------------------------------------------------------------------

Monad induced_monad(const AdjunctionData& adj, Side side) {
  const auto& L = adj.L;
  const auto& R = adj.R;
  if (side == Side::Left) {
    FunctorData M = compose(R, L);
    std::vector<Mor> mu;
    for (Obj b = 0; b < adj.B()->object_count(); ++b) mu.push_back(R.map(adj.counit[L(b)]));
    Monad m{M, make_nat_transform(compose(M, M), M, mu), adj.unit};
    validate_monad(m, side);
    return m;
  }
  FunctorData W = compose(L, R);
  std::vector<Mor> delta;
  for (Obj a = 0; a < adj.A()->object_count(); ++a) delta.push_back(L.map(adj.unit[R(a)]));
  Monad m{W, make_nat_transform(W, compose(W, W), delta), adj.counit};
  validate_monad(m, side);
  return m;
}

void validate_monad(const Monad& m, Side side) {
  const auto& C = *m.M.source;
  const auto& M = m.M;
  for (Obj x = 0; x < C.object_count(); ++x) {
    Mor mu = m.mu[x], e = m.eta[x];
    if (side == Side::Left) {
      if (C.compose(mu, M.map(mu)) != C.compose(mu, m.mu[M(x)]))
        throw Error("MonadLawFails", "associativity at " + C.object_label(x));
      if (C.compose(mu, m.eta[M(x)]) != C.identity(M(x)) || C.compose(mu, M.map(e)) != C.identity(M(x)))
        throw Error("MonadLawFails", "unit at " + C.object_label(x));
    } else {
      if (C.compose(M.map(mu), mu) != C.compose(m.mu[M(x)], mu))
        throw Error("MonadLawFails", "coassociativity at " + C.object_label(x));
      if (C.compose(m.eta[M(x)], mu) != C.identity(M(x)) || C.compose(M.map(e), mu) != C.identity(M(x)))
        throw Error("MonadLawFails", "counit at " + C.object_label(x));
    }
  }
}

EilenbergMoore eilenberg_moore(const Monad& m, Side side) {
  const auto& C = *m.M.source;
  const auto& M = m.M;
  std::vector<std::pair<Obj, Mor>> algebras;
  for (Obj x = 0; x < C.object_count(); ++x) {
    const auto& candidates = side == Side::Left ? C.hom(M(x), x) : C.hom(x, M(x));
    for (Mor a : candidates) {
      bool ok = side == Side::Left ? C.compose(a, m.eta[x]) == C.identity(x) &&
                                         C.compose(a, M.map(a)) == C.compose(a, m.mu[x])
                                   : C.compose(m.eta[x], a) == C.identity(x) &&
                                         C.compose(M.map(a), a) == C.compose(m.mu[x], a);
      if (ok) algebras.emplace_back(x, a);
    }
  }
  auto respects = [&](Mor f, std::size_t i, std::size_t j) {
    Mor a = algebras[i].second, b = algebras[j].second;
    return side == Side::Left ? C.compose(f, a) == C.compose(b, M.map(f)) : C.compose(M.map(f), a) == C.compose(b, f);
  };

  std::vector<std::string> objects;
  for (const auto& [x, a] : algebras) objects.push_back("(" + C.object_label(x) + "," + C.morphism(a).label + ")");
  std::vector<HomSpec> homs;
  std::vector<std::string> ids;
  std::vector<CompositionSpec> comps;
  const std::size_t k = algebras.size();
  std::vector<std::vector<std::vector<Mor>>> hom(k, std::vector<std::vector<Mor>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    ids.push_back(C.morphism(C.identity(algebras[i].first)).label);
    for (std::size_t j = 0; j < k; ++j) {
      HomSpec h{objects[i], objects[j], {}};
      for (Mor f : C.hom(algebras[i].first, algebras[j].first))
        if (respects(f, i, j)) {
          hom[i][j].push_back(f);
          h.labels.push_back(C.morphism(f).label);
        }
      homs.push_back(std::move(h));
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        for (Mor g : hom[i][j])
          for (Mor f : hom[j][l])
            comps.push_back({objects[i], objects[j], objects[l], C.morphism(f).label, C.morphism(g).label,
                             C.morphism(C.compose(f, g)).label});
  std::string label = std::string(side == Side::Left ? "algebras" : "coalgebras") + " over " + C.label();
  CategoryRef E = FiniteCategory::construct(label, objects, homs, ids, comps);

  std::vector<Obj> objmap;
  for (const auto& alg : algebras) objmap.push_back(alg.first);
  std::vector<Mor> mormap(E->morphism_count());
  for (Mor f = 0; f < E->morphism_count(); ++f) {
    const auto& mor = E->morphism(f);
    mormap[f] = C.find_morphism(objmap[mor.source], objmap[mor.target], mor.label);
  }
  EilenbergMoore em{E, make_functor(E, M.source, objmap, mormap), {}};
  for (const auto& alg : algebras) em.structure.push_back(alg.second);
  return em;
}

EilenbergMoore eilenberg_moore(const AdjunctionData& adj, Side side) {
  return eilenberg_moore(induced_monad(adj, side), side);
}

namespace {

// Functors S -> T whose object images pass obj_ok and morphism images pass
// mor_ok, by backtracking over objects and then morphisms in index order.
std::vector<FunctorData> search_functors(const CategoryRef& S, const CategoryRef& T,
                                         const std::function<bool(Obj, Obj)>& obj_ok,
                                         const std::function<bool(Mor, Mor)>& mor_ok, std::size_t cap,
                                         const std::string& what) {
  const std::size_t n = S->object_count();
  const std::size_t m = S->morphism_count();
  mpz_class size = power(T->object_count(), n) * power(std::max<std::size_t>(T->morphism_count(), 1), m);
  Budget budget(what, size, cap);

  std::vector<std::vector<std::pair<Mor, Mor>>> closing(m);
  for (Mor f = 0; f < m; ++f)
    for (Mor g = 0; g < m; ++g)
      if (S->morphism(g).target == S->morphism(f).source)
        closing[std::max({f, g, S->compose(f, g)})].emplace_back(f, g);

  std::vector<FunctorData> out;
  std::vector<Obj> obj(n);
  std::vector<Mor> mor(m);
  std::function<void(Mor)> go_mor = [&](Mor f) {
    if (f == m) {
      out.push_back(make_functor(S, T, obj, mor));
      return;
    }
    const auto& fm = S->morphism(f);
    for (Mor cand : T->hom(obj[fm.source], obj[fm.target])) {
      budget.tick();
      if (!mor_ok(f, cand)) continue;
      if (S->identity(fm.source) == f && cand != T->identity(obj[fm.source])) continue;
      mor[f] = cand;
      bool ok = std::all_of(closing[f].begin(), closing[f].end(), [&](const std::pair<Mor, Mor>& p) {
        return mor[S->compose(p.first, p.second)] == T->compose(mor[p.first], mor[p.second]);
      });
      if (ok) go_mor(f + 1);
    }
  };
  std::function<void(Obj)> go_obj = [&](Obj x) {
    if (x == n) {
      go_mor(0);
      return;
    }
    for (Obj y = 0; y < T->object_count(); ++y) {
      budget.tick();
      if (!obj_ok(x, y)) continue;
      obj[x] = y;
      go_obj(x + 1);
    }
  };
  go_obj(0);
  return out;
}

}  // namespace

std::vector<FunctorData> find_functors(const CategoryRef& S, const CategoryRef& T, std::size_t cap) {
  auto any_obj = [](Obj, Obj) { return true; };
  auto any_mor = [](Mor, Mor) { return true; };
  return search_functors(S, T, any_obj, any_mor, cap, "functors " + S->label() + " -> " + T->label());
}

std::vector<FunctorData> find_section_functors(const FunctorData& U, std::size_t cap) {
  return search_functors(
      U.target, U.source, [&](Obj b, Obj e) { return U(e) == b; }, [&](Mor f, Mor g) { return U.map(g) == f; },
      cap, "section functors of " + U.source->label() + " -> " + U.target->label());
}

std::vector<NatTransform> find_monad_augmentations(const Monad& m, Side side, std::size_t cap) {
  const auto& C = *m.M.source;
  const auto& M = m.M;
  FunctorData id = identity_functor(M.source);
  std::vector<NatTransform> out;
  if (side == Side::Left) {
    auto keep = [&](Obj x, Mor g) {
      return C.compose(g, m.eta[x]) == C.identity(x) && C.compose(g, M.map(g)) == C.compose(g, m.mu[x]);
    };
    for (auto& comp : search_components(M, id, keep, cap, "augmentations of the monad on " + C.label()))
      out.push_back({M, id, std::move(comp)});
  } else {
    auto keep = [&](Obj x, Mor d) {
      return C.compose(m.eta[x], d) == C.identity(x) && C.compose(M.map(d), d) == C.compose(m.mu[x], d);
    };
    for (auto& comp : search_components(id, M, keep, cap, "grouplike morphisms of the comonad on " + C.label()))
      out.push_back({id, M, std::move(comp)});
  }
  return out;
}

}  // namespace hsep::fincat
