#include "hsep/fincat.hpp"

namespace hsep::fincat {

namespace {

FunctorData by_labels(const CategoryRef& S, const CategoryRef& T, const std::vector<std::string>& objects) {
  // thin targets only: every morphism goes to the unique arrow between the images
  std::vector<Obj> objmap;
  for (const auto& o : objects) objmap.push_back(T->find_object(o));
  std::vector<Mor> mormap;
  for (Mor f = 0; f < S->morphism_count(); ++f)
    mormap.push_back(T->hom(objmap[S->morphism(f).source], objmap[S->morphism(f).target]).at(0));
  return make_functor(S, T, objmap, mormap);
}

std::vector<Mor> arrows(const CategoryRef& C, const std::vector<std::pair<std::string, std::string>>& ends) {
  std::vector<Mor> out;
  for (const auto& [x, y] : ends) out.push_back(C->hom(C->find_object(x), C->find_object(y)).at(0));
  return out;
}

CategoryRef cyclic2() { return monoid_category("C2", {"1", "g"}, {{0, 1}, {1, 0}}, 0); }

}  // namespace

std::vector<NamedCategory> example_categories() {
  auto parallel = FiniteCategory::construct("parallel", {"0", "1"},
                                            {{"0", "0", {"id"}}, {"1", "1", {"id"}}, {"0", "1", {"f", "g"}}},
                                            {"id", "id"}, {});
  return {
      {"terminal", terminal_category()},
      {"chain2", chain_category(2)},
      {"chain3", chain_category(3)},
      {"discrete2", poset_category("discrete2", {"a", "b"}, {})},
      {"cospan", poset_category("cospan", {"a", "b", "c"}, {{"a", "c"}, {"b", "c"}})},
      {"square", poset_category("square", {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}})},
      {"parallel", parallel},
      {"C2", cyclic2()},
      {"idempotent", monoid_category("idempotent", {"1", "z"}, {{0, 1}, {1, 1}}, 0)},
      {"C3", monoid_category("C3", {"1", "g", "g2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0)},
  };
}

std::vector<NamedAdjunction> example_adjunctions() {
  auto T = terminal_category();
  auto C2 = chain_category(2);
  auto C3 = chain_category(3);
  std::vector<NamedAdjunction> out;
  out.push_back({"identity on chain2", identity_adjunction(C2)});
  // collapse -| top
  out.push_back({"chain2 to terminal",
                 make_adjunction(by_labels(C2, T, {"*", "*"}), by_labels(T, C2, {"1"}), arrows(C2, {{"0", "1"}, {"1", "1"}}),
                                 arrows(T, {{"*", "*"}}))});
  // 0 -> 0, 1 -> 2 with right adjoint 0,1 -> 0, 2 -> 1; RL = Id
  out.push_back({"chain2 into chain3",
                 make_adjunction(by_labels(C2, C3, {"0", "2"}), by_labels(C3, C2, {"0", "0", "1"}),
                                 arrows(C2, {{"0", "0"}, {"1", "1"}}), arrows(C3, {{"0", "0"}, {"0", "1"}, {"2", "2"}}))});
  // bottom -| collapse
  out.push_back({"terminal at bottom of chain2",
                 make_adjunction(by_labels(T, C2, {"0"}), by_labels(C2, T, {"*", "*"}), arrows(T, {{"*", "*"}}),
                                 arrows(C2, {{"0", "0"}, {"0", "1"}}))});
  auto G = cyclic2();
  Mor g = G->find_morphism(0, 0, "g");
  out.push_back({"C2 twisted identity", make_adjunction(identity_functor(G), identity_functor(G), {g}, {g})});
  return out;
}

}  // namespace hsep::fincat
