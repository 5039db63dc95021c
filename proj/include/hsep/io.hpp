#pragma once

// JSON documents for rings, homomorphisms, categories, functors and
// adjunctions, and the structured forms of every report.
//
// A document that is a string is a reference: a file path relative to the
// directory of the referring document, or for rings a shorthand "Z/n",
// "F_p" or "F_q" (q = 4, 8, 9, 16, 25, 27, 49).
//
// Rings:
//   {"label", "moduli", "unit", "mul", "basis"?}
//   {"kind": "modular", "params": {"n"}}
//   {"kind": "matrix" | "triangular", "params": {"base", "n"}}
//   {"kind": "product", "params": {"left", "right"}}
//   {"kind": "group_ring", "params": {"base", "cyclic"} or {"base", "table", "elements"?}}
//   {"kind": "polynomial_quotient", "params": {"p", "f"}}   f low degree first, monic
//   {"kind": "tensor_product", "params": {"left": hom, "right": hom}}
//   {"kind": "quotient", "params": {"base", "ideal": [coords..]}}
// Homomorphisms:
//   {"source", "target", "matrix"}   matrix[i][j] = coordinate i of phi(e_j)
//   {"source", "target", "images"}   images[j] = phi(e_j)
//   {"standard": ring of some kind, "hom": name}
//   {"identity": ring}, {"compose": [second, first]}, {"pair": [hom, hom]}
// Categories:
//   {"label"?, "objects", "homs": [{"source", "target", "labels"}],
//    "identities": [..] | {obj: label}, "compose": [[x, y, z, f, g, h]..]}
//   with f o g = h for g: x -> y, f: y -> z; identity labels may be left out of homs.
//   {"kind": "poset", "objects", "leq": [[a, b]..]}, {"kind": "chain", "n"},
//   {"kind": "terminal"}, {"kind": "monoid", "elements", "table", "identity"},
//   {"kind": "example", "name"}
// Functors:
//   {"source", "target", "objects": {x: Fx}, "morphisms": {"x->y:f": label}}
//   Unlisted morphisms go to identities or to the only member of their hom-set.
// Adjunctions:
//   {"B", "A", "L": functor body, "R": functor body, "unit": {b: label},
//    "counit": {a: label}}, or {"example": name}. Singleton components may be left out.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsep/fincat.hpp"
#include "hsep/finring.hpp"
#include "hsep/sepkit.hpp"
#include "hsep/tensorbialg.hpp"

namespace hsep::io {

using Json = nlohmann::json;
namespace fs = std::filesystem;

/// FileNotFound or ParseError (with line and column).
Json read_document(const fs::path& path);

/// Resolution context: relative references are read against base_dir and
/// construction warnings (e.g. a reducible polynomial) are appended.
struct Context {
  fs::path base_dir = ".";
  std::vector<std::string> warnings;
};

finring::FiniteRing ring_from_json(const Json& doc, Context& ctx);
/// A ring document with a "kind", including its canonical homomorphisms.
finring::StandardRing standard_ring_from_json(const Json& doc, Context& ctx);
finring::RingHom hom_from_json(const Json& doc, Context& ctx);

Json ring_to_json(const finring::FiniteRing& R);
Json hom_to_json(const finring::RingHom& phi);

enum class DocumentKind { Ring, Hom, Category, Functor, Adjunction };
DocumentKind classify(const Json& doc);

fincat::CategoryRef category_from_json(const Json& doc, Context& ctx);
fincat::FunctorData functor_from_json(const Json& doc, Context& ctx);
fincat::AdjunctionData adjunction_from_json(const Json& doc, Context& ctx);

/// Small integers as numbers, anything past 64 bits as a decimal string.
Json integer_to_json(const exactalg::Integer& n);

/// Canonical coordinates together with the formal sum over the basis of S.
Json tensor_element_to_json(const sepkit::TensorPower& T2, const exactalg::Vec& x);
Json verdict_to_json(const sepkit::SeparabilityVerdict& v);
Json tbold_to_json(const tensorbialg::TBoldReport& r);
Json witness_to_json(const tensorbialg::NonHWitness& w);

}  // namespace hsep::io
