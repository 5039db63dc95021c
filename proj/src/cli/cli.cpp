#include "hsep/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>

#include "hsep/error.hpp"
#include "hsep/fincat.hpp"
#include "hsep/finring.hpp"
#include "hsep/io.hpp"
#include "hsep/sepkit.hpp"
#include "hsep/tensorbialg.hpp"

namespace hsep::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct Settings {
  std::string format = "text";
  std::string output;
  std::optional<std::size_t> cap;
};

std::size_t parse_cap(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || v == 0) throw Error("InvalidCap", source + ": " + text);
  return static_cast<std::size_t>(v);
}

std::size_t effective_cap(const Settings& s) {
  if (s.cap) return *s.cap;
  if (const char* env = std::getenv("SEPKIT_CAP")) return parse_cap(env, "SEPKIT_CAP");
  return kDefaultCliCap;
}

struct Loaded {
  Json doc;
  io::Context ctx;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.doc = io::read_document(path);
  l.ctx.base_dir = fs::path(path).parent_path();
  if (l.ctx.base_dir.empty()) l.ctx.base_dir = ".";
  return l;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<exactalg::Residue>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

void warn_all(const io::Context& ctx, std::ostream& err) {
  for (const auto& w : ctx.warnings) err << "warning: " << w << "\n";
}

// ---- ring -------------------------------------------------------------------

int ring_validate(const std::string& file, const Settings& s, std::ostream& out, std::ostream& err) {
  Loaded l = load(file);
  finring::FiniteRing R = io::ring_from_json(l.doc, l.ctx);
  warn_all(l.ctx, err);
  bool commutative = finring::commutativity_report(R).is_commutative;
  if (s.format == "json") {
    out << Json{{"valid", true},
                {"label", R.label()},
                {"order", io::integer_to_json(R.order())},
                {"moduli", R.moduli()},
                {"commutative", commutative},
                {"warnings", l.ctx.warnings}}
               .dump(2)
        << "\n";
  } else {
    out << "ring: " << R.label() << "\n"
        << "valid: true\n"
        << "order: " << R.order().get_str() << "\n"
        << "moduli: " << join(R.moduli()) << "\n"
        << "commutative: " << yes_no(commutative) << "\n";
  }
  return kHolds;
}

int ring_standard(const std::string& kind, const std::vector<std::string>& params, std::ostream& out,
                  std::ostream& err) {
  Json p = Json::object();
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("InvalidParams", "expected key=value, got " + kv);
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    Json parsed = Json::parse(value, nullptr, false);
    p[key] = parsed.is_discarded() ? Json(value) : parsed;
  }
  io::Context ctx;
  finring::StandardRing sr = io::standard_ring_from_json(Json{{"kind", kind}, {"params", p}}, ctx);
  warn_all(ctx, err);
  out << io::ring_to_json(sr.ring).dump(2) << "\n";
  return kHolds;
}

// ---- sep --------------------------------------------------------------------

finring::RingHom load_hom(const std::string& file, std::ostream& err) {
  Loaded l = load(file);
  finring::RingHom phi = io::hom_from_json(l.doc, l.ctx);
  warn_all(l.ctx, err);
  return phi;
}

int sep_report(const std::string& file, const Settings& s, std::ostream& out, std::ostream& err) {
  finring::RingHom phi = load_hom(file, err);
  sepkit::ReportOptions options;
  options.cap = effective_cap(s);
  sepkit::SeparabilityVerdict v = sepkit::h_separability_report(phi, options);
  int code = v.is_h_separable == sepkit::HVerdict::Holds ? kHolds
             : v.is_h_separable == sepkit::HVerdict::Fails ? kFails
                                                            : kUndecided;
  if (s.format == "json") {
    out << io::verdict_to_json(v).dump(2) << "\n";
    return code;
  }
  sepkit::TensorPower T2 = sepkit::tensor_power(phi, 2);
  out << "hom: " << phi.source.label() << " -> " << phi.target.label() << "\n"
      << "h-separable: " << sepkit::to_string(v.is_h_separable) << "; separable: " << yes_no(v.is_separable) << "\n"
      << "ring epimorphism: " << yes_no(v.is_ring_epi) << "\n"
      << "image central: " << yes_no(v.image_central) << "; target commutative: " << yes_no(v.target_commutative)
      << "\n"
      << "S (x)_R S moduli: " << join(T2.group().moduli()) << "\n"
      << "separability locus size: " << v.locus_size.get_str() << "\n";
  if (v.sep_locus.particular())
    out << "particular separability idempotent: " << sepkit::formal_sum(T2, *v.sep_locus.particular()) << "\n";
  if (v.is_h_separable == sepkit::HVerdict::Undecided) {
    out << "undecided: " << v.undecided_reason << "\n";
  } else {
    out << "h-separability idempotents: " << v.h_witness_count.get_str() << "\n";
    for (const auto& e : v.h_witnesses) out << "  " << join(e) << "  " << sepkit::formal_sum(T2, e) << "\n";
    if (v.witnesses_truncated) out << "  ...\n";
  }
  if (v.retractions)
    out << "retractions: " << v.retractions->size() << "\n";
  else
    out << "retractions: not enumerated (cap)\n";
  return code;
}

int sep_epi(const std::string& file, const Settings& s, std::ostream& out, std::ostream& err) {
  finring::RingHom phi = load_hom(file, err);
  bool epi = sepkit::is_ring_epimorphism(phi);
  sepkit::SweedlerCoring C(phi);
  sepkit::EpiCriteria c = sepkit::ring_epi_criteria(C, sepkit::separability_locus(C));
  if (s.format == "json") {
    out << Json{{"source", phi.source.label()},
                {"target", phi.target.label()},
                {"ring_epimorphism", epi},
                {"multiplication_bijective", c.mult_bijective},
                {"one_tensor_one_separable", c.one_tensor_one_separable},
                {"one_tensor_one_h", c.one_tensor_one_h}}
               .dump(2)
        << "\n";
  } else {
    out << "hom: " << phi.source.label() << " -> " << phi.target.label() << "\n"
        << "ring epimorphism: " << yes_no(epi) << "\n"
        << "multiplication bijective: " << yes_no(c.mult_bijective) << "\n"
        << "1 (x) 1 separability idempotent: " << yes_no(c.one_tensor_one_separable) << "\n"
        << "1 (x) 1 h-separability idempotent: " << yes_no(c.one_tensor_one_h) << "\n";
  }
  return epi ? kHolds : kFails;
}

int sep_idempotents(const std::string& file, bool h_only, const Settings& s, std::ostream& out, std::ostream& err) {
  finring::RingHom phi = load_hom(file, err);
  std::size_t cap = effective_cap(s);
  sepkit::SweedlerCoring C(phi);
  exactalg::AffineSolutionSet locus = sepkit::separability_locus(C);
  std::vector<exactalg::Vec> found;
  if (h_only) {
    sepkit::for_each_h_idempotent(C, locus, cap, [&](const exactalg::Vec& e) {
      found.push_back(e);
      return true;
    });
  } else {
    if (locus.size() > static_cast<unsigned long>(cap))
      throw CapExceeded("separability locus", locus.size().get_str());
    found = locus.members();
  }
  const sepkit::TensorPower& T2 = C.square();
  if (s.format == "json") {
    Json list = Json::array();
    for (const auto& e : found) list.push_back(io::tensor_element_to_json(T2, e));
    out << Json{{"source", phi.source.label()},
                {"target", phi.target.label()},
                {"kind", h_only ? "h-separability" : "separability"},
                {"count", found.size()},
                {"idempotents", list}}
               .dump(2)
        << "\n";
  } else {
    out << (h_only ? "h-separability" : "separability") << " idempotents: " << found.size() << "\n";
    for (const auto& e : found) out << "  " << join(e) << "  " << sepkit::formal_sum(T2, e) << "\n";
  }
  return found.empty() ? kFails : kHolds;
}

// ---- cat --------------------------------------------------------------------

Json category_summary(const fincat::FiniteCategory& C) {
  Json objects = Json::array();
  for (fincat::Obj x = 0; x < C.object_count(); ++x) objects.push_back(C.object_label(x));
  return Json{{"label", C.label()}, {"objects", objects}, {"morphisms", C.morphism_count()}};
}

std::string side_name(fincat::Side side) { return side == fincat::Side::Left ? "left" : "right"; }

int cat_check(const std::string& file, const Settings& s, std::ostream& out) {
  Loaded l = load(file);
  std::size_t cap = effective_cap(s);
  Json report;
  std::ostringstream text;
  switch (io::classify(l.doc)) {
    case io::DocumentKind::Category: {
      fincat::CategoryRef C = io::category_from_json(l.doc, l.ctx);
      report = Json{{"kind", "category"}, {"valid", true}, {"category", category_summary(*C)}};
      text << "category: " << C->label() << "\nvalid: true\nobjects: " << C->object_count()
           << "\nmorphisms: " << C->morphism_count() << "\n";
      break;
    }
    case io::DocumentKind::Functor: {
      fincat::FunctorData F = io::functor_from_json(l.doc, l.ctx);
      Json h;
      std::string h_text;
      try {
        auto structures = fincat::find_h_separability_structures(F, cap);
        h = structures.size();
        h_text = std::to_string(structures.size());
      } catch (const CapExceeded& e) {
        h = "UNDECIDED-BY-ENUMERATION";
        h_text = std::string("UNDECIDED-BY-ENUMERATION (") + e.what() + ")";
      }
      report = Json{{"kind", "functor"},
                    {"valid", true},
                    {"source", category_summary(*F.source)},
                    {"target", category_summary(*F.target)},
                    {"full", fincat::is_full(F)},
                    {"faithful", fincat::is_faithful(F)},
                    {"h_structures", h}};
      text << "functor: " << F.source->label() << " -> " << F.target->label() << "\nvalid: true\nfull: "
           << yes_no(fincat::is_full(F)) << "\nfaithful: " << yes_no(fincat::is_faithful(F))
           << "\nh-separability structures: " << h_text << "\n";
      break;
    }
    case io::DocumentKind::Adjunction: {
      fincat::AdjunctionData adj = io::adjunction_from_json(l.doc, l.ctx);
      for (fincat::Side side : {fincat::Side::Left, fincat::Side::Right})
        fincat::validate_monad(fincat::induced_monad(adj, side), side);
      report = Json{{"kind", "adjunction"},
                    {"valid", true},
                    {"B", category_summary(*adj.B())},
                    {"A", category_summary(*adj.A())}};
      text << "adjunction: L: " << adj.B()->label() << " -> " << adj.A()->label() << " left adjoint to R\n"
           << "valid: true\ntriangle identities: hold\nmonad and comonad laws: hold\n";
      break;
    }
    default:
      throw Error("SchemaError", "$: expected a category, functor or adjunction document");
  }
  out << (s.format == "json" ? report.dump(2) + "\n" : text.str());
  return kHolds;
}

std::string components_text(const fincat::NatTransform& t) {
  const fincat::FiniteCategory& C = *t.from.target;
  std::string s;
  for (fincat::Obj x = 0; x < t.components.size(); ++x)
    s += (x ? ", " : "") + C.object_label(x) + ": " + C.morphism(t[x]).label;
  return "{" + s + "}";
}

Json components_json(const fincat::NatTransform& t) {
  const fincat::FiniteCategory& C = *t.from.target;
  Json j = Json::object();
  for (fincat::Obj x = 0; x < t.components.size(); ++x) j[C.object_label(x)] = C.morphism(t[x]).label;
  return j;
}

int cat_rafael(const std::string& file, const std::string& side_text, const Settings& s, std::ostream& out) {
  Loaded l = load(file);
  fincat::AdjunctionData adj = io::adjunction_from_json(l.doc, l.ctx);
  fincat::Side side = side_text == "right" ? fincat::Side::Right : fincat::Side::Left;
  std::size_t cap = effective_cap(s);

  fincat::RafaelWitnesses w = fincat::find_rafael_retractions(adj, side, cap);
  fincat::Monad m = fincat::induced_monad(adj, side);
  fincat::EilenbergMoore em = fincat::eilenberg_moore(m, side);
  auto sections = fincat::find_section_functors(em.forgetful, cap);
  auto augmentations = fincat::find_monad_augmentations(m, side, cap);
  bool agree = w.h_separable.size() == sections.size() && sections.size() == augmentations.size();
  if (!agree)
    throw Error("InternalCriterionMismatch", "h-retractions " + std::to_string(w.h_separable.size()) +
                                                 ", sections " + std::to_string(sections.size()) +
                                                 ", augmentations " + std::to_string(augmentations.size()));
  const std::string functor = side == fincat::Side::Left ? "L" : "R";
  const std::string retraction = side == fincat::Side::Left ? "gamma: RL -> Id" : "delta: Id -> LR";
  bool holds = !w.h_separable.empty();

  if (s.format == "json") {
    Json hs = Json::array();
    for (const auto& t : w.h_separable) hs.push_back(components_json(t));
    out << Json{{"side", side_name(side)},
                {"B", category_summary(*adj.B())},
                {"A", category_summary(*adj.A())},
                {"separable_retractions", w.separable.size()},
                {"h_retractions", hs},
                {"eilenberg_moore_objects", em.category->object_count()},
                {"section_functors", sections.size()},
                {"augmentations", augmentations.size()},
                {"counts_agree", agree},
                {"h_separable", holds}}
               .dump(2)
        << "\n";
  } else {
    out << "adjunction: L: " << adj.B()->label() << " -> " << adj.A()->label() << "\n"
        << "side: " << side_name(side) << " (" << retraction << ")\n"
        << "separable retractions: " << w.separable.size() << "\n"
        << "h-retractions: " << w.h_separable.size() << "\n";
    for (const auto& t : w.h_separable) out << "  " << components_text(t) << "\n";
    out << (side == fincat::Side::Left ? "Eilenberg-Moore algebras: " : "Eilenberg-Moore coalgebras: ")
        << em.category->object_count() << "\n"
        << "section functors: " << sections.size() << "\n"
        << (side == fincat::Side::Left ? "monad augmentations: " : "comonad grouplikes: ") << augmentations.size()
        << "\n"
        << "counts agree: " << yes_no(agree) << "\n"
        << functor << " separable: " << yes_no(!w.separable.empty()) << "\n"
        << functor << " h-separable: " << yes_no(holds) << "\n";
  }
  return holds ? kHolds : kFails;
}

// ---- talg -------------------------------------------------------------------

int talg_verify(std::size_t dim, std::size_t deg, const std::string& field, std::size_t guard, const Settings& s,
                std::ostream& out) {
  auto k = tensorbialg::ExactField::parse(field);
  tensorbialg::TBoldReport r = tensorbialg::verify_t_bold_h_separability(dim, k, deg, guard);
  if (s.format == "json") {
    out << io::tbold_to_json(r).dump(2) << "\n";
  } else {
    out << "field: " << r.field << "; V_dim: " << r.V_dim << "; N: " << r.N << "\n"
        << "dims by degree 0..N\n"
        << "  T V:      " << join(r.carrier_dims) << "\n"
        << "  W = P T V: " << join(r.primitive_dims) << "\n"
        << "  T W:      " << join(r.tw_dims) << "\n"
        << "  P T W:    " << join(r.ptw_dims) << "\n"
        << "  T U:      " << join(r.tu_dims) << "\n";
    for (const auto& c : r.identities) {
      out << c.name << ": " << (c.holds ? "holds" : "FAILS") << "\n";
      if (!c.holds) out << "  witness: " << c.witness << "\n";
    }
    out << "all identities hold: " << yes_no(r.all_hold()) << "\n";
  }
  return r.all_hold() ? kHolds : kFails;
}

int talg_witness(std::size_t dim, std::size_t deg, const std::string& field, const Settings& s, std::ostream& out) {
  auto k = tensorbialg::ExactField::parse(field);
  tensorbialg::NonHWitness w = tensorbialg::plain_T_nonh_witness(dim, k, deg);
  if (s.format == "json") {
    out << io::witness_to_json(w).dump(2) << "\n";
  } else {
    out << "element: " << w.element << "\n"
        << "omega omega: " << w.omega_omega_text << "\n"
        << "omega o Omega eps T: " << w.omega_eval_text << "\n"
        << "evaluations differ: " << yes_no(w.differ) << "\n"
        << "omega o eta = Id: " << yes_no(w.omega_eta_is_identity) << "\n"
        << "note: " << w.note << "\n";
  }
  return w.differ && w.omega_eta_is_identity ? kHolds : kFails;
}

// ---- corpus -----------------------------------------------------------------

/// Every key of expected appears in actual with a matching value; arrays
/// match elementwise.
bool json_matches(const Json& expected, const Json& actual, const std::string& path, std::string& why) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      why = path + ": expected an object";
      return false;
    }
    for (const auto& [key, value] : expected.items()) {
      auto it = actual.find(key);
      if (it == actual.end()) {
        why = path + "." + key + ": missing";
        return false;
      }
      if (!json_matches(value, *it, path + "." + key, why)) return false;
    }
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) {
      why = path + ": expected " + expected.dump() + ", got " + actual.dump();
      return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!json_matches(expected[i], actual[i], path + "[" + std::to_string(i) + "]", why)) return false;
    return true;
  }
  if (expected != actual) {
    why = path + ": expected " + expected.dump() + ", got " + actual.dump();
    return false;
  }
  return true;
}

struct CaseResult {
  std::string name;
  std::vector<std::string> mismatches;
};

CaseResult run_case(const fs::path& dir) {
  CaseResult result{dir.filename().string(), {}};
  auto fail = [&](const std::string& m) { result.mismatches.push_back(m); };
  Json expect;
  try {
    expect = io::read_document(dir / "expect.json");
  } catch (const Error& e) {
    fail(e.what());
    return result;
  }
  if (!expect.contains("args") || !expect["args"].is_array()) {
    fail("expect.json has no \"args\" array");
    return result;
  }
  std::vector<std::string> args;
  for (const auto& a : expect["args"]) {
    std::string s = a.is_string() ? a.get<std::string>() : a.dump();
    if (!s.empty() && s[0] != '-' && fs::exists(dir / s)) s = (dir / s).string();
    args.push_back(s);
  }

  std::ostringstream out, err;
  int code = run(args, out, err);
  if (expect.contains("exit") && expect["exit"] != code)
    fail("exit " + std::to_string(code) + ", expected " + expect["exit"].dump() + " " + err.str());
  for (const auto& needle : expect.value("contains", Json::array())) {
    std::string n = needle.get<std::string>();
    if (out.str().find(n) == std::string::npos) fail("output lacks \"" + n + "\"");
  }
  for (const auto& needle : expect.value("error_contains", Json::array())) {
    std::string n = needle.get<std::string>();
    if (err.str().find(n) == std::string::npos) fail("error output lacks \"" + n + "\"");
  }
  if (expect.contains("json")) {
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream jout, jerr;
    int jcode = run(args, jout, jerr);
    if (jcode != code) fail("--format json changed the exit code to " + std::to_string(jcode));
    Json actual = Json::parse(jout.str(), nullptr, false);
    std::string why;
    if (actual.is_discarded())
      fail("--format json output is not JSON");
    else if (!json_matches(expect["json"], actual, "$", why))
      fail(why);
  }
  return result;
}

int corpus_run(const std::string& dir, std::ostream& out) {
  if (!fs::is_directory(dir)) throw Error("FileNotFound", dir);
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_directory() && fs::exists(entry.path() / "expect.json")) cases.push_back(entry.path());
  if (cases.empty()) throw Error("EmptyCorpus", dir);
  std::sort(cases.begin(), cases.end());

  std::vector<std::future<CaseResult>> pending;
  for (const auto& c : cases) pending.push_back(std::async(std::launch::async, run_case, c));
  std::size_t failed = 0;
  for (auto& f : pending) {
    CaseResult r = f.get();
    if (r.mismatches.empty()) {
      out << "PASS " << r.name << "\n";
      continue;
    }
    ++failed;
    for (const auto& m : r.mismatches) out << "FAIL " << r.name << ": " << m << "\n";
  }
  out << "corpus: " << cases.size() << " cases, " << failed << " failed\n";
  return failed == 0 ? kHolds : kFails;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact separability and h-separability verdicts", "sepkit"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  std::string cap_text;
  app.add_option("--format", settings.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", settings.output, "Write the report to this file");
  app.add_option("--cap", cap_text, "Enumeration cap (default 1000000, or SEPKIT_CAP)");

  std::string file, kind, side = "left", field = "q";
  std::vector<std::string> params;
  bool h_only = false;
  std::size_t dim = 1, deg = 2, guard = tensorbialg::kDefaultDimensionGuard;
  std::function<int(std::ostream&)> action;

  auto* ring = app.add_subcommand("ring", "Finite ring documents")->require_subcommand(1);
  auto* validate = ring->add_subcommand("validate", "Validate a ring document");
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&](std::ostream& o) { return ring_validate(file, settings, o, err); }; });
  auto* standard = ring->add_subcommand("standard", "Emit a standard ring as a ring document");
  standard->add_option("kind", kind)->required();
  standard->add_option("params", params, "key=value; values are JSON or ring shorthands such as Z/4");
  standard->callback([&] { action = [&](std::ostream& o) { return ring_standard(kind, params, o, err); }; });

  auto* sep = app.add_subcommand("sep", "Separability of ring homomorphisms")->require_subcommand(1);
  auto* report = sep->add_subcommand("report", "Full separability verdict");
  report->add_option("hom", file)->required();
  report->callback([&] { action = [&](std::ostream& o) { return sep_report(file, settings, o, err); }; });
  auto* epi = sep->add_subcommand("epi", "Ring epimorphism test");
  epi->add_option("hom", file)->required();
  epi->callback([&] { action = [&](std::ostream& o) { return sep_epi(file, settings, o, err); }; });
  auto* idem = sep->add_subcommand("idempotents", "List separability idempotents");
  idem->add_option("hom", file)->required();
  idem->add_flag("--h-only", h_only, "Only h-separability idempotents");
  idem->callback([&] { action = [&](std::ostream& o) { return sep_idempotents(file, h_only, settings, o, err); }; });

  auto* cat = app.add_subcommand("cat", "Finite categories")->require_subcommand(1);
  auto* check = cat->add_subcommand("check", "Validate a category, functor or adjunction document");
  check->add_option("doc", file)->required();
  check->callback([&] { action = [&](std::ostream& o) { return cat_check(file, settings, o); }; });
  auto* rafael = cat->add_subcommand("rafael", "Rafael-type retractions of an adjunction");
  rafael->add_option("adjunction", file)->required();
  rafael->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  rafael->callback([&] { action = [&](std::ostream& o) { return cat_rafael(file, side, settings, o); }; });

  auto* talg = app.add_subcommand("talg", "Truncated tensor bialgebras")->require_subcommand(1);
  auto* verify = talg->add_subcommand("verify", "Check the h-separability identities of T");
  auto* witness = talg->add_subcommand("witness", "The omega failure witness for plain T");
  for (auto* sub : {verify, witness}) {
    sub->add_option("--dim", dim, "dim V")->required();
    sub->add_option("--deg", deg, "Truncation degree N")->required();
    sub->add_option("--field", field, "q or a prime <= 97")->required();
  }
  verify->add_option("--guard", guard, "Dimension guard");
  verify->callback([&] { action = [&](std::ostream& o) { return talg_verify(dim, deg, field, guard, settings, o); }; });
  witness->callback([&] { action = [&](std::ostream& o) { return talg_witness(dim, deg, field, settings, o); }; });

  auto* corpus = app.add_subcommand("corpus", "Golden corpus")->require_subcommand(1);
  auto* crun = corpus->add_subcommand("run", "Run every case directory");
  crun->add_option("dir", file)->required();
  crun->callback([&] { action = [&](std::ostream& o) { return corpus_run(file, o); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << one_line(e.what()) << "\n";
    return kInputError;
  }

  std::ostringstream report_text;
  int code = kInputError;
  try {
    if (!cap_text.empty()) settings.cap = parse_cap(cap_text, "--cap");
    code = action(report_text);
  } catch (const CapExceeded& e) {
    report_text << (settings.format == "json" ? Json{{"verdict", "UNDECIDED-BY-ENUMERATION"}, {"reason", e.what()}}.dump(2)
                                              : "verdict: UNDECIDED-BY-ENUMERATION")
                << "\n";
    err << one_line(e.what()) << "\n";
    code = kUndecided;
  } catch (const Error& e) {
    err << one_line(e.what()) << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "InputError: " << one_line(e.what()) << "\n";
    return kInputError;
  }

  if (settings.output.empty()) {
    out << report_text.str();
  } else {
    std::ofstream f(settings.output);
    if (!f) {
      err << "OutputError: " << settings.output << "\n";
      return kInputError;
    }
    f << report_text.str();
  }
  return code;
}

}  // namespace hsep::cli
