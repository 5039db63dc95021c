#include "hsep/io.hpp"

namespace hsep::io {

namespace {

Json rationals(const tensorbialg::Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json dims(const std::vector<std::size_t>& d) { return Json(d); }

}  // namespace

Json integer_to_json(const exactalg::Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json tensor_element_to_json(const sepkit::TensorPower& T2, const exactalg::Vec& x) {
  return Json{{"coordinates", x}, {"formal_sum", sepkit::formal_sum(T2, x)}};
}

Json verdict_to_json(const sepkit::SeparabilityVerdict& v) {
  sepkit::TensorPower T2 = sepkit::tensor_power(v.hom, 2);
  Json out;
  out["source"] = v.hom.source.label();
  out["target"] = v.hom.target.label();
  out["separable"] = v.is_separable;
  if (v.is_h_separable == sepkit::HVerdict::Undecided)
    out["h_separable"] = sepkit::to_string(v.is_h_separable);
  else
    out["h_separable"] = v.is_h_separable == sepkit::HVerdict::Holds;
  out["ring_epimorphism"] = v.is_ring_epi;
  out["image_central"] = v.image_central;
  out["target_commutative"] = v.target_commutative;
  out["one_tensor_one_separable"] = v.one_tensor_one_separable;
  out["tensor_square_moduli"] = T2.group().moduli();

  Json locus;
  locus["size"] = integer_to_json(v.locus_size);
  if (v.sep_locus.particular())
    locus["particular"] = tensor_element_to_json(T2, *v.sep_locus.particular());
  else
    locus["particular"] = nullptr;
  Json gens = Json::array();
  for (const auto& g : v.sep_locus.kernel_generators()) gens.push_back(tensor_element_to_json(T2, g));
  locus["kernel_generators"] = gens;
  out["separability_locus"] = locus;

  Json witnesses = Json::array();
  for (const auto& e : v.h_witnesses) witnesses.push_back(tensor_element_to_json(T2, e));
  out["h_idempotents"] = witnesses;
  if (v.is_h_separable == sepkit::HVerdict::Undecided) {
    out["h_idempotent_count"] = nullptr;
    out["undecided_reason"] = v.undecided_reason;
  } else {
    out["h_idempotent_count"] = integer_to_json(v.h_witness_count);
  }
  out["h_idempotents_truncated"] = v.witnesses_truncated;

  if (v.retractions) {
    Json rs = Json::array();
    for (const auto& E : *v.retractions) rs.push_back(hom_to_json(E)["matrix"]);
    out["retractions"] = rs;
  } else {
    out["retractions"] = nullptr;
  }
  return out;
}

Json tbold_to_json(const tensorbialg::TBoldReport& r) {
  Json ids = Json::array();
  for (const auto& c : r.identities) ids.push_back(Json{{"name", c.name}, {"holds", c.holds}, {"witness", c.witness}});
  return Json{{"field", r.field},
              {"V_dim", r.V_dim},
              {"N", r.N},
              {"carrier_dims", dims(r.carrier_dims)},
              {"primitive_dims", dims(r.primitive_dims)},
              {"tw_dims", dims(r.tw_dims)},
              {"ptw_dims", dims(r.ptw_dims)},
              {"tu_dims", dims(r.tu_dims)},
              {"identities", ids},
              {"all_hold", r.all_hold()}};
}

Json witness_to_json(const tensorbialg::NonHWitness& w) {
  return Json{{"element", w.element},
              {"omega_omega", rationals(w.omega_omega)},
              {"omega_eval", rationals(w.omega_eval)},
              {"omega_omega_text", w.omega_omega_text},
              {"omega_eval_text", w.omega_eval_text},
              {"differ", w.differ},
              {"omega_eta_is_identity", w.omega_eta_is_identity},
              {"note", w.note}};
}

}  // namespace hsep::io
