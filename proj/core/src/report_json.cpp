#include "cyclominus/report_json.hpp"

#include <sstream>

namespace cyclominus {

namespace {

json type_array(const AbelianType& t) {
  json arr = json::array();
  for (const auto& d : t.invariant_factors()) arr.push_back(d.get_str());
  return arr;
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

json to_json(const FieldSpec& spec) {
  json j;
  j["m"] = spec.modulus();
  j["gens"] = spec.gens();
  return j;
}

json to_json(const AbelianType& type) { return type_array(type); }

json to_json(const HMinusResult& res, const FieldSpec& spec) {
  json j;
  j["field"] = to_json(spec);
  j["degree"] = spec.degree();
  j["w"] = res.w;
  j["q"] = res.q;
  j["q_certain"] = res.q_certain;
  j["q_inferred"] = res.q_inferred;
  j["h_minus"] = res.value.get_str();
  json orbits = json::array();
  for (const auto& of : res.orbit_factors) {
    json o;
    o["conductor"] = of.conductor;
    o["order"] = of.order;
    o["size"] = of.size;
    o["value"] = q_str(of.value);
    orbits.push_back(std::move(o));
  }
  j["orbit_factors"] = std::move(orbits);
  return j;
}

json to_json(const PredictionReport& rep) {
  json j;
  j["claim"] = rep.claim;
  json inputs;
  for (const auto& [k, v] : rep.inputs) inputs[k] = v;
  j["inputs"] = std::move(inputs);
  j["applicable"] = rep.applicable;
  if (!rep.note.empty()) j["note"] = rep.note;
  switch (rep.kind) {
    case ClaimKind::subgroup: j["kind"] = "subgroup"; break;
    case ClaimKind::divides: j["kind"] = "divides"; break;
    case ClaimKind::not_divides: j["kind"] = "not-divides"; break;
  }
  j["predicted_type"] = type_array(rep.predicted_type);
  j["predicted_order"] = rep.predicted_order.get_str();
  if (rep.target) j["target"] = to_json(*rep.target);
  if (rep.relative) j["relative"] = to_json(*rep.relative);
  if (rep.oracle_value) {
    j["oracle"] = q_str(*rep.oracle_value);
    j["oracle_q_uncertain"] = rep.oracle_q_uncertain;
  } else {
    j["oracle"] = nullptr;
  }
  j["verdict"] = to_string(rep.verdict);
  return j;
}

json to_json(const NormKernelReport& rep) {
  json j;
  j["base"] = rep.base_name;
  j["p"] = rep.p;
  j["f"] = rep.f;
  j["ray_class_type"] = type_array(rep.ray_class_type);
  j["norm_kernel_type"] = type_array(rep.kernel_type);
  j["predicted_C"] = type_array(rep.predicted);
  j["match"] = to_string(rep.match);
  json counts;
  counts["phi2"] = rep.phi_sq.get_str();
  counts["w"] = rep.w;
  counts["order"] = rep.order.get_str();
  j["counts"] = std::move(counts);
  j["order_formula_ok"] = rep.order_formula_ok;
  j["kernel_matches_degree"] = rep.kernel_matches_degree;
  return j;
}

json to_json(const MetsankylaReport& rep) {
  json j;
  j["claim"] = "metsankyla";
  j["l1"] = to_json(rep.l1);
  j["l2"] = to_json(rep.l2);
  j["l"] = to_json(rep.l);
  j["a1"] = to_json(rep.a1);
  j["a2"] = to_json(rep.a2);
  json h;
  h["l"] = rep.h_l.value.get_str();
  h["l1"] = rep.h_l1.value.get_str();
  h["l2"] = rep.h_l2.value.get_str();
  h["a1"] = rep.h_a1.value.get_str();
  h["a2"] = rep.h_a2.value.get_str();
  j["h_minus"] = std::move(h);
  j["t1"] = q_str(rep.t1);
  j["t2"] = q_str(rep.t2);
  j["t1_integral"] = rep.t1_integral;
  j["t2_integral"] = rep.t2_integral;
  j["uncertain_fields"] = rep.uncertain_fields;
  j["identity_ratio"] = q_str(rep.identity_ratio);
  j["verdict"] = to_string(rep.verdict);
  return j;
}

json to_json(const Lemma3Report& rep) {
  json j;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["surjective"] = rep.surjective;
  j["witnesses"] = rep.witnesses;
  j["kernel_type"] = type_array(rep.kernel_type);
  j["expected_type"] = type_array(rep.expected_type);
  j["types_match"] = rep.types_match;
  j["completion_ok"] = rep.completion_ok;
  j["enumerated"] = rep.enumerated;
  j["enumeration_ok"] = rep.enumeration_ok;
  j["pass"] = rep.pass;
  return j;
}

json to_json(const RootDiscriminant& rd, const FieldSpec& spec) {
  json j;
  j["field"] = to_json(spec);
  j["degree"] = spec.degree();
  j["disc"] = rd.disc.get_str();
  j["base"] = rd.base.get_str();
  j["num"] = rd.num;
  j["den"] = rd.den;
  j["decimal"] = rd.decimal;
  return j;
}

std::string render_text(const HMinusResult& res, const FieldSpec& spec) {
  std::ostringstream os;
  os << "field " << spec.to_string() << "  degree " << spec.degree() << "  w " << res.w << "\n";
  os << "unit index q = " << res.q << (res.q_certain ? " (certain)" : " (uncertain)")
     << (res.q_inferred ? ", forced by integrality" : "") << "\n";
  for (const auto& of : res.orbit_factors)
    os << "  orbit f=" << of.conductor << " d=" << of.order << " size=" << of.size << "  "
       << of.value.get_str() << "\n";
  os << "h_minus = " << res.value.get_str() << "\n";
  if (!res.q_certain && !res.q_inferred) {
    mpz_class other = res.value * (res.q == 1 ? 2 : 1);
    if (res.q == 2) other = res.value / 2;
    os << "candidates: " << res.value.get_str() << " (q=" << res.q << "), " << other.get_str()
       << " (q=" << (res.q == 1 ? 2 : 1) << ")\n";
  }
  return os.str();
}

std::string render_text(const PredictionReport& rep) {
  std::ostringstream os;
  os << "claim " << rep.claim << "\n";
  for (const auto& [k, v] : rep.inputs) os << "  " << k << " = " << v << "\n";
  if (!rep.applicable) {
    os << "not applicable: " << rep.note << "\n";
    return os.str();
  }
  if (!rep.note.empty()) os << rep.note << "\n";
  if (rep.kind == ClaimKind::subgroup)
    os << "predicted subgroup " << rep.predicted_type.to_string() << " (order "
       << rep.predicted_order.get_str() << ")\n";
  else
    os << "claim: " << rep.predicted_order.get_str()
       << (rep.kind == ClaimKind::divides ? " divides" : " does not divide")
       << " the minus class number\n";
  if (rep.target) os << "target " << rep.target->to_string() << "\n";
  if (rep.relative) os << "relative to " << rep.relative->to_string() << "\n";
  if (rep.oracle_value)
    os << "oracle " << rep.oracle_value->get_str()
       << (rep.oracle_q_uncertain ? " (unit index uncertain)" : "") << "\n";
  os << "verdict " << to_string(rep.verdict) << "\n";
  return os.str();
}

std::string render_text(const NormKernelReport& rep) {
  std::ostringstream os;
  os << "base " << rep.base_name << "  p " << rep.p << "  f " << rep.f << "\n";
  os << "ray class group " << rep.ray_class_type.to_string() << " (order "
     << rep.order.get_str() << ", phi^2 " << rep.phi_sq.get_str() << ", w " << rep.w << ")\n";
  os << "norm kernel " << rep.kernel_type.to_string() << "\n";
  os << "predicted " << rep.predicted.to_string() << "  match " << to_string(rep.match) << "\n";
  os << "order formula " << (rep.order_formula_ok ? "ok" : "FAIL") << ", kernel degree "
     << (rep.kernel_matches_degree ? "ok" : "FAIL") << "\n";
  return os.str();
}

std::string render_text(const MetsankylaReport& rep) {
  std::ostringstream os;
  os << "L1 " << rep.l1.to_string() << "  L2 " << rep.l2.to_string() << "\n";
  os << "L = L1 L2 " << rep.l.to_string() << "  h_minus " << rep.h_l.value.get_str() << "\n";
  os << "h_minus(L1) " << rep.h_l1.value.get_str() << "  h_minus(L2) " << rep.h_l2.value.get_str()
     << "\n";
  os << "T1 " << rep.t1.get_str() << (rep.t1_integral ? "" : " (not integral)") << "  T2 "
     << rep.t2.get_str() << (rep.t2_integral ? "" : " (not integral)") << "\n";
  os << "identity ratio " << rep.identity_ratio.get_str() << "  uncertain fields "
     << rep.uncertain_fields << "\n";
  os << "verdict " << to_string(rep.verdict) << "\n";
  return os.str();
}

std::string render_text(const Lemma3Report& rep) {
  std::ostringstream os;
  os << "m " << rep.m << "  n " << rep.n << "\n";
  os << "surjective " << (rep.surjective ? "yes" : "NO") << " (" << rep.witnesses
     << " witnesses)\n";
  os << "kernel " << rep.kernel_type.to_string() << "  expected " << rep.expected_type.to_string()
     << "  " << (rep.types_match ? "match" : "MISMATCH") << "\n";
  os << "completion " << (rep.completion_ok ? "ok" : "FAIL");
  if (rep.enumerated) os << ", enumeration " << (rep.enumeration_ok ? "ok" : "FAIL");
  os << "\n" << (rep.pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string render_text(const RootDiscriminant& rd, const FieldSpec& spec) {
  std::ostringstream os;
  os << "field " << spec.to_string() << "  degree " << spec.degree() << "\n";
  os << "disc " << rd.disc.get_str() << "\n";
  os << "rd = " << rd.base.get_str();
  if (rd.den != 1) os << "^(" << rd.num << "/" << rd.den << ")";
  os << " = " << rd.decimal << "\n";
  return os.str();
}

}  // namespace cyclominus
