#include "curvelab/json_io.hpp"

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::InvalidArgument, std::string("missing JSON field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json json_of(const Monomial& m) { return {{"exponents", m.exponents()}}; }

Json json_of(const MonomialOrder& ord) { return {{"kind", "degrevlex"}, {"priority", ord.priority()}}; }

Json json_of(const Binomial& b) { return {{"lead", json_of(b.lead())}, {"trail", json_of(b.trail())}}; }

Json json_of(const BinomialBasis& basis) {
  Json elems = Json::array();
  for (const auto& f : basis.elements()) elems.push_back(json_of(f));
  return {{"order", json_of(basis.order())}, {"elements", std::move(elems)}};
}

Json json_of(const BresinskyData& d) {
  return {{"d21", d.d21()}, {"d41", d.d41()}, {"d32", d.d32()}, {"d42", d.d42()},
          {"d13", d.d13()}, {"d23", d.d23()}, {"d14", d.d14()}, {"d34", d.d34()}};
}

Json json_of(const DegreeVector& a) { return Json::array({a[0], a[1], a[2], a[3]}); }

Json json_of(const Condition& c) { return {{"name", c.name}, {"value", c.value}, {"pass", c.pass()}}; }

Json json_of(const AcmReport& r, const ReportDetail& detail) {
  Json j;
  j["m"] = r.m;
  j["degrees"] = json_of(r.degrees);
  j["applicable"] = r.applicable;
  j["skip_reason"] = optional_json(r.skip_reason);
  j["error"] = optional_json(r.error);
  j["reordered"] = r.reordered;
  if (r.permutation) {
    const auto& p = *r.permutation;
    j["permutation"] = Json::array({p[0] + 1, p[1] + 1, p[2] + 1, p[3] + 1});
  } else {
    j["permutation"] = nullptr;
  }
  j["data"] = r.data ? json_of(*r.data) : Json(nullptr);
  j["analyzed_m"] = r.analyzed_m;
  j["case"] = optional_json(r.case_id);
  j["w"] = optional_json(r.w);
  Json conds = Json::array();
  for (const auto& c : r.conditions) conds.push_back(json_of(c));
  j["conditions"] = std::move(conds);
  j["verdict_criterion"] = optional_json(r.verdict_criterion);
  j["verdict_groebner"] = optional_json(r.verdict_groebner);
  j["agree"] = optional_json(r.agree);
  Json x4 = Json::array();
  for (const auto& g : r.x4_generators) x4.push_back(json_of(g));
  j["x4_generators"] = std::move(x4);
  if (detail.reduced_basis && r.reduced_basis) j["reduced_basis"] = json_of(*r.reduced_basis);
  if (r.homogeneous) j["homogeneous_basis"] = json_of(*r.homogeneous);
  j["diagnostic"] = optional_json(r.diagnostic);
  return j;
}

Monomial monomial_from_json(const Json& j) {
  const auto exps = field(j, "exponents").get<std::vector<Exponent>>();
  if (exps.size() == 4) return Monomial::from_exponents(Ring::Affine, exps);
  if (exps.size() == 5) return Monomial::from_exponents(Ring::Projective, exps);
  throw Error(ErrorKind::InvalidArgument, "a monomial has 4 or 5 exponents");
}

MonomialOrder order_from_json(const Json& j) {
  if (field(j, "kind") != "degrevlex") throw Error(ErrorKind::InvalidArgument, "only degrevlex orders are supported");
  const auto prio = field(j, "priority").get<std::vector<VarId>>();
  const Ring ring = prio.size() == 5 ? Ring::Projective : Ring::Affine;
  return MonomialOrder::degrevlex(ring, prio);
}

Binomial binomial_from_json(const Json& j, const MonomialOrder& ord) {
  return Binomial::make(monomial_from_json(field(j, "lead")), monomial_from_json(field(j, "trail")), ord);
}

BinomialBasis basis_from_json(const Json& j) {
  const MonomialOrder ord = order_from_json(field(j, "order"));
  std::vector<Binomial> elems;
  for (const auto& e : field(j, "elements")) elems.push_back(binomial_from_json(e, ord));
  return BinomialBasis(ord, std::move(elems));
}

BresinskyData bresinsky_from_json(const Json& j) {
  auto get = [&](const char* k) { return field(j, k).get<std::int64_t>(); };
  return BresinskyData::create(
      {get("d21"), get("d41"), get("d32"), get("d42"), get("d13"), get("d23"), get("d14"), get("d34")});
}

}  // namespace curvelab
