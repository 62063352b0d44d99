#include "curvelab/curvelab.h"

#include <cstring>
#include <map>
#include <optional>
#include <string>

#include "curvelab/acm.hpp"
#include "curvelab/error.hpp"
#include "curvelab/json_io.hpp"

using namespace curvelab;

struct curvelab_family {
  BresinskyData data;
  ShiftFamily family;
  DegreeVector input;
  std::optional<Permutation> perm;
};

namespace {

thread_local std::string last_error;

curvelab_status fail(curvelab_status status, const std::string& message) {
  last_error = message;
  return status;
}

curvelab_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::RingMismatch: return CURVELAB_E_USAGE;
    case ErrorKind::Overflow: return CURVELAB_E_OVERFLOW;
    case ErrorKind::StepBound:
    case ErrorKind::SearchBound: return CURVELAB_E_LIMIT;
    case ErrorKind::Refused: return CURVELAB_E_REFUSED;
    case ErrorKind::Inconsistent: return CURVELAB_E_INCONSISTENT;
  }
  return CURVELAB_E_INTERNAL;
}

template <class F>
curvelab_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(CURVELAB_E_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(CURVELAB_E_INTERNAL, e.what());
  }
}

char* to_c_string(const Json& j) {
  const std::string s = j.dump();
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

AnalysisOptions analysis_options(const curvelab_options* opts) {
  curvelab_options o;
  curvelab_options_init(&o);
  if (opts) o = *opts;
  if (o.step_bound <= 0) throw Error(ErrorKind::InvalidArgument, "step bound must be positive");
  if (o.d_cap < 2) throw Error(ErrorKind::InvalidArgument, "d-cap must be at least 2");
  AnalysisOptions a;
  a.limits.step_bound = static_cast<std::uint64_t>(o.step_bound);
  a.recovery.d_cap = o.d_cap;
  a.include_homogeneous = o.include_homogeneous != 0;
  a.threads = o.threads;
  return a;
}

Json permutation_json(const std::optional<Permutation>& p) {
  if (!p) return nullptr;
  return Json::array({(*p)[0] + 1, (*p)[1] + 1, (*p)[2] + 1, (*p)[3] + 1});
}

Json generators_json(const BresinskyData& d, std::int64_t m) {
  Json gens = Json::array();
  for (const auto& g : generators(d, m)) gens.push_back(json_of(g));
  return gens;
}

// At most one parameter set per coordinate order is expected; more is an
// anomaly.
void check_unique(const std::vector<OrderedRecovery>& hits) {
  std::map<Permutation, int> per_perm;
  for (const auto& h : hits) {
    if (++per_perm[h.perm] > 1) {
      throw Error(ErrorKind::Inconsistent, "multiple parameter solutions for one coordinate order");
    }
  }
}

std::vector<OrderedRecovery> recover_all(const DegreeVector& a, const RecoveryOptions& opts) {
  for (auto x : a) {
    if (x <= 0) throw Error(ErrorKind::InvalidArgument, "degrees must be positive");
  }
  const auto top = std::max_element(a.begin(), a.end());
  if (std::count(a.begin(), a.end(), *top) != 1) {
    throw Refusal("max-coordinate fails", "no strictly maximal entry in " + to_string(a));
  }
  auto hits = d_from_a_any_order(a, opts);
  if (hits.empty()) throw Refusal("not Bresinsky form", to_string(a));
  return hits;
}

}  // namespace

extern "C" {

const char* curvelab_version(void) { return "1.0.0"; }

const char* curvelab_last_error(void) { return last_error.c_str(); }

void curvelab_options_init(curvelab_options* opts) {
  if (!opts) return;
  opts->step_bound = 1'000'000;
  opts->d_cap = 4096;
  opts->include_homogeneous = 0;
  opts->threads = 0;
}

void curvelab_free_string(char* s) { delete[] s; }

curvelab_status curvelab_family_from_params(const int64_t params[8], curvelab_family** out) {
  if (!params || !out) return fail(CURVELAB_E_USAGE, "null argument");
  return guarded([&] {
    const auto d = BresinskyData::create(
        {params[0], params[1], params[2], params[3], params[4], params[5], params[6], params[7]});
    const auto fam = ShiftFamily::from_data(d);
    *out = new curvelab_family{d, fam, fam.base(), std::nullopt};
    return CURVELAB_OK;
  });
}

curvelab_status curvelab_family_from_degrees(const int64_t degrees[4], const curvelab_options* opts,
                                             curvelab_family** out) {
  if (!degrees || !out) return fail(CURVELAB_E_USAGE, "null argument");
  return guarded([&] {
    const DegreeVector a{degrees[0], degrees[1], degrees[2], degrees[3]};
    const auto hits = recover_all(a, analysis_options(opts).recovery);
    check_unique(hits);
    const auto& hit = hits.front();
    const auto fam = ShiftFamily::from_data(hit.data);
    std::optional<Permutation> perm;
    if (hit.perm != Permutation{0, 1, 2, 3}) perm = hit.perm;
    *out = new curvelab_family{hit.data, fam, a, perm};
    return CURVELAB_OK;
  });
}

void curvelab_family_free(curvelab_family* family) { delete family; }

curvelab_status curvelab_family_describe(const curvelab_family* family, char** json) {
  if (!family || !json) return fail(CURVELAB_E_USAGE, "null argument");
  return guarded([&] {
    Json j;
    j["data"] = json_of(family->data);
    j["input_degrees"] = json_of(family->input);
    j["base"] = json_of(family->family.base());
    j["shift"] = json_of(family->family.shift());
    j["permutation"] = permutation_json(family->perm);
    j["generators"] = generators_json(family->data, 0);
    *json = to_c_string(j);
    return CURVELAB_OK;
  });
}

curvelab_status curvelab_analyze(const curvelab_family* family, int64_t m, const curvelab_options* opts,
                                 char** json) {
  if (!family || !json) return fail(CURVELAB_E_USAGE, "null argument");
  if (m < 0) return fail(CURVELAB_E_USAGE, "m must be non-negative");
  return guarded([&] {
    const AcmReport r = analyze_member(family->data, m, analysis_options(opts));
    Json j = json_of(r, ReportDetail{true});
    j["family_permutation"] = permutation_json(family->perm);
    *json = to_c_string(j);
    if (r.error) return fail(r.error_kind ? status_of(*r.error_kind) : CURVELAB_E_INTERNAL, *r.error);
    if (!r.applicable) return fail(CURVELAB_E_REFUSED, r.skip_reason.value_or("not applicable"));
    if (r.agree && !*r.agree) return fail(CURVELAB_E_INCONSISTENT, *r.diagnostic);
    return CURVELAB_OK;
  });
}

curvelab_status curvelab_scan(const curvelab_family* family, int64_t m_lo, int64_t m_hi,
                              const curvelab_options* opts, char** json) {
  if (!family || !json) return fail(CURVELAB_E_USAGE, "null argument");
  if (m_lo < 0) return fail(CURVELAB_E_USAGE, "m range must start at 0 or above");
  if (m_hi < m_lo) return fail(CURVELAB_E_USAGE, "empty m range");
  return guarded([&] {
    const auto reports = cross_validate(family->data, m_lo, m_hi, analysis_options(opts));
    Json rows = Json::array();
    std::int64_t acm = 0, non_acm = 0, skipped = 0, reordered = 0, disagreements = 0, errors = 0;
    std::string diagnostics;
    for (const auto& r : reports) {
      rows.push_back(json_of(r));
      if (r.error) ++errors;
      if (!r.applicable) {
        ++skipped;
        continue;
      }
      if (r.reordered) ++reordered;
      if (r.agree && !*r.agree) {
        ++disagreements;
        diagnostics += *r.diagnostic;
      } else if (r.verdict_criterion && *r.verdict_criterion) {
        ++acm;
      } else {
        ++non_acm;
      }
    }
    Json j;
    j["family_permutation"] = permutation_json(family->perm);
    j["reports"] = std::move(rows);
    j["summary"] = {{"acm", acm},        {"non_acm", non_acm},          {"skipped", skipped},
                    {"reordered", reordered}, {"disagreements", disagreements}, {"errors", errors}};
    *json = to_c_string(j);
    if (disagreements > 0) return fail(CURVELAB_E_INCONSISTENT, diagnostics);
    return CURVELAB_OK;
  });
}

curvelab_status curvelab_basis(const curvelab_family* family, int64_t m, int flags, const curvelab_options* opts,
                               char** json) {
  if (!family || !json) return fail(CURVELAB_E_USAGE, "null argument");
  if (m < 0) return fail(CURVELAB_E_USAGE, "m must be non-negative");
  return guarded([&] {
    const AnalysisOptions o = analysis_options(opts);
    const bool homog = (flags & CURVELAB_BASIS_HOMOGENIZE) != 0;
    const bool oracle = (flags & CURVELAB_BASIS_ORACLE) != 0;
    const FamilyMember member = family->family.member(m);
    if (!member.gcd_ok) throw Refusal("gcd>1", "entries of " + to_string(member.degrees) + " are not coprime");

    Json j;
    j["m"] = m;
    j["degrees"] = json_of(member.degrees);
    j["homogenized"] = homog;
    std::optional<BinomialBasis> basis;
    if (oracle) {
      const auto gens = generators(family->data, m);
      BinomialBasis reduced = reduce_basis(buchberger(gens, MonomialOrder::standard(), o.limits), o.limits);
      j["source"] = "buchberger";
      j["case"] = nullptr;
      if (homog) {
        std::vector<Binomial> elems;
        for (const auto& f : reduced.elements()) elems.push_back(homogenize(f));
        basis = BinomialBasis(MonomialOrder::extended(), std::move(elems));
        j["label"] = "GB of the homogenized ideal (Buchberger)";
      } else {
        basis = std::move(reduced);
        j["label"] = "reduced GB (Buchberger)";
      }
    } else if (homog) {
      basis = homogeneous_basis(family->data, m);
      const int case_id = evaluate_conditions(family->data, m).case_id;
      j["source"] = "closed-form";
      j["case"] = case_id;
      j["label"] = case_id == 1 ? "reduced GB of the homogenized ideal, case 1"
                                : "GB of the homogenized ideal, case 2";
    } else {
      auto closed = closed_form_basis(family->data, m);
      j["source"] = "closed-form";
      j["case"] = closed.evaluation.case_id;
      j["label"] = closed.evaluation.case_id == 1 ? "reduced GB, case 1" : "GB, case 2";
      basis = std::move(closed.basis);
    }
    const BinomialBasis reduced = reduce_basis(*basis, o.limits);
    if (!basis->groebner_verified() && !is_groebner(*basis, o.limits).is_groebner) {
      throw Error(ErrorKind::Inconsistent, "emitted basis fails the Buchberger criterion");
    }
    j["basis"] = json_of(*basis);
    j["reduced_basis"] = json_of(reduced);
    *json = to_c_string(j);
    return CURVELAB_OK;
  });
}

curvelab_status curvelab_recover(const int64_t degrees[4], const curvelab_options* opts, char** json) {
  if (!degrees || !json) return fail(CURVELAB_E_USAGE, "null argument");
  return guarded([&] {
    const DegreeVector a{degrees[0], degrees[1], degrees[2], degrees[3]};
    Json j;
    j["degrees"] = json_of(a);
    Json sols = Json::array();
    std::vector<OrderedRecovery> hits;
    try {
      hits = recover_all(a, analysis_options(opts).recovery);
    } catch (const Refusal& e) {
      j["status"] = e.reason();
      j["solutions"] = std::move(sols);
      *json = to_c_string(j);
      return fail(CURVELAB_E_REFUSED, e.what());
    }
    for (const auto& h : hits) {
      Json s;
      s["permutation"] = permutation_json(h.perm);
      s["degrees"] = json_of(permuted(a, h.perm));
      s["data"] = json_of(h.data);
      s["shift"] = json_of(shift_vector(h.data));
      s["generators"] = generators_json(h.data, 0);
      sols.push_back(std::move(s));
    }
    j["solutions"] = std::move(sols);
    try {
      check_unique(hits);
    } catch (const Error& e) {
      j["status"] = "anomaly";
      *json = to_c_string(j);
      return fail(CURVELAB_E_INCONSISTENT, e.what());
    }
    j["status"] = "ok";
    *json = to_c_string(j);
    return CURVELAB_OK;
  });
}

}  // extern "C"
