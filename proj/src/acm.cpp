#include "curvelab/acm.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

Monomial lift(const Monomial& m, Exponent x0) {
  if (m.ring() != Ring::Affine) throw Error(ErrorKind::RingMismatch, "homogenize needs an affine binomial");
  return Monomial::projective({x0, m[1], m[2], m[3], m[4]});
}

void require_hypotheses(const DegreeVector& degrees) {
  if (!last_is_strict_max(degrees)) {
    throw Refusal("max-coordinate fails", "fourth entry of " + to_string(degrees) + " is not strictly maximal");
  }
  if (gcd_of(degrees) != 1) throw Refusal("gcd>1", "entries of " + to_string(degrees) + " are not coprime");
}

std::string dump(const AcmReport& r, const CriterionVerdict& crit, const GroebnerVerdict& gb,
                 const BinomialBasis* closed) {
  std::ostringstream out;
  out << "criterion/groebner disagreement at m=" << r.m << " degrees=" << to_string(r.degrees) << "\n";
  if (r.data) out << "  data: " << r.data->to_string() << " (analyzed m=" << r.analyzed_m << ")\n";
  out << "  verdict_criterion=" << crit.acm << " verdict_groebner=" << gb.acm << "\n";
  for (const auto& c : crit.evaluation.conditions) out << "  " << c.name << " = " << c.value << "\n";
  out << "  reduced basis:\n";
  for (const auto& f : gb.reduced.elements()) out << "    " << f.to_string() << "\n";
  if (closed) {
    out << "  closed-form basis:\n";
    for (const auto& f : closed->elements()) out << "    " << f.to_string() << "\n";
  }
  return out.str();
}

}  // namespace

CriterionVerdict acm_by_criterion(const BresinskyData& d, std::int64_t m) {
  require_hypotheses(ShiftFamily::from_data(d).member(m).degrees);
  CriterionVerdict v;
  v.evaluation = evaluate_conditions(d, m);
  v.acm = v.evaluation.all_pass();
  return v;
}

GroebnerVerdict acm_by_groebner(const DegreeVector& degrees, std::span<const Binomial> gens,
                                const GroebnerLimits& limits) {
  require_hypotheses(degrees);
  for (const auto& g : gens) {
    if (!toric_membership(g, degrees)) {
      throw Error(ErrorKind::InvalidArgument, g.to_string() + " is not in the toric ideal of " + to_string(degrees));
    }
  }
  const MonomialOrder ord = MonomialOrder::standard();
  GroebnerVerdict v{false, reduce_basis(buchberger(gens, ord, limits), limits), {}};
  for (const auto& lead : initial_generators(v.reduced)) {
    if (lead[4] > 0) v.x4_generators.push_back(lead);
  }
  v.acm = v.x4_generators.empty();
  return v;
}

Binomial homogenize(const Binomial& b, const MonomialOrder& ord) {
  const Exponent dl = b.lead().degree();
  const Exponent dt = b.trail().degree();
  return Binomial::make(lift(b.lead(), std::max<Exponent>(0, dt - dl)),
                        lift(b.trail(), std::max<Exponent>(0, dl - dt)), ord);
}

MaybeBinomial dehomogenize(const Binomial& b, const MonomialOrder& ord) {
  if (b.ring() != Ring::Projective) throw Error(ErrorKind::RingMismatch, "dehomogenize needs a projective binomial");
  auto drop = [](const Monomial& m) { return Monomial::affine({m[1], m[2], m[3], m[4]}); };
  return Binomial::oriented(drop(b.lead()), drop(b.trail()), ord);
}

bool check_h_membership(const Binomial& b, const DegreeVector& degrees) {
  if (b.ring() != Ring::Projective) throw Error(ErrorKind::RingMismatch, "h-membership needs a projective binomial");
  const std::array<std::int64_t, 5> t_weights{0, degrees[0], degrees[1], degrees[2], degrees[3]};
  return b.lead().degree() == b.trail().degree() &&
         weight(b.lead(), t_weights) == weight(b.trail(), t_weights);
}

BinomialBasis homogeneous_basis(const BresinskyData& d, std::int64_t m) {
  const CriterionVerdict crit = acm_by_criterion(d, m);
  if (!crit.acm) {
    const Condition* bad = crit.evaluation.first_failure();
    throw Refusal("not ACM", bad ? bad->name + " fails" : std::string());
  }
  const ClosedFormBasis closed = closed_form_basis(d, m);
  const MonomialOrder ord = MonomialOrder::extended();
  std::vector<Binomial> elems;
  for (const auto& f : closed.basis.elements()) elems.push_back(homogenize(f, ord));
  BinomialBasis h(ord, std::move(elems));
  h.mark_groebner(closed.evaluation.case_id == 1);
  return h;
}

AcmReport analyze_member(const BresinskyData& d, std::int64_t m, const AnalysisOptions& opts) {
  AcmReport r;
  r.m = m;
  try {
    const FamilyMember member = ShiftFamily::from_data(d).member(m);
    r.degrees = member.degrees;
    if (!member.gcd_ok) {
      r.skip_reason = "gcd>1";
      return r;
    }
    BresinskyData data = d;
    std::int64_t analyzed_m = m;
    if (!member.max_ok) {
      const auto hits = d_from_a_any_order(member.degrees, opts.recovery);
      if (hits.empty()) {
        const auto top = std::max_element(member.degrees.begin(), member.degrees.end());
        const bool strict = std::count(member.degrees.begin(), member.degrees.end(), *top) == 1;
        r.skip_reason = strict ? "not Bresinsky form" : "max-coordinate fails";
        return r;
      }
      r.reordered = true;
      r.permutation = hits.front().perm;
      data = hits.front().data;
      analyzed_m = 0;
    }
    r.data = data;
    r.analyzed_m = analyzed_m;
    r.applicable = true;

    const CriterionVerdict crit = acm_by_criterion(data, analyzed_m);
    r.case_id = crit.evaluation.case_id;
    r.w = crit.evaluation.w;
    r.conditions = crit.evaluation.conditions;
    r.verdict_criterion = crit.acm;

    const DegreeVector analyzed_degrees = ShiftFamily::from_data(data).member(analyzed_m).degrees;
    const auto gens = generators(data, analyzed_m);
    const GroebnerVerdict gb = acm_by_groebner(analyzed_degrees, gens, opts.limits);
    r.verdict_groebner = gb.acm;
    r.x4_generators = gb.x4_generators;
    r.reduced_basis = gb.reduced;
    r.agree = crit.acm == gb.acm;

    std::optional<ClosedFormBasis> closed;
    if (crit.acm) closed = closed_form_basis(data, analyzed_m);
    if (!*r.agree) {
      r.diagnostic = dump(r, crit, gb, closed ? &closed->basis : nullptr);
    } else if (closed && !reduce_basis(closed->basis, opts.limits).same_elements(gb.reduced)) {
      r.agree = false;
      r.diagnostic = "closed-form basis and Buchberger disagree on the reduced basis\n" +
                     dump(r, crit, gb, &closed->basis);
    }
    if (opts.include_homogeneous && crit.acm) r.homogeneous = homogeneous_basis(data, analyzed_m);
  } catch (const Refusal& e) {
    r.applicable = false;
    r.skip_reason = e.reason();
  } catch (const Error& e) {
    r.applicable = false;
    r.error = e.what();
    r.error_kind = e.kind();
  }
  return r;
}

std::vector<AcmReport> cross_validate(const BresinskyData& d, std::int64_t m_lo, std::int64_t m_hi,
                                      const AnalysisOptions& opts) {
  if (m_hi < m_lo) return {};
  if (m_lo < 0) throw Error(ErrorKind::InvalidArgument, "family index m must be non-negative");
  const auto count = static_cast<std::size_t>(m_hi - m_lo + 1);
  std::vector<AcmReport> reports(count);
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      reports[i] = analyze_member(d, m_lo + static_cast<std::int64_t>(i), opts);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace curvelab
