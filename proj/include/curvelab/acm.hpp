#ifndef CURVELAB_ACM_HPP
#define CURVELAB_ACM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvelab/bresinsky.hpp"
#include "curvelab/error.hpp"
#include "curvelab/groebner.hpp"

namespace curvelab {

struct CriterionVerdict {
  bool acm = false;
  CaseEvaluation evaluation;
};

/// Decides ACM for member m from the integer conditions alone. Refuses with
/// "gcd>1" or "max-coordinate fails" outside the criterion's hypotheses.
CriterionVerdict acm_by_criterion(const BresinskyData& d, std::int64_t m);

struct GroebnerVerdict {
  bool acm = false;
  BinomialBasis reduced;
  /// Minimal initial-ideal generators divisible by x4.
  std::vector<Monomial> x4_generators;
};

/// Decides ACM from the reduced Gröbner basis of `gens` under x2 > x1 > x3 > x4:
/// ACM iff no minimal generator of the initial ideal is divisible by x4.
GroebnerVerdict acm_by_groebner(const DegreeVector& degrees, std::span<const Binomial> gens,
                                const GroebnerLimits& limits = {});

/// Pads the lower-degree side with x0. Oriented under `ord` on the
/// projective ring.
Binomial homogenize(const Binomial& b, const MonomialOrder& ord = MonomialOrder::extended());

/// Sets x0 := 1 and re-orients on the affine ring; nullopt when the two
/// sides coincide after dehomogenizing.
MaybeBinomial dehomogenize(const Binomial& b, const MonomialOrder& ord = MonomialOrder::standard());

/// Both total degrees and t-weights (x0 weighs 0) agree.
bool check_h_membership(const Binomial& b, const DegreeVector& degrees);

/// Gröbner basis of the homogenized ideal under x2 > x1 > x3 > x4 > x0, the
/// element-wise homogenization of the closed-form basis. Reduced in case 1.
/// Refuses unless member m is ACM.
BinomialBasis homogeneous_basis(const BresinskyData& d, std::int64_t m);

struct AnalysisOptions {
  GroebnerLimits limits;
  RecoveryOptions recovery;
  bool include_homogeneous = false;
  /// Worker threads for range scans; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct AcmReport {
  std::int64_t m = 0;
  DegreeVector degrees{};
  bool applicable = false;
  std::optional<std::string> skip_reason;
  /// Set when a sub-operation failed (overflow, step bound, ...).
  std::optional<std::string> error;
  std::optional<ErrorKind> error_kind;

  /// Analysis in permuted coordinates: degrees permuted by `permutation` are
  /// the m = 0 member of the family generated by `data`.
  bool reordered = false;
  std::optional<Permutation> permutation;
  std::optional<BresinskyData> data;
  std::int64_t analyzed_m = 0;

  std::optional<int> case_id;
  std::optional<std::int64_t> w;
  std::vector<Condition> conditions;
  std::optional<bool> verdict_criterion;
  std::optional<bool> verdict_groebner;
  std::optional<bool> agree;
  std::vector<Monomial> x4_generators;
  std::optional<BinomialBasis> reduced_basis;
  std::optional<BinomialBasis> homogeneous;
  /// Both bases, verdicts and condition values when the verdicts disagree.
  std::optional<std::string> diagnostic;
};

/// Full analysis of one member. Never throws for mathematical reasons: skips,
/// refusals and sub-operation failures are recorded in the report.
AcmReport analyze_member(const BresinskyData& d, std::int64_t m, const AnalysisOptions& opts = {});

/// analyze_member for every m in [m_lo, m_hi] (empty when m_hi < m_lo),
/// evaluated in parallel and returned sorted by m.
std::vector<AcmReport> cross_validate(const BresinskyData& d, std::int64_t m_lo, std::int64_t m_hi,
                                      const AnalysisOptions& opts = {});

}  // namespace curvelab

#endif  // CURVELAB_ACM_HPP
