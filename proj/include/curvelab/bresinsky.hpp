#ifndef CURVELAB_BRESINSKY_HPP
#define CURVELAB_BRESINSKY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/groebner.hpp"

namespace curvelab {

/// Degrees (a1, a2, a3, a4) of a monomial curve xi = t^ai.
using DegreeVector = std::array<std::int64_t, 4>;

/// perm[i] is the 0-based index of the input coordinate placed in role i.
using Permutation = std::array<int, 4>;

std::string to_string(const DegreeVector& a);
std::int64_t gcd_of(const DegreeVector& a);
/// Fourth entry strictly larger than the other three.
bool last_is_strict_max(const DegreeVector& a);
DegreeVector permuted(const DegreeVector& a, const Permutation& perm);

/// The eight Bresinsky parameters of a Gorenstein non-complete-intersection
/// monomial curve in 4-space, with row sums d1 = d21+d41, d2 = d32+d42,
/// d3 = d13+d23, d4 = d14+d34.
class BresinskyData {
 public:
  struct Params {
    std::int64_t d21, d41, d32, d42, d13, d23, d14, d34;
  };

  /// Throws InvalidArgument unless every parameter is positive and every
  /// row sum exceeds 1.
  static BresinskyData create(const Params& p);

  const Params& params() const noexcept { return p_; }
  std::int64_t d21() const noexcept { return p_.d21; }
  std::int64_t d41() const noexcept { return p_.d41; }
  std::int64_t d32() const noexcept { return p_.d32; }
  std::int64_t d42() const noexcept { return p_.d42; }
  std::int64_t d13() const noexcept { return p_.d13; }
  std::int64_t d23() const noexcept { return p_.d23; }
  std::int64_t d14() const noexcept { return p_.d14; }
  std::int64_t d34() const noexcept { return p_.d34; }
  std::int64_t d1() const noexcept { return p_.d21 + p_.d41; }
  std::int64_t d2() const noexcept { return p_.d32 + p_.d42; }
  std::int64_t d3() const noexcept { return p_.d13 + p_.d23; }
  std::int64_t d4() const noexcept { return p_.d14 + p_.d34; }

  /// Parameters of the m-th family member: d41 and d14 grow by m.
  BresinskyData shifted(std::int64_t m) const;

  /// In order d21, d41, d32, d42, d13, d23, d14, d34.
  std::array<std::int64_t, 8> as_array() const;
  std::string to_string() const;

  friend bool operator==(const BresinskyData& a, const BresinskyData& b) { return a.as_array() == b.as_array(); }

 private:
  explicit BresinskyData(const Params& p) : p_(p) {}
  Params p_;
};

DegreeVector a_from_d(const BresinskyData& d);
DegreeVector shift_vector(const BresinskyData& d);

struct RecoveryOptions {
  /// Upper bound on each row sum d1..d4 explored by the search.
  std::int64_t d_cap = 4096;
};

/// Every Bresinsky parameter set producing `a` in the given coordinate order.
/// Empty means the curve is not of this form; more than one solution is an
/// anomaly for the caller to surface. Refuses (gcd>1, max-coordinate fails)
/// outside the precondition and throws SearchBound when the degrees admit
/// parameters beyond the cap and none were found below it.
std::vector<BresinskyData> d_from_a(const DegreeVector& a, const RecoveryOptions& opts = {});

struct OrderedRecovery {
  Permutation perm;
  BresinskyData data;
};

/// d_from_a over every coordinate permutation that places the strict maximum
/// last; empty when no strict maximum exists.
std::vector<OrderedRecovery> d_from_a_any_order(const DegreeVector& a, const RecoveryOptions& opts = {});

struct FamilyMember {
  std::int64_t m = 0;
  DegreeVector degrees{};
  bool gcd_ok = false;
  bool max_ok = false;
};

/// The shifted family a + m v generated by one Bresinsky parameter set.
class ShiftFamily {
 public:
  /// Refuses with "gcd>1" when the base degrees are not coprime.
  static ShiftFamily from_data(const BresinskyData& d);

  const DegreeVector& base() const noexcept { return base_; }
  const DegreeVector& shift() const noexcept { return shift_; }
  const BresinskyData& data() const noexcept { return data_; }
  FamilyMember member(std::int64_t m) const;

 private:
  ShiftFamily(DegreeVector base, DegreeVector shift, BresinskyData data)
      : base_(base), shift_(shift), data_(data) {}
  DegreeVector base_, shift_;
  BresinskyData data_;
};

/// f1..f5 minimally generating I(a + m v), oriented under `ord`.
std::array<Binomial, 5> generators(const BresinskyData& d, std::int64_t m,
                                   const MonomialOrder& ord = MonomialOrder::standard());

/// Least l with d1 + m - l d21 <= 0 or d3 - l d23 <= 0. Always >= 2.
std::int64_t compute_w(const BresinskyData& d, std::int64_t m);

struct ExtraBinomials {
  std::vector<Binomial> p;  // p_1 .. p_{w-2}
  std::vector<Binomial> q;  // q_1 .. q_{w-2}
  Binomial r;
  std::int64_t w;
  /// d1 + m - w d21; positive selects the first form of r.
  std::int64_t branch;
};

/// The binomials completing G to a Gröbner basis when d2 < d21 + d23.
ExtraBinomials extra_binomials(const BresinskyData& d, std::int64_t m,
                               const MonomialOrder& ord = MonomialOrder::standard());

bool toric_membership(const Binomial& b, const DegreeVector& degrees);

struct Condition {
  int index;          // numbering of the criterion list it belongs to
  std::string name;
  std::int64_t value; // the condition holds iff value >= 0
  bool pass() const noexcept { return value >= 0; }
};

/// Integer values of the ACM conditions for member m: case 1 when
/// d2 >= d21 + d23 (three conditions), otherwise case 2 (conditions 1-5 and
/// exactly one of 6/7, chosen by the sign of d1 + m - w d21).
struct CaseEvaluation {
  int case_id = 1;
  std::optional<std::int64_t> w;
  std::optional<std::int64_t> branch;
  std::vector<Condition> conditions;

  bool all_pass() const;
  const Condition* first_failure() const;
  const Condition* find(int index) const;
};

CaseEvaluation evaluate_conditions(const BresinskyData& d, std::int64_t m);

struct ClosedFormBasis {
  BinomialBasis basis;
  CaseEvaluation evaluation;
};

/// G (case 1, reduced) or T = G + {p_i} + {q_i} + {r} (case 2, Gröbner) under
/// x2 > x1 > x3 > x4. Refuses when a + m v is not coprime or a condition fails.
ClosedFormBasis closed_form_basis(const BresinskyData& d, std::int64_t m);

}  // namespace curvelab

#endif  // CURVELAB_BRESINSKY_HPP
