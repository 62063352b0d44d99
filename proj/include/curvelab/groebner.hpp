#ifndef CURVELAB_GROEBNER_HPP
#define CURVELAB_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvelab/monomial.hpp"

namespace curvelab {

/// Pure-difference binomial lead - trail with lead > trail under the order it
/// was oriented against. The zero binomial is never a Binomial; operations
/// that may produce zero return MaybeBinomial.
class Binomial {
 public:
  /// Orients {a, b} under `ord`; nullopt when a == b.
  static std::optional<Binomial> oriented(Monomial a, Monomial b, const MonomialOrder& ord);
  /// As `oriented`, but a zero binomial is an error.
  static Binomial make(Monomial a, Monomial b, const MonomialOrder& ord);

  const Monomial& lead() const noexcept { return lead_; }
  const Monomial& trail() const noexcept { return trail_; }
  Ring ring() const noexcept { return lead_.ring(); }
  bool is_homogeneous() const { return lead_.degree() == trail_.degree(); }

  /// Same binomial re-oriented under another order on the same ring.
  Binomial reoriented(const MonomialOrder& ord) const { return make(lead_, trail_, ord); }

  std::string to_string() const { return lead_.to_string() + " - " + trail_.to_string(); }

  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  Binomial(Monomial lead, Monomial trail) : lead_(std::move(lead)), trail_(std::move(trail)) {}

  Monomial lead_;
  Monomial trail_;
};

using MaybeBinomial = std::optional<Binomial>;

/// Finite set of binomials oriented under one order, with verification flags.
class BinomialBasis {
 public:
  /// Re-orients every element under `order`.
  BinomialBasis(MonomialOrder order, std::vector<Binomial> elements);

  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const Binomial> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Binomial& operator[](std::size_t i) const { return elements_.at(i); }

  bool groebner_verified() const noexcept { return groebner_; }
  bool reduced() const noexcept { return reduced_; }

  /// Flags the basis as a Gröbner basis on the caller's authority (a
  /// construction whose correctness is known); `reduced` implies Gröbner.
  BinomialBasis& mark_groebner(bool reduced = false) noexcept {
    groebner_ = true;
    reduced_ = reduced;
    return *this;
  }

  /// Element-for-element equality of orders and elements; flags are ignored.
  bool same_elements(const BinomialBasis& other) const {
    return order_ == other.order_ && elements_ == other.elements_;
  }

 private:
  MonomialOrder order_;
  std::vector<Binomial> elements_;
  bool groebner_ = false;
  bool reduced_ = false;
};

struct GroebnerLimits {
  /// Reduction steps per normal_form call.
  std::uint64_t step_bound = 1'000'000;
  /// Elements a Buchberger run may accumulate before giving up.
  std::size_t max_basis_size = 100'000;
};

/// (lcm/lead f) f - (lcm/lead g) g; for pure-difference binomials this is again
/// a pure-difference binomial or zero.
MaybeBinomial s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& ord);

/// Full reduction of f (lead first, then trail) against `reducers`, always using
/// the reducer with the smallest index. Deterministic for any reducer set; the
/// result is the unique normal form when `reducers` is a Gröbner basis.
MaybeBinomial normal_form(const Binomial& f, std::span<const Binomial> reducers,
                          const MonomialOrder& ord, const GroebnerLimits& limits = {});
MaybeBinomial normal_form(const Binomial& f, const BinomialBasis& basis,
                          const GroebnerLimits& limits = {});

/// Normal form of a single monomial (the trailing-side reduction used during
/// interreduction).
Monomial reduce_monomial(Monomial m, std::span<const Binomial> reducers,
                         const GroebnerLimits& limits = {});

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime-lead criterion. The result is flagged Gröbner but not reduced.
BinomialBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& ord,
                         const GroebnerLimits& limits = {});

/// Unique reduced Gröbner basis of the same ideal, sorted ascending by lead.
/// Verifies the input first unless it is already flagged Gröbner.
BinomialBasis reduce_basis(const BinomialBasis& basis, const GroebnerLimits& limits = {});

struct GroebnerCertificate {
  bool is_groebner = true;
  /// Index pairs (i, j), i < j, whose S-binomial has a nonzero normal form.
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
  std::vector<Binomial> remainders;
};

/// Buchberger criterion over every pair, coprime leads included.
GroebnerCertificate is_groebner(const BinomialBasis& basis, const GroebnerLimits& limits = {});

/// Leads of a reduced basis: the minimal generators of the initial ideal.
std::vector<Monomial> initial_generators(const BinomialBasis& basis);

}  // namespace curvelab

#endif  // CURVELAB_GROEBNER_HPP
