#ifndef CURVELAB_MONOMIAL_HPP
#define CURVELAB_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace curvelab {

using Exponent = std::int64_t;

/// Variable id: 1..4 are x1..x4, 0 is the homogenizing variable x0.
using VarId = int;

/// Ambient polynomial ring. The affine ring K[x1..x4] has four variables, the
/// projective ring K[x0..x4] adds the homogenizing variable x0.
enum class Ring : std::uint8_t { Affine = 4, Projective = 5 };

constexpr std::size_t num_vars(Ring ring) noexcept { return static_cast<std::size_t>(ring); }
constexpr VarId first_var(Ring ring) noexcept { return ring == Ring::Affine ? 1 : 0; }

/// Exponent vector over a fixed ring. Immutable value type; every arithmetic
/// operation is overflow-checked.
class Monomial {
 public:
  /// The constant monomial 1.
  explicit Monomial(Ring ring = Ring::Affine) noexcept : ring_(ring) {}

  /// Exponents in variable-id order: (x1..x4) for the affine ring,
  /// (x0..x4) for the projective ring.
  static Monomial from_exponents(Ring ring, std::span<const Exponent> exponents);
  static Monomial affine(std::initializer_list<Exponent> e1_to_e4);
  static Monomial projective(std::initializer_list<Exponent> e0_to_e4);
  /// x_id^e in the given ring.
  static Monomial variable(Ring ring, VarId id, Exponent e = 1);

  Ring ring() const noexcept { return ring_; }
  Exponent operator[](VarId id) const;
  std::vector<Exponent> exponents() const;
  Exponent degree() const;
  bool is_one() const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws unless `divisor` divides *this.
  Monomial operator/(const Monomial& divisor) const;

  /// Copy with x_id raised to exponent e.
  Monomial with(VarId id, Exponent e) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Ring ring_;
  std::array<Exponent, 5> exp_{};  // indexed by VarId; slot 0 unused in the affine ring
};

void require_same_ring(const Monomial& a, const Monomial& b);

bool divides(const Monomial& divisor, const Monomial& m);
Monomial lcm(const Monomial& a, const Monomial& b);
/// Greatest common divisor; used only for the coprime-lead criterion.
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Dot product of exponents with `weights`, laid out like `exponents()`.
std::int64_t weight(const Monomial& m, std::span<const std::int64_t> weights);

/// Graded reverse lexicographic order with an explicit variable priority,
/// listed from greatest to least. Total degree compares first; ties are
/// settled at the least-priority variable where the exponents differ, and the
/// monomial with the larger exponent there is the smaller one.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex(Ring ring, std::span<const VarId> priority);
  static MonomialOrder degrevlex(Ring ring, std::initializer_list<VarId> priority);

  /// x2 > x1 > x3 > x4 on the affine ring.
  static MonomialOrder standard();
  /// x2 > x1 > x3 > x4 > x0 on the projective ring.
  static MonomialOrder extended();

  Ring ring() const noexcept { return ring_; }
  std::vector<VarId> priority() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Ring ring, std::array<VarId, 5> priority) : ring_(ring), priority_(priority) {}

  Ring ring_;
  std::array<VarId, 5> priority_{};
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace curvelab

#endif  // CURVELAB_MONOMIAL_HPP
