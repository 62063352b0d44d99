#include "curvelab/monomial.hpp"

#include <algorithm>

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

void check_id(Ring ring, VarId id) {
  if (id < first_var(ring) || id > 4) {
    throw Error(ErrorKind::RingMismatch,
                "variable x" + std::to_string(id) + " is not in the " +
                    (ring == Ring::Affine ? "affine" : "projective") + " ring");
  }
}

}  // namespace

Monomial Monomial::from_exponents(Ring ring, std::span<const Exponent> exponents) {
  if (exponents.size() != num_vars(ring)) {
    throw Error(ErrorKind::RingMismatch, "expected " + std::to_string(num_vars(ring)) +
                                             " exponents, got " + std::to_string(exponents.size()));
  }
  Monomial m(ring);
  VarId id = first_var(ring);
  for (Exponent e : exponents) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    m.exp_[static_cast<std::size_t>(id++)] = e;
  }
  return m;
}

Monomial Monomial::affine(std::initializer_list<Exponent> e) {
  return from_exponents(Ring::Affine, std::span<const Exponent>(e.begin(), e.size()));
}

Monomial Monomial::projective(std::initializer_list<Exponent> e) {
  return from_exponents(Ring::Projective, std::span<const Exponent>(e.begin(), e.size()));
}

Monomial Monomial::variable(Ring ring, VarId id, Exponent e) { return Monomial(ring).with(id, e); }

Exponent Monomial::operator[](VarId id) const {
  check_id(ring_, id);
  return exp_[static_cast<std::size_t>(id)];
}

std::vector<Exponent> Monomial::exponents() const {
  return {exp_.begin() + first_var(ring_), exp_.end()};
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exp_) d = checked::add(d, e);
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ring(*this, other);
  Monomial r(ring_);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = checked::add(exp_[i], other.exp_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divides(divisor, *this)) {
    throw Error(ErrorKind::InvalidArgument, divisor.to_string() + " does not divide " + to_string());
  }
  Monomial r(ring_);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = exp_[i] - divisor.exp_[i];
  return r;
}

Monomial Monomial::with(VarId id, Exponent e) const {
  check_id(ring_, id);
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  Monomial r = *this;
  r.exp_[static_cast<std::size_t>(id)] = e;
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (VarId id = first_var(ring_); id <= 4; ++id) {
    const Exponent e = exp_[static_cast<std::size_t>(id)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(id);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::RingMismatch, "monomials live in different rings");
}

bool divides(const Monomial& divisor, const Monomial& m) {
  require_same_ring(divisor, m);
  for (VarId id = first_var(m.ring()); id <= 4; ++id) {
    if (divisor[id] > m[id]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r(a.ring());
  for (VarId id = first_var(a.ring()); id <= 4; ++id) r = r.with(id, std::max(a[id], b[id]));
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r(a.ring());
  for (VarId id = first_var(a.ring()); id <= 4; ++id) r = r.with(id, std::min(a[id], b[id]));
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

std::int64_t weight(const Monomial& m, std::span<const std::int64_t> weights) {
  if (weights.size() != num_vars(m.ring())) {
    throw Error(ErrorKind::RingMismatch, "weight vector length does not match the ring");
  }
  std::int64_t total = 0;
  VarId id = first_var(m.ring());
  for (std::int64_t w : weights) total = checked::add(total, checked::mul(m[id++], w));
  return total;
}

MonomialOrder MonomialOrder::degrevlex(Ring ring, std::span<const VarId> priority) {
  if (priority.size() != num_vars(ring)) {
    throw Error(ErrorKind::RingMismatch, "priority list length does not match the ring");
  }
  std::array<VarId, 5> p{};
  std::array<bool, 5> seen{};
  for (std::size_t i = 0; i < priority.size(); ++i) {
    const VarId id = priority[i];
    check_id(ring, id);
    if (seen[static_cast<std::size_t>(id)]) {
      throw Error(ErrorKind::InvalidArgument, "priority list repeats x" + std::to_string(id));
    }
    seen[static_cast<std::size_t>(id)] = true;
    p[i] = id;
  }
  return MonomialOrder(ring, p);
}

MonomialOrder MonomialOrder::degrevlex(Ring ring, std::initializer_list<VarId> priority) {
  return degrevlex(ring, std::span<const VarId>(priority.begin(), priority.size()));
}

MonomialOrder MonomialOrder::standard() { return degrevlex(Ring::Affine, {2, 1, 3, 4}); }

MonomialOrder MonomialOrder::extended() { return degrevlex(Ring::Projective, {2, 1, 3, 4, 0}); }

std::vector<VarId> MonomialOrder::priority() const {
  return {priority_.begin(), priority_.begin() + static_cast<std::ptrdiff_t>(num_vars(ring_))};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.ring() != ring_ || b.ring() != ring_) {
    throw Error(ErrorKind::RingMismatch, "monomial does not live in the ring of the order");
  }
  const Exponent da = a.degree();
  const Exponent db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = num_vars(ring_); i-- > 0;) {
    const VarId id = priority_[i];
    if (a[id] != b[id]) return b[id] <=> a[id];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace curvelab
