#include "curvelab/groebner.hpp"

#include <algorithm>
#include <tuple>

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

std::ptrdiff_t find_reducer(const Monomial& m, std::span<const Binomial> reducers) {
  for (std::size_t i = 0; i < reducers.size(); ++i) {
    if (divides(reducers[i].lead(), m)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

// One reduction step t*lead -> t*trail.
Monomial rewrite(const Monomial& m, const Binomial& reducer) {
  return (m / reducer.lead()) * reducer.trail();
}

void count_step(std::uint64_t& steps, const GroebnerLimits& limits) {
  if (++steps > limits.step_bound) {
    throw Error(ErrorKind::StepBound,
                "normal form exceeded " + std::to_string(limits.step_bound) + " reduction steps");
  }
}

void check_order(const Binomial& f, const MonomialOrder& ord) {
  if (f.ring() != ord.ring()) throw Error(ErrorKind::RingMismatch, "binomial and order live in different rings");
}

}  // namespace

std::optional<Binomial> Binomial::oriented(Monomial a, Monomial b, const MonomialOrder& ord) {
  const auto c = ord.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial(std::move(a), std::move(b));
  return Binomial(std::move(b), std::move(a));
}

Binomial Binomial::make(Monomial a, Monomial b, const MonomialOrder& ord) {
  auto r = oriented(std::move(a), std::move(b), ord);
  if (!r) throw Error(ErrorKind::InvalidArgument, "binomial with identical monomials is zero");
  return *std::move(r);
}

BinomialBasis::BinomialBasis(MonomialOrder order, std::vector<Binomial> elements)
    : order_(order), elements_(std::move(elements)) {
  for (auto& f : elements_) {
    check_order(f, order_);
    f = f.reoriented(order_);
  }
}

MaybeBinomial s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& ord) {
  check_order(f, ord);
  check_order(g, ord);
  const Monomial l = lcm(f.lead(), g.lead());
  // (l/lf)(lf - tf) - (l/lg)(lg - tg) = (l/lg) tg - (l/lf) tf
  return Binomial::oriented((l / g.lead()) * g.trail(), (l / f.lead()) * f.trail(), ord);
}

MaybeBinomial normal_form(const Binomial& f, std::span<const Binomial> reducers,
                          const MonomialOrder& ord, const GroebnerLimits& limits) {
  check_order(f, ord);
  Monomial lead = f.lead();
  Monomial trail = f.trail();
  std::uint64_t steps = 0;
  for (;;) {
    if (auto i = find_reducer(lead, reducers); i >= 0) {
      count_step(steps, limits);
      lead = rewrite(lead, reducers[static_cast<std::size_t>(i)]);
    } else if (auto j = find_reducer(trail, reducers); j >= 0) {
      count_step(steps, limits);
      trail = rewrite(trail, reducers[static_cast<std::size_t>(j)]);
    } else {
      return Binomial::oriented(std::move(lead), std::move(trail), ord);
    }
    const auto c = ord.compare(lead, trail);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(lead, trail);
  }
}

MaybeBinomial normal_form(const Binomial& f, const BinomialBasis& basis, const GroebnerLimits& limits) {
  return normal_form(f, basis.elements(), basis.order(), limits);
}

Monomial reduce_monomial(Monomial m, std::span<const Binomial> reducers, const GroebnerLimits& limits) {
  std::uint64_t steps = 0;
  for (auto i = find_reducer(m, reducers); i >= 0; i = find_reducer(m, reducers)) {
    count_step(steps, limits);
    m = rewrite(m, reducers[static_cast<std::size_t>(i)]);
  }
  return m;
}

BinomialBasis buchberger(std::span<const Binomial> generators, const MonomialOrder& ord,
                         const GroebnerLimits& limits) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "buchberger needs at least one generator");

  std::vector<Binomial> basis;
  basis.reserve(generators.size());
  for (const auto& g : generators) {
    check_order(g, ord);
    Binomial oriented = g.reoriented(ord);
    if (std::find(basis.begin(), basis.end(), oriented) == basis.end()) basis.push_back(std::move(oriented));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(basis[i].lead(), basis[j].lead())) continue;
      pairs.push_back({i, j, lcm(basis[i].lead(), basis[j].lead())});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, ties by insertion indices.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      const auto c = ord.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pair = *best;
    *best = std::move(pairs.back());
    pairs.pop_back();

    auto s = s_binomial(basis[pair.i], basis[pair.j], ord);
    if (!s) continue;
    auto h = normal_form(*s, basis, ord, limits);
    if (!h) continue;
    if (basis.size() >= limits.max_basis_size) {
      throw Error(ErrorKind::StepBound,
                  "buchberger exceeded " + std::to_string(limits.max_basis_size) + " basis elements");
    }
    basis.push_back(*std::move(h));
    add_pairs_for(basis.size() - 1);
  }
  return std::move(BinomialBasis(ord, std::move(basis)).mark_groebner());
}

BinomialBasis reduce_basis(const BinomialBasis& basis, const GroebnerLimits& limits) {
  if (!basis.groebner_verified()) {
    if (!is_groebner(basis, limits).is_groebner) {
      throw Error(ErrorKind::InvalidArgument, "reduce_basis: input is not a Groebner basis");
    }
  }
  const MonomialOrder& ord = basis.order();
  std::vector<Binomial> sorted(basis.elements().begin(), basis.elements().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Binomial& a, const Binomial& b) { return ord.less(a.lead(), b.lead()); });

  // A lead divisible by another lead is redundant; divisors sort first.
  std::vector<Binomial> minimal;
  for (auto& f : sorted) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const Binomial& g) { return divides(g.lead(), f.lead()); });
    if (!redundant) minimal.push_back(std::move(f));
  }

  // Leads are now pairwise non-dividing and no lead divides a smaller trail,
  // so only trails reduce.
  std::vector<Binomial> reduced;
  reduced.reserve(minimal.size());
  for (const auto& f : minimal) {
    reduced.push_back(Binomial::make(f.lead(), reduce_monomial(f.trail(), minimal, limits), ord));
  }
  return std::move(BinomialBasis(ord, std::move(reduced)).mark_groebner(true));
}

GroebnerCertificate is_groebner(const BinomialBasis& basis, const GroebnerLimits& limits) {
  GroebnerCertificate cert;
  const auto elems = basis.elements();
  for (std::size_t j = 1; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto s = s_binomial(elems[i], elems[j], basis.order());
      if (!s) continue;
      if (auto h = normal_form(*s, basis, limits)) {
        cert.is_groebner = false;
        cert.failing_pairs.emplace_back(i, j);
        cert.remainders.push_back(*std::move(h));
      }
    }
  }
  return cert;
}

std::vector<Monomial> initial_generators(const BinomialBasis& basis) {
  if (!basis.reduced()) throw Error(ErrorKind::InvalidArgument, "initial_generators needs a reduced basis");
  std::vector<Monomial> leads;
  for (const auto& f : basis.elements()) leads.push_back(f.lead());
  return leads;
}

}  // namespace curvelab
