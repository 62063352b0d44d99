#ifndef CURVELAB_TESTS_FIXTURES_HPP
#define CURVELAB_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvelab/acm.hpp"
#include "curvelab/bresinsky.hpp"
#include "curvelab/groebner.hpp"

namespace curvelab::fixtures {

// a = (19,29,26,43), generators read off x1^5-x3^2x4, x2^4-x1^2x3^3, x3^5-x2^3x4,
// x1^3x2-x4^2, x2x3^2-x1^2x4.
inline BresinskyData basic() { return BresinskyData::create({2, 3, 3, 1, 2, 3, 1, 1}); }

// a = (1191,1239,582,2303), generators x1^16-x3^9x4^6, x2^11-x1^9x3^5,
// x3^14-x2x4^3, x1^7x2^10-x4^9, x2^10x3^9-x1^9x4^3.
inline BresinskyData large() { return BresinskyData::create({9, 7, 1, 10, 9, 5, 6, 3}); }

// a = (2a^2+a-2, 2a+1, 2a+3, 2a^2+a-1): x1^2-x3^(a-1)x4, x2^(a+1)-x1x3,
// x3^a-x2x4, x1x2^a-x4^2, x2^a x3^(a-1)-x1x4.
inline BresinskyData non_cm(std::int64_t a) { return BresinskyData::create({1, 1, 1, a, a - 1, 1, 1, 1}); }

// a = (a^2+5a, 7a+6, 6a+1, 3a^2+3a-2): x1^3-x3^2x4, x2^a-x1x3^a, x3^(a+2)-x2x4^2,
// x1^2x2^(a-1)-x4^3, x2^(a-1)x3^2-x1x4^2.
inline BresinskyData example11(std::int64_t a) { return BresinskyData::create({1, 2, 1, a - 1, 2, a, 1, 2}); }

inline Monomial mono(std::int64_t e1, std::int64_t e2, std::int64_t e3, std::int64_t e4) {
  return Monomial::affine({e1, e2, e3, e4});
}

inline Binomial bino(const Monomial& a, const Monomial& b, const MonomialOrder& ord = MonomialOrder::standard()) {
  return Binomial::make(a, b, ord);
}

/// Orientation-free identity of a binomial: its two monomials as strings.
inline std::pair<std::string, std::string> key(const Binomial& b) {
  auto x = b.lead().to_string();
  auto y = b.trail().to_string();
  if (y < x) std::swap(x, y);
  return {x, y};
}

template <class Range>
std::set<std::pair<std::string, std::string>> key_set(const Range& r) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& b : r) out.insert(key(b));
  return out;
}

/// Random valid Bresinsky data with every row sum in [2, max_row] and coprime
/// base degrees.
inline BresinskyData random_data(std::mt19937_64& rng, std::int64_t max_row) {
  auto split = [&](std::int64_t& first, std::int64_t& second) {
    std::uniform_int_distribution<std::int64_t> row(2, max_row);
    const std::int64_t total = row(rng);
    std::uniform_int_distribution<std::int64_t> part(1, total - 1);
    first = part(rng);
    second = total - first;
  };
  for (;;) {
    BresinskyData::Params p{};
    split(p.d21, p.d41);
    split(p.d32, p.d42);
    split(p.d13, p.d23);
    split(p.d14, p.d34);
    auto d = BresinskyData::create(p);
    if (gcd_of(a_from_d(d)) == 1) return d;
  }
}

}  // namespace curvelab::fixtures

#endif  // CURVELAB_TESTS_FIXTURES_HPP
