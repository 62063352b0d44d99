#include "curvelab/bresinsky.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "curvelab/error.hpp"

namespace curvelab {
namespace {

using checked::add;
using checked::mul;
using checked::sub;

__extension__ using Wide = __int128;

// Solutions of c x = r (mod n) form the progression first + k step.
struct Progression {
  std::int64_t first;
  std::int64_t step;
};

std::optional<Progression> solve_congruence(std::int64_t c, std::int64_t r, std::int64_t n) {
  const std::int64_t g = std::gcd(c, n);
  if (r % g != 0) return std::nullopt;
  const std::int64_t step = n / g;
  if (step == 1) return Progression{0, 1};
  // Extended Euclid for the inverse of c/g modulo step.
  std::int64_t old_r = (c / g) % step, cur_r = step, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const std::int64_t q = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - q * cur_r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
  }
  const auto inv = static_cast<Wide>((old_s % step + step) % step);
  const auto rr = static_cast<Wide>(((r / g) % step + step) % step);
  return Progression{static_cast<std::int64_t>(inv * rr % step), step};
}

std::int64_t first_at_least(const Progression& p, std::int64_t lo) {
  if (p.first >= lo) return p.first;
  return p.first + (lo - p.first + p.step - 1) / p.step * p.step;
}

std::int64_t mul3(std::int64_t a, std::int64_t b, std::int64_t c) { return mul(mul(a, b), c); }

Monomial mono(std::int64_t e1, std::int64_t e2, std::int64_t e3, std::int64_t e4) {
  for (auto e : {e1, e2, e3, e4}) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent: case assumption violated");
  }
  return Monomial::affine({e1, e2, e3, e4});
}

}  // namespace

std::string to_string(const DegreeVector& a) {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
         std::to_string(a[3]) + ")";
}

std::int64_t gcd_of(const DegreeVector& a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, x);
  return g;
}

bool last_is_strict_max(const DegreeVector& a) { return a[3] > a[0] && a[3] > a[1] && a[3] > a[2]; }

DegreeVector permuted(const DegreeVector& a, const Permutation& perm) {
  return {a[perm[0]], a[perm[1]], a[perm[2]], a[perm[3]]};
}

BresinskyData BresinskyData::create(const Params& p) {
  const std::array<std::int64_t, 8> v{p.d21, p.d41, p.d32, p.d42, p.d13, p.d23, p.d14, p.d34};
  if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x <= 0; })) {
    throw Error(ErrorKind::InvalidArgument, "Bresinsky parameters must be positive");
  }
  BresinskyData d(p);
  // Row sums are at least 2 once every parameter is positive; the sums are
  // checked for overflow here so the accessors can stay unchecked.
  add(p.d21, p.d41);
  add(p.d32, p.d42);
  add(p.d13, p.d23);
  add(p.d14, p.d34);
  return d;
}

BresinskyData BresinskyData::shifted(std::int64_t m) const {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "family index m must be non-negative");
  Params p = p_;
  p.d41 = add(p.d41, m);
  p.d14 = add(p.d14, m);
  return create(p);
}

std::array<std::int64_t, 8> BresinskyData::as_array() const {
  return {p_.d21, p_.d41, p_.d32, p_.d42, p_.d13, p_.d23, p_.d14, p_.d34};
}

std::string BresinskyData::to_string() const {
  return "d21=" + std::to_string(p_.d21) + " d41=" + std::to_string(p_.d41) + " d32=" + std::to_string(p_.d32) +
         " d42=" + std::to_string(p_.d42) + " d13=" + std::to_string(p_.d13) + " d23=" + std::to_string(p_.d23) +
         " d14=" + std::to_string(p_.d14) + " d34=" + std::to_string(p_.d34);
}

DegreeVector a_from_d(const BresinskyData& d) {
  return {
      add(mul3(d.d2(), d.d4(), d.d13()), mul3(d.d42(), d.d14(), d.d23())),
      add(mul3(d.d3(), d.d4(), d.d21()), mul3(d.d41(), d.d34(), d.d23())),
      add(mul3(d.d1(), d.d2(), d.d34()), mul3(d.d32(), d.d21(), d.d14())),
      add(mul3(d.d1(), d.d3(), d.d42()), mul3(d.d13(), d.d32(), d.d41())),
  };
}

DegreeVector shift_vector(const BresinskyData& d) {
  const std::int64_t v1 = sub(mul(d.d2(), d.d3()), mul(d.d23(), d.d32()));
  return {
      v1,
      add(mul(d.d21(), d.d3()), mul(d.d23(), d.d34())),
      add(mul(d.d2(), d.d34()), mul(d.d21(), d.d32())),
      v1,
  };
}

std::vector<BresinskyData> d_from_a(const DegreeVector& a, const RecoveryOptions& opts) {
  if (std::any_of(a.begin(), a.end(), [](std::int64_t x) { return x <= 0; })) {
    throw Error(ErrorKind::InvalidArgument, "degrees must be positive");
  }
  if (!last_is_strict_max(a)) throw Refusal("max-coordinate fails", "a4 is not strictly maximal in " + to_string(a));
  if (gcd_of(a) != 1) throw Refusal("gcd>1", "entries of " + to_string(a) + " are not coprime");

  const auto [a1, a2, a3, a4] = a;
  // The formulas force d1 d2 < a3, d1 d3 < a4, d2 d4 < a1 and d3 d4 < a2, so
  // every row sum is below these bounds; the cap only truncates beyond them.
  const std::int64_t bound1 = (std::min(a3, a4) - 1) / 2;
  const std::int64_t bound2 = (std::min(a1, a3) - 1) / 2;
  const std::int64_t bound3 = (std::min(a2, a4) - 1) / 2;
  const std::int64_t bound4 = (std::min(a1, a2) - 1) / 2;
  const bool truncated = std::max({bound1, bound2, bound3, bound4}) > opts.d_cap;
  const std::int64_t max1 = std::min(bound1, opts.d_cap);
  const std::int64_t max2 = std::min(bound2, opts.d_cap);
  const std::int64_t max3 = std::min(bound3, opts.d_cap);
  const std::int64_t max4 = std::min(bound4, opts.d_cap);

  // Enumerate (d1, d21). a-homogeneity of f2 fixes d2 modulo a3/gcd(a2,a3)
  // and pins d23; f4 fixes d42 modulo a4/gcd(a2,a4) and pins d4; f3 fixes d3
  // modulo a4/gcd(a3,a4) and pins d34. Survivors are confirmed against the
  // four degree formulas.
  std::vector<BresinskyData> found;
  for (std::int64_t d1 = 2; d1 <= max1; ++d1) {
    for (std::int64_t d21 = 1; d21 < d1; ++d21) {
      const std::int64_t d41 = d1 - d21;
      const auto p2 = solve_congruence(a2, mul(d21, a1), a3);
      if (!p2) continue;
      for (std::int64_t d2 = first_at_least(*p2, 2); d2 <= max2 && mul(d1, d2) < a3; d2 += p2->step) {
        const std::int64_t num23 = sub(mul(d2, a2), mul(d21, a1));
        if (num23 <= 0) continue;
        const std::int64_t d23 = num23 / a3;
        const auto p42 = solve_congruence(a2, -mul(d41, a1), a4);
        if (!p42) break;
        for (std::int64_t d42 = first_at_least(*p42, 1); d42 < d2; d42 += p42->step) {
          const std::int64_t d32 = d2 - d42;
          const std::int64_t d4 = add(mul(d41, a1), mul(d42, a2)) / a4;
          if (d4 < 2 || d4 > max4) continue;
          const auto p3 = solve_congruence(a3, mul(d32, a2), a4);
          if (!p3) continue;
          for (std::int64_t d3 = first_at_least(*p3, d23 + 1); d3 <= max3 && mul(d1, d3) < a4; d3 += p3->step) {
            const std::int64_t num34 = sub(mul(d3, a3), mul(d32, a2));
            if (num34 <= 0) continue;
            const std::int64_t d34 = num34 / a4;
            const std::int64_t d14 = d4 - d34;
            if (d14 < 1) continue;
            auto candidate = BresinskyData::create({d21, d41, d32, d42, d3 - d23, d23, d14, d34});
            if (a_from_d(candidate) == a) found.push_back(candidate);
          }
        }
      }
    }
  }
  if (found.empty() && truncated) {
    throw Error(ErrorKind::SearchBound, "no parameters with row sums <= " + std::to_string(opts.d_cap) +
                                            " for " + to_string(a) + "; larger ones are not excluded");
  }
  return found;
}

std::vector<OrderedRecovery> d_from_a_any_order(const DegreeVector& a, const RecoveryOptions& opts) {
  const auto top = std::max_element(a.begin(), a.end());
  if (std::count(a.begin(), a.end(), *top) != 1) return {};
  const int top_index = static_cast<int>(top - a.begin());
  if (gcd_of(a) != 1) throw Refusal("gcd>1", "entries of " + to_string(a) + " are not coprime");

  std::vector<OrderedRecovery> hits;
  std::optional<Error> bound_hit;
  Permutation perm{0, 1, 2, 3};
  do {
    if (perm[3] != top_index) continue;
    try {
      for (const auto& d : d_from_a(permuted(a, perm), opts)) hits.push_back({perm, d});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchBound) throw;
      if (!bound_hit) bound_hit = e;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (hits.empty() && bound_hit) throw *bound_hit;
  return hits;
}

ShiftFamily ShiftFamily::from_data(const BresinskyData& d) {
  const DegreeVector a = a_from_d(d);
  if (gcd_of(a) != 1) throw Refusal("gcd>1", "base degrees " + to_string(a) + " are not coprime");
  return ShiftFamily(a, shift_vector(d), d);
}

FamilyMember ShiftFamily::member(std::int64_t m) const {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "family index m must be non-negative");
  FamilyMember fm;
  fm.m = m;
  for (std::size_t i = 0; i < 4; ++i) fm.degrees[i] = add(base_[i], mul(m, shift_[i]));
  fm.gcd_ok = gcd_of(fm.degrees) == 1;
  fm.max_ok = last_is_strict_max(fm.degrees);
  return fm;
}

std::array<Binomial, 5> generators(const BresinskyData& d, std::int64_t m, const MonomialOrder& ord) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "family index m must be non-negative");
  return {
      Binomial::make(mono(add(d.d1(), m), 0, 0, 0), mono(0, 0, d.d13(), add(d.d14(), m)), ord),
      Binomial::make(mono(0, d.d2(), 0, 0), mono(d.d21(), 0, d.d23(), 0), ord),
      Binomial::make(mono(0, 0, d.d3(), 0), mono(0, d.d32(), 0, d.d34()), ord),
      Binomial::make(mono(add(d.d41(), m), d.d42(), 0, 0), mono(0, 0, 0, add(d.d4(), m)), ord),
      Binomial::make(mono(0, d.d42(), d.d13(), 0), mono(d.d21(), 0, 0, d.d34()), ord),
  };
}

std::int64_t compute_w(const BresinskyData& d, std::int64_t m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "family index m must be non-negative");
  auto ceil_div = [](std::int64_t p, std::int64_t q) { return (p + q - 1) / q; };
  const std::int64_t w = std::min(ceil_div(add(d.d1(), m), d.d21()), ceil_div(d.d3(), d.d23()));
  if (w < 2) throw Error(ErrorKind::Inconsistent, "w < 2 for " + d.to_string());
  return w;
}

ExtraBinomials extra_binomials(const BresinskyData& d, std::int64_t m, const MonomialOrder& ord) {
  if (d.d2() >= d.d21() + d.d23()) {
    throw Error(ErrorKind::InvalidArgument, "extra binomials are defined only when d2 < d21 + d23");
  }
  const std::int64_t w = compute_w(d, m);
  const std::int64_t d1m = add(d.d1(), m);
  const std::int64_t d4m = add(d.d4(), m);
  std::vector<Binomial> p, q;
  for (std::int64_t i = 1; i <= w - 2; ++i) {
    const std::int64_t x2 = sub(mul(i + 1, d.d2()), d.d32());
    p.push_back(Binomial::make(mono(0, x2, sub(d.d3(), mul(i + 1, d.d23())), 0),
                               mono(mul(i + 1, d.d21()), 0, 0, d.d34()), ord));
    q.push_back(Binomial::make(mono(sub(d1m, mul(i + 1, d.d21())), x2, 0, 0),
                               mono(0, 0, mul(i, d.d23()), d4m), ord));
  }
  const std::int64_t branch = sub(d1m, mul(w, d.d21()));
  const Monomial r_lead = mono(0, sub(mul(w, d.d2()), d.d32()), 0, 0);
  const Monomial r_trail =
      branch > 0 ? mono(mul(w, d.d21()), 0, sub(mul(w, d.d23()), d.d3()), d.d34())
                 : mono(sub(mul(w, d.d21()), d1m), 0, mul(w - 1, d.d23()), d4m);
  return {std::move(p), std::move(q), Binomial::make(r_lead, r_trail, ord), w, branch};
}

bool toric_membership(const Binomial& b, const DegreeVector& degrees) {
  if (b.ring() != Ring::Affine) throw Error(ErrorKind::RingMismatch, "toric membership needs an affine binomial");
  return weight(b.lead(), degrees) == weight(b.trail(), degrees);
}

bool CaseEvaluation::all_pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.pass(); });
}

const Condition* CaseEvaluation::first_failure() const {
  auto it = std::find_if(conditions.begin(), conditions.end(), [](const Condition& c) { return !c.pass(); });
  return it == conditions.end() ? nullptr : &*it;
}

const Condition* CaseEvaluation::find(int index) const {
  auto it = std::find_if(conditions.begin(), conditions.end(), [&](const Condition& c) { return c.index == index; });
  return it == conditions.end() ? nullptr : &*it;
}

CaseEvaluation evaluate_conditions(const BresinskyData& d, std::int64_t m) {
  CaseEvaluation ev;
  const std::int64_t c1 = d.d1() - d.d13() - d.d14();
  const std::int64_t c2 = d.d3() - d.d32() - d.d34();
  const std::int64_t c3 = d.d42() + d.d13() - d.d21() - d.d34();
  const std::int64_t slope = d.d2() - d.d21() - d.d23();
  if (slope >= 0) {
    ev.case_id = 1;
    ev.conditions = {
        {1, "(1) d1 >= d13+d14", c1},
        {2, "(2) d3 >= d32+d34", c2},
        {3, "(3) d21+d34 <= d42+d13", c3},
    };
    return ev;
  }
  ev.case_id = 2;
  const std::int64_t w = compute_w(d, m);
  const std::int64_t branch = sub(add(d.d1(), m), mul(w, d.d21()));
  const std::int64_t tail_a = d.d3() - d.d32() - d.d34();
  const std::int64_t tail_b = d.d1() + d.d23() - d.d4() - d.d32();
  ev.w = w;
  ev.branch = branch;
  ev.conditions = {
      {1, "(1) d1 >= d13+d14", c1},
      {2, "(2) d3 >= d32+d34", c2},
      {3, "(3) d21+d34 <= d13+d42", c3},
      {4, "(4) (w-1)(d2-d21-d23)+d3-d32-d34 >= 0", add(mul(w - 1, slope), tail_a)},
      {5, "(5) (w-1)(d2-d21-d23)+d1+d23-d4-d32 >= 0", add(mul(w - 1, slope), tail_b)},
  };
  if (branch > 0) {
    ev.conditions.push_back({6, "(6) w(d2-d21-d23)+d3-d32-d34 >= 0", add(mul(w, slope), tail_a)});
  } else {
    ev.conditions.push_back({7, "(7) w(d2-d21-d23)+d1+d23-d4-d32 >= 0", add(mul(w, slope), tail_b)});
  }
  return ev;
}

ClosedFormBasis closed_form_basis(const BresinskyData& d, std::int64_t m) {
  const DegreeVector degrees = ShiftFamily::from_data(d).member(m).degrees;
  if (gcd_of(degrees) != 1) throw Refusal("gcd>1", "entries of " + to_string(degrees) + " are not coprime");
  CaseEvaluation ev = evaluate_conditions(d, m);
  if (const Condition* bad = ev.first_failure()) {
    throw Refusal("condition fails", bad->name + " (value " + std::to_string(bad->value) + ")");
  }
  const MonomialOrder ord = MonomialOrder::standard();
  const auto gens = generators(d, m, ord);
  std::vector<Binomial> elems(gens.begin(), gens.end());
  if (ev.case_id == 1) {
    // Canonical ordering of a reduced basis is ascending by lead.
    std::sort(elems.begin(), elems.end(),
              [&](const Binomial& x, const Binomial& y) { return ord.less(x.lead(), y.lead()); });
    BinomialBasis g(ord, std::move(elems));
    g.mark_groebner(true);
    return {std::move(g), std::move(ev)};
  }
  auto extra = extra_binomials(d, m, ord);
  elems.insert(elems.end(), extra.p.begin(), extra.p.end());
  elems.insert(elems.end(), extra.q.begin(), extra.q.end());
  elems.push_back(extra.r);
  BinomialBasis t(ord, std::move(elems));
  t.mark_groebner(false);
  return {std::move(t), std::move(ev)};
}

}  // namespace curvelab
