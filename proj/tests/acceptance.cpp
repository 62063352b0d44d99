// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curvelab/acm.hpp"
#include "fixtures.hpp"

using namespace curvelab;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;
  void fail(const std::string& s) {
    if (ok) why << s;
    ok = false;
  }
};

// Bases emitted in criteria 1-5 and 7, re-checked in criterion 8.
std::vector<std::pair<BresinskyData, std::int64_t>> g_emitted;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void scan_expect(Check& c, const BresinskyData& d, std::int64_t hi, bool expected, int* applicable_out = nullptr) {
  int applicable = 0;
  for (const auto& r : cross_validate(d, 0, hi)) {
    if (r.error) c.fail("m=" + std::to_string(r.m) + " error: " + *r.error);
    if (!r.applicable) continue;
    ++applicable;
    if (!r.agree || !*r.agree) c.fail("m=" + std::to_string(r.m) + " disagreement");
    if (*r.verdict_criterion != expected) c.fail("m=" + std::to_string(r.m) + " wrong verdict");
    if (expected) g_emitted.emplace_back(*r.data, r.analyzed_m);
  }
  if (applicable_out) *applicable_out = applicable;
}

Check criterion1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  int applicable = 0;
  scan_expect(c, fixtures::non_cm(2), 50, true, &applicable);
  if (applicable != 51) c.fail("expected gcd 1 at all 51 members, got " + std::to_string(applicable));
  const double s = seconds_since(t0);
  if (s >= 10) c.fail("runtime " + std::to_string(s) + " s");
  c.why << (c.ok ? "51/51 ACM, agreeing; " + std::to_string(s) + " s" : "");
  return c;
}

Check criterion2() {
  Check c;
  int applicable = 0;
  if (a_from_d(fixtures::non_cm(3)) != DegreeVector{19, 7, 9, 20}) c.fail("a mismatch");
  scan_expect(c, fixtures::non_cm(3), 50, false, &applicable);
  if (applicable == 0) c.fail("no applicable member");
  if (c.ok) c.why << applicable << " applicable members, all non-ACM";
  return c;
}

Check criterion3() {
  Check c;
  int direct = 0, reordered = 0;
  for (const auto& r : cross_validate(fixtures::basic(), 0, 20)) {
    const std::string at = "m=" + std::to_string(r.m) + " ";
    if (r.error) c.fail(at + *r.error);
    if (!r.applicable) continue;
    if (!*r.agree) c.fail(at + "disagreement");
    if (*r.verdict_criterion) c.fail(at + "ACM");
    if (r.m <= 7) {
      ++direct;
      const Condition* six = nullptr;
      for (const auto& cond : r.conditions)
        if (cond.index == 6) six = &cond;
      if (!six || six->value != -1) c.fail(at + "condition (6) is not -1");
    } else {
      ++reordered;
      if (!r.reordered) c.fail(at + "not reordered");
    }
  }
  if (direct == 0 || reordered == 0) c.fail("missing members");
  if (c.ok) c.why << direct << " direct members with (6)=-1, " << reordered << " reordered, all non-ACM";
  return c;
}

Check criterion4() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = fixtures::large();
  int applicable = 0;
  for (const auto& r : cross_validate(d, 0, 30)) {
    const std::string at = "m=" + std::to_string(r.m) + " ";
    if (r.error) c.fail(at + *r.error);
    if (!r.applicable) continue;
    ++applicable;
    if (!*r.agree || !*r.verdict_criterion) c.fail(at + "verdict");
    if (r.w != (r.m <= 2 ? 2 : 3)) c.fail(at + "w");
    g_emitted.emplace_back(d, r.m);
  }
  for (std::int64_t m = 0; m <= 30; ++m) {
    const auto ev = evaluate_conditions(d, m);
    auto value = [&](int i) { return ev.find(i) ? ev.find(i)->value : INT64_MIN; };
    std::pair<std::int64_t, std::int64_t> got, want;
    if (m <= 2) {
      got = {value(7), value(4)}, want = {5, 7};
    } else if (m <= 11) {
      got = {value(7), value(4)}, want = {2, 4};
    } else {
      got = {value(6), value(5)}, want = {1, 5};
    }
    if (got != want) c.fail("m=" + std::to_string(m) + " condition values");
  }
  const double s = seconds_since(t0);
  if (s >= 60) c.fail("runtime " + std::to_string(s) + " s");
  if (c.ok) c.why << applicable << " applicable members ACM; values (5,7)/(2,4)/(1,5); " << s << " s";
  return c;
}

Check criterion5() {
  Check c;
  const auto d = fixtures::example11(4);
  if (a_from_d(d) != DegreeVector{36, 34, 25, 58}) c.fail("a mismatch");
  if (shift_vector(d) != DegreeVector{20, 14, 9, 20}) c.fail("v mismatch");
  int applicable = 0;
  scan_expect(c, d, 30, true, &applicable);
  if (applicable == 0) c.fail("no applicable member");
  if (c.ok) c.why << applicable << " applicable members, all ACM";
  return c;
}

Check criterion6() {
  Check c;
  for (const auto& [d, a, v] : std::vector<std::tuple<BresinskyData, DegreeVector, DegreeVector>>{
           {fixtures::basic(), {19, 29, 26, 43}, {11, 13, 10, 11}},
           {fixtures::large(), {1191, 1239, 582, 2303}, {149, 141, 42, 149}}}) {
    const auto found = d_from_a(a);
    if (found.size() != 1 || !(found[0] == d)) c.fail("d_from_a " + to_string(a));
    if (a_from_d(d) != a) c.fail("a_from_d " + to_string(a));
    if (shift_vector(d) != v) c.fail("shift " + to_string(a));
  }
  if (c.ok) c.why << "both parameter sets recovered, a and v reproduced";
  return c;
}

Check criterion7() {
  Check c;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> mdist(0, 10);
  int samples = 0, attempts = 0, acm = 0;
  while (samples < 200 && attempts < 100000) {
    ++attempts;
    const auto d = fixtures::random_data(rng, 10);
    const auto m = mdist(rng);
    const auto member = ShiftFamily::from_data(d).member(m);
    if (!member.gcd_ok || !member.max_ok) continue;
    if (!evaluate_conditions(d, m).all_pass()) continue;
    ++samples;
    const std::string at = d.to_string() + " m=" + std::to_string(m) + " ";
    try {
      const auto closed = closed_form_basis(d, m);
      const auto gens = generators(d, m);
      const auto oracle = reduce_basis(buchberger(gens, MonomialOrder::standard()));
      if (!reduce_basis(closed.basis).same_elements(oracle)) c.fail(at + "bases differ");
      const auto r = analyze_member(d, m);
      if (!r.agree || !*r.agree) c.fail(at + "verdicts disagree");
      if (r.verdict_criterion == true) ++acm;
      g_emitted.emplace_back(d, m);
    } catch (const std::exception& e) {
      c.fail(at + e.what());
    }
  }
  if (samples < 200) c.fail("only " + std::to_string(samples) + " samples");
  if (c.ok) c.why << samples << " samples, bases identical, 0 disagreements";
  return c;
}

Check criterion8() {
  Check c;
  int bases = 0, elements = 0;
  for (const auto& [d, m] : g_emitted) {
    const std::string at = d.to_string() + " m=" + std::to_string(m) + " ";
    const auto closed = closed_form_basis(d, m);
    BinomialBasis plain(closed.basis.order(), {closed.basis.elements().begin(), closed.basis.elements().end()});
    if (!is_groebner(plain).is_groebner) c.fail(at + "closed form not Groebner");
    const auto h = homogeneous_basis(d, m);
    BinomialBasis hplain(h.order(), {h.elements().begin(), h.elements().end()});
    if (!is_groebner(hplain).is_groebner) c.fail(at + "homogeneous basis not Groebner");
    const auto degrees = ShiftFamily::from_data(d).member(m).degrees;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!h[i].is_homogeneous() || !check_h_membership(h[i], degrees)) c.fail(at + "h-membership");
      const auto back = dehomogenize(h[i]);
      if (!back || !(*back == closed.basis[i])) c.fail(at + "round trip");
      ++elements;
    }
    ++bases;
  }
  if (bases == 0) c.fail("no bases collected");
  if (c.ok) c.why << bases << " bases, " << elements << " homogeneous elements verified";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"1 non-CM a=2, m 0..50 all ACM", criterion1},
      {"2 non-CM a=3, m 0..50 none ACM", criterion2},
      {"3 (19,29,26,43), m 0..20 none ACM", criterion3},
      {"4 (1191,1239,582,2303), m 0..30 all ACM", criterion4},
      {"5 (36,34,25,58), m 0..30 all ACM", criterion5},
      {"6 parameter recovery", criterion6},
      {"7 closed form vs Buchberger, 200 samples", criterion7},
      {"8 Groebner verifier on emitted bases", criterion8},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  criterion %s: %s\n", c.ok ? "PASS" : "FAIL", name, c.why.str().c_str());
    failed += !c.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
