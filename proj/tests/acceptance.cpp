// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "superlag/constraints.hpp"
#include "superlag/driver.hpp"
#include "superlag/error.hpp"
#include "superlag/oracle.hpp"
#include "superlag/parser.hpp"
#include "superlag/random.hpp"
#include "superlag/verifier.hpp"
#include "support/families.hpp"

using namespace superlag;

namespace {

constexpr unsigned kOracleTrials = 20;
constexpr int kSingularCount = 60;
constexpr int kRegularCount = 100;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every verifier created by criteria 2-10 routes through the oracle; their
// totals feed criterion 11.
std::size_t g_oracle_assertions = 0;
std::size_t g_oracle_mismatches = 0;

struct Verifier : IdentityVerifier {
  explicit Verifier(std::uint64_t seed) : IdentityVerifier(kOracleTrials, seed) {}
  ~Verifier() {
    g_oracle_assertions += oracle_assertions();
    g_oracle_mismatches += oracle_mismatches();
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& t : tallies()) n += t.ran - t.passed;
    return n;
  }
};

Parity random_parity(std::mt19937_64& rng) { return draw_below(rng, 2) ? Parity::Odd : Parity::Even; }

std::string fixture(const char* name) { return std::string(SUPERLAG_FIXTURE_DIR) + "/" + name; }

// ---- shared suite ----

struct SuiteEntry {
  families::RandomProblem rp;
  std::unique_ptr<LagrangianProblem> p;
};

std::vector<SuiteEntry> make_suite(bool singular, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteEntry> out;
  while (static_cast<int>(out.size()) < count) {
    auto rp = singular ? families::random_singular_problem(rng) : families::random_regular_problem(rng);
    auto p = std::make_unique<LagrangianProblem>(build_problem(rp.charts, rp.lagrangian));
    out.push_back({std::move(rp), std::move(p)});
  }
  return out;
}

std::vector<SuiteEntry>& singular_suite() {
  static auto s = make_suite(true, kSingularCount, 901);
  return s;
}

std::vector<SuiteEntry>& regular_suite() {
  static auto s = make_suite(false, kRegularCount, 902);
  return s;
}

struct AnalyzedRecord {
  const SuiteEntry* entry;
  ConstraintRecord record;
};

struct SuiteAnalysis {
  std::vector<AnalyzedRecord> records;
  std::size_t identity_failures = 0;
  std::vector<std::string> errors;
};

const SuiteAnalysis& analyzed_suite() {
  static const SuiteAnalysis analysis = [] {
    SuiteAnalysis a;
    std::mt19937_64 rng(903);
    Verifier v(904);
    for (const auto& e : singular_suite()) {
      try {
        const auto k = build_K(*e.p, &v);
        auto records = primary_constraints(*e.p, &v);
        analyze_constraints(*e.p, k, records, rng, &v);
        for (auto& r : records) a.records.push_back({&e, std::move(r)});
      } catch (const std::exception& ex) {
        a.errors.push_back(e.rp.lagrangian.to_string() + ": " + ex.what());
      }
    }
    for (const auto& t : v.tallies()) {
      // The biconditional tallies are counted by criterion 9 itself.
      if (t.name == checks::kKernelTest || t.name == checks::kClassTest) continue;
      a.identity_failures += t.ran - t.passed;
    }
    return a;
  }();
  return analysis;
}

// ---- criteria ----

Outcome algebra_laws() {
  std::mt19937_64 rng(1);
  const auto ps = make_charts({"q1", "q2"}, {"th1", "th2"});
  const auto& c = ps.tangent;
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto pf = random_parity(rng);
    const auto pg = random_parity(rng);
    const auto f = random_superfunction(c, pf, rng);
    const auto g = random_superfunction(c, pg, rng);
    if (!(f * g == koszul_sign(pf, pg) * (g * f))) ++failures;
  }
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_superfunction(c, random_parity(rng), rng);
    const auto g = random_superfunction(c, random_parity(rng), rng);
    const auto h = random_superfunction(c, random_parity(rng), rng);
    if (!((f * g) * h == f * (g * h))) ++failures;
  }
  for (int i = 0; i < 1000; ++i) {
    const auto pf = random_parity(rng);
    const auto f = random_superfunction(c, pf, rng);
    const auto g = random_superfunction(c, random_parity(rng), rng);
    for (std::size_t x = 0; x < c->size(); ++x) {
      const int s = koszul_sign(c->parity(x), pf);
      if (!((f * g).left_partial(x) == f.left_partial(x) * g + s * (f * g.left_partial(x)))) ++failures;
    }
  }
  return {failures == 0, "3000 random cases, " + std::to_string(failures) + " failures"};
}

// Left-coefficient expansions of i_K omega0 and dE_L term by term, converted
// to right coefficients: a dx = dx sigma^{|x|}(a).
struct Expansion {
  OneForm evolution;
  OneForm energy;
};

Expansion coordinate_expansion(const LagrangianProblem& p, const TimeEvolutionOperator& k) {
  const auto& ps = p.charts;
  const auto& tan = ps.tangent;
  const auto& l = p.lagrangian;
  const auto d2 = [&](std::size_t a, std::size_t b) { return l.left_partial(b).left_partial(a); };
  const auto g = [&](std::size_t i) { return Superfunction::generator(tan, i); };
  const auto m = ps.even_count;
  const auto n = ps.odd_count;
  const auto v = [&](std::size_t i) { return ps.fiber_index(i); };
  const auto q = [&](std::size_t i) { return ps.position_index(i); };
  const auto z = [&](std::size_t a) { return ps.fiber_index(m + a); };
  const auto t = [&](std::size_t a) { return ps.position_index(m + a); };

  Expansion out{OneForm(tan), OneForm(tan)};
  const auto set = [&](std::size_t b, const Superfunction& evolution, const Superfunction& energy) {
    const bool odd = is_odd(tan->parity(b));
    out.evolution.set_coefficient(b, odd ? evolution.parity_twist() : evolution);
    out.energy.set_coefficient(b, odd ? energy.parity_twist() : energy);
  };
  for (std::size_t j = 0; j < m; ++j) {
    Superfunction common(tan);
    for (std::size_t i = 0; i < m; ++i) common += g(v(i)) * d2(q(j), v(i));
    for (std::size_t a = 0; a < n; ++a) common += g(z(a)) * d2(q(j), z(a));
    set(q(j), common - k.field.component(ps.fiber_index(j)),
        common - l.left_partial(q(j)));
    Superfunction dv(tan);
    for (std::size_t i = 0; i < m; ++i) dv += g(v(i)) * d2(v(j), v(i));
    for (std::size_t a = 0; a < n; ++a) dv += g(z(a)) * d2(v(j), z(a));
    set(v(j), dv, dv);
  }
  for (std::size_t b = 0; b < n; ++b) {
    Superfunction common(tan);
    for (std::size_t i = 0; i < m; ++i) common += g(v(i)) * d2(t(b), v(i));
    for (std::size_t a = 0; a < n; ++a) common -= g(z(a)) * d2(t(b), z(a));
    const auto& eta = k.field.component(z(b));
    set(t(b), -(common + eta), -(common - l.left_partial(t(b))));
    Superfunction dz(tan);
    for (std::size_t i = 0; i < m; ++i) dz += g(v(i)) * d2(z(b), v(i));
    for (std::size_t a = 0; a < n; ++a) dz -= g(z(a)) * d2(z(b), z(a));
    set(z(b), -dz, -dz);
  }
  return out;
}

std::size_t nonzero_positions_differ(const OneForm& a, const OneForm& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coefficient(i).is_zero() != b.coefficient(i).is_zero()) ++n;
  }
  return n;
}

Outcome convention_lock() {
  std::mt19937_64 rng(2);
  Verifier v(2);
  std::size_t discrepancies = 0;
  const int problems = 25;
  for (int i = 0; i < problems; ++i) {
    const auto rp = families::random_cubic_problem(rng);
    const auto p = build_problem(rp.charts, rp.lagrangian, &v);
    const auto k = build_K(p, &v);
    const auto ours_k = interior(k.field, rp.charts.omega0);
    const auto ours_e = differential(p.energy);
    const auto expanded = coordinate_expansion(p, k);
    v.equal("i_K omega0 vs expansion", ours_k, expanded.evolution);
    v.equal("dE_L vs expansion", ours_e, expanded.energy);
    v.equal("i_K omega0 = dE_L", ours_k, ours_e);
    discrepancies += nonzero_positions_differ(ours_k, expanded.evolution);
    discrepancies += nonzero_positions_differ(ours_e, expanded.energy);
  }
  discrepancies += v.failures();
  return {discrepancies == 0,
          std::to_string(problems) + " random even L (m=2, n=2, degree <= 3), " + std::to_string(discrepancies) +
              " discrepancies"};
}

Outcome definition_identities() {
  Verifier v(3);
  std::size_t problems = 0;
  std::size_t errors = 0;
  const auto check = [&](const LagrangianProblem& p) {
    ++problems;
    try {
      build_K(p, &v);
    } catch (const InconsistentIdentity&) {
      ++errors;
    }
  };
  for (const char* f : {"e1.lag", "e2.lag", "e3.lag", "e4.lag"}) {
    const auto file = load_problem(fixture(f));
    const auto ps = charts_for(file);
    check(build_problem(ps, parse_expression(file.lagrangian.text, ps.tangent)));
  }
  for (const auto& e : singular_suite()) check(*e.p);
  for (const auto& e : regular_suite()) check(*e.p);
  const auto failures = v.failures() + errors;
  return {failures == 0, std::to_string(problems) + " problems, " + std::to_string(failures) + " failed identities"};
}

struct FixtureRun {
  PhaseSpace ps;
  LagrangianProblem p;
  std::vector<ConstraintRecord> records;
};

FixtureRun run_fixture(const char* name, Verifier& v) {
  const auto file = load_problem(fixture(name));
  auto ps = charts_for(file);
  auto p = build_problem(ps, parse_expression(file.lagrangian.text, ps.tangent), &v);
  std::mt19937_64 rng(5);
  const auto k = build_K(p, &v);
  auto records = primary_constraints(p, &v);
  FixtureRun out{ps, std::move(p), std::move(records)};
  analyze_constraints(out.p, build_K(out.p, &v), out.records, rng, &v);
  return out;
}

// Golden value check: exact equality and an oracle re-evaluation.
bool golden(const Superfunction& computed, const std::string& text, const ChartPtr& chart) {
  const auto expected = parse_expression(text, chart);
  return computed == expected && oracle::check_identity(computed, expected, kOracleTrials, 77);
}

Outcome fixture_e1() {
  Verifier v(4);
  auto f = run_fixture("e1.lag", v);
  bool ok = f.records.size() == 1;
  if (ok) {
    const auto& r = f.records[0];
    ok = golden(r.h, "p_q2", f.ps.cotangent) && golden(*r.c_h, "v_q1", f.ps.tangent) &&
         r.projectable.verdict == Verdict::Yes && r.projectable.preimage &&
         golden(*r.projectable.preimage, "p_q1 - q2", f.ps.cotangent) &&
         golden(f.p.fl_pullback.apply(*r.projectable.preimage), "v_q1", f.ps.tangent) &&
         r.class_label == ClassLabel::First && r.kernel_test == KernelTest::InKernel;
  }
  ok = ok && v.failures() == 0;
  return {ok, "h = p_q2, C_h = v_q1, H = p_q1 - q2, first class, in-kernel"};
}

Outcome fixture_e2() {
  Verifier v(5);
  auto f = run_fixture("e2.lag", v);
  bool ok = f.records.size() == 1;
  if (ok) {
    const auto& r = f.records[0];
    const auto bracket = f.p.fl_pullback.apply(poisson(f.ps, r.h, r.h));
    ok = golden(r.h, "eta_th + 1/2*th", f.ps.cotangent) && golden(*r.c_h, "zeta_th", f.ps.tangent) &&
         r.projectable.verdict == Verdict::No && r.class_label == ClassLabel::Second &&
         golden(bracket, "-1", f.ps.tangent) && r.kernel_test == KernelTest::NotInKernel;
  }
  ok = ok && v.failures() == 0;
  return {ok, "h = eta_th + 1/2*th, C_h = zeta_th, not projectable, FL*{h,h} = -1, second class, not-in-kernel"};
}

Outcome fixture_e3() {
  Verifier v(6);
  auto f = run_fixture("e3.lag", v);
  bool ok = f.records.size() == 1;
  if (ok) {
    const auto& r = f.records[0];
    ok = golden(r.h, "p_q1 + p_q2", f.ps.cotangent) && r.c_h->is_zero() && r.projectable.verdict == Verdict::Yes &&
         r.class_label == ClassLabel::First && r.kernel_test == KernelTest::InKernel;
  }
  ok = ok && v.failures() == 0;
  return {ok, "h = p_q1 + p_q2, C_h = 0, projectable, first class"};
}

Outcome regular_evolution() {
  std::mt19937_64 rng(7);
  Verifier v(7);
  std::size_t failures = 0;
  for (const auto& e : regular_suite()) {
    const auto g = sode_field(*e.p, &v);
    const auto k = build_K(*e.p, &v);
    Superfunction h = random_superfunction(e.rp.charts.cotangent, random_parity(rng), rng, RandomPolySpec{4, 3, 5});
    if (!v.equal("G(FL* h) = K(h)", g.apply(e.p->fl_pullback.apply(h)), apply_K(k, h))) ++failures;
  }
  return {failures == 0, std::to_string(regular_suite().size()) + " regular problems, " + std::to_string(failures) +
                             " failures"};
}

Outcome energy_projectable() {
  Verifier v(8);
  std::size_t fields = 0;
  std::size_t failures = 0;
  int problems = 0;
  for (const auto& e : singular_suite()) {
    if (problems == 50) break;
    ++problems;
    const auto k = kernel_FL_star(*e.p, &v);
    if (!k.decided || k.fields.empty()) {
      ++failures;
      continue;
    }
    for (const auto& u : k.fields) {
      ++fields;
      if (!v.equal(checks::kEnergyProjectable, u.apply(e.p->energy), Superfunction(e.rp.charts.tangent))) ++failures;
    }
  }
  return {failures == 0, std::to_string(problems) + " singular problems, " + std::to_string(fields) +
                             " kernel fields, " + std::to_string(failures) + " failures"};
}

Outcome biconditionals() {
  const auto& a = analyzed_suite();
  std::size_t decided_kernel = 0;
  std::size_t decided_class = 0;
  std::size_t violations = 0;
  std::size_t undecided = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  for (const auto& ar : a.records) {
    const auto& r = ar.record;
    const bool proj_decided = r.projectable.verdict != Verdict::Undecided;
    const bool yes = r.projectable.verdict == Verdict::Yes;
    if (!proj_decided || r.kernel_test == KernelTest::Undecided || r.class_label == ClassLabel::Undecided) ++undecided;
    if (proj_decided && r.kernel_test != KernelTest::Undecided) {
      ++decided_kernel;
      if ((r.kernel_test == KernelTest::InKernel) != yes) ++violations;
    }
    if (proj_decided && r.class_label != ClassLabel::Undecided) {
      ++decided_class;
      if ((r.class_label == ClassLabel::First) != yes) ++violations;
    }
    if (r.class_label == ClassLabel::First) ++first;
    if (r.class_label == ClassLabel::Second) ++second;
  }
  const double rate = a.records.empty() ? 1.0 : static_cast<double>(undecided) / a.records.size();
  const bool ok = singular_suite().size() >= 50 && a.errors.empty() && violations == 0 && rate <= 0.2 &&
                  !a.records.empty();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * rate);
  std::ostringstream o;
  o << singular_suite().size() << " singular problems, " << a.records.size() << " constraints (" << first
    << " first, " << second << " second class), " << decided_kernel << "+" << decided_class
    << " decided comparisons, " << violations << " violations, undecided " << buf;
  if (!a.errors.empty()) o << ", " << a.errors.size() << " errors (first: " << a.errors.front() << ")";
  return {ok, o.str()};
}

Outcome gamma_independence() {
  const auto& a = analyzed_suite();
  std::size_t failures = a.identity_failures;
  for (const auto& r : a.records) {
    if (!r.record.gamma_independent.value_or(false)) ++failures;
  }
  return {failures == 0 && !a.records.empty(),
          std::to_string(a.records.size()) + " constraints, two random second-order fields each, " +
              std::to_string(failures) + " failures"};
}

Outcome oracle_cross_check() {
  return {g_oracle_mismatches == 0 && g_oracle_assertions > 0,
          std::to_string(kOracleTrials) + " trials per assertion, " + std::to_string(g_oracle_assertions) +
              " assertions, " + std::to_string(g_oracle_mismatches) + " mismatches"};
}

Outcome parser_round_trip() {
  std::mt19937_64 rng(12);
  const auto ps = make_charts({"q1", "q2"}, {"th1", "th2"});
  std::size_t failures = 0;
  for (int i = 0; i < 500; ++i) {
    const auto& chart = i % 2 ? ps.tangent : ps.cotangent;
    const auto f = parse_expression(families::random_expression(*chart, rng), chart);
    if (!(parse_expression(f.to_string(), chart) == f)) ++failures;
  }
  std::size_t differing = 0;
  for (const char* name : {"e1.lag", "e2.lag", "e3.lag"}) {
    RunOptions opts;
    opts.seed = 99;
    const auto a = run_file(fixture(name), opts);
    const auto b = run_file(fixture(name), opts);
    if (a.error || to_text(a) != to_text(b) || to_json({a}) != to_json({b})) ++differing;
  }
  return {failures == 0 && differing == 0, "500 round trips, " + std::to_string(failures) + " failures; " +
                                               std::to_string(differing) + " of 3 fixture reports differ across runs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"algebra laws", algebra_laws},
      {"convention lock", convention_lock},
      {"evolution operator identities", definition_identities},
      {"fixture E1", fixture_e1},
      {"fixture E2", fixture_e2},
      {"fixture E3", fixture_e3},
      {"regular-case evolution", regular_evolution},
      {"energy projectability", energy_projectable},
      {"kernel/class biconditionals", biconditionals},
      {"independence from the second-order field", gamma_independence},
      {"oracle cross-check", oracle_cross_check},
      {"parser round trip and determinism", parser_round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
              << " (" << ms << " ms)" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
