#include "superlag/driver.hpp"

#include <random>

#include "superlag/constraints.hpp"
#include "superlag/error.hpp"
#include "superlag/lagrangian.hpp"
#include "superlag/verifier.hpp"

namespace superlag {

namespace {

class StageError : public Error {
 public:
  StageError(const char* stage, const std::exception& e) : Error(std::string(stage) + ": " + e.what()) {}
};

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e);
  }
}

std::uint64_t option_value(const ProblemFile& file, const char* key, std::uint64_t fallback) {
  auto it = file.options.find(key);
  return it == file.options.end() ? fallback : std::stoull(it->second);
}

KernelReport kernel_report(const KernelBasis& k) {
  KernelReport out{to_string(k.space), k.decided, {}};
  for (const auto& f : k.fields) out.fields.push_back(render(f));
  return out;
}

void analyze(const ProblemFile& file, const RunOptions& options, AnalysisReport& report) {
  const std::uint64_t seed = options.seed ? *options.seed : option_value(file, kOptionSeed, kDefaultSeed);
  const auto trials = static_cast<unsigned>(
      options.oracle_trials ? *options.oracle_trials : option_value(file, kOptionOracle, 0));
  report.seed = seed;
  report.even_names = file.even_names;
  report.odd_names = file.odd_names;

  IdentityVerifier verifier(trials, seed);
  std::mt19937_64 rng(seed);
  bool undecided = false;

  const PhaseSpace ps = stage("parser", [&] { return charts_for(file); });
  const Superfunction l = stage("parser", [&] {
    return parse_expression(file.lagrangian.text, ps.tangent, file.lagrangian.line, file.lagrangian.column);
  });
  report.lagrangian = render(l);

  const LagrangianProblem p = stage("lagrangian", [&] { return build_problem(ps, l, &verifier); });
  const Verdict regular = is_regular(p);
  undecided = undecided || regular == Verdict::Undecided;
  report.regular = to_string(regular);
  for (std::size_t i = 0; i < ps.cotangent->size(); ++i) {
    report.legendre.emplace_back(ps.cotangent->generator(i).name, render(p.fl_pullback.image(i)));
  }
  report.energy = render(p.energy);
  for (auto u : p.velocity) report.hessian_labels.push_back(ps.tangent->generator(u).name);
  for (std::size_t i = 0; i < p.velocity.size(); ++i) {
    std::vector<RenderedFunction> row;
    for (std::size_t j = 0; j < p.velocity.size(); ++j) row.push_back(render(p.hessian(i, j)));
    report.hessian.push_back(std::move(row));
  }

  stage("lagrangian", [&] {
    const auto fl = kernel_FL_star(p, &verifier);
    const auto om = kernel_omega_L(p, &verifier);
    const auto vk = vertical_kernel_omega_L(p, &verifier);
    for (const auto* k : {&fl, &om, &vk}) {
      undecided = undecided || !k->decided;
      report.kernels.push_back(kernel_report(*k));
    }
    if (fl.decided) {
      for (const auto& u : fl.fields) {
        verifier.equal(checks::kEnergyProjectable, u.apply(p.energy), Superfunction(ps.tangent));
      }
    }
    if (fl.decided && vk.decided) {
      bool same = true;
      for (const auto& u : fl.fields) same = same && interior(u, p.omega_L).is_zero();
      for (const auto& u : vk.fields) {
        for (std::size_t b = 0; b < ps.base_count(); ++b) {
          same = same && u.apply(p.fl_pullback.image(ps.fiber_index(b))).is_zero();
        }
      }
      verifier.record("Vker omega_L = ker FL_*", same);
    }
    if (regular == Verdict::Yes) report.sode = render(sode_field(p, &verifier));
    return 0;
  });

  const TimeEvolutionOperator k = stage("constraints", [&] { return build_K(p, &verifier); });
  std::vector<ConstraintRecord> records;
  stage("constraints", [&] {
    if (regular != Verdict::Yes) {
      try {
        records = primary_constraints(p, &verifier);
      } catch (const NotSupported& e) {
        report.constraint_note = std::string("primary constraints not extracted: ") + e.what();
      }
    }
    return 0;
  });
  std::vector<SourceText> user = file.constraints;
  for (const auto& c : options.constraints) user.push_back(SourceText{c, 1, 1});
  for (const auto& c : user) {
    const auto h = stage("parser", [&] { return parse_expression(c.text, ps.cotangent, c.line, c.column); });
    records.push_back(stage("constraints", [&] { return user_constraint(p, h); }));
  }
  stage("constraints", [&] {
    analyze_constraints(p, k, records, rng, &verifier);
    return 0;
  });
  for (const auto& r : records) {
    ConstraintReport c;
    c.h = render(r.h);
    c.parity = to_string(r.parity);
    c.origin = to_string(r.origin);
    if (r.c_h) c.c_h = render(*r.c_h);
    c.projectable = to_string(r.projectable.verdict);
    if (r.projectable.preimage) c.preimage = render(*r.projectable.preimage);
    c.class_label = to_string(r.class_label);
    c.kernel_test = to_string(r.kernel_test);
    c.fixed_representative = to_string(r.fixed_representative);
    c.gamma_independent = r.gamma_independent;
    undecided = undecided || r.projectable.verdict == Verdict::Undecided ||
                r.class_label == ClassLabel::Undecided || r.kernel_test == KernelTest::Undecided;
    report.constraints.push_back(std::move(c));
  }

  for (const auto& text : options.projections) {
    const auto g = stage("parser", [&] { return parse_expression(text, ps.tangent); });
    const auto pr = stage("constraints", [&] { return is_projectable(p, g, &verifier); });
    ProjectionReport out{render(g), to_string(pr.verdict), std::nullopt};
    if (pr.preimage) out.preimage = render(*pr.preimage);
    undecided = undecided || pr.verdict == Verdict::Undecided;
    report.projections.push_back(std::move(out));
  }

  for (const auto& t : verifier.tallies()) report.checks.push_back({t.name, t.ran, t.passed});
  if (trials > 0) report.oracle = OracleReport{trials, verifier.oracle_assertions(), verifier.oracle_mismatches()};
  report.status = undecided ? "undecided" : "ok";
}

}  // namespace

AnalysisReport run(const ProblemFile& file, const RunOptions& options, const std::string& source) {
  AnalysisReport report;
  report.source = source;
  try {
    analyze(file, options, report);
  } catch (const std::exception& e) {
    AnalysisReport failed;
    failed.source = source;
    failed.seed = report.seed;
    failed.status = "error";
    failed.error = e.what();
    return failed;
  }
  return report;
}

AnalysisReport run_file(const std::string& path, const RunOptions& options) {
  ProblemFile file;
  try {
    file = load_problem(path);
  } catch (const std::exception& e) {
    AnalysisReport failed;
    failed.source = path;
    failed.status = "error";
    failed.error = std::string("parser: ") + e.what();
    return failed;
  }
  return run(file, options, path);
}

int exit_code(const std::vector<AnalysisReport>& reports) {
  bool undecided = false;
  for (const auto& r : reports) {
    if (r.error) return 1;
    undecided = undecided || r.status == "undecided";
  }
  return undecided ? 2 : 0;
}

}  // namespace superlag
