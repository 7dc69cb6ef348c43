#include "superlag/report.hpp"

#include <sstream>

#include <json.hpp>

#include "superlag/error.hpp"

namespace superlag {

using nlohmann::json;

RenderedFunction render(const Superfunction& f) {
  RenderedFunction out;
  out.text = f.to_string();
  const auto& chart = *f.chart();
  for (const auto& [m, c] : f.terms()) {
    TermEntry t;
    t.coefficient = to_string(c);
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] != 0) t.powers.emplace_back(chart.generator(i).name, m.exponents[i]);
    }
    out.terms.push_back(std::move(t));
  }
  return out;
}

RenderedField render(const VectorField& x) {
  RenderedField out;
  out.text = x.to_string();
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (!x.component(a).is_zero()) out.components.emplace_back(x.domain()->generator(a).name, render(x.component(a)));
  }
  return out;
}

// ---- text ----

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string to_text(const AnalysisReport& r) {
  std::ostringstream o;
  o << "problem: " << r.source << "\n";
  if (r.error) {
    o << "error: " << *r.error << "\n";
    o << "status: " << r.status << "\n";
    return o.str();
  }
  o << "even:";
  for (const auto& n : r.even_names) o << " " << n;
  o << "\nodd:";
  for (const auto& n : r.odd_names) o << " " << n;
  o << "\n";
  if (r.lagrangian) o << "lagrangian: " << r.lagrangian->text << "\n";
  o << "regular: " << r.regular << "\n";
  o << "legendre:\n";
  for (const auto& [name, f] : r.legendre) o << "  " << name << " -> " << f.text << "\n";
  if (r.energy) o << "energy: " << r.energy->text << "\n";
  o << "hessian (" << join(r.hessian_labels, ", ") << "):\n";
  for (const auto& row : r.hessian) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(c.text);
    o << "  [" << join(cells, ", ") << "]\n";
  }
  for (const auto& k : r.kernels) {
    o << k.space << ": ";
    if (!k.decided) {
      o << "undecided\n";
      continue;
    }
    std::vector<std::string> fields;
    for (const auto& f : k.fields) fields.push_back(f.text);
    o << (fields.empty() ? "0" : join(fields, "; ")) << "\n";
  }
  if (r.sode) o << "second-order field: " << r.sode->text << "\n";
  if (r.constraint_note) o << "constraints note: " << *r.constraint_note << "\n";
  if (!r.constraints.empty()) o << "constraints:\n";
  for (const auto& c : r.constraints) {
    o << "  - h: " << c.h.text << "\n";
    o << "    parity: " << c.parity << "\n";
    o << "    origin: " << c.origin << "\n";
    if (c.c_h) o << "    C_h: " << c.c_h->text << "\n";
    o << "    projectable: " << c.projectable << "\n";
    if (c.preimage) o << "    H: " << c.preimage->text << "\n";
    o << "    class: " << c.class_label << "\n";
    o << "    kernel test: " << c.kernel_test << "\n";
    o << "    kernel test, zero vertical part: " << c.fixed_representative << "\n";
    if (c.gamma_independent) o << "    K(h) from random G: " << (*c.gamma_independent ? "agrees" : "DIFFERS") << "\n";
  }
  if (!r.projections.empty()) o << "projections:\n";
  for (const auto& p : r.projections) {
    o << "  - g: " << p.g.text << "\n";
    o << "    projectable: " << p.projectable << "\n";
    if (p.preimage) o << "    H: " << p.preimage->text << "\n";
  }
  o << "checks:\n";
  for (const auto& c : r.checks) {
    o << "  " << c.name << ": " << c.passed << "/" << c.ran << (c.passed == c.ran ? "" : "  FAILED") << "\n";
  }
  if (r.oracle) {
    o << "oracle: " << r.oracle->trials << " trials, " << r.oracle->assertions << " assertions, "
      << r.oracle->mismatches << " mismatches\n";
  }
  o << "seed: " << r.seed << "\n";
  o << "status: " << r.status << "\n";
  return o.str();
}

// ---- json ----

namespace {

json function_json(const RenderedFunction& f) {
  json terms = json::array();
  for (const auto& t : f.terms) {
    json powers = json::array();
    for (const auto& [name, e] : t.powers) powers.push_back(json::array({name, e}));
    terms.push_back({{"coefficient", t.coefficient}, {"powers", powers}});
  }
  return {{"text", f.text}, {"terms", terms}};
}

json field_json(const RenderedField& x) {
  json comps = json::array();
  for (const auto& [name, f] : x.components) comps.push_back({{"generator", name}, {"value", function_json(f)}});
  return {{"text", x.text}, {"components", comps}};
}

template <typename T, typename F>
json optional_json(const std::optional<T>& v, F f) {
  return v ? f(*v) : json(nullptr);
}

json report_json(const AnalysisReport& r) {
  json j;
  j["source"] = r.source;
  j["status"] = r.status;
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  j["seed"] = r.seed;
  j["even"] = r.even_names;
  j["odd"] = r.odd_names;
  j["lagrangian"] = optional_json(r.lagrangian, function_json);
  j["regular"] = r.regular;
  json legendre = json::array();
  for (const auto& [name, f] : r.legendre) legendre.push_back({{"generator", name}, {"pullback", function_json(f)}});
  j["legendre"] = legendre;
  j["energy"] = optional_json(r.energy, function_json);
  j["hessian_labels"] = r.hessian_labels;
  json hessian = json::array();
  for (const auto& row : r.hessian) {
    json jr = json::array();
    for (const auto& c : row) jr.push_back(function_json(c));
    hessian.push_back(jr);
  }
  j["hessian"] = hessian;
  json kernels = json::array();
  for (const auto& k : r.kernels) {
    json fields = json::array();
    for (const auto& f : k.fields) fields.push_back(field_json(f));
    kernels.push_back({{"space", k.space}, {"decided", k.decided}, {"fields", fields}});
  }
  j["kernels"] = kernels;
  j["sode"] = optional_json(r.sode, field_json);
  j["constraint_note"] = r.constraint_note ? json(*r.constraint_note) : json(nullptr);
  json constraints = json::array();
  for (const auto& c : r.constraints) {
    constraints.push_back({{"h", function_json(c.h)},
                           {"parity", c.parity},
                           {"origin", c.origin},
                           {"C_h", optional_json(c.c_h, function_json)},
                           {"projectable", c.projectable},
                           {"H", optional_json(c.preimage, function_json)},
                           {"class", c.class_label},
                           {"kernel_test", c.kernel_test},
                           {"kernel_test_zero_vertical", c.fixed_representative},
                           {"gamma_independent", c.gamma_independent ? json(*c.gamma_independent) : json(nullptr)}});
  }
  j["constraints"] = constraints;
  json projections = json::array();
  for (const auto& p : r.projections) {
    projections.push_back({{"g", function_json(p.g)},
                           {"projectable", p.projectable},
                           {"H", optional_json(p.preimage, function_json)}});
  }
  j["projections"] = projections;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ran", c.ran}, {"passed", c.passed}});
  j["checks"] = checks;
  j["oracle"] = r.oracle ? json{{"trials", r.oracle->trials},
                                {"assertions", r.oracle->assertions},
                                {"mismatches", r.oracle->mismatches}}
                         : json(nullptr);
  return j;
}

RenderedFunction function_from(const json& j) {
  RenderedFunction f;
  f.text = j.at("text").get<std::string>();
  for (const auto& t : j.at("terms")) {
    TermEntry e;
    e.coefficient = t.at("coefficient").get<std::string>();
    for (const auto& p : t.at("powers")) e.powers.emplace_back(p.at(0).get<std::string>(), p.at(1).get<unsigned>());
    f.terms.push_back(std::move(e));
  }
  return f;
}

RenderedField field_from(const json& j) {
  RenderedField x;
  x.text = j.at("text").get<std::string>();
  for (const auto& c : j.at("components")) {
    x.components.emplace_back(c.at("generator").get<std::string>(), function_from(c.at("value")));
  }
  return x;
}

std::optional<RenderedFunction> optional_function(const json& j) {
  if (j.is_null()) return std::nullopt;
  return function_from(j);
}

std::optional<std::string> optional_string(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

AnalysisReport report_from(const json& j) {
  AnalysisReport r;
  r.source = j.at("source").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.error = optional_string(j.at("error"));
  r.seed = j.at("seed").get<std::uint64_t>();
  r.even_names = j.at("even").get<std::vector<std::string>>();
  r.odd_names = j.at("odd").get<std::vector<std::string>>();
  r.lagrangian = optional_function(j.at("lagrangian"));
  r.regular = j.at("regular").get<std::string>();
  for (const auto& l : j.at("legendre")) {
    r.legendre.emplace_back(l.at("generator").get<std::string>(), function_from(l.at("pullback")));
  }
  r.energy = optional_function(j.at("energy"));
  r.hessian_labels = j.at("hessian_labels").get<std::vector<std::string>>();
  for (const auto& row : j.at("hessian")) {
    std::vector<RenderedFunction> cells;
    for (const auto& c : row) cells.push_back(function_from(c));
    r.hessian.push_back(std::move(cells));
  }
  for (const auto& k : j.at("kernels")) {
    KernelReport kr;
    kr.space = k.at("space").get<std::string>();
    kr.decided = k.at("decided").get<bool>();
    for (const auto& f : k.at("fields")) kr.fields.push_back(field_from(f));
    r.kernels.push_back(std::move(kr));
  }
  if (!j.at("sode").is_null()) r.sode = field_from(j.at("sode"));
  r.constraint_note = optional_string(j.at("constraint_note"));
  for (const auto& c : j.at("constraints")) {
    ConstraintReport cr;
    cr.h = function_from(c.at("h"));
    cr.parity = c.at("parity").get<std::string>();
    cr.origin = c.at("origin").get<std::string>();
    cr.c_h = optional_function(c.at("C_h"));
    cr.projectable = c.at("projectable").get<std::string>();
    cr.preimage = optional_function(c.at("H"));
    cr.class_label = c.at("class").get<std::string>();
    cr.kernel_test = c.at("kernel_test").get<std::string>();
    cr.fixed_representative = c.at("kernel_test_zero_vertical").get<std::string>();
    if (!c.at("gamma_independent").is_null()) cr.gamma_independent = c.at("gamma_independent").get<bool>();
    r.constraints.push_back(std::move(cr));
  }
  for (const auto& p : j.at("projections")) {
    ProjectionReport pr;
    pr.g = function_from(p.at("g"));
    pr.projectable = p.at("projectable").get<std::string>();
    pr.preimage = optional_function(p.at("H"));
    r.projections.push_back(std::move(pr));
  }
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("ran").get<std::size_t>(),
                        c.at("passed").get<std::size_t>()});
  }
  if (!j.at("oracle").is_null()) {
    const auto& o = j.at("oracle");
    r.oracle = OracleReport{o.at("trials").get<unsigned>(), o.at("assertions").get<std::size_t>(),
                            o.at("mismatches").get<std::size_t>()};
  }
  return r;
}

}  // namespace

std::string to_json(const std::vector<AnalysisReport>& reports) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["reports"] = json::array();
  for (const auto& r : reports) doc["reports"].push_back(report_json(r));
  return doc.dump(2) + "\n";
}

std::vector<AnalysisReport> reports_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const int version = doc.at("format_version").get<int>();
    if (version != kFormatVersion) throw Error("unsupported report format_version " + std::to_string(version));
    std::vector<AnalysisReport> out;
    for (const auto& r : doc.at("reports")) out.push_back(report_from(r));
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

}  // namespace superlag
