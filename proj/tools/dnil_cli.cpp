// dnil: command-line front end for the D_m oracles and verification suites.
//
// Exit codes: 0 verified / true, 1 falsified / exhausted, 2 usage or internal
// error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "dnil/diffop.hpp"
#include "dnil/embedding.hpp"
#include "dnil/errors.hpp"
#include "dnil/ideal.hpp"
#include "dnil/report.hpp"
#include "dnil/verify.hpp"

namespace {

using namespace dnil;

struct Globals {
  unsigned m = 2;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t max_terms = 5'000'000;
  std::string out;
};

struct Outcome {
  Report report;
  std::string text;
  int exit_code = 0;
};

void require_m(unsigned m) {
  if (m < 2) throw InvalidParameter("--m must be at least 2");
}

std::string certificate_text(const MembershipCertificate& cert) {
  std::ostringstream os;
  for (const auto& t : cert.terms) {
    os << "  " << to_string(t.coefficient) << " * " << to_string(t.cofactor) << " * (x^" << cert.m << ")^(" << t.k
       << ")\n";
  }
  return os.str();
}

Outcome cmd_reduce(const Globals& g, const std::string& text) {
  require_m(g.m);
  DiffPolynomial f = parse_polynomial(text);
  auto nf = normal_form(f, g.m);
  auto mem = membership(f, g.m);
  Outcome o;
  o.report.command = "reduce";
  o.report.params = {{"m", g.m}, {"poly", text}};
  o.report.result = {{"normal_form", to_string(nf.poly())}, {"terms", to_json(nf.poly())}, {"member", mem.member}};
  if (mem.certificate) o.report.certificate = to_json(*mem.certificate);
  o.text = to_string(nf.poly()) + "\nmember=" + (mem.member ? "true" : "false") + "\n";
  return o;
}

Outcome cmd_member(const Globals& g, const std::string& text) {
  require_m(g.m);
  DiffPolynomial f = parse_polynomial(text);
  auto mem = membership(f, g.m);
  Outcome o;
  o.report.command = "member";
  o.report.params = {{"m", g.m}, {"poly", text}};
  o.report.result = {{"member", mem.member}};
  o.text = std::string("member=") + (mem.member ? "true" : "false") + "\n";
  if (mem.certificate) {
    o.report.certificate = to_json(*mem.certificate);
    o.text += "certificate:\n" + certificate_text(*mem.certificate);
  }
  o.exit_code = mem.member ? 0 : 1;
  return o;
}

Outcome cmd_embed(const Globals& g, const std::string& text) {
  require_m(g.m);
  DiffPolynomial f = parse_polynomial(text);
  GrassmannElement image = phi(g.m, f);
  Outcome o;
  o.report.command = "embed";
  o.report.params = {{"m", g.m}, {"poly", text}};
  o.report.result = {{"image", to_string(image)}, {"terms", to_json(image)}, {"size", image.size()}};
  o.text = to_string(image) + "\n";
  return o;
}

// Cap used when none is given: x_i gets its predicted index plus slack, any
// other element of D_2 its operator bound.
unsigned default_cap(const DiffPolynomial& f, unsigned m) {
  if (f.size() == 1) {
    const auto& [mono, c] = *f.terms().begin();
    const auto& factors = mono.factors();
    if (factors.size() == 1 && factors.front().second == 1) {
      unsigned i = factors.front().first;
      return (i + 1) * m - i + 2;
    }
  }
  if (m == 2) return nil_bound(DiffOperator::element(normal_form(f, 2).poly()));
  throw InvalidParameter("--cap is required for this element when m > 2");
}

Outcome cmd_nilindex(const Globals& g, const std::string& text, std::optional<unsigned> cap, bool as_operator) {
  require_m(g.m);
  Outcome o;
  o.report.command = "nilindex";
  o.report.params = {{"m", g.m}, {"input", text}, {"operator", as_operator}};
  if (as_operator) {
    if (g.m != 2) throw InvalidParameter("operators are defined over D_2 only");
    DiffOperator a = parse_operator(text);
    unsigned bound = nil_bound(a);
    unsigned n = nil_index_operator(a);
    o.report.result = {{"index", n}, {"bound", bound}};
    o.text = "index=" + std::to_string(n) + " bound=" + std::to_string(bound) + "\n";
    return o;
  }
  DiffPolynomial f = parse_polynomial(text);
  unsigned limit = cap ? *cap : default_cap(f, g.m);
  o.report.params["cap"] = limit;
  auto ideal = nil_index_element(f, g.m, limit);
  auto grassmann = nil_index(phi(g.m, f), limit);
  if (ideal != grassmann) {
    throw InternalError("ideal and Grassmann nil indices disagree");
  }
  o.report.result = {{"index", ideal ? Json(*ideal) : Json(nullptr)}, {"cap", limit}};
  o.text = ideal ? "index=" + std::to_string(*ideal) + "\n" : "no vanishing power up to " + std::to_string(limit) + "\n";
  o.exit_code = ideal ? 0 : 1;
  return o;
}

struct VerifyArgs {
  std::string suite;
  unsigned max_i = 3;
  unsigned max_degree = 4;
  unsigned max_weight = 8;
  std::optional<unsigned> samples;
  unsigned k_cap = 10;
  unsigned c_cap = 12;
};

Outcome cmd_verify(const Globals& g, const VerifyArgs& v) {
  require_m(g.m);
  auto need_m2 = [&] {
    if (g.m != 2) throw InvalidParameter("suite '" + v.suite + "' is defined for m = 2 only");
  };
  Json params = {{"suite", v.suite}, {"m", g.m}};
  SuiteResult result;
  if (v.suite == "ritt") {
    params["max_i"] = v.max_i;
    result = verify_ritt(g.m, v.max_i);
  } else if (v.suite == "injectivity" || v.suite == "basis" || v.suite == "constants" || v.suite == "triangular") {
    params["max_degree"] = v.max_degree;
    params["max_weight"] = v.max_weight;
    if (v.suite == "injectivity") result = verify_injectivity(g.m, v.max_degree, v.max_weight);
    if (v.suite == "basis") result = verify_basis(g.m, v.max_degree, v.max_weight);
    if (v.suite == "constants") result = verify_constants(g.m, v.max_degree, v.max_weight);
    if (v.suite == "triangular") result = verify_triangular(g.m, v.max_degree, v.max_weight);
  } else if (v.suite == "agreement") {
    unsigned samples = v.samples.value_or(100);
    params.update({{"max_degree", v.max_degree}, {"max_weight", v.max_weight}, {"samples", samples}, {"seed", g.seed}});
    result = verify_agreement(g.m, v.max_degree, v.max_weight, samples, g.seed);
  } else if (v.suite == "nilpotent" || v.suite == "operator-nil") {
    need_m2();
    unsigned samples = v.samples.value_or(50);
    params.update({{"samples", samples}, {"seed", g.seed}});
    result = v.suite == "nilpotent" ? verify_nilpotent(samples, g.seed) : verify_operator_nil(samples, g.seed);
  } else if (v.suite == "witnesses") {
    need_m2();
    unsigned samples = v.samples.value_or(25);
    params.update({{"samples", samples}, {"seed", g.seed}, {"k_cap", v.k_cap}, {"c_cap", v.c_cap}});
    result = verify_witnesses(samples, g.seed, v.k_cap, v.c_cap);
  } else if (v.suite == "weight-floor") {
    need_m2();
    params["max_degree"] = v.max_degree;
    result = verify_weight_floor(v.max_degree);
  } else {
    throw InvalidParameter("unknown suite '" + v.suite + "'");
  }

  Outcome o;
  o.report.command = "verify";
  o.report.params = params;
  o.report.result = result.to_json();
  std::ostringstream os;
  for (const auto& c : result.checks) os << (c.pass ? "PASS " : "FAIL ") << c.label << "  " << c.detail.dump() << "\n";
  os << result.name << ": " << (result.checks.size() - result.failures()) << "/" << result.checks.size()
     << " passed\n";
  o.text = os.str();
  o.exit_code = result.pass() ? 0 : 1;
  return o;
}

Outcome cmd_witness(const Globals& g, const std::string& kind, const std::string& a_text, const std::string& b_text,
                    unsigned cap, unsigned c_cap) {
  if (g.m != 2) throw InvalidParameter("witness searches are defined over D_2 only");
  Outcome o;
  o.report.command = "witness";
  o.report.params = {{"kind", kind}, {"a", a_text}, {"b", b_text}, {"cap", cap}};
  if (kind == "element") {
    DiffPolynomial a = parse_polynomial(a_text);
    DiffPolynomial b = parse_polynomial(b_text);
    auto w = witness_corollary(a, b, cap);
    if (!w) {
      o.report.result = {{"found", false}};
      o.text = "exhausted: no k <= " + std::to_string(cap) + "\n";
      o.exit_code = 1;
      return o;
    }
    if (!verify_witness(a, b, *w)) throw InternalError("witness failed re-verification");
    o.report.result = {{"found", true}, {"k", w->k}, {"product", to_string(w->product)}};
    o.text = "k=" + std::to_string(w->k) + "\nproduct: " + to_string(w->product) + "\n";
    return o;
  }
  o.report.params["c_cap"] = c_cap;
  DiffOperator a = parse_operator(a_text);
  DiffOperator b = parse_operator(b_text);
  auto result = witness_theorem2(a, b, cap, c_cap);
  if (auto* ex = std::get_if<WitnessExhausted>(&result)) {
    o.report.result = {{"found", false}, {"ks_tried", ex->ks_tried}};
    o.text = "exhausted: k <= " + std::to_string(cap) + ", c up to x" + std::to_string(c_cap) + "\n";
    o.exit_code = 1;
    return o;
  }
  const auto& w = std::get<Theorem2Witness>(result);
  if (!verify_witness(a, b, w)) throw InternalError("witness failed re-verification");
  o.report.result = {{"found", true}, {"c", to_string(w.c)}, {"j", w.j}, {"k", w.k}, {"product", to_string(w.product)}};
  o.text = "c=" + to_string(w.c) + " k=" + std::to_string(w.k) + "\nproduct: " + to_string(w.product) + "\n";
  return o;
}

void emit(const Globals& g, const Outcome& o) {
  std::string body = g.format == "json" ? o.report.to_json().dump(2) + "\n" : o.text;
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw InvalidParameter("cannot write to '" + g.out + "'");
  file << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential nilalgebra D_m = k_+{x}/[x^m]: normal forms, membership, embedding, nil indices"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--m", g.m, "Generator power m in [x^m]")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled suites")->capture_default_str();
  app.add_option("--max-terms", g.max_terms, "Cap on intermediate term counts")->capture_default_str();
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");

  std::string poly_text;
  auto* reduce = app.add_subcommand("reduce", "Normal form modulo [x^m] and membership");
  reduce->add_option("poly", poly_text, "Differential polynomial, e.g. \"x1^2 + 2*x0*x2\"")->required();

  auto* member = app.add_subcommand("member", "Decide membership in [x^m] with a certificate");
  member->add_option("poly", poly_text)->required();

  auto* embed = app.add_subcommand("embed", "Image in the Grassmann algebra");
  embed->add_option("poly", poly_text)->required();

  std::optional<unsigned> cap;
  bool as_operator = false;
  auto* nilindex = app.add_subcommand("nilindex", "Least N with f^N = 0 in D_m");
  nilindex->add_option("input", poly_text, "Polynomial, or operator with --operator")->required();
  nilindex->add_option("--cap", cap, "Largest power tried");
  nilindex->add_flag("--operator", as_operator, "Treat the input as an operator in D_2[D]");

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", v.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"ritt", "injectivity", "basis", "constants", "nilpotent", "operator-nil", "triangular",
                             "agreement", "weight-floor", "witnesses"}));
  verify->add_option("--max-i", v.max_i)->capture_default_str();
  verify->add_option("--max-degree", v.max_degree)->capture_default_str();
  verify->add_option("--max-weight", v.max_weight)->capture_default_str();
  verify->add_option("--samples", v.samples);
  verify->add_option("--k-cap", v.k_cap)->capture_default_str();
  verify->add_option("--c-cap", v.c_cap)->capture_default_str();

  std::string kind = "element", a_text, b_text;
  unsigned k_cap = 10, c_cap = 12;
  auto* witness = app.add_subcommand("witness", "Primality witness for a pair of elements or operators");
  witness->add_option("--kind", kind)->check(CLI::IsMember({"element", "operator"}))->capture_default_str();
  witness->add_option("--a", a_text)->required();
  witness->add_option("--b", b_text)->required();
  witness->add_option("--cap", k_cap, "Largest derivative order k")->capture_default_str();
  witness->add_option("--c-cap", c_cap, "Largest j for c = x_j")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    set_term_limit(g.max_terms);
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    if (*reduce) o = cmd_reduce(g, poly_text);
    if (*member) o = cmd_member(g, poly_text);
    if (*embed) o = cmd_embed(g, poly_text);
    if (*nilindex) o = cmd_nilindex(g, poly_text, cap, as_operator);
    if (*verify) o = cmd_verify(g, v);
    if (*witness) o = cmd_witness(g, kind, a_text, b_text, k_cap, c_cap);
    o.report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    emit(g, o);
    return o.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const ResourceExhausted& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
