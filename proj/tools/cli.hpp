#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lpa/lpa.hpp"

namespace lpa::cli {

enum ExitCode : int { kOk = 0, kMalformedInput = 1, kPrecondition = 2, kVerificationFailure = 3 };

enum class Format { json, text };

struct Command {
  std::string name;
  std::string input;
  Format format = Format::json;
  std::int64_t bound = 10;
  std::string field = "q";
  std::uint64_t seed = 1;
  std::size_t samples = 1;
  std::string element;  // inline JSON or a path to a JSON file
  bool corrupt_phi = false;
};

/// Moves one matrix unit of the first nonzero edge image to another row (or
/// doubles it in 1x1 blocks) and refreshes that ghost image. Negative control
/// for verify_phi: the Cuntz-Krieger relations at the edge's source break.
inline std::optional<Edge> corrupt_one_unit(const Graph& g, PhiMap& f) {
  for (auto e : g.edges()) {
    auto& image = f.edge[e.index];
    for (std::size_t b = 0; b < image.block_count(); ++b) {
      auto& m = image.block(b);
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t k = 0; k < m.size(); ++k) {
          if (m(i, k).is_zero()) continue;
          const Laurent x = m(i, k);
          if (m.size() == 1) {
            m.set(i, k, Scalar(2) * x);
          } else {
            const std::size_t target = (i + 1) % m.size();
            m.set(i, k, m(target, k));
            m.set(target, k, x);
          }
          f.ghost[e.index] = image.star();
          return e;
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {

using nlohmann::json;

inline void emit(std::ostream& out, const Command& cmd, const json& report, const std::string& text) {
  if (cmd.format == Format::json) {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

inline json read_element_json(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec.front() != '[') {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open element file '" + spec + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw InputError(std::string("element is not valid JSON: ") + ex.what());
  }
}

inline std::string flag(bool b) { return b ? "true" : "false"; }

inline int run_classify(const Command& cmd, const AlgebraPtr& alg, std::ostream& out) {
  const auto report = classify(alg);
  std::ostringstream text;
  text << "no_exit: " << flag(report.no_exit) << "\n"
       << "gr_type_I: " << flag(report.gr_type_I) << "\n"
       << "graded_self_injective: " << flag(report.graded_self_injective) << "\n"
       << "sigma_V: " << flag(report.sigma_V) << "\n";
  if (report.graded_prime) text << "graded_prime: " << flag(*report.graded_prime) << "\n";
  if (report.central_triple) {
    text << "central_triple: e1 = " << report.central_triple->type_one.to_string()
         << ", e2 = " << report.central_triple->type_two.to_string()
         << ", e3 = " << report.central_triple->type_three.to_string() << "\n";
  }
  text << report.note << "\n";
  emit(out, cmd, lpa::json::to_json(report), text.str());
  return kOk;
}

inline int run_decompose(const Command& cmd, const AlgebraPtr& alg, std::ostream& out) {
  const auto d = decompose(alg);
  std::ostringstream text;
  for (const auto& b : d.blocks) {
    text << (b.kind == Block::Kind::sink ? "sink " : "cycle ") << alg->graph().id(b.vertex) << ": "
         << b.algebra.describe() << "\n";
    for (const auto& p : b.index_paths) text << "  " << p.to_string(alg->graph()) << "\n";
  }
  emit(out, cmd, lpa::json::to_json(d), text.str());
  return kOk;
}

inline int run_dims(const Command& cmd, const AlgebraPtr& alg, std::ostream& out) {
  const auto d = decompose(alg);
  const auto rows = dim_series_check(d, cmd.bound);
  bool ok = true;
  std::ostringstream text;
  text << "degree lpa_dim matrix_dim\n";
  for (const auto& r : rows) {
    ok = ok && r.matches();
    text << r.degree << " " << r.algebra_dim << " " << r.matrix_dim << (r.matches() ? "" : "  MISMATCH") << "\n";
  }
  emit(out, cmd, {{"bound", cmd.bound}, {"rows", lpa::json::to_json(rows)}, {"all_match", ok}}, text.str());
  return ok ? kOk : kVerificationFailure;
}

inline int run_verify(const Command& cmd, const AlgebraPtr& alg, std::ostream& out) {
  const auto d = decompose(alg);
  auto f = phi(d);
  if (cmd.corrupt_phi) corrupt_one_unit(alg->graph(), f);
  const auto report = verify_phi(d, f);
  std::ostringstream text;
  for (const auto& c : report.checks) {
    if (!c.passed) text << "FAIL " << c.relation << " " << c.instance << "\n";
  }
  text << report.checks.size() - report.failures() << "/" << report.checks.size() << " relation checks passed\n";
  auto j = lpa::json::to_json(report);
  j["corrupted"] = cmd.corrupt_phi;
  emit(out, cmd, j, text.str());
  return report.all_passed() ? kOk : kVerificationFailure;
}

inline std::vector<Element> elements_to_check(const Command& cmd, const AlgebraPtr& alg) {
  if (!cmd.element.empty()) return {lpa::json::element_from_json(alg, read_element_json(cmd.element))};
  Sampler rng(cmd.seed);
  std::vector<Element> out;
  for (int attempts = 0; out.size() < cmd.samples && attempts < 1000; ++attempts) {
    const auto degree = rng.between(-cmd.bound, cmd.bound);
    if (auto e = random_homogeneous(alg, rng, degree)) out.push_back(std::move(*e));
  }
  return out;
}

inline int run_regular(const Command& cmd, const AlgebraPtr& alg, std::ostream& out) {
  const auto d = decompose(alg);
  const auto elements = elements_to_check(cmd, alg);
  json items = json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& a : elements) {
    const auto deg = degree(a);
    if (!deg.is_homogeneous()) throw InputError("element is not homogeneous: " + a.to_string());
    const auto b = graded_inner_inverse(d, a).inverse;
    const auto aba = a * b * a;
    const bool verified =
        aba == a && (deg.kind == Degree::Kind::zero || degree(b) == Degree{Degree::Kind::homogeneous, -deg.value});
    ok = ok && verified;
    items.push_back({{"a", lpa::json::to_json(a)},
                     {"degree_a", lpa::json::degree_json(deg)},
                     {"b", lpa::json::to_json(b)},
                     {"degree_b", lpa::json::degree_json(degree(b))},
                     {"aba", lpa::json::to_json(aba)},
                     {"aba_equals_a", aba == a},
                     {"verified", verified}});
    text << "a = " << a.to_string() << "\n"
         << "b = " << b.to_string() << "\n"
         << "a*b*a = " << aba.to_string() << "  [" << (verified ? "ok" : "FAILED") << "]\n";
  }
  json report = {{"field", alg->field().name()}, {"seed", cmd.seed}, {"samples", items}, {"all_verified", ok}};
  text << "seed " << cmd.seed << "\n";
  emit(out, cmd, report, text.str());
  return ok ? kOk : kVerificationFailure;
}

inline std::string report_text(const IdempotentReport& r) {
  std::ostringstream text;
  text << "is_idempotent: " << flag(r.is_idempotent) << "\n"
       << "is_homogeneous_deg0: " << flag(r.is_homogeneous_deg0) << "\n"
       << "block_ranks:";
  for (auto k : r.block_ranks) text << " " << k;
  text << "\n";
  if (r.is_idempotent) {
    text << "abelian: " << flag(*r.abelian) << "\n"
         << "directly_finite: " << flag(*r.directly_finite) << "\n"
         << "faithful: " << flag(*r.faithful) << "\n";
  }
  return text.str();
}

inline int run_idempotent(const Command& cmd, const AlgebraPtr& alg, std::ostream& out) {
  if (cmd.element.empty()) throw InputError("idempotent-report needs --element");
  const auto d = decompose(alg);
  const auto e = lpa::json::element_from_json(alg, read_element_json(cmd.element));
  const auto report = idempotent_report(d, e);
  auto j = lpa::json::to_json(report);
  j["element"] = lpa::json::to_json(e);
  emit(out, cmd, j, "e = " + e.to_string() + "\n" + report_text(report));
  return kOk;
}

inline int run_type_witness(const Command& cmd, const AlgebraPtr& alg, std::ostream& out) {
  const auto d = decompose(alg);
  const auto w = type_I_witness(d);
  const auto report = idempotent_report(d, w);
  const bool ok = report.is_idempotent && report.is_homogeneous_deg0 && report.abelian.value_or(false) &&
                  report.faithful.value_or(false);
  auto j = lpa::json::to_json(report);
  j["witness"] = lpa::json::to_json(w);
  j["verified"] = ok;
  emit(out, cmd, j, "witness = " + w.to_string() + "\n" + report_text(report));
  return ok ? kOk : kVerificationFailure;
}

}  // namespace detail

/// Runs one command. Reports go to `out`; diagnostics to `err`.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    const auto alg = LeavittPathAlgebra::create(lpa::json::load_graph(cmd.input), Field::parse(cmd.field));
    if (cmd.bound < 0) throw InputError("--bound must be >= 0");
    // Reports are assembled in a buffer so nothing is printed on failure.
    std::ostringstream buffer;
    int status = kOk;
    if (cmd.name == "classify") status = detail::run_classify(cmd, alg, buffer);
    else if (cmd.name == "decompose") status = detail::run_decompose(cmd, alg, buffer);
    else if (cmd.name == "dims") status = detail::run_dims(cmd, alg, buffer);
    else if (cmd.name == "verify-iso") status = detail::run_verify(cmd, alg, buffer);
    else if (cmd.name == "regular-witness") status = detail::run_regular(cmd, alg, buffer);
    else if (cmd.name == "idempotent-report") status = detail::run_idempotent(cmd, alg, buffer);
    else if (cmd.name == "type-witness") status = detail::run_type_witness(cmd, alg, buffer);
    else throw InputError("unknown command '" + cmd.name + "'");
    out << buffer.str();
    return status;
  } catch (const InputError& ex) {
    err << "error: " << ex.what() << "\n";
    return kMalformedInput;
  } catch (const ArithmeticError& ex) {
    err << "error: " << ex.what() << "\n";
    return kMalformedInput;
  } catch (const MismatchError& ex) {
    err << "error: " << ex.what() << "\n";
    return kMalformedInput;
  } catch (const PreconditionError& ex) {
    err << "precondition violated: " << ex.what() << "\n";
    return kPrecondition;
  } catch (const InternalError& ex) {
    err << "internal verification failure: " << ex.what() << "\n";
    return kVerificationFailure;
  }
}

/// Parses argv with CLI11 and runs the chosen subcommand.
inline int main(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Leavitt path algebras of finite graphs: graded structure, decomposition and regularity"};
  app.require_subcommand(1);
  Command cmd;
  std::string format = "json";

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"classify", "gr-Type / self-injectivity flags and the central idempotent triple"},
      {"decompose", "graded matrix decomposition (exit 2 if a cycle has an exit)"},
      {"dims", "graded dimensions of L_K(E) against the decomposition for |n| <= bound"},
      {"verify-iso", "check the defining relations on the generator images"},
      {"regular-witness", "graded inner inverses with a*b*a = a transcripts"},
      {"idempotent-report", "abelian / directly finite / faithful report for --element"},
      {"type-witness", "a faithful abelian idempotent and its report"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input,-i", cmd.input, "graph JSON file")->required();
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--bound,-N", cmd.bound, "degree bound N (default 10)");
    sub->add_option("--field", cmd.field, "q or fp:P (default q)");
    sub->add_option("--seed", cmd.seed, "random seed (default 1)");
    sub->add_option("--samples", cmd.samples, "number of random samples (default 1)");
    sub->add_option("--element", cmd.element, "element as inline JSON or a JSON file");
    if (name == "verify-iso") sub->add_flag("--corrupt-phi", cmd.corrupt_phi, "damage one generator image (negative control)");
    sub->callback([&cmd, n = name] { cmd.name = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kMalformedInput;
  }
  cmd.format = format == "text" ? Format::text : Format::json;
  return run(cmd, out, err);
}

}  // namespace lpa::cli
