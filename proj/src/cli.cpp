#include "kauffman/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "kauffman/errors.hpp"
#include "kauffman/idcheck.hpp"
#include "kauffman/jones.hpp"
#include "kauffman/kauffman.hpp"
#include "kauffman/parse.hpp"
#include "kauffman/rees.hpp"
#include "kauffman/render.hpp"
#include "kauffman/verify.hpp"

namespace kauffman::cli {

namespace {

struct CheckOptions {
  std::string monoid = "K4";
  std::string identity_text;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
  bool json = false;
};

int finish_check(const Verdict& v, bool json, std::ostream& out) {
  out << (json ? v.to_json_text() : v.to_line()) << "\n";
  return v.holds ? 0 : 1;
}

int cmd_check(const CheckOptions& opt, std::ostream& out) {
  Identity id = parse_identity(opt.identity_text);
  const std::string& m = opt.monoid;

  if (m == "K3" || m == "K4") {
    Verdict v = check_k3_k4(id);
    v.monoid = m;
    return finish_check(v, opt.json, out);
  }
  if (m == "J4") {
    return finish_check(check_j4(id), opt.json, out);
  }
  if (m == "J3" || m.rfind("Jn:", 0) == 0) {
    int n = m == "J3" ? 3 : std::stoi(m.substr(3));
    JonesMonoid jones(n);
    Verdict v = oracle_finite_monoid(
        id, "J" + std::to_string(n), jones.elements(),
        [](const JonesElement& a, const JonesElement& b) { return jmultiply(a, b).result; },
        [](const JonesElement& x) { return to_literal(x.diagram()); }, opt.budget);
    return finish_check(v, opt.json, out);
  }
  if (m.rfind("Kn:", 0) == 0) {
    int n = std::stoi(m.substr(3));
    std::optional<SubstitutionWitness> w = falsify_kn(id, n, opt.budget, opt.seed);
    if (w.has_value()) {
      return finish_check(Verdict{false, "K" + std::to_string(n), std::move(*w)}, opt.json, out);
    }
    if (opt.json) {
      nlohmann::json j;
      j["holds"] = nullptr;
      j["monoid"] = "K" + std::to_string(n);
      j["budget"] = opt.budget;
      j["witness"] = nullptr;
      out << j.dump() << "\n";
    } else {
      out << "NO-COUNTEREXAMPLE budget=" << opt.budget << "\n";
    }
    return 0;
  }
  if (m == "RMS") {
    if (check_identity_rms_abelian(id)) {
      return finish_check(Verdict{true, "RMS", std::nullopt}, opt.json, out);
    }
    std::optional<RmsWitness> w = witness_rms(id);
    if (!w.has_value()) {
      throw Error("internal: rejected identity has no substitution witness");
    }
    const RmsSemigroup& s = RmsSemigroup::witness_semigroup();
    SubstitutionWitness sw;
    sw.semigroup = "RMS-witness";
    for (const auto& [letter, value] : w->substitution) {
      sw.assignment.emplace_back(letter, s.print(value));
    }
    sw.lhs_value = s.print(w->lhs);
    sw.rhs_value = s.print(w->rhs);
    return finish_check(Verdict{false, "RMS", std::move(sw)}, opt.json, out);
  }
  throw InvalidArgument("unknown monoid: " + m +
                        " (expected K3, K4, J3, J4, Jn:<n>, Kn:<n> or RMS)");
}

bool looks_like_literal(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(),
                         [](unsigned char c) { return !std::isspace(c); });
  return it != text.end() && *it == '{';
}

// literal operands force the wire-diagram algebra (they may be non-planar);
// pure generator words multiply in coordinates
int cmd_multiply(const std::vector<std::string>& operands, int rank, std::ostream& out) {
  bool any_literal = false;
  for (const std::string& op : operands) {
    any_literal = any_literal || looks_like_literal(op);
  }
  if (rank == 0) {
    for (const std::string& op : operands) {
      if (looks_like_literal(op)) {
        rank = parse_diagram_literal(op).rank();
        break;
      }
    }
  }
  if (rank == 0) {
    throw InvalidArgument("generator words need --rank");
  }

  if (any_literal) {
    std::optional<WireDiagram> acc;
    for (const std::string& op : operands) {
      WireDiagram d = [&] {
        if (looks_like_literal(op)) {
          return parse_diagram_literal(op);
        }
        ExtKauffmanElement x = evaluate(parse_generator_word(op), rank);
        if (x.circles() < 0) {
          throw InvalidArgument("operand " + op +
                                " has negative circles and no diagram form");
        }
        return WireDiagram::make(rank, x.jones().diagram().pairs(), x.circles());
      }();
      acc = acc.has_value() ? *acc * d : d;
    }
    out << to_literal(*acc) << "\n";
    return 0;
  }
  std::optional<ExtKauffmanElement> acc;
  for (const std::string& op : operands) {
    ExtKauffmanElement x = evaluate(parse_generator_word(op), rank);
    acc = acc.has_value() ? *acc * x : x;
  }
  out << to_literal(*acc) << "\n";
  return 0;
}

int cmd_enumerate(int n, bool elements, std::ostream& out) {
  std::vector<JonesElement> all = enumerate_jones(n);
  out << all.size() << "\n";
  if (elements) {
    for (const JonesElement& x : all) {
      out << to_literal(x.diagram()) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_rank, std::ostream& out) {
  Report report = run_verify_suite(suite, max_rank);
  out << report.to_text();
  return report.all_pass() ? 0 : 1;
}

int cmd_render(const std::string& operand, int rank, const std::string& format,
               std::ostream& out) {
  RenderFormat fmt = format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
  if (looks_like_literal(operand)) {
    out << render(parse_diagram_literal(operand), fmt);
    return 0;
  }
  if (rank == 0) {
    throw InvalidArgument("generator words need --rank");
  }
  out << render(evaluate(parse_generator_word(operand), rank), fmt);
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"diagram monoid arithmetic: identity checking, multiplication, verification"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "decide whether an identity holds");
  check->add_option("--monoid", check_opt.monoid, "K3, K4, J3, J4, Jn:<n>, Kn:<n> or RMS");
  check->add_option("--budget", check_opt.budget, "evaluation budget for searches");
  check->add_option("--seed", check_opt.seed, "seed for randomized search");
  check->add_flag("--json", check_opt.json, "structured output");
  check->add_option("identity", check_opt.identity_text, "e.g. \"xxyx = xyxx\"")->required();

  std::vector<std::string> operands;
  int rank = 0;
  CLI::App* multiply = app.add_subcommand("multiply", "multiply diagrams or generator words");
  multiply->add_option("--rank", rank, "rank for generator-word operands");
  multiply->add_option("operands", operands, "diagram literals or generator words")
      ->required()
      ->expected(-1);

  int enum_rank = 0;
  bool list_elements = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "count (or list) Jones elements");
  enumerate->add_option("rank", enum_rank, "rank, 2..8")->required();
  enumerate->add_flag("--elements", list_elements, "list element literals");

  std::string suite;
  int max_rank = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suites_help;
  for (const std::string& name : verify_suite_names()) {
    suites_help += suites_help.empty() ? name : ", " + name;
  }
  verify->add_option("suite", suite, suites_help)->required();
  verify->add_option("--max", max_rank, "maximum rank for ranked suites");

  std::string render_operand;
  std::string format = "ascii";
  int render_rank = 0;
  CLI::App* render = app.add_subcommand("render", "draw a diagram");
  render->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--rank", render_rank, "rank for generator-word input");
  render->add_option("diagram", render_operand, "diagram literal or generator word")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      return cmd_check(check_opt, out);
    }
    if (multiply->parsed()) {
      return cmd_multiply(operands, rank, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(enum_rank, list_elements, out);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, max_rank, out);
    }
    if (render->parsed()) {
      return cmd_render(render_operand, render_rank, format, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " at position " << e.position << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace kauffman::cli
