// cli.cpp
// -------
// Verb dispatch for the command-line driver, the JSON link format, and
// canonical output formatting.

#include <superlink/cli.hpp>

#include <superlink/errors.hpp>
#include <superlink/selfcheck.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace superlink {

namespace {

AlgebraSpec to_spec(const std::string& family, int m, int n) {
  if (family == "sl") return AlgebraSpec{Family::sl, m, n};
  if (family == "osp") return AlgebraSpec{Family::osp, m, n};
  raise(Errc::invalid_spec, "unknown family '" + family + "' (expected sl or osp)");
}

std::string join_rationals(std::vector<Rational> values) {
  // Largest first, so the sl(2|1) set prints as {0, -1}.
  std::sort(values.begin(), values.end(), [](const Rational& x, const Rational& y) { return x > y; });
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ", ";
    out += rational_to_string(values[i]);
  }
  return out;
}

// Reads one color record {"family": ..., "m": ..., "n": ..., "c": [...],
// "param": "a" | "7/2", "odd": false}.
TypicalLabel color_from_json(const nlohmann::json& j, SymbolTable& table) {
  const std::string family = j.at("family").get<std::string>();
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  auto rd = std::make_shared<const RootData>(build_root_data(to_spec(family, m, n)));

  std::vector<long> c;
  for (const auto& entry : j.at("c")) c.push_back(entry.get<long>());

  ExponentForm a;
  const auto& param = j.at("param");
  if (param.is_number_integer()) {
    a = ExponentForm(Rational(param.get<long>()));
  } else if (param.is_string()) {
    const std::string text = param.get<std::string>();
    if (text.empty()) raise(Errc::syntax_error, "empty color parameter");
    if (std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '-') {
      a = ExponentForm(parse_rational(text));
    } else {
      a = ExponentForm::symbol(table.intern(text));
    }
  } else {
    raise(Errc::syntax_error, "color parameter must be a symbol name or a rational");
  }
  return make_label(std::move(rd), std::move(c), std::move(a), j.value("odd", false));
}

}  // namespace

ParsedLink parse_link_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::syntax_error, std::string("malformed link JSON: ") + e.what());
  }

  ParsedLink out;
  out.table = SymbolTable::defaults();
  try {
    const int strands = j.at("strands").get<int>();
    std::string word_text;
    for (const auto& token : j.at("word")) {
      word_text += token.get<std::string>();
      word_text += ' ';
    }
    std::map<int, TypicalLabel> colors;
    for (const auto& [key, value] : j.at("colors").items()) {
      std::size_t used = 0;
      int id = 0;
      try {
        id = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size())
        raise(Errc::syntax_error, "component key '" + key + "' is not an integer");
      colors.emplace(id, color_from_json(value, out.table));
    }
    out.braid = make_braid(strands, parse_braid_word(word_text), std::move(colors));
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::syntax_error, std::string("malformed link JSON: ") + e.what());
  }
  return out;
}

std::string format_invariant_json(const InvariantResult& result, const SymbolTable& table) {
  nlohmann::json lk = nlohmann::json::array();
  for (const auto& row : result.linking.lk) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const Rational& x : row) jrow.push_back(rational_to_string(x));
    lk.push_back(jrow);
  }
  nlohmann::json j{
      {"components", result.linking.components},
      {"linking_matrix", lk},
      {"cut_component", result.cut_component},
      {"framed_value",
       {{"numerator", to_canonical_string(result.framed_value.numerator(), table)},
        {"denominator", to_canonical_string(result.framed_value.denominator(), table)}}},
      {"correction", result.correction.to_string(table)},
      {"normalized",
       {{"numerator", to_canonical_string(result.normalized.numerator(), table)},
        {"denominator", to_canonical_string(result.normalized.denominator(), table)}}},
      {"m1_factor", to_canonical_string(result.m1_factor, table)},
      {"normalized_cleared", to_canonical_string(result.normalized_cleared, table)},
      {"ring_check_applicable", result.ring_check_applicable},
      {"ring_report", {{"pass", result.ring_report.pass}, {"failures", result.ring_report.failures}}},
  };
  return j.dump(2);
}

std::string format_polynomial(const LaurentElement& x, OutputStyle style,
                              const SymbolTable& table) {
  const std::string text = to_canonical_string(x, table);
  if (style == OutputStyle::text) return text;
  return nlohmann::json(text).dump();
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::syntax_error:
    case Errc::index_out_of_range:
    case Errc::color_mismatch:
    case Errc::no_typical_color:
    case Errc::invalid_spec:
    case Errc::negative_label:
    case Errc::non_integral_exponent:
    case Errc::unsupported_algebra:
      return 1;
    case Errc::atypical_label:
    case Errc::degenerate_evaluation:
      return 2;
    case Errc::not_divisible:
    case Errc::not_scalar:
    case Errc::ring_check_failure:
    case Errc::construction_failure:
    case Errc::normalization_failure:
    case Errc::internal_error:
      return 3;
  }
  return 3;
}

namespace {

struct LabelArgs {
  std::string family;
  int m = 0;
  int n = 0;
  std::vector<long> c;
};

void add_algebra_options(CLI::App* cmd, LabelArgs& args, bool with_c) {
  cmd->add_option("--family", args.family, "algebra family: sl or osp")->required();
  cmd->add_option("--m", args.m, "first family parameter")->required();
  cmd->add_option("--n", args.n, "second family parameter")->required();
  if (with_c)
    cmd->add_option("--c", args.c, "comma-separated nonnegative integer labels")
        ->required()
        ->delimiter(',');
}

std::shared_ptr<const RootData> algebra_of(const LabelArgs& args) {
  return std::make_shared<const RootData>(build_root_data(to_spec(args.family, args.m, args.n)));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multivariable link invariants from type-I Lie superalgebras"};
  app.require_subcommand(1);

  LabelArgs roots_args;
  CLI::App* roots_cmd = app.add_subcommand("roots", "print the root data as JSON");
  add_algebra_options(roots_cmd, roots_args, false);

  LabelArgs typical_args;
  CLI::App* typical_cmd =
      app.add_subcommand("typical", "list the atypical values of the parameter a");
  add_algebra_options(typical_cmd, typical_args, true);

  LabelArgs dhat_args;
  std::string dhat_param = "a1";
  CLI::App* dhat_cmd = app.add_subcommand("dhat", "print the fake-dimension factors M0 and M1");
  add_algebra_options(dhat_cmd, dhat_args, true);
  dhat_cmd->add_option("--param", dhat_param, "name of the highest-weight parameter");

  LabelArgs sprime_args;
  std::vector<long> c2_values;
  std::string param1 = "a1", param2 = "a2";
  CLI::App* sprime_cmd = app.add_subcommand("sprime", "print S'(lambda, mu) canonically");
  add_algebra_options(sprime_cmd, sprime_args, false);
  sprime_cmd->add_option("--c1", sprime_args.c, "labels of lambda")->required()->delimiter(',');
  sprime_cmd->add_option("--c2", c2_values, "labels of mu")->required()->delimiter(',');
  sprime_cmd->add_option("--param1", param1, "parameter name of lambda");
  sprime_cmd->add_option("--param2", param2, "parameter name of mu");

  LabelArgs hopf_args;
  std::vector<long> hopf_c2;
  std::string hopf_param1 = "a1", hopf_param2 = "a2";
  CLI::App* hopf_cmd =
      app.add_subcommand("hopf", "print the normalized Hopf pairing dhat(mu) * S'(lambda, mu)");
  add_algebra_options(hopf_cmd, hopf_args, false);
  hopf_cmd->add_option("--c1", hopf_args.c, "labels of lambda")->required()->delimiter(',');
  hopf_cmd->add_option("--c2", hopf_c2, "labels of mu")->required()->delimiter(',');
  hopf_cmd->add_option("--param1", hopf_param1, "parameter name of lambda");
  hopf_cmd->add_option("--param2", hopf_param2, "parameter name of mu");

  std::string invariant_file;
  CLI::App* invariant_cmd =
      app.add_subcommand("invariant", "compute the normalized invariant of a link JSON file");
  invariant_cmd->add_option("--file", invariant_file, "path to the link JSON")->required();

  app.add_subcommand("selfcheck", "run the full acceptance suite");

  std::vector<const char*> argv;
  argv.push_back("superlink");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (roots_cmd->parsed()) {
      out << root_data_json(*algebra_of(roots_args)) << "\n";
    } else if (typical_cmd->parsed()) {
      auto rd = algebra_of(typical_args);
      out << "atypical a ∈ {" << join_rationals(atypical_values(*rd, typical_args.c))
          << "}\n";
    } else if (dhat_cmd->parsed()) {
      auto rd = algebra_of(dhat_args);
      SymbolTable table = SymbolTable::defaults();
      TypicalLabel label = make_label(rd, dhat_args.c, ExponentForm::symbol(table.intern(dhat_param)));
      DhatParts parts = dhat(label);
      out << "M0 = " << to_canonical_string(parts.m0, table) << "\n";
      out << "M1 = " << to_canonical_string(parts.m1, table) << "\n";
    } else if (sprime_cmd->parsed()) {
      auto rd = algebra_of(sprime_args);
      SymbolTable table = SymbolTable::defaults();
      TypicalLabel lambda = make_label(rd, sprime_args.c, ExponentForm::symbol(table.intern(param1)));
      TypicalLabel mu = make_label(rd, c2_values, ExponentForm::symbol(table.intern(param2)));
      out << to_canonical_string(sprime(lambda, mu), table) << "\n";
    } else if (hopf_cmd->parsed()) {
      auto rd = algebra_of(hopf_args);
      SymbolTable table = SymbolTable::defaults();
      TypicalLabel lambda = make_label(rd, hopf_args.c, ExponentForm::symbol(table.intern(hopf_param1)));
      TypicalLabel mu = make_label(rd, hopf_c2, ExponentForm::symbol(table.intern(hopf_param2)));
      out << to_canonical_string(normalized_hopf(lambda, mu), table) << "\n";
    } else if (invariant_cmd->parsed()) {
      std::ifstream in(invariant_file);
      if (!in) raise(Errc::syntax_error, "cannot read link file '" + invariant_file + "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      ParsedLink link = parse_link_json(buffer.str());
      InvariantResult result = normalize_invariant(link.braid);
      out << format_invariant_json(result, link.table) << "\n";
    } else {
      const int failures = run_selfcheck(out);
      return failures == 0 ? 0 : 3;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal_error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace superlink
