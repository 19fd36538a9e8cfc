#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "uxl/harness.hpp"

namespace {

uxl::SegRel parse_rel_name(const std::string& name) {
  if (name == "lt") return uxl::SegRel::LT;
  if (name == "le") return uxl::SegRel::LE;
  if (name == "gt") return uxl::SegRel::GT;
  if (name == "ge") return uxl::SegRel::GE;
  throw uxl::ConfigError("unknown relation '" + name + "'");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ultrafilter extensions of linear orders"};
  app.require_subcommand(1);

  std::string term_text, rel_name, op_name, left_text, right_text, tokens_text, config_path;
  std::size_t iterate = 1;
  std::size_t budget = 12;
  std::uint64_t seed = 42;
  bool seed_set = false;
  bool as_json = false;

  auto* rel_cmd = app.add_subcommand("rel", "decide an extended relation between two tokens");
  rel_cmd->add_option("--term", term_text, "ground order term")->required();
  rel_cmd->add_option("--rel", rel_name, "lt|le|gt|ge|tri|equiv")->required();
  rel_cmd->add_option("--left", left_text, "left token literal")->required();
  rel_cmd->add_option("--right", right_text, "right token literal")->required();
  rel_cmd->add_flag("--json", as_json, "JSON output");

  auto* minmax_cmd = app.add_subcommand("minmax", "evaluate min~/max~ on two tokens");
  minmax_cmd->add_option("--term", term_text, "ground order term")->required();
  minmax_cmd->add_option("--op", op_name, "min|max")->required();
  minmax_cmd->add_option("--left", left_text, "left token literal")->required();
  minmax_cmd->add_option("--right", right_text, "right token literal")->required();
  minmax_cmd->add_flag("--json", as_json, "JSON output");

  auto* stype_cmd = app.add_subcommand("stype", "closed-form order type of the support order");
  stype_cmd->add_option("--term", term_text, "ground order term")->required();
  stype_cmd->add_option("--iterate", iterate, "apply s this many times (default 1)");
  stype_cmd->add_flag("--json", as_json, "JSON output");

  auto* supports_cmd = app.add_subcommand("supports", "enumerate supports of a term");
  supports_cmd->add_option("--term", term_text, "ground order term")->required();
  supports_cmd->add_option("--budget", budget, "sample budget (default 12)");
  supports_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "run the oracle and law suites");
  verify_cmd->add_option("--config", config_path, "JSON config file");
  verify_cmd->add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
    seed_set = true;
  });
  verify_cmd->add_flag("--json", as_json, "JSON report");

  auto* laws_cmd = app.add_subcommand("laws", "check the skew-lattice laws on a token universe");
  laws_cmd->add_option("--term", term_text, "ground order term")->required();
  laws_cmd->add_option("--tokens", tokens_text, "comma-separated token literals")->required();
  laws_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    uxl::GapRegistry reg = uxl::GapRegistry::standard();
    if (rel_cmd->parsed()) {
      uxl::OrderTerm t = uxl::parse_order_term(term_text);
      uxl::UltraToken left = uxl::parse_token(t, reg, left_text);
      uxl::UltraToken right = uxl::parse_token(t, reg, right_text);
      bool result;
      if (rel_name == "tri")
        result = uxl::tri_leq(t, left, right);
      else if (rel_name == "equiv")
        result = uxl::equiv(t, left, right);
      else
        result = uxl::ext_rel(t, parse_rel_name(rel_name), left, right);
      if (as_json) {
        nlohmann::json j;
        j["term"] = uxl::to_string(t);
        j["rel"] = rel_name;
        j["left"] = uxl::token_to_string(t, left);
        j["right"] = uxl::token_to_string(t, right);
        j["result"] = result;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (result ? "true" : "false") << "\n";
      }
      return 0;
    }
    if (minmax_cmd->parsed()) {
      uxl::OrderTerm t = uxl::parse_order_term(term_text);
      uxl::UltraToken left = uxl::parse_token(t, reg, left_text);
      uxl::UltraToken right = uxl::parse_token(t, reg, right_text);
      if (op_name != "min" && op_name != "max")
        throw uxl::ConfigError("--op must be min or max");
      uxl::UltraToken result = op_name == "min" ? uxl::ext_min(t, left, right)
                                                : uxl::ext_max(t, left, right);
      if (as_json) {
        nlohmann::json j;
        j["term"] = uxl::to_string(t);
        j["op"] = op_name;
        j["left"] = uxl::token_to_string(t, left);
        j["right"] = uxl::token_to_string(t, right);
        j["result"] = uxl::token_to_string(t, result);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << uxl::token_to_string(t, result) << "\n";
      }
      return 0;
    }
    if (stype_cmd->parsed()) {
      uxl::OrderTerm t = uxl::parse_order_term(term_text);
      uxl::OrderTerm s = uxl::s_iterate(t, iterate);
      if (as_json) {
        nlohmann::json j;
        j["term"] = uxl::to_string(t);
        j["iterate"] = iterate;
        j["result"] = uxl::to_string(s);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << uxl::to_string(s) << "\n";
      }
      return 0;
    }
    if (supports_cmd->parsed()) {
      uxl::OrderTerm t = uxl::parse_order_term(term_text);
      auto supports = uxl::enumerate_supports(t, reg, budget);
      if (as_json) {
        nlohmann::json j;
        j["term"] = uxl::to_string(t);
        j["budget"] = budget;
        auto& arr = j["supports"];
        arr = nlohmann::json::array();
        for (const auto& s : supports) arr.push_back(uxl::support_to_string(t, s));
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& s : supports) std::cout << uxl::support_to_string(t, s) << "\n";
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      uxl::SuiteConfig config = uxl::SuiteConfig::defaults();
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw uxl::ConfigError("cannot open config file " + config_path);
        std::stringstream buf;
        buf << in.rdbuf();
        config = uxl::SuiteConfig::from_json(buf.str());
      }
      if (seed_set) config.seed = seed;
      uxl::SuiteReport report = uxl::run_suite(config);
      std::cout << (as_json ? report.to_json() : report.to_text());
      return report.all_passed() ? 0 : 1;
    }
    if (laws_cmd->parsed()) {
      uxl::OrderTerm t = uxl::parse_order_term(term_text);
      std::vector<uxl::UltraToken> universe;
      for (const auto& lit : split_commas(tokens_text))
        universe.push_back(uxl::parse_token(t, reg, lit));
      uxl::LawReport report = uxl::check_axioms(t, universe);
      std::cout << (as_json ? report.to_json() : report.to_text());
      return report.all_passed() ? 0 : 1;
    }
  } catch (const uxl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
