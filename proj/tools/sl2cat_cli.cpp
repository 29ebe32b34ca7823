// Batch front end for the diagram category, crystals, and the graded
// category: hom tables, composition, crystal operations, DOT emission, and
// the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sl2cat/crystal.hpp"
#include "sl2cat/crystal_q.hpp"
#include "sl2cat/graded_o.hpp"
#include "sl2cat/json_io.hpp"
#include "sl2cat/karoubi.hpp"
#include "sl2cat/planar_matching.hpp"
#include "sl2cat/sl2_multiplicities.hpp"
#include "sl2cat/verify.hpp"

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_input(const std::string& path, bool& stdin_used) {
  if (path == "-") {
    if (stdin_used) throw UsageError("stdin may be read at most once");
    stdin_used = true;
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// crystal argument: builtin "b<N>", a file path, or "-" for stdin
sl2cat::Crystal load_crystal(const std::string& arg, bool& stdin_used) {
  if (arg.size() >= 2 && arg[0] == 'b') {
    bool numeric = true;
    for (std::size_t i = 1; i < arg.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(arg[i]))) numeric = false;
    if (numeric) return sl2cat::Crystal::b(std::stoi(arg.substr(1)));
  }
  return sl2cat::parse_crystal(read_input(arg, stdin_used));
}

sl2cat::Crystal require_valid(const sl2cat::Crystal& c) {
  const auto violations = c.validate();
  if (violations.empty()) return c;
  std::ostringstream os;
  os << "crystal violates the axioms:";
  for (const auto& v : violations)
    os << "\n  axiom (" << v.axiom << ") at '" << v.element << "': " << v.detail;
  throw UsageError(os.str());
}

int cmd_hom_table(int bound, const std::string& format, const std::string& output) {
  if (bound < 0 || bound > 16) throw UsageError("--bound must be between 0 and 16");
  json entries = json::array();
  std::ostringstream text;
  bool all_match = true;
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) {
      const std::int64_t dim = m + n <= 12
          ? static_cast<std::int64_t>(sl2cat::enumerate_matchings(m, n).size())
          : ((m + n) % 2 == 0 ? sl2cat::catalan((m + n) / 2) : 0);
      const std::int64_t oracle = sl2cat::hom_dimension(m, n);
      const bool match = dim == oracle;
      all_match = all_match && match;
      entries.push_back(json{{"m", m}, {"n", n}, {"dim", dim}, {"oracle", oracle},
                             {"match", match}});
      text << "m=" << m << " n=" << n << " dim=" << dim << " oracle=" << oracle << " "
           << (match ? "match" : "MISMATCH") << "\n";
    }
  if (format == "json")
    write_output(output, json{{"entries", entries}, {"ok", all_match}}.dump(2) + "\n");
  else
    write_output(output, text.str());
  return all_match ? 0 : 1;
}

int cmd_verify(const std::string& suite, const sl2cat::VerifyOptions& opts,
               const std::string& format, const std::string& output) {
  std::vector<sl2cat::CheckResult> results;
  if (suite == "all") {
    results = sl2cat::run_all_verify_suites(opts);
  } else {
    try {
      results.push_back(sl2cat::run_verify_suite(suite, opts));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  bool ok = true;
  json suites = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    ok = ok && r.passed;
    // no timings here: identical invocations must emit identical bytes
    suites.push_back(json{{"suite", r.suite}, {"passed", r.passed}, {"detail", r.detail}});
    text << (r.passed ? "PASS" : "FAIL") << " " << r.suite << ": " << r.detail << "\n";
  }
  text << (ok ? "all suites passed" : "some suites FAILED") << "\n";
  const std::string report = json{{"suites", suites}, {"ok", ok}}.dump(2) + "\n";
  if (!output.empty()) {
    // machine-readable report to the file, human summary to stdout
    write_output(output, report);
    std::cout << text.str();
  } else {
    std::cout << (format == "json" ? report : text.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the sl2 diagram category, crystals, and graded category O"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain usable after a subcommand

  std::string output;
  app.add_option("--output", output, "write the result to a file instead of stdout");

  // hom-table
  auto* hom_table = app.add_subcommand("hom-table", "hom dimensions against the multiplicity oracle");
  int ht_bound = 6;
  std::string ht_format = "text";
  hom_table->add_option("--bound", ht_bound, "table bound for m and n (max 16)");
  hom_table->add_option("--format", ht_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "compose two diagrams g∘f (f first)");
  std::vector<std::string> compose_args;
  compose_cmd->add_option("files", compose_args, "diagram JSON for f and g ('-' = stdin)")
      ->expected(2);

  // tensor
  auto* tensor_cmd = app.add_subcommand("tensor", "horizontal juxtaposition f⊗g");
  std::vector<std::string> tensor_args;
  tensor_cmd->add_option("files", tensor_args, "diagram JSON for f and g ('-' = stdin)")
      ->expected(2);

  // crystal
  auto* crystal_cmd = app.add_subcommand("crystal", "crystal operations");
  crystal_cmd->require_subcommand(1);
  auto* c_tensor = crystal_cmd->add_subcommand("tensor", "Kashiwara tensor product");
  std::vector<std::string> c_tensor_args;
  c_tensor->add_option("crystals", c_tensor_args, "two crystals (b<N>, path, or '-')")
      ->expected(2);
  auto* c_decompose = crystal_cmd->add_subcommand("decompose", "isotypic multiplicities");
  std::string c_decompose_arg;
  c_decompose->add_option("crystal", c_decompose_arg, "crystal (b<N>, path, or '-')")
      ->required();
  auto* c_dot = crystal_cmd->add_subcommand("dot", "DOT digraph of the lowering structure");
  std::string c_dot_arg;
  c_dot->add_option("crystal", c_dot_arg, "crystal (b<N>, path, or '-')")->required();

  // act
  auto* act_cmd = app.add_subcommand("act", "apply a diagram morphism to a graded object");
  std::vector<std::string> act_args;
  act_cmd->add_option("files", act_args, "hom element JSON and object JSON ('-' = stdin)")
      ->expected(2);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  std::string suite = "all";
  std::string v_format = "text";
  sl2cat::VerifyOptions opts;
  int v_bound = -1;
  verify_cmd->add_option("suite", suite, "suite name or 'all'");
  verify_cmd->add_option("--bound", v_bound, "override the suite bounds");
  verify_cmd->add_option("--seed", opts.seed, "seed for the randomized samples");
  verify_cmd->add_option("--format", v_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  bool stdin_used = false;
  try {
    if (hom_table->parsed()) return cmd_hom_table(ht_bound, ht_format, output);

    if (compose_cmd->parsed()) {
      const auto f = sl2cat::parse_diagram(read_input(compose_args[0], stdin_used));
      const auto g = sl2cat::parse_diagram(read_input(compose_args[1], stdin_used));
      write_output(output, sl2cat::to_json(sl2cat::compose(g, f)));
      return 0;
    }

    if (tensor_cmd->parsed()) {
      const auto f = sl2cat::parse_diagram(read_input(tensor_args[0], stdin_used));
      const auto g = sl2cat::parse_diagram(read_input(tensor_args[1], stdin_used));
      write_output(output, sl2cat::to_json(sl2cat::tensor(f, g)));
      return 0;
    }

    if (c_tensor->parsed()) {
      const auto a = require_valid(load_crystal(c_tensor_args[0], stdin_used));
      const auto b = require_valid(load_crystal(c_tensor_args[1], stdin_used));
      write_output(output, sl2cat::to_json(sl2cat::tensor(a, b)));
      return 0;
    }
    if (c_decompose->parsed()) {
      const auto c = require_valid(load_crystal(c_decompose_arg, stdin_used));
      json counts = json::object();
      for (const auto& [n, hw] : sl2cat::decompose(c).hw)
        counts[std::to_string(n)] = hw.size();
      write_output(output, counts.dump(2) + "\n");
      return 0;
    }
    if (c_dot->parsed()) {
      const auto c = require_valid(load_crystal(c_dot_arg, stdin_used));
      write_output(output, sl2cat::to_dot(c));
      return 0;
    }

    if (act_cmd->parsed()) {
      const auto h = sl2cat::parse_hom_element(read_input(act_args[0], stdin_used));
      const auto x = sl2cat::parse_oz_object(read_input(act_args[1], stdin_used));
      write_output(output, sl2cat::to_json(sl2cat::act(h, x)));
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (v_bound >= 0) {
        opts.hom_count_bound = v_bound;
        opts.composition_bound = std::min(v_bound, 4);
        opts.equivalence_bound = v_bound;
      }
      return cmd_verify(suite, opts, v_format, output);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sl2cat::JsonParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
