#include "symtensor/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symtensor/characters.hpp"
#include "symtensor/decision.hpp"
#include "symtensor/json_io.hpp"
#include "symtensor/selfcheck.hpp"
#include "symtensor/tensor.hpp"

namespace symtensor::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  int max_n = kDefaultSizeLimit;
  bool exhaustive_failures = false;
  bool shape_only = false;
  int n = 0;
  int trials = 20;
  std::uint64_t seed = 0;
};

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  ProblemInstance inst = parse_instance_text(text.str());
  check_size_limit(inst.lambda.size(), "instance");
  return inst;
}

void emit(const Options& opts, const Json& doc, std::ostream& out) {
  const std::string text = render(doc);
  if (opts.output.empty() || opts.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) throw InputError("cannot open output file '" + opts.output + "'");
  file << text;
}

int cmd_gamas(const Options& opts, std::ostream& out) {
  const ProblemInstance inst = load_instance(opts.input);
  const GamasResult g = gamas_nonvanishing(inst.v, inst.lambda);
  const StandardGamasResult s = gamas_standard(inst.v, inst.lambda);
  emit(opts, gamas_report(g, s), out);
  return kSuccess;
}

int cmd_equal(const Options& opts, std::ostream& out) {
  const ProblemInstance inst = load_instance(opts.input);
  if (!inst.u) throw InputError("equal: the instance has no \"u\" family");
  const EqualityVerdict verdict =
      decide_equality(inst.v, *inst.u, inst.lambda, DecideOptions{opts.exhaustive_failures});
  emit(opts, to_json(verdict), out);
  return kSuccess;
}

int cmd_symmetrize(const Options& opts, std::ostream& out) {
  const ProblemInstance inst = load_instance(opts.input);
  const SparseTensor x = symmetrize(inst.v, inst.lambda);
  if (opts.shape_only) {
    Json doc;
    doc["dim"] = x.dim();
    doc["order"] = x.order();
    doc["entry_count"] = x.entries().size();
    emit(opts, doc, out);
  } else {
    emit(opts, to_json(x), out);
  }
  return kSuccess;
}

int cmd_characters(const Options& opts, std::ostream& out) {
  if (opts.n < 1) throw InputError("characters: --n must be positive");
  check_size_limit(opts.n, "characters");
  emit(opts, to_json(character_table(opts.n)), out);
  return kSuccess;
}

int cmd_selfcheck(const Options& opts, std::ostream& out) {
  if (opts.n < 1) throw InputError("selfcheck: --n must be positive");
  if (opts.trials < 0) throw InputError("selfcheck: --trials must be nonnegative");
  const SelfcheckReport report = run_selfcheck(opts.n, opts.trials, opts.seed);
  Json doc;
  doc["n"] = report.n;
  doc["trials"] = report.trials;
  doc["seed"] = report.seed;
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json item;
    item["name"] = p.name;
    item["checked"] = p.checked;
    item["failures"] = p.failures;
    item["passed"] = p.passed();
    props.push_back(std::move(item));
  }
  doc["properties"] = std::move(props);
  doc["all_passed"] = report.all_passed();
  emit(opts, doc, out);
  return report.all_passed() ? kSuccess : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Symmetrized decomposable tensors: vanishing and equality deciders", "symtensor"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-n", opts.max_n, "Largest n for factorial enumerations")
      ->check(CLI::Range(1, 12));
  app.add_option("--output", opts.output, "Write the JSON report here instead of stdout");

  auto* gamas = app.add_subcommand("gamas", "Decide whether v T_lambda is nonzero");
  auto* equal = app.add_subcommand("equal", "Decide whether v T_lambda equals u T_lambda");
  auto* symm = app.add_subcommand("symmetrize", "Compute v T_lambda by brute force");
  for (auto* sub : {gamas, equal, symm})
    sub->add_option("--input", opts.input, "Instance JSON file")->required();
  equal->add_flag("--exhaustive-failures", opts.exhaustive_failures, "Report every failing column system");
  symm->add_flag("--shape-only", opts.shape_only, "Print dim, order and entry count only");

  auto* chars = app.add_subcommand("characters", "Character table of S_n");
  chars->add_option("--n", opts.n, "Degree")->required();

  auto* check = app.add_subcommand("selfcheck", "Cross-check deciders against the tensor oracle");
  check->add_option("--n", opts.n, "Degree")->required();
  check->add_option("--trials", opts.trials, "Random instances per property");
  check->add_option("--seed", opts.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    ScopedSizeLimit limit(opts.max_n);
    if (*gamas) return cmd_gamas(opts, out);
    if (*equal) return cmd_equal(opts, out);
    if (*symm) return cmd_symmetrize(opts, out);
    if (*chars) return cmd_characters(opts, out);
    return cmd_selfcheck(opts, out);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << " (raise it with --max-n)\n";
    return kSizeLimit;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace symtensor::cli
