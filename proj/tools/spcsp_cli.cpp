#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "spcsp/spcsp.h"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kHard = 3, kNoInstance = 4, kOracleFailed = 5 };

struct Failure {
  int exit_code;
};

std::string slurp(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{kInvalid};
  }
  os << in.rdbuf();
  return os.str();
}

int exit_for(spcsp_status s) {
  switch (s) {
    case SPCSP_OK: return kOk;
    case SPCSP_ERR_NOT_TRACTABLE: return kHard;
    case SPCSP_ERR_NO_INSTANCE: return kNoInstance;
    default: return kInvalid;
  }
}

void check(spcsp_status s) {
  if (s == SPCSP_OK) return;
  std::cerr << "error: " << spcsp_status_name(s) << ": " << spcsp_last_error() << "\n";
  throw Failure{exit_for(s)};
}

// Owns a string handed out by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  spcsp_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using TemplatePtr = std::unique_ptr<spcsp_template, Deleter<spcsp_template, spcsp_template_free>>;
using InstancePtr = std::unique_ptr<spcsp_instance, Deleter<spcsp_instance, spcsp_instance_free>>;
using ClassificationPtr =
    std::unique_ptr<spcsp_classification, Deleter<spcsp_classification, spcsp_classification_free>>;
using FunctionPtr = std::unique_ptr<spcsp_function, Deleter<spcsp_function, spcsp_function_free>>;

TemplatePtr load_template(const std::string& path) {
  spcsp_template* t = nullptr;
  check(spcsp_template_parse(slurp(path).c_str(), &t));
  return TemplatePtr(t);
}

InstancePtr load_instance(const std::string& path) {
  spcsp_instance* inst = nullptr;
  check(spcsp_instance_parse(slurp(path).c_str(), &inst));
  return InstancePtr(inst);
}

void print(const std::string& text, bool pretty) {
  std::cout << (pretty ? json::parse(text).dump(2) : text) << "\n";
}

int cmd_classify(const std::string& path, bool witness, bool as_json) {
  auto t = load_template(path);
  spcsp_classification* raw = nullptr;
  check(spcsp_classify(t.get(), &raw));
  ClassificationPtr c(raw);
  char* out = nullptr;
  check(spcsp_classification_to_json(c.get(), witness ? 1 : 0, &out));
  std::string text = take(out);
  bool tractable = spcsp_classification_tractable(c.get()) != 0;
  if (as_json || witness) {
    print(text, true);
  } else {
    json j = json::parse(text);
    if (tractable)
      std::cout << "tractable: " << j["witness"]["name"].get<std::string>() << "\n";
    else
      std::cout << "np-complete\n";
  }
  return tractable ? kOk : kHard;
}

int cmd_solve(const std::string& tpath, const std::string& ipath, bool verify, bool as_json) {
  if (tpath == "-" && ipath == "-") {
    std::cerr << "error: only one input may come from stdin\n";
    return kUsage;
  }
  auto t = load_template(tpath);
  auto inst = load_instance(ipath);
  char* out = nullptr;
  check(spcsp_solve(t.get(), inst.get(), &out));
  std::string text = take(out);
  if (verify) {
    int ok = 0;
    check(spcsp_check(t.get(), inst.get(), text.c_str(), 1, &ok));
    if (!ok) {
      std::cerr << "error: returned assignment fails the relaxed side\n";
      return kInvalid;
    }
    std::cerr << "check: relaxed side satisfied\n";
  }
  print(text, as_json);
  return kOk;
}

int cmd_analyze(const std::string& hex, int arity, const std::string& requests, const std::string& tpath) {
  spcsp_function* raw = nullptr;
  check(spcsp_function_from_hex(hex.c_str(), arity, &raw));
  FunctionPtr f(raw);
  TemplatePtr t;
  if (!tpath.empty()) t = load_template(tpath);
  char* out = nullptr;
  check(spcsp_analyze(f.get(), requests.c_str(), t.get(), &out));
  print(take(out), true);
  return kOk;
}

int cmd_enumerate(const std::string& path, int arity, bool count, int jobs, bool arity5) {
  auto t = load_template(path);
  char* out = nullptr;
  check(spcsp_enumerate(t.get(), arity, jobs, arity5 ? 1 : 0, count ? 1 : 0, &out));
  print(take(out), true);
  return kOk;
}

int cmd_relax(const std::string& path, const std::string& chain, int pair) {
  auto t = load_template(path);
  char* out = nullptr;
  char* warnings = nullptr;
  check(spcsp_relax(t.get(), chain.c_str(), pair, &out, &warnings));
  for (const auto& w : json::parse(take(warnings))) std::cerr << "warning: " << w.get<std::string>() << "\n";
  print(take(out), true);
  return kOk;
}

int cmd_oracle(const std::string& suite, uint64_t seed, int jobs, bool timing) {
  char* names_raw = nullptr;
  check(spcsp_oracle_suites(&names_raw));
  json names = json::parse(take(names_raw));
  if (suite == "list") {
    for (const auto& n : names) std::cout << n.get<std::string>() << "\n";
    return kOk;
  }
  std::vector<std::string> run;
  if (suite == "all")
    for (const auto& n : names) run.push_back(n.get<std::string>());
  else
    run.push_back(suite);
  uint64_t total_failures = 0;
  for (const auto& name : run) {
    char* out = nullptr;
    uint64_t failures = 0;
    check(spcsp_oracle_run(name.c_str(), seed, jobs, &out, &failures));
    json j = json::parse(take(out));
    total_failures += failures;
    std::cout << j["suite"].get<std::string>() << ": " << (failures ? "FAIL" : "PASS") << " ("
              << j["cases"].get<uint64_t>() - failures << "/" << j["cases"].get<uint64_t>() << " passed)";
    if (timing) std::cout << " in " << j["seconds"].get<double>() << " s";
    std::cout << "\n";
    for (const auto& s : j["samples"]) std::cout << "  " << s.get<std::string>() << "\n";
  }
  return total_failures ? kOracleFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric Boolean promise CSP toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", spcsp_version());

  std::string tpath, ipath, hex, requests, chain, suite;
  bool witness = false, as_json = false, verify = false, count = false, arity5 = false, timing = false;
  int arity = 0, jobs = 1, pair = -1;
  uint64_t seed = 1;

  auto* classify = app.add_subcommand("classify", "Decide tractability of a template");
  classify->add_option("template", tpath, "Template JSON file, or - for stdin")->required();
  classify->add_flag("--witness", witness, "Include the hardness certificate");
  classify->add_flag("--json", as_json, "Print the classification as JSON");

  auto* solve = app.add_subcommand("solve", "Solve an instance of a tractable template");
  solve->add_option("template", tpath, "Template JSON file")->required();
  solve->add_option("instance", ipath, "Instance JSON file")->required();
  solve->add_flag("--check", verify, "Verify the output against the relaxed side");
  solve->add_flag("--json", as_json, "Pretty-print the assignment");

  auto* analyze = app.add_subcommand("analyze", "Analyze a Boolean function given as a hex truth table");
  analyze->add_option("table", hex, "Hex truth table, entry 0 least significant")->required();
  analyze->add_option("--arity", arity, "Number of arguments")->required();
  analyze->add_option("--request", requests,
                      "Comma-separated: onesets, zerosets, minimal-onesets, minimal-zerosets, fixing-set, packing, "
                      "symmetry, idempotent, flippable=E, distribution=M, polymorphism, compatible=P, star-one=P, "
                      "star-zero=P")
      ->required();
  analyze->add_option("--template", tpath, "Template for polymorphism, compatible and star requests");

  auto* enumerate = app.add_subcommand("enumerate", "List polymorphisms of a template at one arity");
  enumerate->add_option("template", tpath, "Template JSON file")->required();
  enumerate->add_option("--arity", arity, "Arity of the polymorphisms")->required();
  enumerate->add_flag("--count", count, "Print only the count");
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--allow-arity5", arity5, "Permit the pruned arity-5 search");

  auto* relax = app.add_subcommand("relax", "Apply a relaxation chain to one pair");
  relax->add_option("template", tpath, "Template JSON file")->required();
  relax->add_option("--chain", chain,
                    "Comma-separated: move-left, move-right, flip, strict:I/J, add-idempotents, flip-template, "
                    "flip-codomain")
      ->required();
  relax->add_option("--pair", pair, "Index of the pair to relax (default: last)");

  auto* oracle = app.add_subcommand("oracle", "Run a property suite");
  oracle->add_option("suite", suite, "Suite name, all, or list")->required();
  oracle->add_option("--seed", seed, "Random seed");
  oracle->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  oracle->add_flag("--timing", timing, "Print suite run times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(tpath, witness, as_json);
    if (*solve) return cmd_solve(tpath, ipath, verify, as_json);
    if (*analyze) return cmd_analyze(hex, arity, requests, tpath);
    if (*enumerate) return cmd_enumerate(tpath, arity, count, jobs, arity5);
    if (*relax) return cmd_relax(tpath, chain, pair);
    if (*oracle) return cmd_oracle(suite, seed, jobs, timing);
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
