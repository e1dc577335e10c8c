#include "spcsp/spcsp.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "spcsp/analysis.hpp"
#include "spcsp/classifier.hpp"
#include "spcsp/error.hpp"
#include "spcsp/json_io.hpp"
#include "spcsp/oracle.hpp"
#include "spcsp/relax.hpp"
#include "spcsp/solver.hpp"

struct spcsp_template {
  spcsp::Template value;
};
struct spcsp_instance {
  spcsp::Instance value;
};
struct spcsp_classification {
  spcsp::Classification value;
};
struct spcsp_function {
  spcsp::BooleanFunction value;
};

namespace {

using namespace spcsp;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
spcsp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SPCSP_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<spcsp_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPCSP_ERR_INTERNAL;
  }
}

spcsp_status null_argument(const char* what) {
  last_error = std::string(what) + " is NULL";
  return SPCSP_ERR_NULL_ARGUMENT;
}

void emit(char** out, const json& j) { *out = dup(j.dump()); }

json packing_json(const Packing& p) {
  json j = {{"unbounded", p.unbounded}};
  if (!p.unbounded) {
    j["size"] = p.size();
    j["sets"] = varsets_to_json(p.sets);
  }
  return j;
}

json fixing_json(const std::optional<VarSet>& s) { return s ? json(members(*s)) : json(nullptr); }

json witness_matrix_json(const WitnessMatrix& w) {
  json rows = json::array();
  for (const auto& r : w.rows) rows.push_back(std::vector<int>(r.begin(), r.end()));
  return {{"rows", rows}, {"output", std::vector<int>(w.output.begin(), w.output.end())}};
}

int int_argument(const std::string& request, const std::string& arg) {
  if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::InvalidInput, "request \"" + request + "\" needs a non-negative integer argument");
  return std::stoi(arg);
}

const RelationPair& pair_argument(const spcsp_template* t, const std::string& request, const std::string& arg) {
  if (!t) throw Error(ErrorCode::InvalidInput, "request \"" + request + "\" needs a template");
  int i = int_argument(request, arg);
  if (i >= static_cast<int>(t->value.pairs.size()))
    throw Error(ErrorCode::InvalidInput, "pair index " + arg + " out of range");
  return t->value.pairs[i];
}

json analyze_one(const BooleanFunction& f, const std::string& request, const spcsp_template* t) {
  auto eq = request.find('=');
  std::string name = request.substr(0, eq);
  std::string arg = eq == std::string::npos ? "" : request.substr(eq + 1);
  if (name == "onesets") return varsets_to_json(onesets(f));
  if (name == "zerosets") return varsets_to_json(zerosets(f));
  if (name == "minimal-onesets") return varsets_to_json(minimal_onesets(f));
  if (name == "minimal-zerosets") return varsets_to_json(minimal_zerosets(f));
  if (name == "idempotent") return f.is_idempotent();
  if (name == "symmetry") return symmetry_classes(f);
  if (name == "fixing-set") {
    json j = {{"onefset", fixing_json(smallest_onefset(f))}, {"zerofset", fixing_json(smallest_zerofset(f))}};
    if (auto s = smallest_fixing_set(f))
      j["smallest"] = {{"kind", s->kind == FixKind::One ? "one" : "zero"}, {"set", members(s->set)}};
    else
      j["smallest"] = nullptr;
    return j;
  }
  if (name == "packing")
    return {{"onesets", packing_json(max_disjoint_onesets(f))}, {"zerosets", packing_json(max_disjoint_zerosets(f))}};
  if (name == "flippable") {
    int e = int_argument(request, arg);
    return {{"one", is_e_flippable(f, e, FlipKind::One)},
            {"zero", is_e_flippable(f, e, FlipKind::Zero)},
            {"both", is_e_flippable(f, e, FlipKind::Both)}};
  }
  if (name == "distribution") {
    int m = int_argument(request, arg);
    try {
      auto d = variable_distribution(f, m);
      json probs = json::array();
      for (const auto& p : d.probability) probs.push_back(p.str());
      return {{"support", members(d.support)}, {"probability", probs}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSmallFixingSet) throw;
      return {{"error", error_code_name(e.code())}, {"message", e.what()}};
    }
  }
  if (name == "polymorphism") {
    if (!t) throw Error(ErrorCode::InvalidInput, "request \"polymorphism\" needs a template");
    auto fail = polymorphism_failure(f, t->value);
    json j = {{"polymorphism", !fail}};
    if (fail) j["failure"] = {{"pair", fail->pair}, {"witness", witness_matrix_json(fail->witness)}};
    return j;
  }
  if (name == "compatible") {
    auto w = find_witness(f, pair_argument(t, request, arg));
    json j = {{"compatible", !w}};
    if (w) j["witness"] = witness_matrix_json(*w);
    return j;
  }
  if (name == "star-one" || name == "star-zero") {
    try {
      return is_star_compatible(f, pair_argument(t, request, arg), name == "star-one" ? StarSide::One : StarSide::Zero);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ShapeMismatch) throw;
      return {{"error", error_code_name(e.code())}, {"message", e.what()}};
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown analysis \"" + name + "\"");
}

bool has_pair(const Template& t, int strict, int relaxed) {
  return t.contains(RelationPair(WeightSet::of(1, {strict}), WeightSet::of(1, {relaxed})));
}

}  // namespace

extern "C" {

const char* spcsp_version(void) { return "0.1.0"; }

const char* spcsp_status_name(spcsp_status status) {
  switch (status) {
    case SPCSP_OK: return "Ok";
    case SPCSP_ERR_NULL_ARGUMENT: return "NullArgument";
    case SPCSP_ERR_INTERNAL: return "Internal";
    default:
      if (status >= SPCSP_ERR_INVALID_INPUT && status <= SPCSP_ERR_TOO_LARGE)
        return error_code_name(static_cast<ErrorCode>(status));
      return "Unknown";
  }
}

const char* spcsp_last_error(void) { return last_error.c_str(); }

void spcsp_string_free(char* s) { std::free(s); }

spcsp_status spcsp_template_parse(const char* text, spcsp_template** out) {
  if (!text) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new spcsp_template{template_from_json(parse_json(text))}; });
}

spcsp_status spcsp_template_to_json(const spcsp_template* t, char** out) {
  if (!t) return null_argument("template");
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, template_to_json(t->value)); });
}

void spcsp_template_free(spcsp_template* t) { delete t; }

spcsp_status spcsp_instance_parse(const char* text, spcsp_instance** out) {
  if (!text) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new spcsp_instance{instance_from_json(parse_json(text))}; });
}

void spcsp_instance_free(spcsp_instance* inst) { delete inst; }

spcsp_status spcsp_classify(const spcsp_template* t, spcsp_classification** out) {
  if (!t) return null_argument("template");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new spcsp_classification{classify(t->value)}; });
}

int spcsp_classification_tractable(const spcsp_classification* c) { return c && c->value.tractable() ? 1 : 0; }

spcsp_status spcsp_classification_to_json(const spcsp_classification* c, int with_certificate, char** out) {
  if (!c) return null_argument("classification");
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, classification_to_json(c->value, with_certificate != 0)); });
}

void spcsp_classification_free(spcsp_classification* c) { delete c; }

spcsp_status spcsp_solve(const spcsp_template* t, const spcsp_instance* inst, char** out) {
  if (!t) return null_argument("template");
  if (!inst) return null_argument("instance");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto x = solve(inst->value, t->value);
    if (!x) throw Error(ErrorCode::NoInstance, "the instance has no solution on the strict side");
    emit(out, assignment_to_json(*x));
  });
}

spcsp_status spcsp_check(const spcsp_template* t, const spcsp_instance* inst, const char* assignment_json, int side,
                         int* ok) {
  if (!t) return null_argument("template");
  if (!inst) return null_argument("instance");
  if (!assignment_json) return null_argument("assignment");
  if (!ok) return null_argument("ok");
  return guarded([&] {
    Assignment x = assignment_from_json(parse_json(assignment_json));
    *ok = check_assignment(inst->value, t->value, x, side ? Side::B : Side::A) ? 1 : 0;
  });
}

spcsp_status spcsp_function_from_hex(const char* hex, int arity, spcsp_function** out) {
  if (!hex) return null_argument("hex");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new spcsp_function{BooleanFunction::from_hex(hex, arity)}; });
}

void spcsp_function_free(spcsp_function* f) { delete f; }

spcsp_status spcsp_analyze(const spcsp_function* f, const char* requests, const spcsp_template* t, char** out) {
  if (!f) return null_argument("function");
  if (!requests) return null_argument("requests");
  if (!out) return null_argument("out");
  return guarded([&] {
    json j = function_to_json(f->value);
    for (const auto& r : split_chain(requests))
      if (!r.empty()) j[r] = analyze_one(f->value, r, t);
    emit(out, j);
  });
}

spcsp_status spcsp_enumerate(const spcsp_template* t, int arity, int jobs, int allow_arity5, int count_only,
                             char** out) {
  if (!t) return null_argument("template");
  if (!out) return null_argument("out");
  return guarded([&] {
    EnumerateOptions opts{std::max(1, jobs), allow_arity5 != 0};
    json j = {{"arity", arity}};
    if (count_only) {
      j["count"] = count_polymorphisms(t->value, arity, opts);
    } else {
      auto fs = enumerate_polymorphisms(t->value, arity, opts);
      json tables = json::array();
      for (const auto& f : fs) tables.push_back(f.to_hex());
      j["count"] = fs.size();
      j["functions"] = tables;
    }
    emit(out, j);
  });
}

spcsp_status spcsp_relax(const spcsp_template* t, const char* chain, int pair, char** out, char** warnings) {
  if (!t) return null_argument("template");
  if (!chain) return null_argument("chain");
  if (!out) return null_argument("out");
  return guarded([&] {
    Template cur = t->value;
    json notes = json::array();
    if (cur.pairs.empty() && chain[0] != '\0') {
      for (const auto& tok : split_chain(chain))
        if (tok != "add-idempotents" && tok != "flip-template" && tok != "flip-codomain")
          throw Error(ErrorCode::InvalidInput, "template has no pairs to relax");
    }
    int index = pair < 0 ? static_cast<int>(cur.pairs.size()) - 1 : pair;
    if (!cur.pairs.empty() && index >= static_cast<int>(cur.pairs.size()))
      throw Error(ErrorCode::InvalidInput, "pair index " + std::to_string(pair) + " out of range");
    for (const auto& tok : split_chain(chain)) {
      if (tok == "add-idempotents") {
        cur = add_idempotents(cur);
        continue;
      }
      if (tok == "flip-template") {
        cur = flip_template(cur);
        continue;
      }
      if (tok == "flip-codomain") {
        cur = flip_codomain(cur);
        continue;
      }
      RelationPair& p = cur.pairs[index];
      for (const auto& step : parse_chain(tok, p.arity())) {
        if (step.kind == StepKind::MoveLeft && !has_pair(cur, 1, 1))
          notes.push_back("move-left assumes <{1},{1},1> but the template lacks it");
        if (step.kind == StepKind::MoveRight && !has_pair(cur, 0, 0))
          notes.push_back("move-right assumes <{0},{0},1> but the template lacks it");
        p = apply_step(p, step);
        if (p.strict.empty())
          throw Error(ErrorCode::DegenerateChain, "step " + step.str() + " leaves an empty strict side");
      }
    }
    emit(out, template_to_json(cur));
    if (warnings) {
      json uniq = json::array();
      for (const auto& n : notes)
        if (std::find(uniq.begin(), uniq.end(), n) == uniq.end()) uniq.push_back(n);
      emit(warnings, uniq);
    }
  });
}

spcsp_status spcsp_consistency_check(const spcsp_template* t, int max_arity, char** out) {
  if (!t) return null_argument("template");
  if (!out) return null_argument("out");
  return guarded([&] {
    Classification c = classify(t->value);
    if (!c.certificate) throw Error(ErrorCode::InvalidInput, "template is tractable; no certificate to check");
    emit(out, consistency_to_json(hardness_consistency_check(t->value, *c.certificate, max_arity)));
  });
}

spcsp_status spcsp_oracle_suites(char** out) {
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, suite_names()); });
}

spcsp_status spcsp_oracle_run(const char* suite, uint64_t seed, int jobs, char** out, uint64_t* failures) {
  if (!suite) return null_argument("suite");
  if (!out) return null_argument("out");
  return guarded([&] {
    SuiteResult r = run_suite(suite, {seed, std::max(1, jobs), 5});
    json j = {{"suite", r.name},   {"cases", r.cases},     {"failures", r.failures},
              {"passed", r.passed()}, {"samples", r.samples}, {"notes", r.notes},
              {"seconds", r.seconds}, {"worst_case_seconds", r.worst_case_seconds}};
    if (failures) *failures = r.failures;
    emit(out, j);
  });
}

}  // extern "C"
