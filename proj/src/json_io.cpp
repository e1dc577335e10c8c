#include "spcsp/json_io.hpp"

#include <cctype>

#include "spcsp/error.hpp"

namespace spcsp {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    long v = integer(e, what);
    if (v < 0 || v > kMaxPairArity) throw Error(ErrorCode::OutOfRangeWeight, std::string(what) + " entry out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

json weights(const WeightSet& s) { return s.elements(); }

json family_json(const Family& f) {
  json j = {{"name", f.name()}, {"tag", family_tag_name(f.tag)}, {"complemented", f.complemented}};
  if (f.tag == FamilyTag::Thr) j["q"] = f.q.str();
  return j;
}

const char* kind_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::MiddleGap: return "middle-gap";
    case ObstructionKind::NonReflexive: return "non-reflexive";
    case ObstructionKind::ConflictingSlopes: return "conflicting-slopes";
  }
  return "?";
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

RelationPair pair_from_json(const json& j) {
  long n = integer(field(j, "arity"), "arity");
  if (n < 1 || n > kMaxPairArity) throw Error(ErrorCode::InvalidArity, "pair arity must lie in 1..63");
  return RelationPair::of(int_list(field(j, "I"), "I"), int_list(field(j, "J"), "J"), static_cast<int>(n));
}

json pair_to_json(const RelationPair& p) {
  return {{"I", weights(p.strict)}, {"J", weights(p.relaxed)}, {"arity", p.arity()}};
}

Template template_from_json(const json& j) {
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) bad("pairs must be an array");
  Template t;
  for (const auto& p : pairs) t.pairs.push_back(pair_from_json(p));
  if (auto it = j.find("idempotent_closure"); it != j.end()) {
    if (!it->is_boolean()) bad("idempotent_closure must be a boolean");
    t.idempotent_closure = it->get<bool>();
  }
  return t;
}

json template_to_json(const Template& t) {
  json pairs = json::array();
  for (const auto& p : t.pairs) pairs.push_back(pair_to_json(p));
  json j = {{"pairs", pairs}};
  if (t.idempotent_closure) j["idempotent_closure"] = true;
  return j;
}

Instance instance_from_json(const json& j) {
  Instance inst;
  long v = integer(field(j, "variables"), "variables");
  if (v < 0) throw Error(ErrorCode::InvalidInstance, "negative variable count");
  inst.variables = static_cast<int>(v);
  const json& cs = field(j, "constraints");
  if (!cs.is_array()) bad("constraints must be an array");
  for (const auto& c : cs) {
    Constraint con;
    long p = integer(field(c, "pair"), "pair");
    if (p < 0) throw Error(ErrorCode::InvalidInstance, "negative pair index");
    con.pair = static_cast<int>(p);
    const json& scope = field(c, "scope");
    if (!scope.is_array()) bad("scope must be an array");
    for (const auto& s : scope) {
      long x = integer(s, "scope");
      if (x < 0 || x >= inst.variables) throw Error(ErrorCode::InvalidInstance, "scope variable out of range");
      con.scope.push_back(static_cast<int>(x));
    }
    inst.constraints.push_back(std::move(con));
  }
  return inst;
}

json instance_to_json(const Instance& inst) {
  json cs = json::array();
  for (const auto& c : inst.constraints) cs.push_back({{"pair", c.pair}, {"scope", c.scope}});
  return {{"variables", inst.variables}, {"constraints", cs}};
}

Assignment assignment_from_json(const json& j) {
  const json& a = j.is_array() ? j : field(j, "assignment");
  if (!a.is_array()) bad("assignment must be an array");
  Assignment x;
  for (const auto& e : a) {
    long v = integer(e, "assignment");
    if (v != 0 && v != 1) bad("assignment entries must be 0 or 1");
    x.push_back(static_cast<uint8_t>(v));
  }
  return x;
}

json assignment_to_json(const Assignment& x) {
  json a = json::array();
  for (auto v : x) a.push_back(static_cast<int>(v));
  return {{"assignment", a}};
}

json witness_to_json(const Family& fam, const FamilyWitness& w) {
  return {{"family", fam.name()}, {"pair", w.pair}, {"weight", w.weight}};
}

json obstruction_to_json(const ThresholdObstruction& o) {
  json j = {{"kind", kind_name(o.kind)}, {"description", o.describe()}};
  switch (o.kind) {
    case ObstructionKind::MiddleGap:
      j.update({{"pair", o.pair}, {"a", o.a}, {"b", o.b}, {"c", o.c}});
      break;
    case ObstructionKind::NonReflexive:
      j.update({{"pair", o.pair}, {"a", o.a}});
      break;
    case ObstructionKind::ConflictingSlopes:
      j.update({{"lower_pair", o.lower_pair}, {"upper_pair", o.upper_pair}, {"a", o.a}, {"b", o.b},
                {"c", o.c}, {"d", o.d}, {"m", o.m}, {"lower", o.lower.str()}, {"upper", o.upper.str()}});
      break;
  }
  return j;
}

json derivation_to_json(const Derivation& d) {
  json chain = json::array();
  for (const auto& s : d.steps) chain.push_back(s.str());
  return {{"source", d.source}, {"chain", chain}, {"result", pair_to_json(d.result)}};
}

json certificate_to_json(const HardnessCertificate& cert) {
  json j;
  json fams = json::array();
  for (const auto& f : cert.families) {
    json e = {{"family", f.family.name()}};
    if (f.witness) e["witness"] = witness_to_json(f.family, *f.witness);
    if (f.obstruction) e["obstruction"] = obstruction_to_json(*f.obstruction);
    fams.push_back(e);
  }
  j["families"] = fams;
  auto derived = [](const auto& w) -> json {
    if (!w) return nullptr;
    json e = derivation_to_json(w->derivation);
    e["a"] = w->a;
    e["b"] = w->b;
    return e;
  };
  j["arel"] = derived(cert.arel);
  j["crel"] = derived(cert.crel);
  if (cert.no_at) {
    json e = derivation_to_json(cert.no_at->derivation);
    e["shape"] = cert.no_at->shape == NoAtShape::MiddleGap ? "middle-gap" : "no-extremes";
    e["flipped"] = cert.no_at->flipped;
    j["no_at"] = e;
  } else {
    j["no_at"] = nullptr;
  }
  if (!cert.no_at_note.empty()) j["no_at_note"] = cert.no_at_note;
  j["closure"] = template_to_json(cert.closure);
  return j;
}

json classification_to_json(const Classification& c, bool with_certificate) {
  json j;
  j["verdict"] = c.tractable() ? "tractable" : "np-complete";
  j["homomorphisms"] = c.homomorphisms.names();
  j["witness"] = c.witness ? family_json(*c.witness) : json(nullptr);
  json included = json::array();
  for (const auto& f : c.included()) included.push_back(f.name());
  j["included"] = included;
  if (with_certificate && c.certificate) j["certificate"] = certificate_to_json(*c.certificate);
  return j;
}

json consistency_to_json(const ConsistencyReport& r) {
  return {{"consistent", r.consistent},
          {"polymorphisms", r.polymorphisms},
          {"max_antichain", r.max_antichain},
          {"min_fixing_set", r.min_fixing_set},
          {"contradictions", r.contradictions}};
}

json varsets_to_json(const std::vector<VarSet>& sets) {
  json out = json::array();
  for (VarSet s : sets) out.push_back(members(s));
  return out;
}

json function_to_json(const BooleanFunction& f) { return {{"arity", f.arity()}, {"table", f.to_hex()}}; }

WeightSet parse_weight_set(const std::string& text, int bound) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) bad("empty weight set");
  if (s.front() == '{') {
    if (s.back() != '}') bad("unterminated weight set: " + text);
    s = s.substr(1, s.size() - 2);
  }
  WeightSet out = WeightSet::none(bound);
  if (s.empty()) return out;
  auto number = [&](const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      bad("bad weight \"" + tok + "\" in " + text);
    int w = std::stoi(tok);
    if (w > bound) throw Error(ErrorCode::OutOfRangeWeight, "weight " + tok + " exceeds arity " + std::to_string(bound));
    return w;
  };
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(start, end - start);
    if (auto dots = tok.find(".."); dots != std::string::npos) {
      int lo = number(tok.substr(0, dots)), hi = number(tok.substr(dots + 2));
      for (int w = lo; w <= hi; ++w) out.insert(w);
    } else {
      out.insert(number(tok));
    }
    start = end + 1;
  }
  return out;
}

std::vector<std::string> split_chain(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      tokens.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (depth != 0) bad("unbalanced braces in chain");
  if (!cur.empty() || !tokens.empty()) tokens.push_back(cur);
  return tokens;
}

std::vector<RelaxationStep> parse_chain(const std::string& text, int bound) {
  std::vector<std::string> tokens = split_chain(text);
  std::vector<RelaxationStep> steps;
  for (const auto& tok : tokens) {
    if (tok == "move-left") {
      steps.push_back(RelaxationStep::move_left());
      --bound;
    } else if (tok == "move-right") {
      steps.push_back(RelaxationStep::move_right());
      --bound;
    } else if (tok == "flip") {
      steps.push_back(RelaxationStep::flip());
    } else if (tok.rfind("strict:", 0) == 0) {
      std::string body = tok.substr(7);
      auto slash = body.find('/');
      if (slash == std::string::npos) bad("strict step needs I'/J': " + tok);
      if (bound < 1) throw Error(ErrorCode::ArityUnderflow, "chain moves below arity 1");
      steps.push_back(RelaxationStep::strict_relax(parse_weight_set(body.substr(0, slash), bound),
                                                   parse_weight_set(body.substr(slash + 1), bound)));
    } else {
      bad("unknown chain step \"" + tok + "\"");
    }
  }
  return steps;
}

}  // namespace spcsp
