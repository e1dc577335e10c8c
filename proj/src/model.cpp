#include "spcsp/model.hpp"

#include "spcsp/error.hpp"

namespace spcsp {

RelationPair::RelationPair(WeightSet i, WeightSet j) : strict(i), relaxed(j) {
  if (i.bound() != j.bound())
    throw Error(ErrorCode::ArityMismatch, "I and J have different arity bounds");
}

RelationPair RelationPair::of(const std::vector<int>& i, const std::vector<int>& j, int n) {
  if (n < 1 || n > kMaxPairArity)
    throw Error(ErrorCode::InvalidArity, "pair arity " + std::to_string(n) + " outside [1, 63]");
  return RelationPair(WeightSet::of(n, i), WeightSet::of(n, j));
}

std::string RelationPair::str() const {
  return "<" + strict.str() + "," + relaxed.str() + "," + std::to_string(arity()) + ">";
}

void validate_pair(const RelationPair& pair) {
  if (pair.strict.bound() != pair.relaxed.bound())
    throw Error(ErrorCode::ArityMismatch, "I and J have different arity bounds");
  if (pair.arity() < 1) throw Error(ErrorCode::InvalidArity, "pair arity must be positive");
  if (pair.strict.empty())
    throw Error(ErrorCode::EmptyStrictRelation, "empty strict relation in " + pair.str());
}

std::vector<std::string> UnaryMapSet::names() const {
  std::vector<std::string> out;
  if (contains(UnaryMap::Identity)) out.push_back("id");
  if (contains(UnaryMap::Negation)) out.push_back("neg");
  if (contains(UnaryMap::Const0)) out.push_back("const0");
  if (contains(UnaryMap::Const1)) out.push_back("const1");
  return out;
}

bool Template::contains(const RelationPair& p) const {
  for (const auto& q : pairs)
    if (q == p) return true;
  return false;
}

std::string Template::str() const {
  std::string s = "[";
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ", ";
    s += pairs[i].str();
  }
  return s + "]";
}

UnaryMapSet unary_homomorphisms(const Template& t) {
  bool id = true, neg = true, c0 = true, c1 = true;
  for (const auto& p : t.pairs) {
    id = id && p.strict.subset_of(p.relaxed);
    neg = neg && p.strict.reflect().subset_of(p.relaxed);
    c0 = c0 && p.relaxed.contains(0);
    c1 = c1 && p.relaxed.contains(p.arity());
  }
  UnaryMapSet s;
  if (id) s.insert(UnaryMap::Identity);
  if (neg) s.insert(UnaryMap::Negation);
  if (c0) s.insert(UnaryMap::Const0);
  if (c1) s.insert(UnaryMap::Const1);
  return s;
}

UnaryMapSet validate_template(const Template& t) {
  for (const auto& p : t.pairs) validate_pair(p);
  UnaryMapSet s = unary_homomorphisms(t);
  if (s.empty())
    throw Error(ErrorCode::NoPromiseHomomorphism,
                "no unary map is a homomorphism from the strict to the relaxed side of " + t.str());
  return s;
}

void validate_instance(const Instance& inst, const Template& t) {
  if (inst.variables < 0) throw Error(ErrorCode::InvalidInstance, "negative variable count");
  for (size_t c = 0; c < inst.constraints.size(); ++c) {
    const auto& con = inst.constraints[c];
    auto where = " (constraint " + std::to_string(c) + ")";
    if (con.pair < 0 || static_cast<size_t>(con.pair) >= t.pairs.size())
      throw Error(ErrorCode::InvalidInstance, "pair index out of range" + where);
    if (static_cast<int>(con.scope.size()) != t.pairs[con.pair].arity())
      throw Error(ErrorCode::InvalidInstance, "scope length does not match pair arity" + where);
    for (int v : con.scope)
      if (v < 0 || v >= inst.variables)
        throw Error(ErrorCode::InvalidInstance, "scope variable out of range" + where);
  }
}

int scope_weight(const Constraint& c, const Assignment& x) {
  int w = 0;
  for (int v : c.scope) w += x[v] ? 1 : 0;
  return w;
}

bool check_assignment(const Instance& inst, const Template& t, const Assignment& x, Side side) {
  validate_instance(inst, t);
  if (static_cast<int>(x.size()) != inst.variables)
    throw Error(ErrorCode::InvalidInstance, "assignment length does not match variable count");
  for (const auto& c : inst.constraints) {
    const auto& p = t.pairs[c.pair];
    const WeightSet& allowed = side == Side::A ? p.strict : p.relaxed;
    if (!allowed.contains(scope_weight(c, x))) return false;
  }
  return true;
}

}  // namespace spcsp
