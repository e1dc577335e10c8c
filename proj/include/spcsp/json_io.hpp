#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "spcsp/analysis.hpp"
#include "spcsp/classifier.hpp"
#include "spcsp/model.hpp"
#include "spcsp/relax.hpp"

namespace spcsp {

using nlohmann::json;

// All parsers throw Error(InvalidInput) on malformed documents.
json parse_json(const std::string& text);

RelationPair pair_from_json(const json& j);
json pair_to_json(const RelationPair& p);
Template template_from_json(const json& j);
json template_to_json(const Template& t);
Instance instance_from_json(const json& j);
json instance_to_json(const Instance& inst);
Assignment assignment_from_json(const json& j);
json assignment_to_json(const Assignment& x);

json witness_to_json(const Family& fam, const FamilyWitness& w);
json obstruction_to_json(const ThresholdObstruction& o);
json derivation_to_json(const Derivation& d);
json certificate_to_json(const HardnessCertificate& cert);
json classification_to_json(const Classification& c, bool with_certificate);
json consistency_to_json(const ConsistencyReport& r);

json varsets_to_json(const std::vector<VarSet>& sets);
json function_to_json(const BooleanFunction& f);

// "{1,2}", "{0..3}", "{}" or a bare weight.
WeightSet parse_weight_set(const std::string& text, int bound);
// Splits at commas outside braces.
std::vector<std::string> split_chain(const std::string& text);
// Comma-separated: move-left, move-right, flip, strict:I/J.
std::vector<RelaxationStep> parse_chain(const std::string& text, int bound);

}  // namespace spcsp
