#pragma once

#include <optional>
#include <random>

#include "spcsp/model.hpp"
#include "spcsp/orbit.hpp"

namespace spcsp {

using Rng = std::mt19937_64;

struct PlantedInstance {
  Instance instance;
  Assignment planted;  // satisfies side A
};

// Scopes use distinct variables; constraints whose pairs cannot be hit by the
// planted assignment are skipped, so the instance may have fewer constraints.
PlantedInstance planted_instance(const Template& t, int variables, int constraints, Rng& rng);

RelationPair random_pair(Rng& rng, int max_arity);
Template random_template(Rng& rng, int max_pairs, int max_arity);

// A template whose classification witness has the given tag, found by
// sampling J around the family's orbit. nullopt after `attempts` misses.
std::optional<Template> random_template_for(FamilyTag tag, Rng& rng, int max_pairs, int max_arity,
                                            int attempts = 2000);

}  // namespace spcsp
