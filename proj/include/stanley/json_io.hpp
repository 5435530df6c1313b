#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "stanley/clutter.hpp"
#include "stanley/ideal.hpp"
#include "stanley/schmitt_vogel.hpp"
#include "stanley/sdepth.hpp"

namespace stanley {

using nlohmann::json;

// Ideal files: {"n": 4, "generators": [[1,2],[1,3],[2,3,4]]} with 1-based
// sorted indices. Generators are minimalized on load. [] is the zero
// ideal, [[]] the unit ideal. General-monomial files use
// {"n": 2, "generators": [{"exps": [2,1]}]}.
json ideal_to_json(const SqfIdeal& ideal);
SqfIdeal ideal_from_json(const json& j);

bool json_generators_are_general(const json& j);
std::vector<GenMonomial> gen_ideal_from_json(const json& j);
json gen_ideal_to_json(const std::vector<GenMonomial>& gens);

// Clutter files: {"n": 4, "edges": [[1,2],[2,3]]}; edges must form an
// antichain. An "active" list may restrict the vertex set.
json clutter_to_json(const Clutter& c);
Clutter clutter_from_json(const json& j);

// Witness files: a list of levels; each level lists monomials either as
// index sets ([1,3]) or as squarefree exponent vectors ({"exps":[1,0,1]}).
json witness_to_json(const SvWitness& witness);
SvWitness witness_from_json(const json& j, int ambient_n);

json partition_to_json(const IntervalPartition& partition);

json indices_json(VarSet s);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace stanley
