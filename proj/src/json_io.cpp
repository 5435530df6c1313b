#include "stanley/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace stanley {

namespace {

int ambient_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("expected an object with an integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxVariables)
    throw std::invalid_argument("\"n\" must be in [1, 64]");
  return n;
}

VarSet mask_from_index_list(const json& j, int n, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array of indices");
  VarSet s = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument(std::string(what) + " entries must be integers");
    const int i = v.get<int>();
    if (i < 1 || i > n)
      throw std::invalid_argument(std::string(what) + " index " + std::to_string(i) +
                                  " outside [1, " + std::to_string(n) + "]");
    s |= var_bit(i);
  }
  return s;
}

}  // namespace

json indices_json(VarSet s) {
  json out = json::array();
  for (int i : to_indices(s)) out.push_back(i);
  return out;
}

json ideal_to_json(const SqfIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(indices_json(g.support));
  return json{{"n", ideal.ambient_n}, {"generators", gens}};
}

SqfIdeal ideal_from_json(const json& j) {
  const int n = ambient_from_json(j);
  if (!j.contains("generators") || !j["generators"].is_array())
    throw std::invalid_argument("ideal: missing \"generators\" array");
  std::vector<VarSet> masks;
  for (const auto& g : j["generators"])
    masks.push_back(mask_from_index_list(g, n, "generator"));
  return SqfIdeal::make(n, std::move(masks));
}

bool json_generators_are_general(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    return false;
  for (const auto& g : j["generators"])
    if (g.is_object()) return true;
  return false;
}

std::vector<GenMonomial> gen_ideal_from_json(const json& j) {
  const int n = ambient_from_json(j);
  if (!j.contains("generators") || !j["generators"].is_array())
    throw std::invalid_argument("ideal: missing \"generators\" array");
  std::vector<GenMonomial> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("exps") || !g["exps"].is_array())
      throw std::invalid_argument("general monomial must be {\"exps\": [...]}");
    std::vector<int> exps;
    for (const auto& e : g["exps"]) {
      if (!e.is_number_integer() || e.get<int>() < 0)
        throw std::invalid_argument("exponents must be nonnegative integers");
      exps.push_back(e.get<int>());
    }
    gens.push_back(make_gen(n, exps));
  }
  return gens;
}

json gen_ideal_to_json(const std::vector<GenMonomial>& gens) {
  json arr = json::array();
  int n = gens.empty() ? 1 : gens.front().ambient_n;
  for (const auto& g : gens) arr.push_back(json{{"exps", g.exponents}});
  return json{{"n", n}, {"generators", arr}};
}

json clutter_to_json(const Clutter& c) {
  json edges = json::array();
  for (VarSet e : c.edges) edges.push_back(indices_json(e));
  json out{{"n", c.n_vertices}, {"edges", edges}};
  if (c.active != full_set(c.n_vertices)) out["active"] = indices_json(c.active);
  return out;
}

Clutter clutter_from_json(const json& j) {
  const int n = ambient_from_json(j);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("clutter: missing \"edges\" array");
  std::vector<VarSet> edges;
  for (const auto& e : j["edges"]) edges.push_back(mask_from_index_list(e, n, "edge"));
  VarSet active = full_set(n);
  if (j.contains("active")) active = mask_from_index_list(j["active"], n, "active");
  return Clutter::make(n, active, std::move(edges));
}

json witness_to_json(const SvWitness& witness) {
  json levels = json::array();
  for (const auto& level : witness.levels) {
    json l = json::array();
    for (const auto& u : level) l.push_back(indices_json(u.support));
    levels.push_back(l);
  }
  return levels;
}

SvWitness witness_from_json(const json& j, int ambient_n) {
  if (!j.is_array())
    throw std::invalid_argument("witness: expected a list of levels");
  SvWitness w;
  for (const auto& level : j) {
    if (!level.is_array())
      throw std::invalid_argument("witness: each level must be a list of monomials");
    std::vector<SqfMonomial> mons;
    for (const auto& m : level) {
      if (m.is_object()) {
        if (!m.contains("exps") || !m["exps"].is_array())
          throw std::invalid_argument("witness monomial object must carry \"exps\"");
        VarSet s = 0;
        const auto& exps = m["exps"];
        if (static_cast<int>(exps.size()) != ambient_n)
          throw std::invalid_argument("witness exponent vector length must equal n");
        for (size_t i = 0; i < exps.size(); ++i) {
          const int e = exps[i].get<int>();
          if (e < 0 || e > 1)
            throw std::invalid_argument("witness monomials must be squarefree");
          if (e == 1) s |= var_bit(static_cast<int>(i) + 1);
        }
        mons.push_back(SqfMonomial{ambient_n, s});
      } else {
        mons.push_back(
            SqfMonomial{ambient_n, mask_from_index_list(m, ambient_n, "witness monomial")});
      }
    }
    w.levels.push_back(std::move(mons));
  }
  return w;
}

json partition_to_json(const IntervalPartition& partition) {
  json out = json::array();
  for (const auto& [lo, hi] : partition.intervals)
    out.push_back(json::array({indices_json(lo), indices_json(hi)}));
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace stanley
