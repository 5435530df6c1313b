#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "stanley/depth_oracle.hpp"
#include "stanley/json_io.hpp"
#include "stanley/linear_quotients.hpp"
#include "stanley/schmitt_vogel.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/verify.hpp"

namespace {

using stanley::json;

void emit(const json& out, const std::string& json_out) {
  std::cout << out.dump(2) << '\n';
  if (!json_out.empty()) stanley::write_json_file(json_out, out);
}

stanley::Field parse_field(const std::string& name) {
  if (name == "Q") return stanley::Field::rationals;
  if (name == "Fp") return stanley::Field::prime_field;
  throw CLI::ValidationError("--field must be Q or Fp");
}

int report_exit(const stanley::VerificationReport& report, const std::string& json_out) {
  emit(report.data, json_out);
  if (!report.all_pass()) {
    std::cerr << "verification failed";
    if (report.bundle_path) std::cerr << "; counterexample bundle: " << *report.bundle_path;
    std::cerr << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stanley: exact invariants of squarefree monomial ideals"};
  app.require_subcommand(1);

  std::string input, json_out, witness_file, field_name = "Q", kind_name = "quotient";
  std::string bundle_dir = ".";
  std::uint64_t seed = 42;
  int max_n = -1, gen_n = 4, gen_d = 2, gen_count = 10;
  bool trim = false;

  auto* depth_cmd = app.add_subcommand("depth", "pd and depth of S/I via the homology oracle");
  depth_cmd->add_option("--input", input, "ideal JSON file")->required();
  depth_cmd->add_option("--field", field_name, "coefficient field: Q or Fp");
  depth_cmd->add_option("--max-n", max_n, "override the active-variable cap");
  depth_cmd->add_option("--json-out", json_out, "write the result JSON to a file");

  auto* sdepth_cmd = app.add_subcommand("sdepth", "exact Stanley depth with certificate");
  sdepth_cmd->add_option("--input", input, "ideal JSON file")->required();
  sdepth_cmd->add_option("--kind", kind_name, "ideal or quotient (default quotient)");
  sdepth_cmd->add_option("--max-n", max_n, "override the active-variable cap");
  sdepth_cmd->add_option("--json-out", json_out, "write the result JSON to a file");

  auto* sv_cmd = app.add_subcommand("sv", "restricted Schmitt-Vogel number or witness check");
  sv_cmd->add_option("--input", input, "ideal JSON file")->required();
  sv_cmd->add_option("--witness", witness_file, "verify this witness instead of solving");
  sv_cmd->add_option("--max-n", max_n, "override the generator-count cap");
  sv_cmd->add_option("--json-out", json_out, "write the result JSON to a file");

  auto* chordal_cmd = app.add_subcommand("chordal", "chordality certificate for a clutter");
  chordal_cmd->add_option("--input", input, "clutter JSON file")->required();
  chordal_cmd->add_option("--max-n", max_n, "override the vertex cap");
  chordal_cmd->add_option("--json-out", json_out, "write the result JSON to a file");

  auto* lq_cmd = app.add_subcommand("lq", "search for a linear-quotient order");
  lq_cmd->add_option("--input", input, "ideal JSON file")->required();
  lq_cmd->add_option("--json-out", json_out, "write the result JSON to a file");

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem verification sweeps");
  verify_cmd->add_option("--input", input, "replay instances from this file");
  verify_cmd->add_option("--seed", seed, "sweep seed (default 42)");
  verify_cmd->add_option("--max-n", max_n, "largest ambient ring in the sweeps (default 6)");
  verify_cmd->add_option("--field", field_name, "coefficient field: Q or Fp");
  verify_cmd->add_flag("--trim", trim, "check free-variable shifts instead of the bounds");
  verify_cmd->add_option("--bundle-dir", bundle_dir, "where counterexample bundles go");
  verify_cmd->add_option("--json-out", json_out, "write the report JSON to a file");

  auto* gen_cmd = app.add_subcommand("gen", "generate chordal clutter instances");
  gen_cmd->add_option("--n", gen_n, "vertex count (at most 7)")->required();
  gen_cmd->add_option("--d", gen_d, "minimum edge cardinality / complement degree")->required();
  gen_cmd->add_option("--count", gen_count, "how many instances");
  gen_cmd->add_option("--seed", seed, "generator seed");
  gen_cmd->add_option("--json-out", json_out, "write the instances JSON to a file");

  auto* examples_cmd = app.add_subcommand("examples", "run the two worked examples");
  examples_cmd->add_option("--json-out", json_out, "write the report JSON to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (depth_cmd->parsed()) {
      const stanley::SqfIdeal ideal = stanley::ideal_from_json(stanley::read_json_file(input));
      stanley::DepthOptions opts;
      opts.field = parse_field(field_name);
      if (max_n > 0) opts.max_active = max_n;
      const stanley::VarSet ambient = stanley::full_set(ideal.ambient_n);
      const int pd = stanley::projective_dimension(ideal, ambient, opts);
      json out{{"pd", pd}, {"depth_quotient", ideal.ambient_n - pd}};
      if (ideal.is_zero())
        out["depth_ideal"] = nullptr;
      else
        out["depth_ideal"] = ideal.ambient_n - pd + 1;
      emit(out, json_out);
      return 0;
    }

    if (sdepth_cmd->parsed()) {
      const stanley::SqfIdeal ideal = stanley::ideal_from_json(stanley::read_json_file(input));
      stanley::PosetKind kind;
      if (kind_name == "ideal")
        kind = stanley::PosetKind::ideal;
      else if (kind_name == "quotient")
        kind = stanley::PosetKind::quotient;
      else
        throw std::invalid_argument("--kind must be ideal or quotient");
      const int cap = max_n > 0 ? max_n : stanley::kSdepthCap;
      const stanley::SdepthResult result =
          stanley::sdepth(ideal, kind, stanley::full_set(ideal.ambient_n), cap);
      emit(json{{"sdepth", result.value},
                {"certificate", stanley::partition_to_json(result.certificate)}},
           json_out);
      return 0;
    }

    if (sv_cmd->parsed()) {
      const stanley::SqfIdeal ideal = stanley::ideal_from_json(stanley::read_json_file(input));
      if (!witness_file.empty()) {
        const stanley::SvWitness witness =
            stanley::witness_from_json(stanley::read_json_file(witness_file), ideal.ambient_n);
        const stanley::SvCheck check = stanley::check_sv_witness(ideal, witness);
        json out{{"valid", check.ok()}, {"status", check.describe()}};
        if (!check.ok() && check.status == stanley::SvStatus::pair_condition) {
          out["level"] = check.level;
          out["u"] = stanley::indices_json(check.u.support);
          out["u2"] = stanley::indices_json(check.u2.support);
        }
        emit(out, json_out);
        return 0;
      }
      const int cap = max_n > 0 ? max_n : stanley::kSvGeneratorCap;
      const stanley::SvResult result = stanley::sv_number(ideal, cap);
      emit(json{{"sv_restricted", result.r},
                {"witness", stanley::witness_to_json(result.witness)}},
           json_out);
      return 0;
    }

    if (chordal_cmd->parsed()) {
      const stanley::Clutter clutter =
          stanley::clutter_from_json(stanley::read_json_file(input));
      const int cap = max_n > 0 ? max_n : stanley::kChordalityCap;
      const stanley::ChordalityCertificate cert = stanley::is_chordal(clutter, cap);
      json out{{"chordal", cert.chordal}};
      if (cert.chordal) {
        out["minors_certified"] = cert.simplicial_choice.size();
      } else {
        out["witness"] = json{{"deleted", stanley::indices_json(cert.witness.deleted)},
                              {"contracted", stanley::indices_json(cert.witness.contracted)}};
      }
      emit(out, json_out);
      return 0;
    }

    if (lq_cmd->parsed()) {
      const stanley::SqfIdeal ideal = stanley::ideal_from_json(stanley::read_json_file(input));
      const auto lq = stanley::find_lq_order(ideal);
      json out{{"has_linear_quotients", lq.has_value()}};
      if (lq) {
        json order = json::array();
        for (const auto& u : lq->order) order.push_back(stanley::indices_json(u.support));
        out["order"] = order;
        out["colon_counts"] = lq->colon_counts;
        out["pd"] = stanley::pd_from_lq(*lq);
        out["depth_quotient"] = stanley::depth_from_lq(*lq, ideal.ambient_n);
      }
      emit(out, json_out);
      return 0;
    }

    if (gen_cmd->parsed()) {
      const auto generated = stanley::generate_chordal_clutters(gen_n, gen_d, gen_count, seed);
      json instances = json::array();
      for (size_t i = 0; i < generated.size(); ++i) {
        json j = stanley::clutter_to_json(generated[i].clutter);
        j["id"] = "gen-n" + std::to_string(gen_n) + "-d" + std::to_string(gen_d) + "-" +
                  std::to_string(i);
        j["d"] = gen_d;
        j["source"] = "generated";
        j["stream"] = generated[i].stream;
        instances.push_back(std::move(j));
      }
      json out{{"instances", instances},
               {"requested", gen_count},
               {"emitted", generated.size()}};
      if (static_cast<int>(generated.size()) < gen_count)
        std::cerr << "note: chordality filtering left " << generated.size() << " of "
                  << gen_count << " requested instances\n";
      emit(out, json_out);
      return 0;
    }

    stanley::VerifyOptions opts;
    opts.seed = seed;
    if (max_n > 0) opts.max_n = max_n;
    opts.field = parse_field(field_name);
    opts.trim = trim;
    opts.bundle_dir = bundle_dir;

    if (examples_cmd->parsed())
      return report_exit(stanley::run_worked_examples(opts), json_out);

    if (verify_cmd->parsed()) {
      if (!input.empty())
        return report_exit(stanley::verify_file(stanley::read_json_file(input), opts),
                           json_out);
      return report_exit(stanley::verify_all(opts), json_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
