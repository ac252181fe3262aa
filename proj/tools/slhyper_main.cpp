#include "slhyper/checker.hpp"
#include "slhyper/error.hpp"
#include "slhyper/generator.hpp"
#include "slhyper/hypersl_to_slii.hpp"
#include "slhyper/ilar.hpp"
#include "slhyper/parser.hpp"
#include "slhyper/slii_to_hypersl.hpp"
#include "slhyper/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace slhyper;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error("cannot write '" + tmp + "'");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot replace '" + path + "'");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

/// Returns the document itself when certified IL+AR, else the transformed one.
CgsDocument prepare_il_ar(const CgsDocument& doc) {
  if (already_il_ar(doc))
    return doc;
  return make_il_ar(doc.cgs, doc.fam);
}

int cmd_validate(const std::string& instance_path, const std::string& slii_path,
                 const std::string& hyper_path) {
  std::string text = read_file(instance_path);
  CgsDocument doc = load_cgs_json(text);
  validate_cgs(doc);
  std::cout << instance_path << ": valid (" << doc.cgs.num_states() << " states, "
            << doc.cgs.num_agents() << " agents, " << doc.cgs.num_actions()
            << " actions, digest " << input_digest(text) << ")\n";
  if (!slii_path.empty()) {
    parse_slii(read_file(slii_path));
    std::cout << slii_path << ": valid SL_ii formula\n";
  }
  if (!hyper_path.empty()) {
    parse_hypersl(read_file(hyper_path));
    std::cout << hyper_path << ": valid HyperSL formula\n";
  }
  return 0;
}

int cmd_transform(const std::string& instance_path, const std::string& out_path) {
  CgsDocument doc = load_cgs_json(read_file(instance_path));
  if (already_il_ar(doc)) {
    std::cout << "already IL+AR\n";
    emit(out_path, save_cgs_json(doc));
    return 0;
  }
  CgsDocument out = make_il_ar(doc.cgs, doc.fam);
  std::cout << "transformed: " << doc.cgs.num_states() << " -> "
            << out.cgs.num_states() << " states\n";
  emit(out_path, save_cgs_json(out));
  return 0;
}

int cmd_encode(const std::string& direction, const std::string& instance_path,
               const std::string& formula_path, bool prune,
               const std::string& out_path, const std::string& cgs_out,
               const std::string& report_out) {
  CgsDocument doc = prepare_il_ar(load_cgs_json(read_file(instance_path)));
  std::string ftext = read_file(formula_path);
  if (direction == "s2h") {
    SliiPtr phi = parse_slii(ftext);
    HyperPtr out = translate_slii(phi, doc.cgs, doc.fam, *doc.cert);
    emit(out_path, print_hypersl(out) + "\n");
    if (!cgs_out.empty())
      write_file(cgs_out, save_cgs_json(doc));
    if (!report_out.empty())
      write_file(report_out,
                 s2h_report_json(size_report_s2h(phi, doc.cgs, doc.fam, *doc.cert)));
  } else {
    HyperPtr phi = parse_hypersl(ftext);
    auto [comp, out] = translate_hypersl(phi, doc.cgs, *doc.cert, prune);
    emit(out_path, print_slii(out) + "\n");
    if (!cgs_out.empty()) {
      CgsDocument composed;
      composed.cgs = comp.cgs;
      composed.fam = comp.fam;
      write_file(cgs_out, save_cgs_json(composed));
    }
    if (!report_out.empty())
      write_file(report_out, h2s_report_json(size_report_h2s(phi, doc.cgs, *doc.cert)));
  }
  return 0;
}

int cmd_check(const std::string& logic, const std::string& instance_path,
              const std::string& formula_path, int window_k,
              const std::string& out_path) {
  std::string itext = read_file(instance_path);
  CgsDocument doc = load_cgs_json(itext);
  std::string ftext = read_file(formula_path);
  bool result;
  std::string formula;
  if (logic == "slii") {
    SliiPtr phi = parse_slii(ftext);
    formula = print_slii(phi);
    result = check_slii(doc.cgs, doc.fam, phi, window_k);
  } else {
    HyperPtr phi = parse_hypersl(ftext);
    formula = print_hypersl(phi);
    result = check_hypersl(doc.cgs, phi, window_k);
  }
  nlohmann::ordered_json j;
  j["formula"] = formula;
  j["instance_digest"] = input_digest(itext);
  j["class"] = {{"window", window_k}};
  j["result"] = result;
  emit(out_path, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const std::string& direction, const std::string& instance_path,
               const std::string& formula_path, int window_k, bool prune,
               const std::string& out_path) {
  CgsDocument doc = load_cgs_json(read_file(instance_path));
  std::string ftext = read_file(formula_path);
  VerifyReport r;
  if (direction == "s2h")
    r = verify_s2h(doc, parse_slii(ftext), window_k);
  else
    r = verify_h2s(doc, parse_hypersl(ftext), window_k, prune);
  emit(out_path, verify_report_json(r));
  return r.agree ? 0 : 2;
}

int cmd_gen(std::uint64_t seed, const GenSizes& sizes, const std::string& out_path) {
  CgsDocument doc = random_instance(seed, sizes);
  emit(out_path, save_cgs_json(doc));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translations between strategy logic with imperfect information "
               "and hyper strategy logic, with a bounded brute-force checker"};
  app.require_subcommand(1);

  std::string instance_path, formula_path, out_path, cgs_out, report_out;
  std::string direction, logic, slii_path, hyper_path;
  int window_k = 1;
  bool prune = false;
  std::uint64_t seed = 0;
  GenSizes sizes;

  auto* validate = app.add_subcommand("validate", "Validate an instance (and formulas)");
  validate->add_option("instance", instance_path, "CGS JSON file")->required();
  validate->add_option("--slii", slii_path, "SL_ii formula file to parse");
  validate->add_option("--hypersl", hyper_path, "HyperSL formula file to parse");

  auto* transform = app.add_subcommand("transform", "Make a structure IL+AR");
  transform->add_option("instance", instance_path)->required();
  transform->add_option("-o,--output", out_path, "output CGS JSON");

  auto* encode = app.add_subcommand("encode", "Translate a formula");
  encode->add_option("--direction", direction)
      ->required()
      ->check(CLI::IsMember({"s2h", "h2s"}));
  encode->add_flag("--prune", prune, "prune unused copies (h2s)");
  encode->add_option("instance", instance_path)->required();
  encode->add_option("formula", formula_path)->required();
  encode->add_option("-o,--output", out_path, "output formula file");
  encode->add_option("--cgs-out", cgs_out, "structure the encoding runs on");
  encode->add_option("--report", report_out, "size report JSON");

  auto* check = app.add_subcommand("check", "Model-check a formula");
  check->add_option("--logic", logic)
      ->required()
      ->check(CLI::IsMember({"slii", "hypersl"}));
  check->add_option("--window", window_k)->check(CLI::PositiveNumber);
  check->add_option("instance", instance_path)->required();
  check->add_option("formula", formula_path)->required();
  check->add_option("-o,--output", out_path, "verdict JSON");

  auto* verify = app.add_subcommand("verify", "Check a formula against its encoding");
  verify->add_option("--direction", direction)
      ->required()
      ->check(CLI::IsMember({"s2h", "h2s"}));
  verify->add_option("--window", window_k)->check(CLI::PositiveNumber);
  verify->add_flag("--prune", prune, "prune unused copies (h2s)");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("formula", formula_path)->required();
  verify->add_option("-o,--output", out_path, "report JSON");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--states", sizes.states);
  gen->add_option("--actions", sizes.actions);
  gen->add_option("--agents", sizes.agents);
  gen->add_option("--aps", sizes.aps);
  gen->add_option("--observations", sizes.observations);
  gen->add_option("-o,--output", out_path, "output CGS JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed())
      return cmd_validate(instance_path, slii_path, hyper_path);
    if (transform->parsed())
      return cmd_transform(instance_path, out_path);
    if (encode->parsed())
      return cmd_encode(direction, instance_path, formula_path, prune, out_path,
                        cgs_out, report_out);
    if (check->parsed())
      return cmd_check(logic, instance_path, formula_path, window_k, out_path);
    if (verify->parsed())
      return cmd_verify(direction, instance_path, formula_path, window_k, prune,
                        out_path);
    if (gen->parsed())
      return cmd_gen(seed, sizes, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
