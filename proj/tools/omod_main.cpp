#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "omod/builtins.hpp"
#include "omod/construct.hpp"
#include "omod/enumerate.hpp"
#include "omod/io.hpp"
#include "omod/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;  // witness found / property fails
constexpr int kExitInput = 2;     // usage or input error

omod::JoinSemilattice load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw omod::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return omod::parse_structure(buf.str());
}

int cmd_check(const std::string& path, bool json) {
  auto s = load_file(path);
  auto witness = omod::check_omodular(s);
  if (!witness) {
    if (json)
      std::cout << nlohmann::json{{"omodular", true}, {"n", s.size()}}.dump(2) << "\n";
    else
      std::cout << "o-modular\n";
    return kExitOk;
  }
  auto labels = omod::to_proof_labels(s, *witness);
  if (json) {
    nlohmann::json out = {{"omodular", false},
                          {"n", s.size()},
                          {"witness", {{"def", omod::witness_json(s, *witness)},
                                       {"proof", omod::proof_labels_json(s, labels)}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "non-o-modular\n";
    std::cout << omod::witness_def_line(s, *witness) << "\n";
    std::cout << omod::witness_proof_line(s, labels) << "\n";
  }
  return kExitProperty;
}

int cmd_forbidden(const std::string& path, const std::string& strength, bool json) {
  auto s = load_file(path);
  auto m2s = omod::find_m2(s);
  auto m4s = omod::find_m4(s);

  bool semi_m2 = false, strict_m4 = false, lu_m4 = false, semi_m4 = false;
  for (const auto& sub : m2s) semi_m2 |= sub.semi_strong;
  for (const auto& sub : m4s) {
    semi_m4 |= sub.semi_strong;
    strict_m4 |= sub.strong_strict;
    lu_m4 |= sub.strong_lu;
  }
  const bool met = semi_m2 || (strength == "strict" ? strict_m4 : lu_m4);

  if (json) {
    nlohmann::json jm2 = nlohmann::json::array();
    for (const auto& sub : m2s) jm2.push_back(omod::sub_json(s, sub));
    nlohmann::json jm4 = nlohmann::json::array();
    for (const auto& sub : m4s) jm4.push_back(omod::sub_json(s, sub));
    nlohmann::json out = {{"strength", strength},
                          {"m2", jm2},
                          {"m4", jm4},
                          {"counts",
                           {{"semi_strong_m2", semi_m2},
                            {"semi_strong_m4", semi_m4},
                            {"strict_strong_m4", strict_m4},
                            {"lu_strong_m4", lu_m4}}},
                          {"forbidden_present", met}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& sub : m2s) std::cout << omod::sub_line(s, sub) << "\n";
    for (const auto& sub : m4s) std::cout << omod::sub_line(s, sub) << "\n";
    std::cout << "summary: semi-strong-m2=" << (semi_m2 ? "Y" : "N")
              << " semi-strong-m4=" << (semi_m4 ? "Y" : "N")
              << " strict-strong-m4=" << (strict_m4 ? "Y" : "N")
              << " lu-strong-m4=" << (lu_m4 ? "Y" : "N") << "\n";
    std::cout << "forbidden(" << strength << "): " << (met ? "present" : "absent") << "\n";
  }
  return met ? kExitProperty : kExitOk;
}

int cmd_construct(const std::string& path, bool json) {
  auto s = load_file(path);
  auto trace = omod::run_pipeline(s);
  if (!trace) {
    if (json)
      std::cout << nlohmann::json{{"omodular", true}}.dump(2) << "\n";
    else
      std::cout << "o-modular\n";
    return kExitOk;
  }
  if (json)
    std::cout << omod::trace_json(s, *trace).dump(2) << "\n";
  else
    std::cout << omod::render_trace_text(s, *trace);
  return kExitProperty;
}

int cmd_enumerate(int n, bool validate, const std::string& strength, int jobs, bool json) {
  omod::Strength st = omod::Strength::Lu;
  if (strength == "strict") st = omod::Strength::Strict;
  if (strength == "both") st = omod::Strength::Both;

  if (!validate) {
    auto structures = omod::enum_jsls(n);
    if (json) {
      std::cout << nlohmann::json{{"n", n},
                                  {"jsl_count", structures.size()}}.dump(2)
                << "\n";
    } else {
      std::cout << "n=" << n << "\nclasses             " << structures.size() << "\n";
    }
    return kExitOk;
  }

  auto report = omod::validate_theorems(n, st, jobs);
  if (json)
    std::cout << omod::report_json(report).dump(2) << "\n";
  else
    std::cout << omod::render_report_text(report);
  return report.asserted_claims_ok() ? kExitOk : kExitProperty;
}

int cmd_builtin(const std::string& name, const std::string& out_path) {
  auto s = omod::builtin(name);
  std::string text = omod::write_structure(s);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw omod::Error("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitOk;
}

int cmd_dot(const std::string& path, const std::string& highlight) {
  auto s = load_file(path);
  omod::ElementSet hl;
  std::istringstream in(highlight);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    auto idx = s.poset().index_of(name);
    if (!idx) throw omod::Error("unknown element '" + name + "' in --highlight");
    hl.add(*idx);
  }
  std::cout << omod::to_dot(s, hl);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite join semilattices: o-modularity, forbidden substructures, constructions"};
  app.require_subcommand(1);

  std::string file, strength = "lu", out_path, highlight;
  bool json = false;
  int n = 0, jobs = 1;
  bool validate = false;

  auto* check = app.add_subcommand("check", "decide o-modularity of a structure file");
  check->add_option("file", file)->required();
  check->add_flag("--json", json);

  auto* forbidden = app.add_subcommand("forbidden", "list M2/M4 substructures with strength flags");
  forbidden->add_option("file", file)->required();
  forbidden->add_option("--strength", strength)->check(CLI::IsMember({"strict", "lu"}));
  forbidden->add_flag("--json", json);

  auto* construct = app.add_subcommand("construct", "run the witness-to-substructure construction");
  construct->add_option("file", file)->required();
  construct->add_flag("--json", json);

  auto* enumerate = app.add_subcommand("enumerate", "census of all join semilattices of size n");
  enumerate->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  enumerate->add_flag("--validate", validate);
  enumerate->add_option("--strength", strength)->check(CLI::IsMember({"strict", "lu", "both"}));
  enumerate->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  enumerate->add_flag("--json", json);

  auto* builtin_cmd = app.add_subcommand("builtin", "emit a builtin structure file");
  builtin_cmd->add_option("name", file)->required();
  builtin_cmd->add_option("-o,--output", out_path);

  auto* dot = app.add_subcommand("dot", "emit the Hasse diagram in DOT format");
  dot->add_option("file", file)->required();
  dot->add_option("--highlight", highlight);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(file, json);
    if (forbidden->parsed()) return cmd_forbidden(file, strength, json);
    if (construct->parsed()) return cmd_construct(file, json);
    if (enumerate->parsed()) return cmd_enumerate(n, validate, strength, jobs, json);
    if (builtin_cmd->parsed()) return cmd_builtin(file, out_path);
    if (dot->parsed()) return cmd_dot(file, highlight);
  } catch (const omod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
