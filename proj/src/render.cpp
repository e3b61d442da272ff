#include "omod/render.hpp"

#include <sstream>

namespace omod {

namespace {

const char* yn(bool b) { return b ? "Y" : "N"; }

const char* template_name(SubTemplate t) { return t == SubTemplate::M2 ? "M2" : "M4"; }

std::vector<std::string> names_of(const JoinSemilattice& s, ElementSet e) {
  std::vector<std::string> out;
  for_each_bit(e.bits, [&](int i) { out.push_back(s.name(i)); });
  return out;
}

}  // namespace

std::string set_names(const JoinSemilattice& s, ElementSet e) {
  std::string out = "{";
  bool first = true;
  for_each_bit(e.bits, [&](int i) {
    if (!first) out += ",";
    out += s.name(i);
    first = false;
  });
  return out + "}";
}

std::string witness_def_line(const JoinSemilattice& s, const OModWitness& w) {
  return "witness(def): a=" + s.name(w.a) + " b=" + s.name(w.b) + " c=" + s.name(w.c) +
         " x=" + s.name(w.x) + " y=" + s.name(w.y);
}

std::string witness_proof_line(const JoinSemilattice& s, const ProofLabeling& pl) {
  return "witness(proof): a=" + s.name(pl.a) + " b=" + s.name(pl.b) + " c=" + s.name(pl.c) +
         " x=" + s.name(pl.x) + " y=" + s.name(pl.y);
}

std::string sub_line(const JoinSemilattice& s, const EmbeddedSub& sub) {
  std::string out = template_name(sub.tmpl);
  out += " {";
  for (std::size_t i = 0; i < sub.roles.size(); ++i) {
    if (i) out += ",";
    out += s.name(sub.roles[i].second);
  }
  out += "} roles[";
  for (std::size_t i = 0; i < sub.roles.size(); ++i) {
    if (i) out += " ";
    out += sub.roles[i].first + "=" + s.name(sub.roles[i].second);
  }
  out += "] semi-strong=";
  out += yn(sub.semi_strong);
  out += " strict-strong=";
  out += yn(sub.strong_strict);
  out += " lu-strong=";
  out += yn(sub.strong_lu);
  return out;
}

std::string render_trace_text(const JoinSemilattice& s, const ConstructionTrace& trace) {
  std::string out = "non-o-modular\n";
  out += witness_def_line(s, trace.witness) + "\n";
  out += witness_proof_line(s, trace.labels) + "\n";
  out += "facts:\n";
  for (const Fact& f : trace.facts)
    out += "  (" + f.id + ") " + f.statement + "  " + (f.pass ? "PASS" : "FAIL") + "\n";
  out += "T2: " + sub_line(s, trace.t2) + "\n";
  out += "L(b,c) = " + set_names(s, trace.lbc) + "\n";
  out += std::string("branch: ") + (trace.v ? "M4" : "M2") + "\n";
  if (trace.v) {
    out += "v = " + s.name(*trace.v) + "\n";
    out += "T4: " + sub_line(s, *trace.t4) + "\n";
    out += "nset = " + set_names(s, *trace.nset) + "\n";
    out += "w = " + s.name(*trace.w) + "\n";
    out += "T5: " + sub_line(s, *trace.t5) + "\n";
  }
  return out;
}

std::string render_report_text(const EnumerationReport& report) {
  std::ostringstream out;
  out << "n=" << report.n << " strength=" << strength_name(report.strength) << "\n";
  auto row = [&](const char* label, std::int64_t value) {
    out << label;
    for (std::size_t pad = std::string(label).size(); pad < 20; ++pad) out << ' ';
    out << value << "\n";
  };
  row("classes", report.jsl_count);
  row("o-modular", report.omodular_count);
  row("non-o-modular", report.non_omodular_count);
  row("semi-strong M2", report.with_semi_strong_m2);
  row("semi-strong M4", report.with_semi_strong_m4);
  row("strict-strong M4", report.with_strict_strong_m4);
  row("lu-strong M4", report.with_lu_strong_m4);
  if (report.violations.empty()) {
    out << "violations: none\n";
  } else {
    out << "violations: " << report.violations.size() << "\n";
    for (const Violation& v : report.violations) {
      out << "violation claim=" << v.claim << " canonical=" << v.canonical << "\n";
      out << v.structure_file;
    }
  }
  return out.str();
}

nlohmann::json witness_json(const JoinSemilattice& s, const OModWitness& w) {
  return {{"a", s.name(w.a)}, {"b", s.name(w.b)}, {"c", s.name(w.c)},
          {"x", s.name(w.x)}, {"y", s.name(w.y)}};
}

nlohmann::json proof_labels_json(const JoinSemilattice& s, const ProofLabeling& pl) {
  return {{"a", s.name(pl.a)}, {"b", s.name(pl.b)}, {"c", s.name(pl.c)},
          {"x", s.name(pl.x)}, {"y", s.name(pl.y)}};
}

nlohmann::json sub_json(const JoinSemilattice& s, const EmbeddedSub& sub) {
  nlohmann::json roles = nlohmann::json::object();
  for (const auto& [role, e] : sub.roles) roles[role] = s.name(e);
  return {{"template", template_name(sub.tmpl)},
          {"members", names_of(s, sub.members)},
          {"roles", roles},
          {"semi_strong", sub.semi_strong},
          {"strong_strict", sub.strong_strict},
          {"strong_lu", sub.strong_lu}};
}

nlohmann::json trace_json(const JoinSemilattice& s, const ConstructionTrace& trace) {
  nlohmann::json facts = nlohmann::json::array();
  for (const Fact& f : trace.facts)
    facts.push_back({{"id", f.id}, {"statement", f.statement}, {"pass", f.pass}});
  nlohmann::json out = {{"omodular", false},
                        {"witness", {{"def", witness_json(s, trace.witness)},
                                     {"proof", proof_labels_json(s, trace.labels)}}},
                        {"t2", sub_json(s, trace.t2)},
                        {"lbc", names_of(s, trace.lbc)},
                        {"branch", trace.v ? "M4" : "M2"},
                        {"facts", facts}};
  if (trace.v) {
    out["v"] = s.name(*trace.v);
    out["t4"] = sub_json(s, *trace.t4);
    out["nset"] = names_of(s, *trace.nset);
    out["w"] = s.name(*trace.w);
    out["t5"] = sub_json(s, *trace.t5);
  }
  return out;
}

nlohmann::json report_json(const EnumerationReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : report.violations)
    violations.push_back({{"claim", v.claim},
                          {"canonical", v.canonical},
                          {"structure_file", v.structure_file}});
  return {{"n", report.n},
          {"strength", strength_name(report.strength)},
          {"jsl_count", report.jsl_count},
          {"omodular_count", report.omodular_count},
          {"non_omodular_count", report.non_omodular_count},
          {"with_semi_strong_m2", report.with_semi_strong_m2},
          {"with_semi_strong_m4", report.with_semi_strong_m4},
          {"with_strict_strong_m4", report.with_strict_strong_m4},
          {"with_lu_strong_m4", report.with_lu_strong_m4},
          {"violations", violations},
          {"asserted_claims_ok", report.asserted_claims_ok()}};
}

}  // namespace omod
