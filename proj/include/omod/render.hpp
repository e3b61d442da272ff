#pragma once

#include <string>

#include "json.hpp"
#include "omod/construct.hpp"
#include "omod/enumerate.hpp"

namespace omod {

/// Set contents as "{a,b,c}" in index order.
std::string set_names(const JoinSemilattice& s, ElementSet e);

std::string witness_def_line(const JoinSemilattice& s, const OModWitness& w);
std::string witness_proof_line(const JoinSemilattice& s, const ProofLabeling& pl);

/// One report line per embedding, e.g.
///   M4 {v,a,c,b,top} roles[v=v a=a c=c b=b top=top] semi-strong=Y strict-strong=Y lu-strong=Y
std::string sub_line(const JoinSemilattice& s, const EmbeddedSub& sub);

std::string render_trace_text(const JoinSemilattice& s, const ConstructionTrace& trace);
std::string render_report_text(const EnumerationReport& report);

nlohmann::json witness_json(const JoinSemilattice& s, const OModWitness& w);
nlohmann::json proof_labels_json(const JoinSemilattice& s, const ProofLabeling& pl);
nlohmann::json sub_json(const JoinSemilattice& s, const EmbeddedSub& sub);
nlohmann::json trace_json(const JoinSemilattice& s, const ConstructionTrace& trace);
nlohmann::json report_json(const EnumerationReport& report);

}  // namespace omod
