#include "omod/enumerate.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "omod/construct.hpp"
#include "omod/io.hpp"
#include "omod/iso.hpp"
#include "omod/substructure.hpp"

namespace omod {

namespace {

// Row-major dump of the order matrix. For structures emitted by enum_jsls
// (already relabeled into canonical form) this equals canonical_form.
std::string leq_bits(const Poset& p) {
  const int n = p.size();
  std::string out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j))
        out[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j)] = '1';
  return out;
}

// Extends s by one new minimal element whose strict up-set is f (up-closed,
// nonempty). Returns the canonical string when the result is again a join
// semilattice.
std::optional<std::string> try_extend(const JoinSemilattice& s, Mask f, int max_n) {
  const Poset& p = s.poset();
  const int n = p.size();
  std::vector<std::string> names(static_cast<std::size_t>(n) + 1);
  std::vector<Mask> up(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    names[static_cast<std::size_t>(i)] = p.name(i);
    up[static_cast<std::size_t>(i)] = p.up_set(i);
  }
  names[static_cast<std::size_t>(n)] = position_name(n);
  up[static_cast<std::size_t>(n)] = f | bit(n);
  try {
    JoinSemilattice ext = JoinSemilattice::from_poset(Poset(std::move(names), std::move(up)));
    return canonical_form(ext, std::max(max_n, 11));
  } catch (const NotAJoinSemilattice&) {
    return std::nullopt;
  }
}

std::vector<JoinSemilattice> jsl_level(const std::vector<JoinSemilattice>& prev, int max_n) {
  std::set<std::string> seen;
  for (const JoinSemilattice& s : prev) {
    const Poset& p = s.poset();
    // Candidate strict up-sets for the new minimal element.
    for (Mask f = 1; f <= p.all(); ++f) {
      bool up_closed = true;
      for_each_bit(f, [&](int i) {
        if ((p.up_set(i) & ~f) != 0) up_closed = false;
      });
      if (!up_closed) continue;
      if (auto canon = try_extend(s, f, max_n)) seen.insert(std::move(*canon));
    }
  }
  std::vector<JoinSemilattice> out;
  out.reserve(seen.size());
  for (const std::string& canon : seen) out.push_back(from_canonical(canon));
  return out;
}

struct StructureRecord {
  bool non_omodular = false;
  bool witness_verified = false;
  bool semi_m2 = false;
  bool semi_m4 = false;
  bool strict_m4 = false;
  bool lu_m4 = false;
  bool pipeline_ok = false;
  std::string canonical;
};

StructureRecord analyze(const JoinSemilattice& s) {
  StructureRecord rec;
  rec.canonical = leq_bits(s.poset());
  auto witness = check_omodular(s);
  rec.non_omodular = witness.has_value();
  rec.witness_verified = witness ? verify_witness(s, *witness) : false;
  for (const EmbeddedSub& sub : find_m2(s)) rec.semi_m2 |= sub.semi_strong;
  for (const EmbeddedSub& sub : find_m4(s)) {
    rec.semi_m4 |= sub.semi_strong;
    rec.strict_m4 |= sub.strong_strict;
    rec.lu_m4 |= sub.strong_lu;
  }
  if (witness) {
    try {
      auto trace = run_pipeline(s);
      rec.pipeline_ok = trace.has_value();
      if (trace)
        for (const Fact& f : trace->facts) rec.pipeline_ok &= f.pass;
      rec.pipeline_ok &= rec.witness_verified;
    } catch (const Error&) {
      rec.pipeline_ok = false;
    }
  } else {
    rec.pipeline_ok = true;
  }
  return rec;
}

}  // namespace

const char* strength_name(Strength s) {
  switch (s) {
    case Strength::Strict: return "strict";
    case Strength::Lu: return "lu";
    case Strength::Both: return "both";
  }
  return "?";
}

bool EnumerationReport::asserted_claims_ok() const {
  for (const Violation& v : violations)
    if (v.claim != "C:strict") return false;
  return true;
}

std::vector<JoinSemilattice> enum_jsls(int n, int max_n) {
  if (n < 1 || n > max_n)
    throw SizeLimitExceeded("enumeration size must be between 1 and " + std::to_string(max_n));
  std::vector<JoinSemilattice> level;
  level.push_back(from_canonical("1"));
  for (int k = 2; k <= n; ++k) level = jsl_level(level, max_n);
  return level;
}

EnumerationReport validate_theorems(int n, Strength strength, int jobs, int max_n) {
  auto structures = enum_jsls(n, max_n);
  const std::size_t count = structures.size();
  std::vector<StructureRecord> records(count);

  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) records[i] = analyze(structures[i]);
  } else {
    std::vector<std::thread> workers;
    const std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t w = 0; w < nworkers; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += nworkers) records[i] = analyze(structures[i]);
      });
    }
    for (auto& t : workers) t.join();
  }

  EnumerationReport report;
  report.n = n;
  report.strength = strength;
  report.jsl_count = static_cast<std::int64_t>(count);

  const bool do_strict = strength != Strength::Lu;
  const bool do_lu = strength != Strength::Strict;

  for (std::size_t i = 0; i < count; ++i) {
    const StructureRecord& rec = records[i];
    report.omodular_count += rec.non_omodular ? 0 : 1;
    report.non_omodular_count += rec.non_omodular ? 1 : 0;
    report.with_semi_strong_m2 += rec.semi_m2 ? 1 : 0;
    report.with_semi_strong_m4 += rec.semi_m4 ? 1 : 0;
    report.with_strict_strong_m4 += rec.strict_m4 ? 1 : 0;
    report.with_lu_strong_m4 += rec.lu_m4 ? 1 : 0;

    auto violate = [&](const std::string& claim) {
      report.violations.push_back(
          {claim, rec.canonical, write_structure(structures[i])});
    };
    bool sound_witness = rec.non_omodular && rec.witness_verified;
    if (do_lu && (rec.semi_m2 || rec.lu_m4) && !sound_witness) violate("A:lu");
    if (do_strict && (rec.semi_m2 || rec.strict_m4) && !sound_witness) violate("A:strict");
    if (rec.non_omodular && !(rec.semi_m2 || rec.semi_m4)) violate("B");
    if (do_lu && rec.non_omodular != (rec.semi_m2 || rec.lu_m4)) violate("C:lu");
    if (do_strict && rec.non_omodular != (rec.semi_m2 || rec.strict_m4)) violate("C:strict");
    if (!rec.pipeline_ok) violate("D");
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::pair(a.canonical, a.claim) < std::pair(b.canonical, b.claim);
            });
  return report;
}

}  // namespace omod
