#pragma once

#include <set>
#include <string>
#include <vector>

#include "psc/groupspec.hpp"
#include "psc/homology.hpp"
#include "psc/poset.hpp"

namespace psc {

// A conjugation-closed collection of subgroups.
struct Family {
  const Group* ambient = nullptr;
  std::string label;
  std::vector<Subgroup> members;  // sorted by (order, element IDs)

  bool contains(const std::vector<int>& elem_ids) const;
};

// All solvable subgroups of G, including the trivial one (and G itself when
// G is solvable). Labelled "SLV".
Family solvable_family(const Group& G);

// Builds a family from explicit members; throws InvalidArgumentError when the
// collection is not closed under conjugation by ambient generators.
Family family_from_subgroups(const Group& G, std::vector<Subgroup> members, std::string label);

enum class VerdictStatus { Verified, Refuted, SkippedCapacity };

struct Verdict {
  std::string claim;
  std::string group_name;
  long prime = 0;  // 0 for prime-independent claims
  VerdictStatus status = VerdictStatus::Verified;
  std::vector<std::pair<std::string, std::string>> data;  // insertion-ordered
  long long ms = 0;
};

// Euler characteristic of K(S_p(G)) is 1 modulo the p-part of |G|.
Verdict brown_check(const Group& G, long p);

// O_p(G) != 1 implies K(A_p(G)) acyclic; O_p(G) = 1 implies nonvanishing
// reduced homology. Instances of p-rank <= 3 are tagged; a refutation there
// is flagged as a probable implementation bug.
Verdict quillen_check(const Group& G, long p);

// Identical reduced homology across S_p, A_p, B_p, i(S_p), i(A_p).
Verdict invariance_check(const Group& G, long p);

// The three separating-family clauses for F: G outside F, closure under
// subgroups, closure under extensions with solvable quotient.
Verdict separating_check(const Group& G, const Family& F);

// i_F(H) = (1 - chi(K(F_{>H}))) / [N_G(H) : H], exactly.
Rational os_index(const Group& G, const Family& F, const Subgroup& H);

// Diagnostic over SLV(G): every maximal self-normalizing member has index 1;
// every index denominator divides [N_G(H) : H]. Records i_SLV(1).
Verdict os_index_check(const Group& G);

// First chain of K(X) whose setwise stabilizer (the intersection of the
// member normalizers) is normal in G. When K(X) is acyclic and at most
// 2-dimensional, exhaustion without a hit contradicts the underlying theorem
// and is flagged as a probable bug.
Verdict normal_stabilizer_search(const Group& G, const SubgroupPoset& X);

// Retraction hypothesis, homology agreement of A_p(G) and A_p(H), and
// acyclicity of every upward link in the collapse schedule.
Verdict retract_check(const Group& G, const Subgroup& H, long p);

// Agreement of the normal-factor rank formula with m_p(G).
Verdict lemmaprank_check(const Group& G, const Subgroup& N, long p);

struct CorpusOptions {
  std::set<std::string> claims;  // empty means all
  int jobs = 1;
  bool stretch = false;
  Config config;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> config;  // echoed settings
  std::vector<Verdict> verdicts;
  long long verified = 0;
  long long refuted = 0;
  long long skipped = 0;
};

extern const std::vector<std::string> kCorpusClaims;

Report corpus_run(const SpecFile& corpus, const CorpusOptions& options);

std::string verdict_status_name(VerdictStatus s);
std::string print_report(const Report& report);
std::string print_report_json(const Report& report);

}  // namespace psc
