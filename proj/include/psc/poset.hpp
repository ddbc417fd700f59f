#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "psc/group.hpp"

namespace psc {

enum class PosetKind { Sp, Ap, Bp, ISp, IAp, Fixed, Custom };

std::string kind_name(PosetKind k);
PosetKind kind_from_name(const std::string& s);

// A finite poset of nontrivial p-subgroups of a fixed ambient group, ordered
// by inclusion. Elements are sorted by (order, element-ID list), so the index
// order is a linear extension. The conjugation action of `acting_gens` on the
// element list is stored explicitly; construction fails if the element set is
// not invariant under it.
class SubgroupPoset {
public:
  const Group* ambient = nullptr;
  long prime = 0;
  PosetKind kind = PosetKind::Custom;
  std::vector<Subgroup> elements;
  std::vector<std::pair<int, int>> covers;  // (lower index, upper index)
  std::vector<Perm> acting_gens;
  std::vector<std::vector<int>> action;  // action[g][i]: image of element i

  int size() const { return static_cast<int>(elements.size()); }
  bool less(int i, int j) const { return up_[i].test(j); }
  // Indices j with element i < element j (ascending).
  std::vector<int> strictly_above(int i) const;
  std::vector<int> strictly_below(int i) const;
  // Upward cover adjacency, used for chain enumeration.
  const std::vector<int>& cover_above(int i) const { return cover_up_[i]; }
  std::vector<int> maximal_indices() const;
  std::vector<int> minimal_indices() const;
  int index_of(const std::vector<int>& elem_ids) const;
  // Conjugation orbit of an element index under the stored action.
  std::vector<int> orbit_of(int i) const;

  const boost::dynamic_bitset<>& above_mask(int i) const { return up_[i]; }

private:
  friend SubgroupPoset make_poset(const Group&, long, PosetKind, std::vector<std::vector<int>>,
                                  std::vector<Perm>);
  std::vector<boost::dynamic_bitset<>> up_;    // up_[i][j]: i < j
  std::vector<boost::dynamic_bitset<>> down_;  // down_[j][i]: i < j
  std::vector<std::vector<int>> cover_up_;
};

// Assemble a poset from element-ID sets (deduplicated; the trivial subgroup
// is rejected). Throws InvalidArgumentError when the element set is not
// closed under conjugation by `acting_gens`.
SubgroupPoset make_poset(const Group& G, long p, PosetKind kind,
                         std::vector<std::vector<int>> elem_sets, std::vector<Perm> acting_gens);

// S_p(G), A_p(G) or B_p(G). Empty poset when p does not divide |G|.
// CapacityError when the Sylow p-subgroup exceeds Config::max_sylow_order.
SubgroupPoset build_poset(const Group& G, long p, PosetKind kind);

// Nontrivial intersections of nonempty sets of maximal elements of X.
SubgroupPoset i_reduction(const SubgroupPoset& X);

// Longest chain cardinality minus one; -1 for the empty poset. Equals the
// dimension of the order complex.
int poset_height(const SubgroupPoset& X);

// Subposet of elements fixed setwise by conjugation by every generator of K.
SubgroupPoset fixed_subposet(const SubgroupPoset& X, const Subgroup& K);

struct RankWitness {
  int rank = 0;
  Subgroup witness;  // elementary abelian of order p^rank
  // For the normal-factor rank formula: the pair (A, m_p(C_N(A))) attaining
  // the maximum. `best_a` is trivial when the empty choice A = 1 attains it.
  std::optional<Subgroup> best_a;
  int centralizer_rank = 0;
};

// m_p(G): the largest rank of an elementary abelian p-subgroup.
RankWitness p_rank(const Group& G, long p);

// Evaluates max over elementary abelian A <= G with A cap N = 1 of
// m_p(C_N(A)) + m_p(A), the right-hand side of the rank formula for a
// normal subgroup N. Equals m_p(G).
RankWitness lemmaprank_eval(const Group& G, const Subgroup& N, long p);

struct RetractResult {
  bool hypothesis_holds = false;
  std::optional<Subgroup> violating;   // first E with E cap H = 1, O_p(C_H(E)) = 1
  std::optional<SubgroupPoset> reduced;  // A_p(H), as a subposet of A_p(G)
  SubgroupPoset ap_g;                    // A_p(G) itself
  std::vector<int> schedule;  // linear extension of {E : E cap H = 1}, indices into ap_g
};

// Checks the retraction hypothesis: O_p(C_H(E)) != 1 for every E in A_p(G)
// with E cap H = 1. When it holds, A_p(G) deformation retracts onto A_p(H);
// the returned schedule is the linear extension driving the collapse.
RetractResult retract_reduce(const Group& G, const Subgroup& H, long p);

// The upward link removed at step i of the collapse: elements A > E_i of
// A_p(G) with A cap H != 1. Acyclic under the hypothesis.
SubgroupPoset retract_upward_link(const RetractResult& r, const Subgroup& H, int step);

// Text export, `format poset v1`.
std::string print_poset(const SubgroupPoset& X);

}  // namespace psc
