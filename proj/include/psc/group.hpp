#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "psc/bigint.hpp"
#include "psc/config.hpp"
#include "psc/perm.hpp"
#include "psc/stabchain.hpp"

namespace psc {

// A finitely generated permutation group. Order and membership come from a
// stabilizer chain; when the order is within Config::max_elements the full
// element set is materialized and interned to dense integer IDs (sorted by
// image table, so ID 0 is the identity). Immutable after construction.
class Group {
public:
  Group(int degree, std::vector<Perm> generators, Config cfg = Config{});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return chain_.order(); }
  const Config& config() const { return cfg_; }
  bool contains(const Perm& g) const { return chain_.contains(g); }

  bool materialized() const { return !elems_.empty(); }
  // Sorted element list; throws CapacityError when the group exceeds the
  // materialization bound.
  const std::vector<Perm>& elements() const;
  long long size() const;  // materialized element count
  int element_id(const Perm& p) const;  // -1 if not an element
  const Perm& element(int id) const { return elements()[id]; }
  int identity_id() const;

  // Arithmetic in ID space.
  int mul(int a, int b) const;
  int inv(int a) const;
  int conj(int a, const Perm& g) const;  // id of g^-1 * element(a) * g
  int pow(int a, const BigInt& k) const;
  // IDs of the group generators.
  const std::vector<int>& generator_ids() const;

private:
  void materialize();

  int degree_;
  std::vector<Perm> gens_;
  Config cfg_;
  StabChain chain_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> gen_ids_;
  int identity_id_ = -1;
};

// A subgroup of a fixed ambient group: generators plus (when the ambient is
// materialized) the sorted list of element IDs.
struct Subgroup {
  const Group* ambient = nullptr;
  std::vector<Perm> gens;
  std::vector<int> elems;  // sorted ambient element IDs; identity always present
  BigInt order;

  bool contains_id(int id) const;
  bool contains_set(const Subgroup& other) const;  // other subseteq *this
  bool same_set(const Subgroup& other) const { return elems == other.elems; }
};

// Closure of the given generators inside G. Generators must be members of G.
Subgroup make_subgroup(const Group& G, std::vector<Perm> gens);
Subgroup subgroup_from_ids(const Group& G, std::vector<int> ids);
Subgroup trivial_subgroup(const Group& G);
Subgroup full_subgroup(const Group& G);

// Set-level helpers in ambient ID space. All inputs/outputs are sorted ID
// vectors containing the identity and closed under the group operations.
std::vector<int> closure_ids(const Group& G, const std::vector<int>& seeds);
std::vector<int> conj_ids(const Group& G, const std::vector<int>& ids, const Perm& g);
// Small deterministic generating set for a closed ID set.
std::vector<Perm> extract_generators(const Group& G, const std::vector<int>& ids);

// Plain BFS closure of a generator set; optionally records, for each element,
// how it was reached (index of parent element, index of generator applied).
std::vector<Perm> naive_closure(int degree, const std::vector<Perm>& gens,
                                std::vector<std::pair<int, int>>* words = nullptr,
                                long long limit = -1);

}  // namespace psc
