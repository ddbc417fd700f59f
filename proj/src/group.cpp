#include "psc/group.hpp"

#include <algorithm>
#include <deque>

#include "psc/errors.hpp"

namespace psc {

Group::Group(int degree, std::vector<Perm> generators, Config cfg)
    : degree_(degree), gens_(std::move(generators)), cfg_(cfg) {
  if (degree_ <= 0) throw InvalidArgumentError("group degree must be positive");
  for (const Perm& g : gens_) {
    if (g.degree() != degree_)
      throw DegreeMismatchError("generator of degree " + std::to_string(g.degree()) +
                                " in group of degree " + std::to_string(degree_));
  }
  chain_ = StabChain(degree_, gens_);
  if (order() <= cfg_.max_elements) materialize();
}

void Group::materialize() {
  elems_ = naive_closure(degree_, gens_);
  std::sort(elems_.begin(), elems_.end());
  index_.reserve(elems_.size() * 2);
  for (int i = 0; i < static_cast<int>(elems_.size()); ++i) index_.emplace(elems_[i], i);
  identity_id_ = index_.at(Perm(degree_));
  for (const Perm& g : gens_) gen_ids_.push_back(index_.at(g));
}

const std::vector<Perm>& Group::elements() const {
  if (elems_.empty())
    throw CapacityError("group of order " + order().str() +
                        " exceeds the element-materialization bound " +
                        std::to_string(cfg_.max_elements));
  return elems_;
}

long long Group::size() const { return static_cast<long long>(elements().size()); }

int Group::element_id(const Perm& p) const {
  elements();
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int Group::identity_id() const {
  elements();
  return identity_id_;
}

int Group::mul(int a, int b) const { return index_.at(elems_[a] * elems_[b]); }

int Group::inv(int a) const { return index_.at(elems_[a].inverse()); }

int Group::conj(int a, const Perm& g) const { return index_.at(elems_[a].conjugated_by(g)); }

int Group::pow(int a, const BigInt& k) const { return index_.at(elems_[a].power(k)); }

const std::vector<int>& Group::generator_ids() const {
  elements();
  return gen_ids_;
}

bool Subgroup::contains_id(int id) const {
  return std::binary_search(elems.begin(), elems.end(), id);
}

bool Subgroup::contains_set(const Subgroup& other) const {
  return std::includes(elems.begin(), elems.end(), other.elems.begin(), other.elems.end());
}

std::vector<Perm> naive_closure(int degree, const std::vector<Perm>& gens,
                                std::vector<std::pair<int, int>>* words, long long limit) {
  std::vector<Perm> elems{Perm(degree)};
  std::unordered_map<Perm, int, PermHash> seen;
  seen.emplace(elems[0], 0);
  if (words) words->push_back({-1, -1});
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
      Perm next = elems[cur] * gens[gi];
      if (seen.count(next)) continue;
      int id = static_cast<int>(elems.size());
      if (limit >= 0 && id >= limit)
        throw CapacityError("closure exceeds bound " + std::to_string(limit));
      seen.emplace(next, id);
      elems.push_back(std::move(next));
      if (words) words->push_back({cur, gi});
      queue.push_back(id);
    }
  }
  return elems;
}

std::vector<int> closure_ids(const Group& G, const std::vector<int>& seeds) {
  std::vector<int> result{G.identity_id()};
  std::vector<bool> in_set(G.size(), false);
  in_set[G.identity_id()] = true;
  std::deque<int> queue{G.identity_id()};
  std::vector<int> gens;
  for (int s : seeds)
    if (!in_set[s]) {
      in_set[s] = true;
      result.push_back(s);
      queue.push_back(s);
      gens.push_back(s);
    }
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int next = G.mul(cur, g);
      if (!in_set[next]) {
        in_set[next] = true;
        result.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> conj_ids(const Group& G, const std::vector<int>& ids, const Perm& g) {
  std::vector<int> result;
  result.reserve(ids.size());
  for (int id : ids) result.push_back(G.element_id(G.element(id).conjugated_by(g)));
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Perm> extract_generators(const Group& G, const std::vector<int>& ids) {
  std::vector<int> closed{G.identity_id()};
  std::vector<int> gen_ids;
  for (int id : ids) {
    if (std::binary_search(closed.begin(), closed.end(), id)) continue;
    gen_ids.push_back(id);
    closed = closure_ids(G, gen_ids);
    if (closed.size() == ids.size()) break;
  }
  std::vector<Perm> gens;
  for (int id : gen_ids) gens.push_back(G.element(id));
  return gens;
}

Subgroup make_subgroup(const Group& G, std::vector<Perm> gens) {
  Subgroup H;
  H.ambient = &G;
  std::vector<int> seeds;
  for (const Perm& g : gens) {
    int id = G.element_id(g);
    if (id < 0) throw ContainmentError("generator " + g.cycle_string() + " is not in the ambient group");
    seeds.push_back(id);
  }
  H.gens = std::move(gens);
  H.elems = closure_ids(G, seeds);
  H.order = static_cast<long long>(H.elems.size());
  return H;
}

Subgroup subgroup_from_ids(const Group& G, std::vector<int> ids) {
  Subgroup H;
  H.ambient = &G;
  std::sort(ids.begin(), ids.end());
  H.elems = std::move(ids);
  H.gens = extract_generators(G, H.elems);
  H.order = static_cast<long long>(H.elems.size());
  return H;
}

Subgroup trivial_subgroup(const Group& G) {
  Subgroup H;
  H.ambient = &G;
  H.elems = {G.identity_id()};
  H.order = 1;
  return H;
}

Subgroup full_subgroup(const Group& G) {
  Subgroup H;
  H.ambient = &G;
  H.gens = G.generators();
  H.elems.resize(G.size());
  for (int i = 0; i < G.size(); ++i) H.elems[i] = i;
  H.order = G.order();
  return H;
}

}  // namespace psc
