#include "psc/groupops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "psc/errors.hpp"

namespace psc {

namespace {

void check_ambient(const Group& G, const Subgroup& H) {
  if (H.ambient != &G)
    throw ContainmentError("subgroup does not live in the given ambient group");
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigInt p_part(const BigInt& n, long p) {
  BigInt m = n, result = 1;
  while (m % p == 0) {
    m /= p;
    result *= p;
  }
  return result;
}

std::vector<int> normalizer_in_set(const Group& G, const std::vector<int>& ids,
                                   const Subgroup& sub) {
  std::vector<int> result;
  for (int g : ids) {
    const Perm& gp = G.element(g);
    bool ok = true;
    for (const Perm& x : sub.gens) {
      if (!sub.contains_id(G.element_id(x.conjugated_by(gp)))) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(g);
  }
  return result;
}

std::vector<int> centralizer_in_set(const Group& G, const std::vector<int>& ids,
                                    const std::vector<Perm>& targets) {
  std::vector<int> result;
  for (int g : ids) {
    const Perm& gp = G.element(g);
    bool ok = true;
    for (const Perm& t : targets) {
      if (!gp.commutes_with(t)) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(g);
  }
  return result;
}

std::vector<int> sylow_in_set(const Group& G, const std::vector<int>& ids, long p) {
  if (!is_prime(p)) throw InvalidArgumentError(std::to_string(p) + " is not prime");
  BigInt target = p_part(BigInt(static_cast<long long>(ids.size())), p);
  if (target == 1) return {G.identity_id()};
  // start from the first p-element
  std::vector<int> P;
  for (int id : ids) {
    const Perm& x = G.element(id);
    int e = x.order_p_exponent(p);
    if (e == 0) continue;
    Perm y = x.power(x.order() / boost::multiprecision::pow(BigInt(p), e));
    P = closure_ids(G, {G.element_id(y)});
    break;
  }
  if (P.empty()) throw Error("no p-element found despite p | order (internal error)");
  while (BigInt(static_cast<long long>(P.size())) < target) {
    Subgroup sub = subgroup_from_ids(G, P);
    std::vector<int> N = normalizer_in_set(G, ids, sub);
    // any y in N \ P with y^p in P extends P to a p-group of index p over P
    bool extended = false;
    for (int y : N) {
      if (sub.contains_id(y)) continue;
      if (!sub.contains_id(G.pow(y, p))) continue;
      std::vector<int> seeds = P;
      seeds.push_back(y);
      P = closure_ids(G, seeds);
      extended = true;
      break;
    }
    if (!extended)
      throw Error("sylow growth stalled (internal error)");
  }
  return P;
}

std::vector<int> p_core_in_set(const Group& G, const std::vector<int>& ids, long p) {
  std::vector<int> P = sylow_in_set(G, ids, p);
  std::vector<Perm> gens = extract_generators(G, ids);
  // intersect the conjugation orbit of P
  std::map<std::vector<int>, bool> seen;
  std::deque<std::vector<int>> queue;
  seen.emplace(P, true);
  queue.push_back(P);
  std::vector<int> core = P;
  while (!queue.empty() && core.size() > 1) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      std::vector<int> next = conj_ids(G, cur, g);
      if (seen.emplace(next, true).second) {
        std::vector<int> tmp;
        std::set_intersection(core.begin(), core.end(), next.begin(), next.end(),
                              std::back_inserter(tmp));
        core = std::move(tmp);
        queue.push_back(std::move(next));
      }
    }
  }
  return core;
}

Subgroup sylow_subgroup(const Group& G, long p) {
  if (!is_prime(p)) throw InvalidArgumentError(std::to_string(p) + " is not prime");
  std::vector<int> all(G.size());
  for (int i = 0; i < G.size(); ++i) all[i] = i;
  return subgroup_from_ids(G, sylow_in_set(G, all, p));
}

Subgroup normalizer(const Group& G, const Subgroup& H) {
  check_ambient(G, H);
  // orbit-stabilizer on the conjugation action; stabilizer generators come
  // from Schreier's lemma
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> orbit{H.elems};
  std::vector<Perm> rep{Perm(G.degree())};
  index.emplace(H.elems, 0);
  std::set<int> schreier{G.identity_id()};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const Perm& g : G.generators()) {
      std::vector<int> next = conj_ids(G, orbit[cur], g);
      auto it = index.find(next);
      if (it == index.end()) {
        int id = static_cast<int>(orbit.size());
        index.emplace(next, id);
        orbit.push_back(std::move(next));
        rep.push_back(rep[cur] * g);
        queue.push_back(id);
      } else {
        Perm s = rep[cur] * g * rep[it->second].inverse();
        schreier.insert(G.element_id(s));
      }
    }
  }
  Subgroup N = subgroup_from_ids(G, closure_ids(G, {schreier.begin(), schreier.end()}));
  if (BigInt(static_cast<long long>(orbit.size())) * N.order != G.order())
    throw Error("orbit-stabilizer mismatch in normalizer (internal error)");
  return N;
}

Subgroup centralizer(const Group& G, const Subgroup& H) {
  check_ambient(G, H);
  std::vector<int> all(G.size());
  for (int i = 0; i < G.size(); ++i) all[i] = i;
  return subgroup_from_ids(G, centralizer_in_set(G, all, H.gens));
}

Subgroup p_core(const Group& G, long p) {
  std::vector<int> all(G.size());
  for (int i = 0; i < G.size(); ++i) all[i] = i;
  return subgroup_from_ids(G, p_core_in_set(G, all, p));
}

bool is_p_group(const Subgroup& H, long p) {
  return p_part(H.order, p) == H.order;
}

Subgroup omega1(const Subgroup& P, long p, bool* abelian) {
  if (!is_prime(p)) throw InvalidArgumentError(std::to_string(p) + " is not prime");
  if (!is_p_group(P, p))
    throw InvalidArgumentError("omega1 requires a p-group");
  const Group& G = *P.ambient;
  std::vector<int> seeds;
  for (int id : P.elems)
    if (G.element(id).power(p).is_identity()) seeds.push_back(id);
  Subgroup result = subgroup_from_ids(G, closure_ids(G, seeds));
  if (abelian) *abelian = is_abelian(result);
  return result;
}

bool is_abelian(const Subgroup& H) {
  for (std::size_t i = 0; i < H.gens.size(); ++i)
    for (std::size_t j = i + 1; j < H.gens.size(); ++j)
      if (!H.gens[i].commutes_with(H.gens[j])) return false;
  return true;
}

bool is_elementary_abelian(const Subgroup& H, long p) {
  if (!is_abelian(H)) return false;
  const Group& G = *H.ambient;
  for (int id : H.elems) {
    if (id == G.identity_id()) continue;
    if (!G.element(id).power(p).is_identity()) return false;
  }
  return true;
}

bool is_normal_in(const Subgroup& H, const Subgroup& K) {
  for (const Perm& g : K.gens)
    if (conj_ids(*H.ambient, H.elems, g) != H.elems) return false;
  return true;
}

Subgroup normal_closure(const Subgroup& K, const std::vector<int>& seed_ids) {
  const Group& G = *K.ambient;
  std::vector<int> set = closure_ids(G, seed_ids);
  for (;;) {
    std::vector<int> fresh;
    for (int d : set)
      for (const Perm& g : K.gens) {
        int c = G.element_id(G.element(d).conjugated_by(g));
        if (!std::binary_search(set.begin(), set.end(), c)) fresh.push_back(c);
      }
    if (fresh.empty()) break;
    std::vector<int> seeds = set;
    seeds.insert(seeds.end(), fresh.begin(), fresh.end());
    set = closure_ids(G, seeds);
  }
  return subgroup_from_ids(G, set);
}

Subgroup derived_subgroup(const Subgroup& H) {
  const Group& G = *H.ambient;
  std::vector<int> comms;
  for (const Perm& a : H.gens)
    for (const Perm& b : H.gens) {
      Perm c = a.inverse() * b.inverse() * a * b;
      comms.push_back(G.element_id(c));
    }
  return normal_closure(H, comms);
}

bool is_solvable(const Subgroup& H) {
  Subgroup cur = H;
  for (;;) {
    if (cur.order == 1) return true;
    Subgroup next = derived_subgroup(cur);
    if (next.order == cur.order) return false;
    cur = std::move(next);
  }
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  std::vector<int> ids;
  std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(),
                        std::back_inserter(ids));
  return subgroup_from_ids(*A.ambient, ids);
}

namespace {

// Worklist enumeration of all subgroups of the set `ids`: cyclic seeds from
// prime-power elements, then single-element extensions.
std::vector<Subgroup> subgroups_of_set(const Group& G, const std::vector<int>& ids) {
  std::map<std::vector<int>, std::vector<int>> seen;  // elems -> gen ids
  std::deque<const std::vector<int>*> queue;
  std::vector<int> trivial{G.identity_id()};
  seen.emplace(trivial, std::vector<int>{});
  for (int x : ids) {
    if (x == G.identity_id()) continue;
    std::vector<int> cyc = closure_ids(G, {x});
    seen.emplace(std::move(cyc), std::vector<int>{x});
  }
  for (auto& [elems, gens] : seen) queue.push_back(&elems);
  while (!queue.empty()) {
    const std::vector<int>* cur = queue.front();
    queue.pop_front();
    std::vector<int> gens = seen.at(*cur);
    if (cur->size() == ids.size()) continue;
    for (int x : ids) {
      if (std::binary_search(cur->begin(), cur->end(), x)) continue;
      std::vector<int> seed = gens;
      seed.push_back(x);
      std::vector<int> ext = closure_ids(G, seed);
      auto [it, fresh] = seen.emplace(std::move(ext), std::move(seed));
      if (fresh) queue.push_back(&it->first);
    }
  }
  std::vector<Subgroup> result;
  for (auto& [elems, gens] : seen) {
    Subgroup H;
    H.ambient = &G;
    H.elems = elems;
    for (int g : gens) H.gens.push_back(G.element(g));
    H.order = static_cast<long long>(elems.size());
    result.push_back(std::move(H));
  }
  return result;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const Group& G) {
  if (G.order() > G.config().max_subgroup_enum)
    throw CapacityError("full subgroup enumeration is bounded at order " +
                        std::to_string(G.config().max_subgroup_enum) +
                        ", group has order " + G.order().str());
  std::vector<int> all(G.size());
  for (int i = 0; i < G.size(); ++i) all[i] = i;
  return subgroups_of_set(G, all);
}

std::vector<Subgroup> all_subgroups_in(const Subgroup& H) {
  return subgroups_of_set(*H.ambient, H.elems);
}

std::vector<Subgroup> normal_subgroups(const Group& G) {
  // conjugacy classes of elements
  std::vector<int> class_rep;
  std::vector<bool> covered(G.size(), false);
  for (int x = 0; x < G.size(); ++x) {
    if (covered[x]) continue;
    class_rep.push_back(x);
    std::deque<int> queue{x};
    covered[x] = true;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (const Perm& g : G.generators()) {
        int c = G.conj(cur, g);
        if (!covered[c]) {
          covered[c] = true;
          queue.push_back(c);
        }
      }
    }
  }
  Subgroup full = full_subgroup(G);
  std::map<std::vector<int>, Subgroup> found;
  found.emplace(std::vector<int>{G.identity_id()}, trivial_subgroup(G));
  for (int rep : class_rep) {
    if (rep == G.identity_id()) continue;
    Subgroup N = normal_closure(full, {rep});
    found.emplace(N.elems, std::move(N));
  }
  // close under joins
  for (;;) {
    std::vector<Subgroup> fresh;
    for (auto it1 = found.begin(); it1 != found.end(); ++it1)
      for (auto it2 = std::next(it1); it2 != found.end(); ++it2) {
        std::vector<int> seeds = it1->first;
        seeds.insert(seeds.end(), it2->first.begin(), it2->first.end());
        std::vector<int> join = closure_ids(G, seeds);
        if (!found.count(join)) fresh.push_back(subgroup_from_ids(G, join));
      }
    if (fresh.empty()) break;
    for (Subgroup& N : fresh) found.emplace(N.elems, std::move(N));
  }
  std::vector<Subgroup> result;
  for (auto& [elems, N] : found) result.push_back(std::move(N));
  return result;
}

std::vector<Subgroup> conjugate_orbit(const Group& G, const Subgroup& H) {
  check_ambient(G, H);
  std::map<std::vector<int>, bool> seen;
  std::vector<Subgroup> orbit{H};
  seen.emplace(H.elems, true);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const Perm& g : G.generators()) {
      std::vector<int> next = conj_ids(G, orbit[cur].elems, g);
      if (seen.emplace(next, true).second) {
        orbit.push_back(subgroup_from_ids(G, next));
        queue.push_back(static_cast<int>(orbit.size()) - 1);
      }
    }
  }
  return orbit;
}

}  // namespace psc
