#include "psc/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "psc/errors.hpp"
#include "psc/groupops.hpp"

namespace psc {

std::string kind_name(PosetKind k) {
  switch (k) {
    case PosetKind::Sp: return "Sp";
    case PosetKind::Ap: return "Ap";
    case PosetKind::Bp: return "Bp";
    case PosetKind::ISp: return "iSp";
    case PosetKind::IAp: return "iAp";
    case PosetKind::Fixed: return "fixed";
    case PosetKind::Custom: return "custom";
  }
  return "custom";
}

PosetKind kind_from_name(const std::string& s) {
  if (s == "Sp") return PosetKind::Sp;
  if (s == "Ap") return PosetKind::Ap;
  if (s == "Bp") return PosetKind::Bp;
  if (s == "iSp") return PosetKind::ISp;
  if (s == "iAp") return PosetKind::IAp;
  if (s == "fixed") return PosetKind::Fixed;
  if (s == "custom") return PosetKind::Custom;
  throw InvalidArgumentError("unknown poset kind '" + s + "'");
}

std::vector<int> SubgroupPoset::strictly_above(int i) const {
  std::vector<int> out;
  for (auto j = up_[i].find_first(); j != boost::dynamic_bitset<>::npos;
       j = up_[i].find_next(j))
    out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> SubgroupPoset::strictly_below(int i) const {
  std::vector<int> out;
  for (auto j = down_[i].find_first(); j != boost::dynamic_bitset<>::npos;
       j = down_[i].find_next(j))
    out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> SubgroupPoset::maximal_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_[i].none()) out.push_back(i);
  return out;
}

std::vector<int> SubgroupPoset::minimal_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[i].none()) out.push_back(i);
  return out;
}

int SubgroupPoset::index_of(const std::vector<int>& elem_ids) const {
  auto cmp = [](const Subgroup& s, const std::vector<int>& ids) {
    if (s.elems.size() != ids.size()) return s.elems.size() < ids.size();
    return s.elems < ids;
  };
  auto it = std::lower_bound(elements.begin(), elements.end(), elem_ids, cmp);
  if (it == elements.end() || it->elems != elem_ids) return -1;
  return static_cast<int>(it - elements.begin());
}

std::vector<int> SubgroupPoset::orbit_of(int i) const {
  std::vector<int> orbit{i};
  std::vector<bool> seen(size(), false);
  seen[i] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const std::vector<int>& act : action) {
      int j = act[orbit[k]];
      if (!seen[j]) {
        seen[j] = true;
        orbit.push_back(j);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

SubgroupPoset make_poset(const Group& G, long p, PosetKind kind,
                         std::vector<std::vector<int>> elem_sets, std::vector<Perm> acting_gens) {
  SubgroupPoset X;
  X.ambient = &G;
  X.prime = p;
  X.kind = kind;

  for (std::vector<int>& s : elem_sets) std::sort(s.begin(), s.end());
  std::sort(elem_sets.begin(), elem_sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  elem_sets.erase(std::unique(elem_sets.begin(), elem_sets.end()), elem_sets.end());
  for (const std::vector<int>& s : elem_sets)
    if (s.size() <= 1) throw InvalidArgumentError("poset elements must be nontrivial subgroups");

  int n = static_cast<int>(elem_sets.size());
  X.elements.reserve(n);
  for (std::vector<int>& s : elem_sets) X.elements.push_back(subgroup_from_ids(G, std::move(s)));

  X.up_.assign(n, boost::dynamic_bitset<>(n));
  X.down_.assign(n, boost::dynamic_bitset<>(n));
  for (int j = 0; j < n; ++j) {
    const std::vector<int>& big = X.elements[j].elems;
    for (int i = 0; i < j; ++i) {
      const std::vector<int>& small = X.elements[i].elems;
      if (small.size() >= big.size() || big.size() % small.size() != 0) continue;
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        X.up_[i].set(j);
        X.down_[j].set(i);
      }
    }
  }
  X.cover_up_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (auto j = X.up_[i].find_first(); j != boost::dynamic_bitset<>::npos;
         j = X.up_[i].find_next(j)) {
      if ((X.up_[i] & X.down_[j]).none()) {
        X.covers.emplace_back(i, static_cast<int>(j));
        X.cover_up_[i].push_back(static_cast<int>(j));
      }
    }
  std::sort(X.covers.begin(), X.covers.end());

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(X.elements[i].elems, i);
  X.acting_gens = std::move(acting_gens);
  for (const Perm& g : X.acting_gens) {
    std::vector<int> act(n);
    for (int i = 0; i < n; ++i) {
      auto it = index.find(conj_ids(G, X.elements[i].elems, g));
      if (it == index.end())
        throw InvalidArgumentError("poset element set is not invariant under conjugation by " +
                                   g.cycle_string());
      act[i] = it->second;
    }
    X.action.push_back(std::move(act));
  }
  return X;
}

namespace {

std::vector<int> intersect_ids(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// All nontrivial p-subgroups: subgroups of one Sylow, closed under conjugacy.
std::vector<std::vector<int>> sp_sets(const Group& G, long p) {
  Subgroup S = sylow_subgroup(G, p);
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  for (Subgroup& Q : all_subgroups_in(S)) {
    if (Q.elems.size() <= 1) continue;
    if (known.insert(Q.elems).second) queue.push_back(Q.elems);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::vector<int> cur = queue[k];
    for (const Perm& g : G.generators()) {
      std::vector<int> img = conj_ids(G, cur, g);
      if (known.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {known.begin(), known.end()};
}

// All nontrivial elementary abelian p-subgroups, grown from order-p elements.
std::vector<std::vector<int>> ap_sets(const Group& G, long p) {
  std::vector<int> order_p;
  for (int id = 0; id < G.size(); ++id)
    if (G.element(id).order() == p) order_p.push_back(id);

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  for (int x : order_p) {
    std::vector<int> c = closure_ids(G, {x});
    if (known.insert(c).second) queue.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::vector<int> cur = queue[k];
    for (int x : order_p) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      const Perm& xp = G.element(x);
      bool central = true;
      for (int e : cur)
        if (!xp.commutes_with(G.element(e))) {
          central = false;
          break;
        }
      if (!central) continue;
      std::vector<int> seeds = cur;
      seeds.push_back(x);
      std::vector<int> ext = closure_ids(G, seeds);
      if (known.insert(ext).second) queue.push_back(std::move(ext));
    }
  }
  return {known.begin(), known.end()};
}

}  // namespace

SubgroupPoset build_poset(const Group& G, long p, PosetKind kind) {
  if (!is_prime(p)) throw InvalidArgumentError(std::to_string(p) + " is not prime");
  if (kind != PosetKind::Sp && kind != PosetKind::Ap && kind != PosetKind::Bp)
    throw InvalidArgumentError("build_poset constructs Sp, Ap or Bp only");
  if (G.order() % p != 0) return make_poset(G, p, kind, {}, G.generators());

  BigInt sylow_order = p_part(G.order(), p);
  if (sylow_order > G.config().max_sylow_order)
    throw CapacityError("Sylow " + std::to_string(p) + "-subgroup of order " + sylow_order.str() +
                        " exceeds the subgroup-enumeration bound " +
                        std::to_string(G.config().max_sylow_order));

  if (kind == PosetKind::Ap) return make_poset(G, p, kind, ap_sets(G, p), G.generators());

  SubgroupPoset Sp = make_poset(G, p, PosetKind::Sp, sp_sets(G, p), G.generators());
  if (kind == PosetKind::Sp) return Sp;

  // radical members: Q = O_p(N_G(Q)), decided once per conjugacy class
  std::vector<std::vector<int>> sets;
  std::vector<bool> done(Sp.size(), false);
  for (int i = 0; i < Sp.size(); ++i) {
    if (done[i]) continue;
    const Subgroup& Q = Sp.elements[i];
    Subgroup N = normalizer(G, Q);
    bool radical = p_core_in_set(G, N.elems, p) == Q.elems;
    for (int j : Sp.orbit_of(i)) {
      done[j] = true;
      if (radical) sets.push_back(Sp.elements[j].elems);
    }
  }
  return make_poset(G, p, PosetKind::Bp, std::move(sets), G.generators());
}

SubgroupPoset i_reduction(const SubgroupPoset& X) {
  PosetKind kind = X.kind == PosetKind::Sp   ? PosetKind::ISp
                   : X.kind == PosetKind::Ap ? PosetKind::IAp
                                             : PosetKind::Custom;
  if (X.size() == 0) return make_poset(*X.ambient, X.prime, kind, {}, X.acting_gens);

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  for (int m : X.maximal_indices()) {
    known.insert(X.elements[m].elems);
    queue.push_back(X.elements[m].elems);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::vector<int> cur = queue[k];
    for (std::size_t m = 0; m < queue.size(); ++m) {
      std::vector<int> meet = intersect_ids(cur, queue[m]);
      if (meet.size() <= 1) continue;
      if (known.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  return make_poset(*X.ambient, X.prime, kind, {known.begin(), known.end()}, X.acting_gens);
}

int poset_height(const SubgroupPoset& X) {
  int n = X.size();
  if (n == 0) return -1;
  std::vector<int> longest(n, 1);  // chain cardinality starting at i
  int best = 1;
  for (int i = n - 1; i >= 0; --i) {
    for (int j : X.cover_above(i)) longest[i] = std::max(longest[i], 1 + longest[j]);
    best = std::max(best, longest[i]);
  }
  return best - 1;
}

SubgroupPoset fixed_subposet(const SubgroupPoset& X, const Subgroup& K) {
  if (K.ambient != X.ambient) throw ContainmentError("subgroup is not in the poset's ambient group");
  std::vector<std::vector<int>> sets;
  for (const Subgroup& Q : X.elements) {
    bool fixed = true;
    for (const Perm& g : K.gens)
      if (conj_ids(*X.ambient, Q.elems, g) != Q.elems) {
        fixed = false;
        break;
      }
    if (fixed) sets.push_back(Q.elems);
  }
  return make_poset(*X.ambient, X.prime, PosetKind::Fixed, std::move(sets), K.gens);
}

namespace {

int rank_of_order(std::size_t order, long p) {
  int r = 0;
  while (order > 1) {
    order /= static_cast<std::size_t>(p);
    ++r;
  }
  return r;
}

// m_p of the subgroup with element-ID set `ids`, read off a prebuilt A_p(G).
int rank_in_set(const SubgroupPoset& ap, const std::vector<int>& ids, long p) {
  int best = 0;
  for (const Subgroup& E : ap.elements)
    if (E.elems.size() <= ids.size() &&
        std::includes(ids.begin(), ids.end(), E.elems.begin(), E.elems.end()))
      best = std::max(best, rank_of_order(E.elems.size(), p));
  return best;
}

}  // namespace

RankWitness p_rank(const Group& G, long p) {
  SubgroupPoset ap = build_poset(G, p, PosetKind::Ap);
  RankWitness w;
  if (ap.size() == 0) {
    w.witness = trivial_subgroup(G);
    return w;
  }
  // elements are sorted by order, so the last one is largest
  w.witness = ap.elements.back();
  w.rank = rank_of_order(w.witness.elems.size(), p);
  return w;
}

RankWitness lemmaprank_eval(const Group& G, const Subgroup& N, long p) {
  if (N.ambient != &G) throw ContainmentError("N is not a subgroup of G");
  if (!is_normal_in(N, full_subgroup(G))) throw InvalidArgumentError("N is not normal in G");
  SubgroupPoset ap = build_poset(G, p, PosetKind::Ap);

  RankWitness w;
  // A = 1 contributes m_p(N)
  w.best_a = trivial_subgroup(G);
  w.centralizer_rank = rank_in_set(ap, N.elems, p);
  w.rank = w.centralizer_rank;

  for (const Subgroup& A : ap.elements) {
    if (intersect_ids(A.elems, N.elems).size() != 1) continue;
    std::vector<int> c = centralizer_in_set(G, N.elems, A.gens);
    int val = rank_in_set(ap, c, p) + rank_of_order(A.elems.size(), p);
    if (val > w.rank) {
      w.rank = val;
      w.best_a = A;
      w.centralizer_rank = rank_in_set(ap, c, p);
    }
  }
  // witness: an elementary abelian subgroup of the attained rank
  for (const Subgroup& E : ap.elements)
    if (rank_of_order(E.elems.size(), p) == w.rank) {
      w.witness = E;
      break;
    }
  if (w.rank == 0) w.witness = trivial_subgroup(G);
  return w;
}

RetractResult retract_reduce(const Group& G, const Subgroup& H, long p) {
  if (H.ambient != &G) throw ContainmentError("H is not a subgroup of G");
  RetractResult r;
  r.ap_g = build_poset(G, p, PosetKind::Ap);

  for (int i = 0; i < r.ap_g.size(); ++i) {
    const Subgroup& E = r.ap_g.elements[i];
    if (intersect_ids(E.elems, H.elems).size() != 1) continue;
    r.schedule.push_back(i);
  }
  r.hypothesis_holds = true;
  for (int i : r.schedule) {
    const Subgroup& E = r.ap_g.elements[i];
    std::vector<int> c = centralizer_in_set(G, H.elems, E.gens);
    if (p_core_in_set(G, c, p).size() <= 1) {
      r.hypothesis_holds = false;
      r.violating = E;
      return r;
    }
  }
  std::vector<std::vector<int>> sets;
  for (const Subgroup& E : r.ap_g.elements)
    if (std::includes(H.elems.begin(), H.elems.end(), E.elems.begin(), E.elems.end()))
      sets.push_back(E.elems);
  r.reduced = make_poset(G, p, PosetKind::Ap, std::move(sets), H.gens);
  return r;
}

SubgroupPoset retract_upward_link(const RetractResult& r, const Subgroup& H, int step) {
  if (step < 0 || step >= static_cast<int>(r.schedule.size()))
    throw InvalidArgumentError("collapse step out of range");
  int idx = r.schedule[step];
  std::vector<std::vector<int>> sets;
  for (int j : r.ap_g.strictly_above(idx)) {
    const Subgroup& A = r.ap_g.elements[j];
    if (intersect_ids(A.elems, H.elems).size() > 1) sets.push_back(A.elems);
  }
  return make_poset(*r.ap_g.ambient, r.ap_g.prime, PosetKind::Custom, std::move(sets), {});
}

std::string print_poset(const SubgroupPoset& X) {
  std::ostringstream out;
  out << "format poset v1\n";
  for (int i = 0; i < X.size(); ++i) {
    out << "el " << i << " order " << X.elements[i].elems.size() << " gens";
    for (const Perm& g : X.elements[i].gens) out << " " << g.cycle_string();
    out << "\n";
  }
  for (auto [i, j] : X.covers) out << "cov " << i << " " << j << "\n";
  for (std::size_t g = 0; g < X.action.size(); ++g) {
    out << "act " << g;
    for (int img : X.action[g]) out << " " << img;
    out << "\n";
  }
  return out.str();
}

}  // namespace psc
