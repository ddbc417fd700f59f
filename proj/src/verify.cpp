#include "psc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "psc/errors.hpp"
#include "psc/groupops.hpp"

namespace psc {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> intersect_ids(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Verdict run_timed(const std::string& claim, long p, const std::function<void(Verdict&)>& body) {
  Verdict v;
  v.claim = claim;
  v.prime = p;
  auto t0 = Clock::now();
  try {
    body(v);
  } catch (const CapacityError& e) {
    v.status = VerdictStatus::SkippedCapacity;
    v.data.emplace_back("reason", e.what());
  }
  v.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return v;
}

std::string homology_brief(const HomologyGroups& H) {
  if (H.empty_complex) return "empty";
  std::ostringstream out;
  for (std::size_t d = 0; d < H.ranks.size(); ++d) {
    if (d) out << ",";
    out << H.ranks[d];
    if (!H.torsion[d].empty()) {
      out << "[";
      for (std::size_t i = 0; i < H.torsion[d].size(); ++i) {
        if (i) out << "+";
        out << H.torsion[d][i];
      }
      out << "]";
    }
  }
  return out.str();
}

std::string subgroup_brief(const Subgroup& H) {
  std::ostringstream out;
  out << "order " << H.elems.size() << ":";
  if (H.gens.empty()) out << " ()";
  for (const Perm& g : H.gens) out << " " << g.cycle_string();
  return out.str();
}

}  // namespace

bool Family::contains(const std::vector<int>& elem_ids) const {
  auto cmp = [](const Subgroup& s, const std::vector<int>& ids) {
    if (s.elems.size() != ids.size()) return s.elems.size() < ids.size();
    return s.elems < ids;
  };
  auto it = std::lower_bound(members.begin(), members.end(), elem_ids, cmp);
  return it != members.end() && it->elems == elem_ids;
}

Family family_from_subgroups(const Group& G, std::vector<Subgroup> members, std::string label) {
  Family F;
  F.ambient = &G;
  F.label = std::move(label);
  std::sort(members.begin(), members.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  members.erase(std::unique(members.begin(), members.end(),
                            [](const Subgroup& a, const Subgroup& b) { return a.elems == b.elems; }),
                members.end());
  F.members = std::move(members);
  for (const Subgroup& H : F.members)
    for (const Perm& g : G.generators())
      if (!F.contains(conj_ids(G, H.elems, g)))
        throw InvalidArgumentError("family '" + F.label + "' is not closed under conjugation");
  return F;
}

Family solvable_family(const Group& G) {
  std::vector<Subgroup> members;
  for (Subgroup& H : all_subgroups(G))
    if (is_solvable(H)) members.push_back(std::move(H));
  return family_from_subgroups(G, std::move(members), "SLV");
}

Verdict brown_check(const Group& G, long p) {
  return run_timed("brown", p, [&](Verdict& v) {
    SubgroupPoset X = build_poset(G, p, PosetKind::Sp);
    long long chi = euler_characteristic(order_complex(X));
    BigInt pp = p_part(G.order(), p);
    BigInt residue = ((BigInt(chi) - 1) % pp + pp) % pp;
    v.status = residue == 0 ? VerdictStatus::Verified : VerdictStatus::Refuted;
    v.data.emplace_back("chi", std::to_string(chi));
    v.data.emplace_back("p-part", pp.str());
  });
}

Verdict quillen_check(const Group& G, long p) {
  return run_timed("quillen", p, [&](Verdict& v) {
    Subgroup core = p_core(G, p);
    SubgroupPoset ap = build_poset(G, p, PosetKind::Ap);
    HomologyGroups H = reduced_homology(order_complex(ap));
    bool core_nontrivial = core.elems.size() > 1;
    int rank = poset_height(ap) + 1;
    v.data.emplace_back("op-order", std::to_string(core.elems.size()));
    v.data.emplace_back("homology", homology_brief(H));
    v.data.emplace_back("p-rank", std::to_string(rank));
    if (core_nontrivial) {
      v.status = (!H.empty_complex && H.trivial()) ? VerdictStatus::Verified
                                                   : VerdictStatus::Refuted;
      if (v.status == VerdictStatus::Refuted) v.data.emplace_back("probable-bug", "true");
    } else {
      bool prank3 = rank <= 3;
      v.status = (!H.empty_complex && !H.trivial()) ? VerdictStatus::Verified
                                                    : VerdictStatus::Refuted;
      if (prank3) v.data.emplace_back("prank3-case", "true");
      if (v.status == VerdictStatus::Refuted && prank3)
        v.data.emplace_back("probable-bug", "true");
    }
  });
}

Verdict invariance_check(const Group& G, long p) {
  return run_timed("invariance", p, [&](Verdict& v) {
    SubgroupPoset sp = build_poset(G, p, PosetKind::Sp);
    SubgroupPoset ap = build_poset(G, p, PosetKind::Ap);
    std::vector<std::pair<std::string, SubgroupPoset>> models;
    models.emplace_back("Bp", build_poset(G, p, PosetKind::Bp));
    models.emplace_back("iSp", i_reduction(sp));
    models.emplace_back("iAp", i_reduction(ap));
    models.emplace_back("Ap", std::move(ap));

    HomologyGroups base = reduced_homology(order_complex(sp));
    v.data.emplace_back("homology", homology_brief(base));
    v.status = VerdictStatus::Verified;
    for (const auto& [name, X] : models) {
      HomologyGroups H = reduced_homology(order_complex(X));
      if (!(H == base)) {
        v.status = VerdictStatus::Refuted;
        v.data.emplace_back("disagrees", name);
        v.data.emplace_back("got", homology_brief(H));
        break;
      }
    }
  });
}

Verdict separating_check(const Group& G, const Family& F) {
  return run_timed("separating", 0, [&](Verdict& v) {
    v.data.emplace_back("family", F.label);
    v.data.emplace_back("members", std::to_string(F.members.size()));
    // (a) G itself is not a member
    if (F.contains(full_subgroup(G).elems)) {
      v.status = VerdictStatus::Refuted;
      v.data.emplace_back("clause", "a");
      v.data.emplace_back("witness", "G");
      return;
    }
    // (b) closed under subgroups, tested via maximal subgroups of members
    for (const Subgroup& H : F.members) {
      if (H.elems.size() == 1) continue;
      std::vector<Subgroup> subs = all_subgroups_in(H);
      for (const Subgroup& M : subs) {
        if (M.elems.size() == H.elems.size()) continue;
        bool maximal = true;
        for (const Subgroup& T : subs)
          if (T.elems.size() != H.elems.size() && T.elems.size() > M.elems.size() &&
              T.contains_set(M)) {
            maximal = false;
            break;
          }
        if (maximal && !F.contains(M.elems)) {
          v.status = VerdictStatus::Refuted;
          v.data.emplace_back("clause", "b");
          v.data.emplace_back("witness-H", subgroup_brief(H));
          v.data.emplace_back("witness-M", subgroup_brief(M));
          return;
        }
      }
    }
    // (c) closed under extensions with solvable quotient. With (b) verified it
    // is enough to check one prime-index step at a time: any K >= H with K/H
    // solvable is reached through a subnormal chain of prime-index extensions,
    // and each step lives inside a normalizer. K = <H, x> for x in N_G(H).
    for (const Subgroup& H : F.members) {
      Subgroup N = H.elems.size() == 1 ? full_subgroup(G) : normalizer(G, H);
      for (int x : N.elems) {
        if (std::binary_search(H.elems.begin(), H.elems.end(), x)) continue;
        std::vector<int> seed = H.elems;
        seed.push_back(x);
        std::vector<int> K = closure_ids(G, seed);
        long index = static_cast<long>(K.size() / H.elems.size());
        if (!is_prime(index)) continue;
        if (!F.contains(K)) {
          v.status = VerdictStatus::Refuted;
          v.data.emplace_back("clause", "c");
          v.data.emplace_back("witness-H", subgroup_brief(H));
          v.data.emplace_back("witness-K", subgroup_brief(subgroup_from_ids(G, K)));
          return;
        }
      }
    }
    v.status = VerdictStatus::Verified;
  });
}

Rational os_index(const Group& G, const Family& F, const Subgroup& H) {
  if (H.elems.size() != 1 && !F.contains(H.elems))
    throw InvalidArgumentError("subgroup is not a member of family '" + F.label + "'");
  std::vector<std::vector<int>> above;
  for (const Subgroup& M : F.members)
    if (M.elems.size() > H.elems.size() &&
        std::includes(M.elems.begin(), M.elems.end(), H.elems.begin(), H.elems.end()))
      above.push_back(M.elems);
  SubgroupPoset X = make_poset(G, 0, PosetKind::Custom, std::move(above), {});
  BigInt chi = euler_characteristic(order_complex(X));
  Subgroup N = H.elems.size() == 1 ? full_subgroup(G) : normalizer(G, H);
  BigInt index = BigInt(N.elems.size()) / BigInt(H.elems.size());
  return Rational(1 - chi) / Rational(index);
}

Verdict os_index_check(const Group& G) {
  return run_timed("os-index", 0, [&](Verdict& v) {
    Family F = solvable_family(G);
    Rational i1 = os_index(G, F, trivial_subgroup(G));
    std::ostringstream i1s;
    i1s << i1;
    v.data.emplace_back("i1", i1s.str());

    v.status = VerdictStatus::Verified;
    long long maximal_checked = 0;
    for (const Subgroup& H : F.members) {
      if (H.elems.size() == 1) continue;
      bool maximal = true;
      for (const Subgroup& M : F.members)
        if (M.elems.size() > H.elems.size() &&
            std::includes(M.elems.begin(), M.elems.end(), H.elems.begin(), H.elems.end())) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      ++maximal_checked;
      Subgroup N = normalizer(G, H);
      Rational idx = os_index(G, F, H);
      BigInt nh_index = BigInt(N.elems.size()) / BigInt(H.elems.size());
      if (nh_index % denominator(idx) != 0) {
        v.status = VerdictStatus::Refuted;
        v.data.emplace_back("bad-denominator", subgroup_brief(H));
        return;
      }
      if (N.elems == H.elems && idx != 1) {
        v.status = VerdictStatus::Refuted;
        v.data.emplace_back("self-normalizing-not-1", subgroup_brief(H));
        return;
      }
    }
    v.data.emplace_back("maximal-members", std::to_string(maximal_checked));
  });
}

Verdict normal_stabilizer_search(const Group& G, const SubgroupPoset& X) {
  if (X.action.size() != G.generators().size())
    throw InvalidArgumentError("poset does not carry the full ambient conjugation action");
  return run_timed("normal-stab", X.prime, [&](Verdict& v) {
    SimplicialComplex K = order_complex(X);
    bool acyclic = is_acyclic(K);
    int dim = K.dimension();
    v.data.emplace_back("acyclic", acyclic ? "true" : "false");
    v.data.emplace_back("dim", std::to_string(dim));

    std::vector<std::vector<int>> normalizers(X.size());
    auto normalizer_ids = [&](int i) -> const std::vector<int>& {
      if (normalizers[i].empty()) normalizers[i] = normalizer(G, X.elements[i]).elems;
      return normalizers[i];
    };
    auto is_normal_ids = [&](const std::vector<int>& ids) {
      for (const Perm& g : G.generators())
        if (conj_ids(G, ids, g) != ids) return false;
      return true;
    };

    for (int d = 0; d <= dim; ++d)
      for (const std::vector<int>& chain : K.simplices[d]) {
        std::vector<int> stab = normalizer_ids(chain[0]);
        for (std::size_t t = 1; t < chain.size(); ++t)
          stab = intersect_ids(stab, normalizer_ids(chain[t]));
        if (is_normal_ids(stab)) {
          v.status = VerdictStatus::Verified;
          std::ostringstream c;
          for (std::size_t t = 0; t < chain.size(); ++t) {
            if (t) c << "<";
            c << chain[t];
          }
          v.data.emplace_back("chain", c.str());
          v.data.emplace_back("stabilizer-order", std::to_string(stab.size()));
          return;
        }
      }
    v.status = VerdictStatus::Refuted;
    v.data.emplace_back("exhausted", "true");
    if (acyclic && dim <= 2) v.data.emplace_back("probable-bug", "true");
  });
}

Verdict retract_check(const Group& G, const Subgroup& H, long p) {
  return run_timed("retract", p, [&](Verdict& v) {
    RetractResult r = retract_reduce(G, H, p);
    v.data.emplace_back("hypothesis", r.hypothesis_holds ? "holds" : "fails");
    if (!r.hypothesis_holds) {
      v.status = VerdictStatus::Refuted;
      v.data.emplace_back("violating-E", subgroup_brief(*r.violating));
      return;
    }
    v.data.emplace_back("schedule-length", std::to_string(r.schedule.size()));
    HomologyGroups hg = reduced_homology(order_complex(r.ap_g));
    HomologyGroups hh = reduced_homology(order_complex(*r.reduced));
    v.data.emplace_back("homology", homology_brief(hg));
    if (!(hg == hh)) {
      v.status = VerdictStatus::Refuted;
      v.data.emplace_back("reduced-homology", homology_brief(hh));
      v.data.emplace_back("probable-bug", "true");
      return;
    }
    for (std::size_t i = 0; i < r.schedule.size(); ++i)
      if (!is_acyclic(order_complex(retract_upward_link(r, H, static_cast<int>(i))))) {
        v.status = VerdictStatus::Refuted;
        v.data.emplace_back("bad-link-step", std::to_string(i));
        v.data.emplace_back("probable-bug", "true");
        return;
      }
    v.status = VerdictStatus::Verified;
  });
}

Verdict lemmaprank_check(const Group& G, const Subgroup& N, long p) {
  return run_timed("lemmaprank", p, [&](Verdict& v) {
    RankWitness direct = p_rank(G, p);
    RankWitness formula = lemmaprank_eval(G, N, p);
    v.data.emplace_back("m_p", std::to_string(direct.rank));
    v.data.emplace_back("formula", std::to_string(formula.rank));
    v.data.emplace_back("N-order", std::to_string(N.elems.size()));
    if (formula.best_a)
      v.data.emplace_back("best-A-order", std::to_string(formula.best_a->elems.size()));
    v.status = direct.rank == formula.rank ? VerdictStatus::Verified : VerdictStatus::Refuted;
  });
}

const std::vector<std::string> kCorpusClaims = {
    "brown", "quillen", "invariance", "lemmaprank", "normal-stab", "separating", "os-index"};

namespace {

std::vector<long> prime_divisors(BigInt n) {
  std::vector<long> ps;
  for (long p = 2; BigInt(p) * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n.convert_to<long>());
  return ps;
}

// aggregate check over every normal subgroup
Verdict lemmaprank_corpus_check(const Group& G, long p) {
  return run_timed("lemmaprank", p, [&](Verdict& v) {
    RankWitness direct = p_rank(G, p);
    std::vector<Subgroup> normals = normal_subgroups(G);
    v.data.emplace_back("m_p", std::to_string(direct.rank));
    v.data.emplace_back("normal-subgroups", std::to_string(normals.size()));
    v.status = VerdictStatus::Verified;
    for (const Subgroup& N : normals) {
      RankWitness formula = lemmaprank_eval(G, N, p);
      if (formula.rank != direct.rank) {
        v.status = VerdictStatus::Refuted;
        v.data.emplace_back("witness-N", subgroup_brief(N));
        v.data.emplace_back("formula", std::to_string(formula.rank));
        return;
      }
    }
  });
}

// run on S_p when it is at most 2-dimensional, else on A_p
std::vector<Verdict> normal_stab_corpus_check(const Group& G, long p) {
  std::vector<Verdict> out;
  if (p_core(G, p).elems.size() == 1) return out;
  SubgroupPoset sp = build_poset(G, p, PosetKind::Sp);
  if (poset_height(sp) <= 2) {
    out.push_back(normal_stabilizer_search(G, sp));
    return out;
  }
  SubgroupPoset ap = build_poset(G, p, PosetKind::Ap);
  if (poset_height(ap) <= 2) out.push_back(normal_stabilizer_search(G, ap));
  return out;
}

std::vector<Verdict> run_group(const SpecFile& corpus, const std::string& name,
                               const CorpusOptions& opt, const std::set<std::string>& claims) {
  std::vector<Verdict> out;
  auto add = [&](Verdict v) {
    v.group_name = name;
    out.push_back(std::move(v));
  };
  try {
    Group G = build_group(corpus, name, opt.config);
    std::vector<long> primes = prime_divisors(G.order());
    bool solvable = is_solvable(full_subgroup(G));
    for (long p : primes) {
      if (claims.count("brown")) add(brown_check(G, p));
      if (claims.count("quillen")) add(quillen_check(G, p));
      if (claims.count("invariance")) add(invariance_check(G, p));
      if (claims.count("lemmaprank")) add(lemmaprank_corpus_check(G, p));
      if (claims.count("normal-stab"))
        for (Verdict& v : normal_stab_corpus_check(G, p)) add(std::move(v));
    }
    if (!solvable) {
      if (claims.count("separating"))
        add(run_timed("separating", 0, [&](Verdict& v) {
          Verdict inner = separating_check(G, solvable_family(G));
          v.status = inner.status;
          v.data = inner.data;
        }));
      if (claims.count("os-index")) add(os_index_check(G));
    }
  } catch (const CapacityError& e) {
    Verdict v;
    v.claim = "instance";
    v.group_name = name;
    v.status = VerdictStatus::SkippedCapacity;
    v.data.emplace_back("reason", e.what());
    out.push_back(std::move(v));
  } catch (const std::exception& e) {
    Verdict v;
    v.claim = "instance";
    v.group_name = name;
    v.status = VerdictStatus::Refuted;
    v.data.emplace_back("error", e.what());
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Report corpus_run(const SpecFile& corpus, const CorpusOptions& options) {
  std::set<std::string> claims = options.claims;
  if (claims.empty() || claims.count("all")) {
    claims.clear();
    claims.insert(kCorpusClaims.begin(), kCorpusClaims.end());
  }
  for (const std::string& c : claims)
    if (std::find(kCorpusClaims.begin(), kCorpusClaims.end(), c) == kCorpusClaims.end())
      throw InvalidArgumentError("unknown claim '" + c + "'");

  std::vector<std::string> names;
  for (const GroupSpec& s : corpus.specs)
    if (options.stretch || !corpus.is_stretch(s.name)) names.push_back(s.name);

  Report report;
  {
    std::string joined;
    for (const std::string& c : claims) joined += (joined.empty() ? "" : ",") + c;
    report.config.emplace_back("claims", joined);
    report.config.emplace_back("jobs", std::to_string(options.jobs));
    report.config.emplace_back("stretch", options.stretch ? "true" : "false");
    report.config.emplace_back("max-elements", std::to_string(options.config.max_elements));
    report.config.emplace_back("max-sylow-order",
                               std::to_string(options.config.max_sylow_order));
    report.config.emplace_back("max-subgroup-enum",
                               std::to_string(options.config.max_subgroup_enum));
    report.config.emplace_back("groups", std::to_string(names.size()));
  }

  std::vector<std::vector<Verdict>> results(names.size());
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < names.size(); ++i)
      results[i] = run_group(corpus, names[i], options, claims);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= names.size()) return;
          results[i] = run_group(corpus, names[i], options, claims);
        }
      });
    for (std::thread& t : pool) t.join();
  }

  for (std::vector<Verdict>& vs : results)
    for (Verdict& v : vs) {
      switch (v.status) {
        case VerdictStatus::Verified: ++report.verified; break;
        case VerdictStatus::Refuted: ++report.refuted; break;
        case VerdictStatus::SkippedCapacity: ++report.skipped; break;
      }
      report.verdicts.push_back(std::move(v));
    }
  return report;
}

std::string verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return "verified";
    case VerdictStatus::Refuted: return "refuted";
    case VerdictStatus::SkippedCapacity: return "skipped-capacity";
  }
  return "?";
}

std::string print_report(const Report& report) {
  std::ostringstream out;
  out << "format report v1\n";
  out << "config";
  for (const auto& [k, v] : report.config) out << " " << k << "=" << v;
  out << "\n";
  for (const Verdict& v : report.verdicts) {
    out << "verdict " << v.claim << " " << v.group_name << " p=";
    if (v.prime == 0)
      out << "-";
    else
      out << v.prime;
    out << " status=" << verdict_status_name(v.status) << " data={";
    for (std::size_t i = 0; i < v.data.size(); ++i) {
      if (i) out << ";";
      out << v.data[i].first << "=" << v.data[i].second;
    }
    out << "} ms=" << v.ms << "\n";
  }
  out << "summary verified=" << report.verified << " refuted=" << report.refuted
      << " skipped=" << report.skipped << "\n";
  return out.str();
}

std::string print_report_json(const Report& report) {
  nlohmann::json j;
  j["format"] = "report v1";
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [k, v] : report.config) cfg[k] = v;
  j["config"] = cfg;
  j["verdicts"] = nlohmann::json::array();
  for (const Verdict& v : report.verdicts) {
    nlohmann::json jv;
    jv["claim"] = v.claim;
    jv["group"] = v.group_name;
    jv["p"] = v.prime;
    jv["status"] = verdict_status_name(v.status);
    nlohmann::json data = nlohmann::json::object();
    for (const auto& [k, val] : v.data) data[k] = val;
    jv["data"] = data;
    jv["ms"] = v.ms;
    j["verdicts"].push_back(jv);
  }
  j["summary"] = {{"verified", report.verified},
                  {"refuted", report.refuted},
                  {"skipped", report.skipped}};
  return j.dump(2) + "\n";
}

}  // namespace psc
