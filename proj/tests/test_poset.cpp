#include <algorithm>
#include <set>

#include "doctest.h"

#include "psc/errors.hpp"
#include "psc/groupops.hpp"
#include "psc/groupspec.hpp"
#include "psc/homology.hpp"
#include "psc/poset.hpp"

using namespace psc;

namespace {

Group from_words(int degree, const std::vector<std::string>& words, Config cfg = Config{}) {
  std::vector<Perm> gens;
  for (const std::string& w : words) gens.push_back(Perm::parse_cycles(w, degree));
  return Group(degree, std::move(gens), cfg);
}

Group S4() { return from_words(4, {"(1 2)", "(1 2 3 4)"}); }
Group A5() { return from_words(5, {"(1 2 3 4 5)", "(3 4 5)"}); }

Group C3xS3() {
  return from_words(6, {"(1 2 3)", "(4 5 6)", "(4 5)"});
}

std::set<std::vector<int>> element_sets(const SubgroupPoset& X) {
  std::set<std::vector<int>> out;
  for (const Subgroup& s : X.elements) out.insert(s.elems);
  return out;
}

long long count_of_order(const SubgroupPoset& X, std::size_t order) {
  long long n = 0;
  for (const Subgroup& s : X.elements)
    if (s.elems.size() == order) ++n;
  return n;
}

bool subset_of(const SubgroupPoset& A, const SubgroupPoset& B) {
  auto b = element_sets(B);
  for (const Subgroup& s : A.elements)
    if (!b.count(s.elems)) return false;
  return true;
}

}  // namespace

TEST_CASE("S2(A5): elements, covers, height") {
  Group a5 = A5();
  SubgroupPoset X = build_poset(a5, 2, PosetKind::Sp);
  CHECK(X.size() == 20);
  CHECK(count_of_order(X, 2) == 15);
  CHECK(count_of_order(X, 4) == 5);
  CHECK(X.covers.size() == 15);
  CHECK(poset_height(X) == 1);

  SimplicialComplex K = order_complex(X);
  CHECK(K.f_vector() == std::vector<long long>{20, 15});
  CHECK(euler_characteristic(K) == 5);
  HomologyGroups H = reduced_homology(K);
  CHECK(H.ranks == std::vector<long long>{4, 0});
  CHECK(H.torsion[0].empty());
}

TEST_CASE("S2(S4) and B2") {
  Group s4 = S4();
  SubgroupPoset X = build_poset(s4, 2, PosetKind::Sp);
  CHECK(poset_height(X) == 2);

  SubgroupPoset B = build_poset(s4, 2, PosetKind::Bp);
  CHECK(B.size() == 4);
  CHECK(count_of_order(B, 4) == 1);  // the normal V4 only
  CHECK(count_of_order(B, 8) == 3);
  CHECK(B.covers.size() == 3);       // V4 below every D8
  CHECK(B.minimal_indices().size() == 1);

  SubgroupPoset B5 = build_poset(A5(), 2, PosetKind::Bp);
  CHECK(B5.size() == 5);
  CHECK(count_of_order(B5, 4) == 5);
}

TEST_CASE("i-reduction") {
  Group a5 = A5();
  SubgroupPoset iS = i_reduction(build_poset(a5, 2, PosetKind::Sp));
  CHECK(iS.size() == 5);
  CHECK(poset_height(iS) == 0);
  CHECK(iS.kind == PosetKind::ISp);

  Group s4 = S4();
  SubgroupPoset iS4 = i_reduction(build_poset(s4, 2, PosetKind::Sp));
  CHECK(iS4.size() == 4);
  CHECK(poset_height(iS4) == 1);

  // single maximal element: S2 of a cyclic 2-group
  Group c4 = from_words(4, {"(1 2 3 4)"});
  SubgroupPoset iC = i_reduction(build_poset(c4, 2, PosetKind::Sp));
  CHECK(iC.size() == 1);
  CHECK(iC.elements[0].elems.size() == 4);

  // idempotence
  CHECK(element_sets(i_reduction(iS4)) == element_sets(iS4));
  CHECK(element_sets(i_reduction(iS)) == element_sets(iS));
}

TEST_CASE("empty poset when p does not divide the order") {
  SubgroupPoset X = build_poset(A5(), 7, PosetKind::Sp);
  CHECK(X.size() == 0);
  CHECK(poset_height(X) == -1);
  CHECK(order_complex(X).empty());
}

TEST_CASE("containments between the models") {
  for (auto [G, p] : {std::pair<Group, long>{S4(), 2}, {A5(), 2}, {C3xS3(), 3},
                      {from_words(4, {"(1 2 3)", "(2 3 4)"}), 2}}) {
    SubgroupPoset Sp = build_poset(G, p, PosetKind::Sp);
    SubgroupPoset Ap = build_poset(G, p, PosetKind::Ap);
    SubgroupPoset Bp = build_poset(G, p, PosetKind::Bp);
    SubgroupPoset iSp = i_reduction(Sp);
    CHECK(subset_of(Ap, Sp));
    CHECK(subset_of(Bp, iSp));
    CHECK(subset_of(iSp, Sp));
    for (const Subgroup& E : Ap.elements) CHECK(is_elementary_abelian(E, p));
  }
}

TEST_CASE("the stored action is a poset automorphism") {
  Group s4 = S4();
  SubgroupPoset X = build_poset(s4, 2, PosetKind::Sp);
  REQUIRE(X.action.size() == s4.generators().size());
  for (const auto& act : X.action) {
    std::vector<int> sorted = act;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < X.size(); ++i) CHECK(sorted[i] == i);
    for (auto [i, j] : X.covers) CHECK(X.less(act[i], act[j]));
  }
}

TEST_CASE("make_poset rejects non-invariant element sets") {
  Group s4 = S4();
  Subgroup C2 = make_subgroup(s4, {Perm::parse_cycles("(1 2)", 4)});
  CHECK_THROWS_AS(make_poset(s4, 2, PosetKind::Custom, {C2.elems}, s4.generators()),
                  InvalidArgumentError);
  // fine with a trivial acting set
  CHECK(make_poset(s4, 2, PosetKind::Custom, {C2.elems}, {}).size() == 1);
}

TEST_CASE("capacity bound on the Sylow order") {
  Config tight;
  tight.max_sylow_order = 4;
  Group s4 = from_words(4, {"(1 2)", "(1 2 3 4)"}, tight);
  CHECK_THROWS_AS(build_poset(s4, 2, PosetKind::Sp), CapacityError);
  CHECK(build_poset(s4, 3, PosetKind::Sp).size() == 4);
}

TEST_CASE("p-rank") {
  CHECK(p_rank(A5(), 2).rank == 2);
  CHECK(p_rank(S4(), 2).rank == 2);
  CHECK(p_rank(S4(), 3).rank == 1);
  CHECK(p_rank(C3xS3(), 3).rank == 2);
  CHECK(p_rank(A5(), 7).rank == 0);

  Group psl28 = from_words(9, {"(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)",
                               "(1 9)(3 6)(4 7)(5 8)"});
  CHECK(psl28.order() == 504);
  CHECK(p_rank(psl28, 3).rank == 1);

  Group a5 = A5();
  RankWitness w = p_rank(a5, 2);
  CHECK(w.witness.elems.size() == 4);
  CHECK(is_elementary_abelian(w.witness, 2));

  // rank equals order-complex dimension of Ap plus one
  for (auto [G, p] : {std::pair<Group, long>{S4(), 2}, {A5(), 2}, {C3xS3(), 3}})
    CHECK(p_rank(G, p).rank == poset_height(build_poset(G, p, PosetKind::Ap)) + 1);
}

TEST_CASE("rank formula over a normal subgroup") {
  Group g = C3xS3();
  Subgroup N = make_subgroup(g, {Perm::parse_cycles("(4 5 6)", 6),
                                 Perm::parse_cycles("(4 5)", 6)});
  RankWitness w = lemmaprank_eval(g, N, 3);
  CHECK(w.rank == 2);
  REQUIRE(w.best_a);
  CHECK(w.best_a->elems.size() == 3);
  CHECK(w.centralizer_rank == 1);

  // trivial N degenerates to m_p(G)
  CHECK(lemmaprank_eval(g, trivial_subgroup(g), 3).rank == 2);
  CHECK(lemmaprank_eval(g, full_subgroup(g), 3).rank == 2);

  Group s4 = S4();
  Subgroup notnormal = make_subgroup(s4, {Perm::parse_cycles("(1 2)", 4)});
  CHECK_THROWS_AS(lemmaprank_eval(s4, notnormal, 2), InvalidArgumentError);

  // agreement with p_rank across instances and all normal subgroups
  for (auto [G, p] : {std::pair<Group, long>{S4(), 2}, {S4(), 3}, {A5(), 2}, {A5(), 5}}) {
    int expect = p_rank(G, p).rank;
    for (const Subgroup& N2 : normal_subgroups(G))
      CHECK(lemmaprank_eval(G, N2, p).rank == expect);
  }
}

TEST_CASE("retraction onto A_p(H)") {
  Group g = C3xS3();
  Subgroup H = make_subgroup(g, {Perm::parse_cycles("(4 5 6)", 6),
                                 Perm::parse_cycles("(4 5)", 6)});
  RetractResult r = retract_reduce(g, H, 3);
  CHECK(r.hypothesis_holds);
  REQUIRE(r.reduced);
  CHECK(r.reduced->size() == 1);  // A_3(S3) is a single point
  CHECK(!r.schedule.empty());

  // homology agreement, the lemma's conclusion
  CHECK(reduced_homology(order_complex(r.ap_g)) ==
        reduced_homology(order_complex(*r.reduced)));

  // every removed upward link is acyclic
  for (std::size_t i = 0; i < r.schedule.size(); ++i)
    CHECK(is_acyclic(order_complex(retract_upward_link(r, H, static_cast<int>(i)))));
}

TEST_CASE("retraction hypothesis failure carries a witness") {
  Group a5 = A5();
  RetractResult r = retract_reduce(a5, trivial_subgroup(a5), 2);
  CHECK(!r.hypothesis_holds);
  REQUIRE(r.violating);
  CHECK(r.violating->elems.size() == 2);
}

TEST_CASE("retraction with H = G is vacuous") {
  Group s4 = S4();
  RetractResult r = retract_reduce(s4, full_subgroup(s4), 2);
  CHECK(r.hypothesis_holds);
  CHECK(r.schedule.empty());
  REQUIRE(r.reduced);
  CHECK(r.reduced->size() == r.ap_g.size());
}

TEST_CASE("fixed subposets") {
  Group s4 = S4();
  SubgroupPoset X = build_poset(s4, 2, PosetKind::Sp);
  SubgroupPoset F = fixed_subposet(X, full_subgroup(s4));
  CHECK(F.size() == 1);
  CHECK(F.elements[0].elems.size() == 4);

  CHECK(fixed_subposet(X, trivial_subgroup(s4)).size() == X.size());

  Group a5 = A5();
  SubgroupPoset Y = build_poset(a5, 2, PosetKind::Sp);
  CHECK(fixed_subposet(Y, full_subgroup(a5)).size() == 0);
}

TEST_CASE("poset export") {
  Group c4 = from_words(4, {"(1 2 3 4)"});
  SubgroupPoset X = build_poset(c4, 2, PosetKind::Sp);
  std::string text = print_poset(X);
  CHECK(text.rfind("format poset v1\n", 0) == 0);
  CHECK(text.find("el 0 order 2 gens (1 3)(2 4)\n") != std::string::npos);
  CHECK(text.find("cov 0 1\n") != std::string::npos);
  CHECK(text.find("act 0 0 1\n") != std::string::npos);
}
