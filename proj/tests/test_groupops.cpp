#include "doctest.h"

#include "psc/errors.hpp"
#include "psc/groupops.hpp"

using namespace psc;

namespace {

Group from_words(int degree, const std::vector<std::string>& words, Config cfg = Config{}) {
  std::vector<Perm> gens;
  for (const std::string& w : words) gens.push_back(Perm::parse_cycles(w, degree));
  return Group(degree, std::move(gens), cfg);
}

Group S4() { return from_words(4, {"(1 2)", "(1 2 3 4)"}); }
Group A5() { return from_words(5, {"(1 2 3 4 5)", "(3 4 5)"}); }
Group D8() { return from_words(4, {"(1 2 3 4)", "(2 4)"}); }
Group Q8() { return from_words(8, {"(1 6 2 3)(4 7 8 5)", "(1 5 2 7)(3 4 6 8)"}); }

}  // namespace

TEST_CASE("primes and p-parts") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK(!is_prime(1));
  CHECK(!is_prime(4));
  CHECK(!is_prime(91));
  CHECK(p_part(360, 2) == 8);
  CHECK(p_part(360, 3) == 9);
  CHECK(p_part(360, 5) == 5);
  CHECK(p_part(360, 7) == 1);
}

TEST_CASE("Sylow subgroups") {
  Group s4 = S4();
  Subgroup P2 = sylow_subgroup(s4, 2);
  CHECK(P2.order == 8);
  CHECK(is_p_group(P2, 2));
  CHECK(conjugate_orbit(s4, P2).size() == 3);
  CHECK(sylow_subgroup(s4, 3).order == 3);
  CHECK(sylow_subgroup(s4, 5).order == 1);

  Group a5 = A5();
  Subgroup P = sylow_subgroup(a5, 2);
  CHECK(P.order == 4);
  CHECK(is_elementary_abelian(P, 2));
  CHECK(conjugate_orbit(a5, P).size() == 5);
  CHECK(conjugate_orbit(a5, sylow_subgroup(a5, 3)).size() == 10);
  CHECK(conjugate_orbit(a5, sylow_subgroup(a5, 5)).size() == 6);
}

TEST_CASE("normalizers and centralizers") {
  Group s4 = S4();
  Subgroup C4 = make_subgroup(s4, {Perm::parse_cycles("(1 2 3 4)", 4)});
  Subgroup N = normalizer(s4, C4);
  CHECK(N.order == 8);
  CHECK(is_normal_in(C4, N));

  Group a5 = A5();
  CHECK(normalizer(a5, sylow_subgroup(a5, 5)).order == 10);

  Subgroup t = make_subgroup(s4, {Perm::parse_cycles("(1 2)", 4)});
  CHECK(centralizer(s4, t).order == 4);
  Group q8 = Q8();
  CHECK(centralizer(q8, full_subgroup(q8)).order == 2);
  Group d8 = D8();
  CHECK(centralizer(d8, full_subgroup(d8)).order == 2);
}

TEST_CASE("p-cores") {
  Group s4 = S4();
  Subgroup O2 = p_core(s4, 2);
  CHECK(O2.order == 4);
  CHECK(is_elementary_abelian(O2, 2));
  CHECK(is_normal_in(O2, full_subgroup(s4)));
  CHECK(p_core(s4, 3).order == 1);
  CHECK(p_core(A5(), 2).order == 1);
  Group d8 = D8();
  CHECK(p_core(d8, 2).order == 8);
}

TEST_CASE("omega1") {
  Group d8 = D8();
  Subgroup C4 = make_subgroup(d8, {Perm::parse_cycles("(1 2 3 4)", 4)});
  bool ab = false;
  CHECK(omega1(C4, 2, &ab).order == 2);
  CHECK(ab);
  CHECK(omega1(full_subgroup(d8), 2, &ab).order == 8);
  CHECK(!ab);
  Group q8 = Q8();
  CHECK(omega1(full_subgroup(q8), 2, &ab).order == 2);
  CHECK(ab);
}

TEST_CASE("derived subgroups and solvability") {
  Group s4 = S4();
  Subgroup D = derived_subgroup(full_subgroup(s4));
  CHECK(D.order == 12);
  Subgroup DD = derived_subgroup(D);
  CHECK(DD.order == 4);
  CHECK(is_solvable(full_subgroup(s4)));
  Group a5 = A5();
  CHECK(derived_subgroup(full_subgroup(a5)).order == 60);
  CHECK(!is_solvable(full_subgroup(a5)));
  CHECK(is_solvable(full_subgroup(Q8())));
  CHECK(is_solvable(trivial_subgroup(a5)));
}

TEST_CASE("normal closure and intersection") {
  Group s4 = S4();
  Subgroup full = full_subgroup(s4);
  int transp = s4.element_id(Perm::parse_cycles("(1 2)", 4));
  CHECK(normal_closure(full, {transp}).order == 24);
  int dbl = s4.element_id(Perm::parse_cycles("(1 2)(3 4)", 4));
  CHECK(normal_closure(full, {dbl}).order == 4);

  Subgroup P2 = sylow_subgroup(s4, 2);
  Subgroup A4sub = make_subgroup(s4, {Perm::parse_cycles("(1 2 3)", 4),
                                      Perm::parse_cycles("(2 3 4)", 4)});
  CHECK(intersect(P2, A4sub).order == 4);
  CHECK(intersect(P2, full).same_set(P2));
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(all_subgroups(from_words(3, {"(1 2)", "(1 2 3)"})).size() == 6);   // S3
  CHECK(all_subgroups(D8()).size() == 10);
  CHECK(all_subgroups(Q8()).size() == 6);
  CHECK(all_subgroups(from_words(4, {"(1 2 3)", "(2 3 4)"})).size() == 10);  // A4
  CHECK(all_subgroups(S4()).size() == 30);
  CHECK(all_subgroups(from_words(7, {"(1 2 3 4)", "(5 6 7)"})).size() == 6);  // C12
  CHECK(all_subgroups(A5()).size() == 59);
}

TEST_CASE("subgroup enumeration respects the capacity bound") {
  Config tight;
  tight.max_subgroup_enum = 10;
  CHECK_THROWS_AS(all_subgroups(from_words(4, {"(1 2)", "(1 2 3 4)"}, tight)), CapacityError);
}

TEST_CASE("normal subgroups") {
  CHECK(normal_subgroups(S4()).size() == 4);
  CHECK(normal_subgroups(A5()).size() == 2);
  CHECK(normal_subgroups(Q8()).size() == 6);
  CHECK(normal_subgroups(D8()).size() == 6);
}

TEST_CASE("set-level variants agree with subgroup-level ones") {
  Group s4 = S4();
  Subgroup full = full_subgroup(s4);
  CHECK(subgroup_from_ids(s4, sylow_in_set(s4, full.elems, 2)).same_set(sylow_subgroup(s4, 2)));
  CHECK(subgroup_from_ids(s4, p_core_in_set(s4, full.elems, 2)).same_set(p_core(s4, 2)));

  Subgroup C4 = make_subgroup(s4, {Perm::parse_cycles("(1 2 3 4)", 4)});
  CHECK(subgroup_from_ids(s4, normalizer_in_set(s4, full.elems, C4)).same_set(normalizer(s4, C4)));
  CHECK(subgroup_from_ids(s4, centralizer_in_set(s4, full.elems, C4.gens))
            .same_set(centralizer(s4, C4)));

  // inside a proper subgroup
  Subgroup A4sub = make_subgroup(s4, {Perm::parse_cycles("(1 2 3)", 4),
                                      Perm::parse_cycles("(2 3 4)", 4)});
  CHECK(sylow_in_set(s4, A4sub.elems, 2).size() == 4);
  CHECK(p_core_in_set(s4, A4sub.elems, 2).size() == 4);
  CHECK(all_subgroups_in(A4sub).size() == 10);
}
