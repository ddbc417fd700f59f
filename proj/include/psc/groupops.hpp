#pragma once

#include <vector>

#include "psc/group.hpp"

namespace psc {

bool is_prime(long p);
BigInt p_part(const BigInt& n, long p);

// Largest p-subgroup: grown by repeatedly passing to the normalizer and
// extending by a p-element there. Returns the trivial subgroup when p does
// not divide |G|.
Subgroup sylow_subgroup(const Group& G, long p);

// N_G(H), by orbit-stabilizer on the conjugation action.
Subgroup normalizer(const Group& G, const Subgroup& H);

// C_G(H); it suffices to centralize the generators of H.
Subgroup centralizer(const Group& G, const Subgroup& H);

// O_p(G) = intersection of all conjugates of one Sylow p-subgroup.
Subgroup p_core(const Group& G, long p);

// Omega_1(P) = <x in P : x^p = 1> for a p-group P. Reports whether the
// result is abelian through `abelian` when non-null.
Subgroup omega1(const Subgroup& P, long p, bool* abelian = nullptr);

// Derived series reaches the trivial group.
bool is_solvable(const Subgroup& H);
bool is_abelian(const Subgroup& H);
bool is_p_group(const Subgroup& H, long p);
bool is_elementary_abelian(const Subgroup& H, long p);
// H is normal in K (H's element set must be a subset of K's).
bool is_normal_in(const Subgroup& H, const Subgroup& K);

Subgroup derived_subgroup(const Subgroup& H);
// Smallest normal subgroup of K containing S.
Subgroup normal_closure(const Subgroup& K, const std::vector<int>& seed_ids);
Subgroup intersect(const Subgroup& A, const Subgroup& B);

// All subgroups of G, including the trivial subgroup and G itself.
// CapacityError when |G| exceeds Config::max_subgroup_enum.
std::vector<Subgroup> all_subgroups(const Group& G);
// All subgroups of the given subgroup (within its element set).
std::vector<Subgroup> all_subgroups_in(const Subgroup& H);
// All normal subgroups of G (joins of normal closures of cyclic subgroups).
std::vector<Subgroup> normal_subgroups(const Group& G);

// Conjugacy classes of subgroups: the orbit of H under conjugation by G.
std::vector<Subgroup> conjugate_orbit(const Group& G, const Subgroup& H);

// ---- set-level variants used when a subgroup must itself be treated as the
// working group (centralizers, radicals inside a subgroup, ...)

// Sylow p-subgroup of the subgroup given by `ids`.
std::vector<int> sylow_in_set(const Group& G, const std::vector<int>& ids, long p);
// O_p of the subgroup given by `ids`.
std::vector<int> p_core_in_set(const Group& G, const std::vector<int>& ids, long p);
// Elements of `ids` commuting with every perm in `targets`.
std::vector<int> centralizer_in_set(const Group& G, const std::vector<int>& ids,
                                    const std::vector<Perm>& targets);
// N_{ids}(H) for H a subgroup with element set `sub`.
std::vector<int> normalizer_in_set(const Group& G, const std::vector<int>& ids,
                                   const Subgroup& sub);

}  // namespace psc
