#pragma once

#include <string>
#include <vector>

#include "psc/complex.hpp"
#include "psc/snf.hpp"

namespace psc {

// Reduced integral homology, one entry per degree 0..dimension. Degrees above
// the complex dimension are zero and not stored. The empty complex is flagged
// rather than assigned a homology in degree -1.
struct HomologyGroups {
  std::vector<long long> ranks;
  std::vector<std::vector<BigInt>> torsion;  // entries > 1 in divisibility order
  bool empty_complex = false;

  bool operator==(const HomologyGroups& o) const;
  bool trivial() const;  // all ranks zero, no torsion
};

// Boundary matrix of the augmented chain complex: rows index (d-1)-simplices
// (a single augmentation row for d = 0), columns index d-simplices.
IntegerMatrix boundary_matrix(const SimplicialComplex& C, int d);

HomologyGroups reduced_homology(const SimplicialComplex& C);

// Nonempty with vanishing reduced integral homology in all degrees.
bool is_acyclic(const SimplicialComplex& C);

// Report lines `H~<d> rank <r> torsion <t1,t2,...>` under a version header.
std::string print_homology(const HomologyGroups& H);

}  // namespace psc
