#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psc/poset.hpp"

namespace psc {

// A finite abstract simplicial complex on vertices 0..vertex_count-1.
// simplices[d] lists the d-simplices as strictly increasing vertex tuples,
// sorted lexicographically; the lists are closed under taking faces.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<std::vector<int>>> simplices;

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  bool empty() const { return simplices.empty(); }
  std::vector<long long> f_vector() const;
};

// Closure of the given simplices under faces. Vertex count is taken from the
// largest vertex mentioned unless a larger count is passed explicitly.
SimplicialComplex complex_from_simplices(std::vector<std::vector<int>> simplices,
                                         int vertex_count = 0);

// K(X): vertices are poset elements, d-simplices are chains of d+1 elements.
SimplicialComplex order_complex(const SubgroupPoset& X);

// Alternating sum of the f-vector; 0 for the empty complex.
long long euler_characteristic(const SimplicialComplex& C);

// Text export/import, `format complex v1`, one `s <v0> <v1> ...` line per
// simplex.
std::string print_complex(const SimplicialComplex& C);
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex_path(const std::string& path);

}  // namespace psc
