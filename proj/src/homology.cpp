#include "psc/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "psc/errors.hpp"

namespace psc {

bool HomologyGroups::operator==(const HomologyGroups& o) const {
  if (empty_complex != o.empty_complex) return false;
  // degrees above the stored dimension are zero
  std::size_t n = std::max(ranks.size(), o.ranks.size());
  for (std::size_t d = 0; d < n; ++d) {
    long long a = d < ranks.size() ? ranks[d] : 0;
    long long b = d < o.ranks.size() ? o.ranks[d] : 0;
    if (a != b) return false;
    static const std::vector<BigInt> none;
    const auto& ta = d < torsion.size() ? torsion[d] : none;
    const auto& tb = d < o.torsion.size() ? o.torsion[d] : none;
    if (ta != tb) return false;
  }
  return true;
}

bool HomologyGroups::trivial() const {
  for (long long r : ranks)
    if (r != 0) return false;
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

namespace {

long long face_index(const SimplicialComplex& C, int d, const std::vector<int>& face) {
  const auto& list = C.simplices[d];
  auto it = std::lower_bound(list.begin(), list.end(), face);
  if (it == list.end() || *it != face) throw Error("complex is not closed under faces");
  return static_cast<long long>(it - list.begin());
}

}  // namespace

IntegerMatrix boundary_matrix(const SimplicialComplex& C, int d) {
  if (d < 0 || d > C.dimension()) throw InvalidArgumentError("boundary degree out of range");
  long long nrows = d == 0 ? 1 : static_cast<long long>(C.simplices[d - 1].size());
  IntegerMatrix M(nrows, static_cast<long long>(C.simplices[d].size()));
  for (long long j = 0; j < M.cols; ++j) {
    const std::vector<int>& s = C.simplices[d][j];
    if (d == 0) {
      M.entries[{0, j}] = 1;  // augmentation
      continue;
    }
    int sign = 1;
    for (std::size_t t = 0; t < s.size(); ++t) {
      std::vector<int> face = s;
      face.erase(face.begin() + static_cast<long>(t));
      M.entries[{face_index(C, d - 1, face), j}] = sign;
      sign = -sign;
    }
  }
  return M;
}

namespace {

// composite of consecutive boundaries vanishes; cheap combinatorial check
void assert_boundary_squared_zero(const SimplicialComplex& C, int d) {
  for (const std::vector<int>& s : C.simplices[d]) {
    std::map<std::vector<int>, long long> acc;
    int sign = 1;
    for (std::size_t t = 0; t < s.size(); ++t) {
      std::vector<int> face = s;
      face.erase(face.begin() + static_cast<long>(t));
      if (d == 1) {
        acc[{}] += sign;  // augmentation of a vertex is 1
      } else {
        int sign2 = 1;
        for (std::size_t u = 0; u < face.size(); ++u) {
          std::vector<int> ff = face;
          ff.erase(ff.begin() + static_cast<long>(u));
          acc[ff] += sign * sign2;
          sign2 = -sign2;
        }
      }
      sign = -sign;
    }
    for (const auto& [_, v] : acc)
      if (v != 0) throw Error("boundary composite is nonzero (internal error)");
  }
}

}  // namespace

HomologyGroups reduced_homology(const SimplicialComplex& C) {
  HomologyGroups H;
  if (C.empty()) {
    H.empty_complex = true;
    return H;
  }
  int dim = C.dimension();
  for (int d = 1; d <= dim; ++d) assert_boundary_squared_zero(C, d);

  std::vector<SmithNormalFormResult> snf(dim + 1);
  for (int d = 0; d <= dim; ++d) snf[d] = smith_normal_form(boundary_matrix(C, d));

  H.ranks.assign(dim + 1, 0);
  H.torsion.assign(dim + 1, {});
  for (int d = 0; d <= dim; ++d) {
    long long n_d = static_cast<long long>(C.simplices[d].size());
    long long rank_up = d < dim ? snf[d + 1].rank : 0;
    H.ranks[d] = n_d - snf[d].rank - rank_up;
    if (H.ranks[d] < 0) throw Error("negative Betti number (internal error)");
    if (d < dim)
      for (const BigInt& v : snf[d + 1].diagonal)
        if (v > 1) H.torsion[d].push_back(v);
  }
  return H;
}

bool is_acyclic(const SimplicialComplex& C) {
  return !C.empty() && reduced_homology(C).trivial();
}

std::string print_homology(const HomologyGroups& H) {
  std::ostringstream out;
  out << "format homology v1\n";
  if (H.empty_complex) {
    out << "empty-complex\n";
    return out.str();
  }
  for (std::size_t d = 0; d < H.ranks.size(); ++d) {
    out << "H~" << d << " rank " << H.ranks[d] << " torsion ";
    if (H.torsion[d].empty()) {
      out << "-";
    } else {
      for (std::size_t i = 0; i < H.torsion[d].size(); ++i) {
        if (i) out << ",";
        out << H.torsion[d][i];
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace psc
