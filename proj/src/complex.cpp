#include "psc/complex.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "psc/errors.hpp"

namespace psc {

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  for (const auto& list : simplices) f.push_back(static_cast<long long>(list.size()));
  return f;
}

SimplicialComplex complex_from_simplices(std::vector<std::vector<int>> simplices,
                                         int vertex_count) {
  std::set<std::vector<int>> closed;
  for (std::vector<int>& s : simplices) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InvalidArgumentError("simplex with repeated vertex");
    for (int v : s)
      if (v < 0) throw InvalidArgumentError("negative vertex");
    if (s.empty()) throw InvalidArgumentError("empty simplex");
    closed.insert(s);
  }
  // close under faces
  std::vector<std::vector<int>> queue(closed.begin(), closed.end());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::vector<int> cur = queue[k];
    if (cur.size() == 1) continue;
    for (std::size_t t = 0; t < cur.size(); ++t) {
      std::vector<int> face = cur;
      face.erase(face.begin() + static_cast<long>(t));
      if (closed.insert(face).second) queue.push_back(std::move(face));
    }
  }
  SimplicialComplex C;
  for (const std::vector<int>& s : closed) {
    C.vertex_count = std::max(C.vertex_count, s.back() + 1);
    std::size_t d = s.size() - 1;
    if (C.simplices.size() <= d) C.simplices.resize(d + 1);
    C.simplices[d].push_back(s);
  }
  C.vertex_count = std::max(C.vertex_count, vertex_count);
  for (auto& list : C.simplices) std::sort(list.begin(), list.end());
  return C;
}

namespace {

void extend_chain(const SubgroupPoset& X, std::vector<int>& chain, SimplicialComplex& C) {
  std::size_t d = chain.size() - 1;
  if (C.simplices.size() <= d) C.simplices.resize(d + 1);
  C.simplices[d].push_back(chain);
  const auto& above = X.above_mask(chain.back());
  for (auto j = above.find_first(); j != boost::dynamic_bitset<>::npos; j = above.find_next(j)) {
    chain.push_back(static_cast<int>(j));
    extend_chain(X, chain, C);
    chain.pop_back();
  }
}

}  // namespace

SimplicialComplex order_complex(const SubgroupPoset& X) {
  SimplicialComplex C;
  C.vertex_count = X.size();
  std::vector<int> chain;
  for (int i = 0; i < X.size(); ++i) {
    chain.assign(1, i);
    extend_chain(X, chain, C);
  }
  // chains were emitted in lexicographic order already
  return C;
}

long long euler_characteristic(const SimplicialComplex& C) {
  long long chi = 0;
  int sign = 1;
  for (const auto& list : C.simplices) {
    chi += sign * static_cast<long long>(list.size());
    sign = -sign;
  }
  return chi;
}

std::string print_complex(const SimplicialComplex& C) {
  std::ostringstream out;
  out << "format complex v1\n";
  for (const auto& list : C.simplices)
    for (const std::vector<int>& s : list) {
      out << "s";
      for (int v : s) out << " " << v;
      out << "\n";
    }
  return out.str();
}

SimplicialComplex parse_complex(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool saw_format = false;
  std::vector<std::vector<int>> simplices;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (!saw_format) {
      std::string fmt, ver;
      if (word != "format" || !(ls >> fmt >> ver) || fmt != "complex" || ver != "v1")
        throw ParseError("expected 'format complex v1' header", lineno);
      saw_format = true;
      continue;
    }
    if (word != "s") throw ParseError("unknown directive '" + word + "'", lineno);
    std::vector<int> s;
    int v;
    while (ls >> v) {
      if (v < 0) throw ParseError("negative vertex", lineno);
      s.push_back(v);
    }
    if (!ls.eof()) throw ParseError("bad vertex on simplex line", lineno);
    if (s.empty()) throw ParseError("empty simplex", lineno);
    simplices.push_back(std::move(s));
  }
  if (!saw_format) throw ParseError("missing 'format complex v1' header", 1);
  return complex_from_simplices(std::move(simplices));
}

SimplicialComplex parse_complex_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_complex(in);
}

}  // namespace psc
