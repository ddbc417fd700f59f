#include "psc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "psc/errors.hpp"

namespace psc {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw InvalidArgumentError("image table is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree())
    throw DegreeMismatchError("cannot compose permutations of degrees " +
                              std::to_string(degree()) + " and " + std::to_string(o.degree()));
  std::vector<int> img(images_.size());
  for (int x = 0; x < degree(); ++x) img[x] = o.images_[images_[x]];
  Perm r;
  r.images_ = std::move(img);
  return r;
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (int x = 0; x < degree(); ++x) img[images_[x]] = x;
  Perm r;
  r.images_ = std::move(img);
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  if (degree() != g.degree()) throw DegreeMismatchError("conjugation degree mismatch");
  // (g^-1 a g)(x): images through g of the pairs of a.
  std::vector<int> img(images_.size());
  for (int x = 0; x < degree(); ++x) img[g.images_[x]] = g.images_[images_[x]];
  Perm r;
  r.images_ = std::move(img);
  return r;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Perm::commutes_with(const Perm& o) const {
  if (degree() != o.degree()) throw DegreeMismatchError("commutation degree mismatch");
  for (int x = 0; x < degree(); ++x)
    if (o.images_[images_[x]] != images_[o.images_[x]]) return false;
  return true;
}

BigInt Perm::order() const {
  BigInt result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    int j = i;
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    result = boost::multiprecision::lcm(result, BigInt(len));
  }
  return result;
}

int Perm::order_p_exponent(long p) const {
  int best = 0;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    int j = i;
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    int e = 0;
    while (len % p == 0) {
      len /= p;
      ++e;
    }
    best = std::max(best, e);
  }
  return best;
}

Perm Perm::power(const BigInt& k) const {
  BigInt n = order();
  BigInt e = k % n;
  if (e < 0) e += n;
  Perm result(degree());
  Perm base = *this;
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Perm Perm::parse_cycles(const std::string& s, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '(' in cycle notation: " + s);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected point or ')' in cycle notation: " + s);
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (used[from])
        throw ParseError("point " + std::to_string(from + 1) + " repeated in cycle notation");
      used[from] = true;
      img[from] = to;
    }
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("empty cycle notation (use \"()\" for the identity)");
  // validate bijectivity (overlapping cycles sharing only targets)
  return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    out << '(' << i + 1;
    seen[i] = true;
    int j = images_[i];
    while (j != i) {
      out << ' ' << j + 1;
      seen[j] = true;
      j = images_[j];
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image table
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace psc
