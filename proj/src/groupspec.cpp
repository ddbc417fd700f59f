#include "psc/groupspec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "psc/errors.hpp"

namespace psc {

const GroupSpec* SpecFile::find(const std::string& name) const {
  for (const GroupSpec& s : specs)
    if (s.name == name) return &s;
  return nullptr;
}

bool SpecFile::is_stretch(const std::string& name) const {
  return std::find(stretch.begin(), stretch.end(), name) != stretch.end();
}

const std::string& SpecFile::main_name() const {
  if (specs.empty()) throw InvalidArgumentError("spec file defines no groups");
  return specs.back().name;
}

namespace {

// Split a run of cycle words on whitespace outside parentheses.
std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') --depth;
    cur += c;
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

int resolve_degree(const SpecFile& file, const std::string& name, int line) {
  const GroupSpec* s = file.find(name);
  if (!s) throw ParseError("unknown group '" + name + "'", line);
  switch (s->kind) {
    case GroupSpec::Kind::Explicit:
      return s->degree;
    case GroupSpec::Kind::Direct:
      return resolve_degree(file, s->child_a, line) + resolve_degree(file, s->child_b, line);
    case GroupSpec::Kind::Semidirect:
      throw ParseError("semidirect products cannot be used as product children", line);
  }
  return 0;
}

std::size_t gen_count(const SpecFile& file, const std::string& name, int line) {
  const GroupSpec* s = file.find(name);
  if (!s) throw ParseError("unknown group '" + name + "'", line);
  switch (s->kind) {
    case GroupSpec::Kind::Explicit:
      return s->gen_words.size();
    case GroupSpec::Kind::Direct:
      return gen_count(file, s->child_a, line) + gen_count(file, s->child_b, line);
    case GroupSpec::Kind::Semidirect:
      return gen_count(file, s->child_a, line) + gen_count(file, s->child_b, line);
  }
  return 0;
}

}  // namespace

SpecFile parse_spec_file(std::istream& in, const std::string& format_name) {
  SpecFile file;
  std::string line;
  int lineno = 0;
  bool saw_format = false;
  GroupSpec* open_explicit = nullptr;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;

    if (!saw_format) {
      std::string fmt, ver;
      if (word != "format" || !(ls >> fmt >> ver) || fmt != format_name || ver != "v1")
        throw ParseError("expected 'format " + format_name + " v1' header", lineno);
      saw_format = true;
      continue;
    }

    if (word == "group") {
      GroupSpec spec;
      std::string kw;
      if (!(ls >> spec.name >> kw)) throw ParseError("malformed group line", lineno);
      if (file.find(spec.name)) throw ParseError("duplicate group '" + spec.name + "'", lineno);
      if (kw == "degree") {
        if (!(ls >> spec.degree) || spec.degree < 1)
          throw ParseError("bad degree", lineno);
        spec.kind = GroupSpec::Kind::Explicit;
        file.specs.push_back(std::move(spec));
        open_explicit = &file.specs.back();
      } else if (kw == "product") {
        std::string sub;
        if (!(ls >> sub)) throw ParseError("malformed product line", lineno);
        if (sub == "direct") {
          if (!(ls >> spec.child_a >> spec.child_b))
            throw ParseError("direct product needs two factors", lineno);
          spec.kind = GroupSpec::Kind::Direct;
          file.specs.push_back(spec);
          resolve_degree(file, spec.name, lineno);
          open_explicit = nullptr;
        } else if (sub == "semidirect") {
          std::string actkw;
          if (!(ls >> spec.child_a >> spec.child_b >> actkw) || actkw != "action")
            throw ParseError("semidirect product needs '<normal> <acting> action <words>'", lineno);
          std::string rest;
          std::getline(ls, rest);
          spec.kind = GroupSpec::Kind::Semidirect;
          int ndeg = resolve_degree(file, spec.child_a, lineno);
          std::size_t n_norm = gen_count(file, spec.child_a, lineno);
          std::size_t n_act = gen_count(file, spec.child_b, lineno);
          std::vector<std::string> words = split_words(rest);
          if (words.size() != n_norm * n_act)
            throw ParseError("expected " + std::to_string(n_norm * n_act) +
                                 " action images, got " + std::to_string(words.size()),
                             lineno);
          for (const std::string& w : words) {
            try {
              spec.action_words.push_back(Perm::parse_cycles(w, ndeg).cycle_string());
            } catch (const ParseError& e) {
              throw ParseError(std::string(e.what()), lineno);
            }
          }
          file.specs.push_back(std::move(spec));
          open_explicit = nullptr;
        } else {
          throw ParseError("unknown product kind '" + sub + "'", lineno);
        }
      } else {
        throw ParseError("expected 'degree' or 'product' after group name", lineno);
      }
    } else if (word == "gen") {
      if (!open_explicit)
        throw ParseError("'gen' outside an explicit group definition", lineno);
      std::string rest;
      std::getline(ls, rest);
      try {
        open_explicit->gen_words.push_back(
            Perm::parse_cycles(rest, open_explicit->degree).cycle_string());
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), lineno);
      }
    } else if (word == "stretch") {
      std::string name;
      if (!(ls >> name)) throw ParseError("malformed stretch line", lineno);
      if (!file.find(name)) throw ParseError("unknown group '" + name + "'", lineno);
      file.stretch.push_back(name);
      open_explicit = nullptr;
    } else {
      throw ParseError("unknown directive '" + word + "'", lineno);
    }
  }
  if (!saw_format) throw ParseError("missing 'format " + format_name + " v1' header", 1);
  return file;
}

SpecFile parse_spec_file_path(const std::string& path, const std::string& format_name) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_spec_file(in, format_name);
}

std::string print_spec_file(const SpecFile& file, const std::string& format_name) {
  std::ostringstream out;
  out << "format " << format_name << " v1\n";
  for (const GroupSpec& s : file.specs) {
    switch (s.kind) {
      case GroupSpec::Kind::Explicit:
        out << "group " << s.name << " degree " << s.degree << "\n";
        for (const std::string& w : s.gen_words) out << "gen " << w << "\n";
        break;
      case GroupSpec::Kind::Direct:
        out << "group " << s.name << " product direct " << s.child_a << " " << s.child_b << "\n";
        break;
      case GroupSpec::Kind::Semidirect:
        out << "group " << s.name << " product semidirect " << s.child_a << " " << s.child_b
            << " action";
        for (const std::string& w : s.action_words) out << " " << w;
        out << "\n";
        break;
    }
  }
  for (const std::string& name : file.stretch) out << "stretch " << name << "\n";
  return out.str();
}

Group direct_product(const Group& a, const Group& b, const Config& cfg) {
  int deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<int> img(deg);
    for (int i = 0; i < a.degree(); ++i) img[i] = g(i);
    for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + i;
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : b.generators()) {
    std::vector<int> img(deg);
    for (int i = 0; i < a.degree(); ++i) img[i] = i;
    for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + g(i);
    gens.emplace_back(std::move(img));
  }
  Group result(deg, std::move(gens), cfg);
  if (result.order() != a.order() * b.order())
    throw Error("direct product order mismatch (internal error)");
  return result;
}

Group semidirect_regular(const Group& normal, const Group& acting,
                         const std::vector<std::vector<Perm>>& action_images, const Config& cfg) {
  if (normal.order() > cfg.max_elements)
    throw CapacityError("normal factor of order " + normal.order().str() +
                        " exceeds the materialization bound");
  std::vector<std::pair<int, int>> words;
  std::vector<Perm> elems = naive_closure(normal.degree(), normal.generators(), &words);
  std::unordered_map<Perm, int, PermHash> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);

  if (action_images.size() != acting.generators().size())
    throw InvalidActionError("one image list required per acting generator");

  int deg = static_cast<int>(elems.size());
  std::vector<Perm> gens;
  // right-regular images of the normal generators
  for (const Perm& g : normal.generators()) {
    std::vector<int> img(deg);
    for (int i = 0; i < deg; ++i) img[i] = index.at(elems[i] * g);
    gens.emplace_back(std::move(img));
  }
  // one automorphism permutation per acting generator
  for (std::size_t ai = 0; ai < action_images.size(); ++ai) {
    const std::vector<Perm>& images = action_images[ai];
    if (images.size() != normal.generators().size())
      throw InvalidActionError("one image required per normal generator");
    for (const Perm& im : images)
      if (!normal.contains(im))
        throw InvalidActionError("action image " + im.cycle_string() +
                                 " is not an element of the normal factor");
    // extend to all elements along their BFS words
    std::vector<Perm> alpha(deg, Perm(normal.degree()));
    for (int i = 1; i < deg; ++i) {
      auto [parent, gi] = words[i];
      alpha[i] = alpha[parent] * images[gi];
    }
    // well-definedness: alpha(x * g_j) == alpha(x) * images[j] for all x, j
    for (int i = 0; i < deg; ++i)
      for (std::size_t j = 0; j < normal.generators().size(); ++j) {
        int k = index.at(elems[i] * normal.generators()[j]);
        if (alpha[k] != alpha[i] * images[j])
          throw InvalidActionError("action map is not a homomorphism on the normal factor");
      }
    std::vector<int> img(deg);
    std::vector<bool> hit(deg, false);
    for (int i = 0; i < deg; ++i) {
      auto it = index.find(alpha[i]);
      if (it == index.end() || hit[it->second])
        throw InvalidActionError("action map is not a bijection of the normal factor");
      hit[it->second] = true;
      img[i] = it->second;
    }
    gens.emplace_back(std::move(img));
  }
  return Group(deg, std::move(gens), cfg);
}

Group build_group(const SpecFile& file, const std::string& name, const Config& cfg) {
  const GroupSpec* s = file.find(name);
  if (!s) throw InvalidArgumentError("no group named '" + name + "' in spec file");
  switch (s->kind) {
    case GroupSpec::Kind::Explicit: {
      std::vector<Perm> gens;
      for (const std::string& w : s->gen_words) gens.push_back(Perm::parse_cycles(w, s->degree));
      return Group(s->degree, std::move(gens), cfg);
    }
    case GroupSpec::Kind::Direct: {
      Group a = build_group(file, s->child_a, cfg);
      Group b = build_group(file, s->child_b, cfg);
      return direct_product(a, b, cfg);
    }
    case GroupSpec::Kind::Semidirect: {
      Group n = build_group(file, s->child_a, cfg);
      Group a = build_group(file, s->child_b, cfg);
      std::size_t n_norm = n.generators().size();
      std::vector<std::vector<Perm>> images;
      for (std::size_t i = 0; i < a.generators().size(); ++i) {
        std::vector<Perm> row;
        for (std::size_t j = 0; j < n_norm; ++j)
          row.push_back(Perm::parse_cycles(s->action_words[i * n_norm + j], n.degree()));
        images.push_back(std::move(row));
      }
      return semidirect_regular(n, a, images, cfg);
    }
  }
  throw Error("unreachable");
}

}  // namespace psc
