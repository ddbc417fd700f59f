#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psc/group.hpp"

namespace psc {

// One named group definition: explicit generators, a direct product of two
// earlier definitions, or a semidirect product realized on the regular
// domain of the normal factor.
struct GroupSpec {
  enum class Kind { Explicit, Direct, Semidirect };

  std::string name;
  Kind kind = Kind::Explicit;
  int degree = 0;                            // Explicit
  std::vector<std::string> gen_words;        // Explicit, cycle notation
  std::string child_a, child_b;              // Direct: factors; Semidirect: normal, acting
  // Semidirect: for acting generator i and normal generator j, the image of
  // j under the automorphism assigned to i (an element of the normal child,
  // in its cycle notation). Flattened row-major over (i, j).
  std::vector<std::string> action_words;
};

// A parsed spec or corpus file: ordered definitions plus names gated behind
// the --stretch flag.
struct SpecFile {
  std::vector<GroupSpec> specs;
  std::vector<std::string> stretch;

  const GroupSpec* find(const std::string& name) const;
  bool is_stretch(const std::string& name) const;
  // The subject of a single-group spec file: the last definition.
  const std::string& main_name() const;
};

SpecFile parse_spec_file(std::istream& in, const std::string& format_name = "group");
SpecFile parse_spec_file_path(const std::string& path, const std::string& format_name = "group");
std::string print_spec_file(const SpecFile& file, const std::string& format_name = "group");

// Build the named group, resolving product children recursively.
Group build_group(const SpecFile& file, const std::string& name, const Config& cfg = Config{});

// Direct product on the disjoint union of the factors' domains.
Group direct_product(const Group& a, const Group& b, const Config& cfg = Config{});

// Semidirect product N x| A on the regular domain of N (degree |N|). The
// action assigns to each generator of A an automorphism of N, given by the
// images of N's generators. The action map is validated; the true order of
// the constructed group is whatever the generated permutations yield.
Group semidirect_regular(const Group& normal, const Group& acting,
                         const std::vector<std::vector<Perm>>& action_images,
                         const Config& cfg = Config{});

}  // namespace psc
