#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "psc/errors.hpp"
#include "psc/groupops.hpp"
#include "psc/verify.hpp"

using namespace psc;

namespace {

struct CapacityFlags {
  long long max_elements = Config{}.max_elements;
  long long max_sylow_order = Config{}.max_sylow_order;
  long long max_subgroup_enum = Config{}.max_subgroup_enum;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-elements", max_elements, "element materialization bound");
    cmd->add_option("--max-sylow-order", max_sylow_order, "Sylow subgroup enumeration bound");
    cmd->add_option("--max-subgroup-enum", max_subgroup_enum, "full subgroup enumeration bound");
  }
  Config config() const {
    Config c;
    c.max_elements = max_elements;
    c.max_sylow_order = max_sylow_order;
    c.max_subgroup_enum = max_subgroup_enum;
    return c;
  }
  std::string echo() const {
    return "max-elements=" + std::to_string(max_elements) +
           " max-sylow-order=" + std::to_string(max_sylow_order) +
           " max-subgroup-enum=" + std::to_string(max_subgroup_enum);
  }
};

void require_prime(long p) {
  if (!is_prime(p)) throw CLI::ValidationError("--prime", std::to_string(p) + " is not prime");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

std::string verdict_line(const Verdict& v) {
  Report r;
  r.verdicts.push_back(v);
  std::string text = print_report(r);
  // keep only the verdict line
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("verdict ", 0) == 0) return line + "\n";
  return text;
}

Subgroup named_subgroup(const SpecFile& file, const Group& G, const std::string& name,
                        const Config& cfg) {
  if (name == "1") return trivial_subgroup(G);
  if (!file.find(name)) throw InvalidArgumentError("no group named '" + name + "' in spec file");
  Group H = build_group(file, name, cfg);
  if (H.degree() != G.degree())
    throw DegreeMismatchError("subgroup '" + name + "' has degree " +
                              std::to_string(H.degree()) + ", the ambient group has degree " +
                              std::to_string(G.degree()));
  return make_subgroup(G, H.generators());
}

int exit_code_for(const Report& r, bool strict) {
  if (r.refuted > 0) return 1;
  if (strict && r.skipped > 0) return 3;
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"p-subgroup posets, order complexes and integral homology of finite "
               "permutation groups"};
  app.require_subcommand(1);

  // group-info
  auto* info = app.add_subcommand("group-info", "order, solvability, O_p, Sylow order, p-rank");
  std::string info_spec;
  long info_prime = 0;
  CapacityFlags info_caps;
  info->add_option("spec", info_spec, "group spec file")->required();
  info->add_option("--prime", info_prime, "restrict to one prime");
  info_caps.attach(info);

  // poset
  auto* poset = app.add_subcommand("poset", "build and export a p-subgroup poset");
  std::string poset_spec, poset_kind = "Sp", poset_out;
  long poset_prime = 0;
  bool poset_complex = false;
  CapacityFlags poset_caps;
  poset->add_option("spec", poset_spec, "group spec file")->required();
  poset->add_option("--prime", poset_prime, "prime p")->required();
  poset->add_option("--kind", poset_kind, "Sp, Ap, Bp, iSp or iAp");
  poset->add_flag("--complex,--export", poset_complex,
                  "export the order complex instead of the poset");
  poset->add_option("--out", poset_out, "output file (default stdout)");
  poset_caps.attach(poset);

  // homology
  auto* homology = app.add_subcommand("homology", "reduced integral homology of a complex file");
  std::string homology_file;
  homology->add_option("complex", homology_file, "complex file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check one claim for one group");
  std::string verify_spec, verify_claim;
  long verify_prime = 0;
  bool verify_strict = false;
  CapacityFlags verify_caps;
  verify->add_option("spec", verify_spec, "group spec file")->required();
  verify->add_option("--prime", verify_prime, "prime p (required for prime-dependent claims)");
  verify
      ->add_option("--claim", verify_claim,
                   "brown | quillen | invariance | separating | os-index | normal-stab | "
                   "retract:<H> | lemmaprank:<N>  (<H>, <N>: group named in the spec file, "
                   "or 1 for the trivial subgroup)")
      ->required();
  verify->add_flag("--strict", verify_strict, "exit 3 on capacity skip");
  verify_caps.attach(verify);

  // corpus
  auto* corpus = app.add_subcommand("corpus", "run the claim harness over a corpus file");
  std::string corpus_file, corpus_out, corpus_json;
  std::vector<std::string> corpus_claims;
  int corpus_jobs = 1;
  bool corpus_stretch = false, corpus_strict = false;
  CapacityFlags corpus_caps;
  corpus->add_option("corpus", corpus_file, "corpus file")->required();
  corpus->add_option("--claims", corpus_claims, "claims to run (default all)")->delimiter(',');
  corpus->add_option("--jobs", corpus_jobs, "parallel group-level jobs");
  corpus->add_flag("--stretch", corpus_stretch, "include stretch entries");
  corpus->add_flag("--strict", corpus_strict, "exit 3 on capacity skips");
  corpus->add_option("--out", corpus_out, "report file (default stdout); a JSON mirror is "
                                          "written alongside as <file>.json");
  corpus->add_option("--json", corpus_json, "write the JSON mirror to this path");
  corpus_caps.attach(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (info->parsed()) {
    SpecFile file = parse_spec_file_path(info_spec);
    Config cfg = info_caps.config();
    Group G = build_group(file, file.main_name(), cfg);
    std::cout << "# config " << info_caps.echo() << "\n";
    std::cout << "group " << file.main_name() << " degree " << G.degree() << " order "
              << G.order() << "\n";
    std::cout << "solvable " << (is_solvable(full_subgroup(G)) ? "yes" : "no") << "\n";
    std::vector<long> primes;
    if (info_prime != 0) {
      require_prime(info_prime);
      primes.push_back(info_prime);
    } else {
      for (long p = 2; BigInt(p) <= G.order(); ++p)
        if (is_prime(p) && G.order() % p == 0) primes.push_back(p);
    }
    for (long p : primes) {
      std::cout << "p=" << p << " sylow-order " << p_part(G.order(), p) << " core-order "
                << p_core(G, p).elems.size() << " p-rank " << p_rank(G, p).rank << "\n";
    }
    return 0;
  }

  if (poset->parsed()) {
    require_prime(poset_prime);
    SpecFile file = parse_spec_file_path(poset_spec);
    Config cfg = poset_caps.config();
    Group G = build_group(file, file.main_name(), cfg);
    PosetKind kind = kind_from_name(poset_kind);
    SubgroupPoset X;
    if (kind == PosetKind::ISp)
      X = i_reduction(build_poset(G, poset_prime, PosetKind::Sp));
    else if (kind == PosetKind::IAp)
      X = i_reduction(build_poset(G, poset_prime, PosetKind::Ap));
    else
      X = build_poset(G, poset_prime, kind);
    std::string header = "# config prime=" + std::to_string(poset_prime) + " kind=" + poset_kind +
                         " " + poset_caps.echo() + "\n";
    write_output(poset_out, header + (poset_complex ? print_complex(order_complex(X))
                                                    : print_poset(X)));
    return 0;
  }

  if (homology->parsed()) {
    std::cout << print_homology(reduced_homology(parse_complex_path(homology_file)));
    return 0;
  }

  if (verify->parsed()) {
    SpecFile file = parse_spec_file_path(verify_spec);
    Config cfg = verify_caps.config();
    Group G = build_group(file, file.main_name(), cfg);
    std::string claim = verify_claim, arg;
    auto colon = claim.find(':');
    if (colon != std::string::npos) {
      arg = claim.substr(colon + 1);
      claim = claim.substr(0, colon);
    }
    bool prime_needed = claim != "separating" && claim != "os-index";
    if (prime_needed) require_prime(verify_prime);

    Verdict v;
    if (claim == "brown")
      v = brown_check(G, verify_prime);
    else if (claim == "quillen")
      v = quillen_check(G, verify_prime);
    else if (claim == "invariance")
      v = invariance_check(G, verify_prime);
    else if (claim == "separating")
      v = separating_check(G, solvable_family(G));
    else if (claim == "os-index")
      v = os_index_check(G);
    else if (claim == "normal-stab")
      v = normal_stabilizer_search(G, build_poset(G, verify_prime, PosetKind::Sp));
    else if (claim == "retract")
      v = retract_check(G, named_subgroup(file, G, arg, cfg), verify_prime);
    else if (claim == "lemmaprank")
      v = lemmaprank_check(G, named_subgroup(file, G, arg, cfg), verify_prime);
    else
      throw CLI::ValidationError("--claim", "unknown claim '" + claim + "'");
    v.group_name = file.main_name();

    std::cout << "# config claim=" << verify_claim << " prime=" << verify_prime << " "
              << verify_caps.echo() << "\n";
    std::cout << verdict_line(v);
    if (v.status == VerdictStatus::Refuted) return 1;
    if (verify_strict && v.status == VerdictStatus::SkippedCapacity) return 3;
    return 0;
  }

  // corpus
  SpecFile file = parse_spec_file_path(corpus_file, "corpus");
  CorpusOptions opt;
  opt.claims.insert(corpus_claims.begin(), corpus_claims.end());
  opt.jobs = corpus_jobs;
  opt.stretch = corpus_stretch;
  opt.config = corpus_caps.config();
  Report report = corpus_run(file, opt);
  std::string text = print_report(report);
  write_output(corpus_out, text);
  if (!corpus_out.empty()) write_output(corpus_out + ".json", print_report_json(report));
  if (!corpus_json.empty()) write_output(corpus_json, print_report_json(report));
  return exit_code_for(report, corpus_strict);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
