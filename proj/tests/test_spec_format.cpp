#include <sstream>

#include "doctest.h"

#include "psc/errors.hpp"
#include "psc/groupspec.hpp"

using namespace psc;

namespace {

SpecFile parse(const std::string& text, const std::string& fmt = "group") {
  std::istringstream in(text);
  return parse_spec_file(in, fmt);
}

}  // namespace

TEST_CASE("explicit group round trip") {
  std::string canonical =
      "format group v1\n"
      "group d8 degree 4\n"
      "gen (1 2 3 4)\n"
      "gen (2 4)\n";
  SpecFile f = parse(canonical);
  CHECK(f.specs.size() == 1);
  CHECK(f.main_name() == "d8");
  CHECK(print_spec_file(f) == canonical);
  CHECK(build_group(f, "d8").order() == 8);
}

TEST_CASE("comments, blank lines, non-canonical input") {
  SpecFile f = parse(
      "format group v1\n"
      "# dihedral of order 8\n"
      "\n"
      "group d8 degree 4   # on a square\n"
      "gen (2 3 4 1)\n"
      "gen (4 2)\n");
  CHECK(f.specs[0].gen_words[0] == "(1 2 3 4)");
  CHECK(f.specs[0].gen_words[1] == "(2 4)");
}

TEST_CASE("direct product") {
  SpecFile f = parse(
      "format group v1\n"
      "group c3 degree 3\n"
      "gen (1 2 3)\n"
      "group s3 degree 3\n"
      "gen (1 2 3)\n"
      "gen (1 2)\n"
      "group c3xs3 product direct c3 s3\n");
  Group G = build_group(f, "c3xs3");
  CHECK(G.degree() == 6);
  CHECK(G.order() == 18);
  CHECK(f.main_name() == "c3xs3");
}

TEST_CASE("semidirect product on the regular domain") {
  // C7 x| C3 with the automorphism x -> x^2 (2^3 = 1 mod 7)
  SpecFile f = parse(
      "format group v1\n"
      "group c7 degree 7\n"
      "gen (1 2 3 4 5 6 7)\n"
      "group c3 degree 3\n"
      "gen (1 2 3)\n"
      "group frob21 product semidirect c7 c3 action (1 3 5 7 2 4 6)\n");
  Group G = build_group(f, "frob21");
  CHECK(G.degree() == 7);
  CHECK(G.order() == 21);
  SpecFile g = parse(print_spec_file(f));
  CHECK(print_spec_file(g) == print_spec_file(f));
}

TEST_CASE("semidirect reports the true generated order") {
  // the acting factor has order 2 but the action has order 3; the generated
  // group is still C7 x| C3
  SpecFile f = parse(
      "format group v1\n"
      "group c7 degree 7\n"
      "gen (1 2 3 4 5 6 7)\n"
      "group c2 degree 2\n"
      "gen (1 2)\n"
      "group g product semidirect c7 c2 action (1 3 5 7 2 4 6)\n");
  CHECK(build_group(f, "g").order() == 21);
}

TEST_CASE("invalid actions are rejected") {
  SpecFile f = parse(
      "format group v1\n"
      "group c7 degree 7\n"
      "gen (1 2 3 4 5 6 7)\n"
      "group v4 degree 4\n"
      "gen (1 2)(3 4)\n"
      "gen (1 3)(2 4)\n"
      "group c2 degree 2\n"
      "gen (1 2)\n"
      "group bad1 product semidirect c7 c2 action ()\n"
      "group bad2 product semidirect v4 c2 action (1 2)(3 4) (1 2)(3 4)\n");
  // generator maps to the identity: not a bijection
  CHECK_THROWS_AS(build_group(f, "bad1"), InvalidActionError);
  // both generators map to the same element: not a bijection
  CHECK_THROWS_AS(build_group(f, "bad2"), InvalidActionError);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse("group x degree 3\n"), ParseError);
  CHECK_THROWS_AS(parse("format group v2\n"), ParseError);
  CHECK_THROWS_AS(parse("format group v1\ngen (1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse("format group v1\ngroup x degree 0\n"), ParseError);
  CHECK_THROWS_AS(parse("format group v1\ngroup x degree 3\ngen (1 4)\n"), ParseError);
  CHECK_THROWS_AS(parse("format group v1\ngroup x product direct a b\n"), ParseError);
  CHECK_THROWS_AS(parse("format group v1\ngroup x degree 3\ngroup x degree 3\n"), ParseError);
  CHECK_THROWS_AS(parse("format group v1\nstretch nope\n"), ParseError);
  try {
    parse("format group v1\ngroup x degree 3\ngen (1 4)\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("action image count is validated") {
  CHECK_THROWS_AS(parse("format group v1\n"
                        "group v4 degree 4\n"
                        "gen (1 2)(3 4)\n"
                        "gen (1 3)(2 4)\n"
                        "group c2 degree 2\n"
                        "gen (1 2)\n"
                        "group g product semidirect v4 c2 action (1 2)(3 4)\n"),
                  ParseError);
}

TEST_CASE("stretch entries and corpus format name") {
  SpecFile f = parse(
      "format corpus v1\n"
      "group c2 degree 2\n"
      "gen (1 2)\n"
      "group c3 degree 3\n"
      "gen (1 2 3)\n"
      "stretch c3\n",
      "corpus");
  CHECK(f.is_stretch("c3"));
  CHECK(!f.is_stretch("c2"));
  CHECK_THROWS_AS(parse("format corpus v1\n", "group"), ParseError);
}
