#include <doctest.h>

#include "hyperorder/errors.hpp"
#include "hyperorder/instances.hpp"
#include "hyperorder/text_format.hpp"

using namespace hyperorder;

TEST_CASE("family format parses comments, blanks and CRLF") {
  const auto f = parse_family("# demo\n\nfamily 5 2 3\r\n1 2 3\n  # inline comment line\n5 4\n");
  CHECK(f.n() == 5);
  CHECK(f.c() == 3);
  REQUIRE(f.m() == 2);
  CHECK(f[1] == MemberSet{4, 5});
}

TEST_CASE("family format errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_family(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("family 5 1\n1 2\n") == 1);
  CHECK(line_of("fam 5 1 3\n1 2\n") == 1);
  CHECK(line_of("family 5 2 3\n1 2\n# c\n1 9\n") == 4);
  CHECK(line_of("family 5 1 2\n1 2 3\n") == 2);
  CHECK(line_of("family 5 1 3\n1 1\n") == 2);
  CHECK(line_of("family 5 1 3\n1 x\n") == 2);
  CHECK(line_of("family 5 1 3\n1 2\n3\n") == 3);
  CHECK_THROWS_AS(parse_family("family 5 2 3\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_family(""), ParseError);
}

TEST_CASE("family format round-trips generator output byte for byte") {
  for (const auto& f : {fano(), sts9(12), sts9_minus_point(), gen_random3(40, Seed{3}),
                        gen_uniform_random(30, 25, 4, Seed{9}), gen_disjoint_pairs(9, 4)}) {
    const auto text = format_family(f);
    const auto back = parse_family(text);
    CHECK(back == f);
    CHECK(format_family(back) == text);
  }
}

TEST_CASE("ordering format") {
  const auto o = parse_ordering("# best\n3 1 2\n", 3);
  CHECK(o.indices() == std::vector<std::size_t>{2, 0, 1});
  CHECK(format_ordering(o) == "3 1 2\n");
  CHECK_THROWS_AS(parse_ordering("1 2\n", 3), ParseError);
  CHECK_THROWS_AS(parse_ordering("1 1 2\n", 3), ParseError);
  CHECK_THROWS_AS(parse_ordering("1 2 4\n", 3), ParseError);
  CHECK_THROWS_AS(parse_ordering("1 2 3\n1 2 3\n", 3), ParseError);
  CHECK(parse_ordering("", 0).size() == 0);
}
