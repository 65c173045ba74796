#include <permblocks/perm.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace permblocks;

namespace {

bool kind_is(const Error &e, ErrorKind kind) { return e.kind() == kind; }

} // namespace

TEST_CASE("index set basics") {
  IndexSet ground(5);
  CHECK(ground.size() == 5);
  CHECK(ground.display(0) == "1");
  CHECK(ground.display(4) == "5");
  CHECK(ground.find("3") == std::size_t{2});
  CHECK(ground.find("0") == std::nullopt);
  CHECK(ground.find("6") == std::nullopt);
  CHECK(ground.find("x") == std::nullopt);

  IndexSet named(3, {{0, "a"}, {2, "c"}});
  CHECK(named.display(0) == "a");
  CHECK(named.display(1) == "2");
  CHECK(named.display(2) == "c");
  CHECK(named.find("a") == std::size_t{0});
  CHECK(named.find("2") == std::size_t{1});
  CHECK(named.find("c") == std::size_t{2});
}

TEST_CASE("index set name validation") {
  CHECK_THROWS_WITH_AS(IndexSet(2, {{0, "12"}}), doctest::Contains("digits"), Error);
  CHECK_THROWS_AS(IndexSet(2, {{0, "a b"}}), Error);
  CHECK_THROWS_AS(IndexSet(2, {{0, "a("}}), Error);
  CHECK_THROWS_AS(IndexSet(2, {{0, "a,b"}}), Error);
  CHECK_THROWS_AS(IndexSet(2, {{0, ""}}), Error);
  CHECK_THROWS_AS(IndexSet(2, {{0, "a"}, {1, "a"}}), Error);
  CHECK_THROWS_AS(IndexSet(2, {{2, "a"}}), Error);
  try {
    IndexSet(2, {{0, "12"}});
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(kind_is(e, ErrorKind::SchemaError));
  }
}

TEST_CASE("permutation construction and queries") {
  Permutation p(std::vector<std::size_t>{1, 2, 0, 4, 3});
  CHECK(p.degree() == 5);
  CHECK(p(0) == 1);
  CHECK(p(4) == 3);
  CHECK_FALSE(p.is_identity());
  CHECK(Permutation::identity(4).is_identity());
  CHECK(p.inverse()(1) == 0);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(p.order() == 6); // lcm of a 3-cycle and a 2-cycle

  auto cycles = p.cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(cycles[1] == std::vector<std::size_t>{3, 4});

  CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{0, 0}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<std::size_t>{1, 2}), Error);
}

TEST_CASE("compose acts on the left") {
  IndexSet ground(3);
  Permutation a = parse_cycles("(1 2 3)", ground);
  Permutation b = parse_cycles("(1 2)", ground);
  // compose(a, b) applies b first: 1 -> 2 -> 3, so the product is (1 3).
  CHECK(format_cycles(compose(a, b), ground) == "(1 3)");
  CHECK(format_cycles(compose(b, a), ground) == "(2 3)");
}

TEST_CASE("cycle parsing") {
  IndexSet ground(5);
  CHECK(parse_cycles("id", ground).is_identity());
  CHECK(parse_cycles("()", ground).is_identity());
  CHECK(parse_cycles(" ( 1 2 ) ", ground) ==
        Permutation(std::vector<std::size_t>{1, 0, 2, 3, 4}));
  CHECK(parse_cycles("(1,2,3)(4,5)", ground) ==
        Permutation(std::vector<std::size_t>{1, 2, 0, 4, 3}));
  CHECK(parse_cycles("(1 2 3)(4 5)", ground) ==
        Permutation(std::vector<std::size_t>{1, 2, 0, 4, 3}));

  IndexSet named(3, {{0, "a"}, {1, "b"}, {2, "c"}});
  CHECK(format_cycles(parse_cycles("(a c)", named), named) == "(a c)");

  auto kind_of = [&](std::string_view text) {
    try {
      parse_cycles(text, ground);
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of("(1 9)") == ErrorKind::UnknownElement);
  CHECK(kind_of("(1 x)") == ErrorKind::UnknownElement);
  CHECK(kind_of("(1 2)(2 3)") == ErrorKind::RepeatedElement);
  CHECK(kind_of("(1 1)") == ErrorKind::RepeatedElement);
  CHECK(kind_of("(1)") == ErrorKind::MalformedSyntax);
  CHECK(kind_of("(1 2") == ErrorKind::MalformedSyntax);
  CHECK(kind_of("1 2)") == ErrorKind::MalformedSyntax);
  CHECK(kind_of("") == ErrorKind::MalformedSyntax);
  CHECK(kind_of("() (1 2)") == ErrorKind::MalformedSyntax);
  CHECK(kind_of("id id") == ErrorKind::MalformedSyntax);
}

TEST_CASE("format round trip on random permutations") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = oracles::pick(rng, 1, 8);
    IndexSet ground(n);
    Permutation p = oracles::random_perm(rng, n);
    CHECK(parse_cycles(format_cycles(p, ground), ground) == p);
  }
}

TEST_CASE("canonical cycle form") {
  IndexSet ground(6);
  Permutation p = parse_cycles("(5 6)(2 3 1)", ground);
  CHECK(format_cycles(p, ground) == "(1 2 3)(5 6)");
  CHECK(format_cycles(Permutation::identity(6), ground) == "id");
}

TEST_CASE("orbits by union-find match BFS") {
  std::mt19937_64 rng(1002);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = oracles::pick(rng, 1, 9);
    std::vector<Permutation> gens;
    for (std::size_t j = 0, count = oracles::pick(rng, 1, 4); j < count; ++j)
      gens.push_back(oracles::random_perm(rng, n));
    CHECK(orbits(gens, n) == oracles::components_bfs(gens, n));
  }
}

TEST_CASE("orbit structure frozen example") {
  IndexSet ground(6);
  std::vector<Permutation> gens{parse_cycles("(1 2)", ground),
                                parse_cycles("(2 3)(5 6)", ground)};
  auto got = orbits(gens, 6);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(got[1] == std::vector<std::size_t>{3});
  CHECK(got[2] == std::vector<std::size_t>{4, 5});
}

TEST_CASE("word evaluation") {
  IndexSet ground(4);
  std::vector<Permutation> gens{parse_cycles("(1 2 3 4)", ground),
                                parse_cycles("(1 2)", ground)};
  CHECK(eval_word(GroupWord{}, gens).is_identity());
  CHECK(eval_word(GroupWord{{{0, 1}}}, gens) == gens[0]);
  CHECK(eval_word(GroupWord{{{0, -1}}}, gens) == gens[0].inverse());
  CHECK(eval_word(GroupWord{{{0, 4}}}, gens).is_identity());
  CHECK(eval_word(GroupWord{{{0, 1}, {1, 1}}}, gens) == compose(gens[0], gens[1]));

  CHECK_THROWS_AS(eval_word(GroupWord{{{2, 1}}}, gens), Error);
  CHECK_THROWS_AS(eval_word(GroupWord{{{0, 0}}}, gens), Error);
  try {
    eval_word(GroupWord{{{5, 1}}}, gens);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::BadGeneratorIndex);
  }
}
