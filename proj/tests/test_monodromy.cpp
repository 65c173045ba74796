#include <permblocks/monodromy.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace permblocks;

namespace {

MonodromyData figure_data() {
  IndexSet ground(2);
  Permutation swap = parse_cycles("(1 2)", ground);
  return build_monodromy(ground,
                         {{"x1", ""}, {"x2", ""}, {"x3", ""}, {"x4", ""}},
                         {swap, swap, swap, swap});
}

} // namespace

TEST_CASE("admissibility check") {
  IndexSet ground(3);
  Permutation c = parse_cycles("(1 2 3)", ground);
  auto ok = check_admissible(std::vector<Permutation>{c, c, c}, 3);
  CHECK(ok.admissible);
  CHECK(ok.product.is_identity());

  auto bad = check_admissible(std::vector<Permutation>{c, c}, 3);
  CHECK_FALSE(bad.admissible);
  CHECK(format_cycles(bad.product, ground) == "(1 3 2)");

  CHECK_THROWS_AS(check_admissible(std::vector<Permutation>{}, 3), Error);
  CHECK_THROWS_AS(
      check_admissible(std::vector<Permutation>{c, Permutation::identity(2)}, 3),
      Error);
}

TEST_CASE("build_monodromy validates") {
  IndexSet ground(2);
  Permutation swap = parse_cycles("(1 2)", ground);

  auto data = figure_data();
  CHECK(data.point_count() == 4);
  CHECK(data.ground().size() == 2);
  CHECK(data.gen(0) == swap);

  auto kind_of = [&](auto &&builder) {
    try {
      builder();
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };

  CHECK(kind_of([&] {
          build_monodromy(ground, {{"x", ""}, {"x", ""}}, {swap, swap});
        }) == ErrorKind::SchemaError);
  CHECK(kind_of([&] { build_monodromy(ground, {{"", ""}}, {swap}); }) ==
        ErrorKind::SchemaError);
  CHECK(kind_of([&] { build_monodromy(ground, {{"x", ""}}, {swap}); }) ==
        ErrorKind::NotAdmissible);
  CHECK(kind_of([&] { build_monodromy(ground, {}, {}); }) == ErrorKind::EmptyData);
  CHECK(kind_of([&] { build_monodromy(IndexSet(0), {}, {}); }) == ErrorKind::EmptyData);
  CHECK(kind_of([&] {
          build_monodromy(ground, {{"x", ""}, {"y", ""}}, {swap});
        }) == ErrorKind::GroundMismatch);
  CHECK(kind_of([&] {
          build_monodromy(ground, {{"x", ""}}, {Permutation::identity(3)});
        }) == ErrorKind::GroundMismatch);
}

TEST_CASE("point orbits and marked defaults") {
  IndexSet ground(4);
  Permutation g1 = parse_cycles("(1 2)(3 4)", ground);
  auto data = build_monodromy(ground, {{"a", ""}, {"b", ""}}, {g1, g1});

  auto os = data.point_orbits(0);
  REQUIRE(os.size() == 2);
  CHECK(os[0] == std::vector<std::size_t>{0, 1});
  CHECK(os[1] == std::vector<std::size_t>{2, 3});

  CHECK(data.marked_element({0, 0}) == 0);
  CHECK(data.marked_element({0, 2}) == 2);
  CHECK(data.marked_element({1, 0}) == 0);
  CHECK(data.marked().size() == 4);
}

TEST_CASE("marked overrides") {
  IndexSet ground(4);
  Permutation g1 = parse_cycles("(1 2)(3 4)", ground);
  auto data = build_monodromy(ground, {{"a", ""}, {"b", ""}}, {g1, g1},
                              {{{0, 0}, 1}, {{1, 2}, 3}});
  CHECK(data.marked_element({0, 0}) == 1);
  CHECK(data.marked_element({0, 2}) == 2);
  CHECK(data.marked_element({1, 2}) == 3);

  auto kind_of = [&](std::map<OrbitRef, std::size_t> marks) {
    try {
      build_monodromy(ground, {{"a", ""}, {"b", ""}}, {g1, g1}, marks);
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  // orbit named by a non-representative
  CHECK(kind_of({{{0, 1}, 1}}) == ErrorKind::BadMarkedChoice);
  // element outside the orbit
  CHECK(kind_of({{{0, 0}, 2}}) == ErrorKind::BadMarkedChoice);
  // element outside the ground set
  CHECK(kind_of({{{0, 0}, 9}}) == ErrorKind::BadMarkedChoice);
  // point out of range
  CHECK(kind_of({{{5, 0}, 0}}) == ErrorKind::BadMarkedChoice);
}

TEST_CASE("rebase conjugates generators") {
  IndexSet ground(3);
  Permutation c = parse_cycles("(1 2 3)", ground);
  auto data = build_monodromy(ground, {{"a", ""}, {"b", ""}, {"c", ""}}, {c, c, c});

  // sigma = g_0, so s = c and every generator becomes c^-1 c c = c.
  auto same = rebase(data, GroupWord{{{0, 1}}});
  CHECK(same.gens() == data.gens());

  IndexSet g4(4);
  Permutation a = parse_cycles("(1 2)", g4);
  Permutation b = parse_cycles("(3 4)", g4);
  auto mixed = build_monodromy(g4, {{"p", ""}, {"q", ""}, {"r", ""}, {"s", ""}},
                               {a, b, a, b});
  auto moved = rebase(mixed, GroupWord{{{0, 1}, {1, 1}}});
  // s = (1 2)(3 4) commutes with both generators here, so nothing changes.
  CHECK(moved.gens() == mixed.gens());
  CHECK(moved.points() == mixed.points());

  // A case where conjugation genuinely moves elements.
  Permutation t = parse_cycles("(1 2 3 4)", g4);
  Permutation u = parse_cycles("(1 2)", g4);
  auto data2 = build_monodromy(g4, {{"p", ""}, {"q", ""}, {"r", ""}},
                               {t, u, compose(t, u).inverse()});
  auto shifted = rebase(data2, GroupWord{{{0, 1}}});
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(shifted.gen(j) ==
          compose(t.inverse(), compose(data2.gen(j), t)));
  auto check = check_admissible(shifted.gens(), 4);
  CHECK(check.admissible);
}

TEST_CASE("rebase on random data stays admissible") {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 300; ++trial) {
    auto data = oracles::random_admissible(rng, 6, 5);
    GroupWord word;
    for (std::size_t i = 0, len = oracles::pick(rng, 0, 3); i < len; ++i)
      word.letters.push_back(
          {oracles::pick(rng, 0, data.point_count() - 1),
           static_cast<std::int64_t>(oracles::pick(rng, 1, 3)) *
               (oracles::pick(rng, 0, 1) ? 1 : -1)});
    auto moved = rebase(data, word);
    CHECK(check_admissible(moved.gens(), data.ground().size()).admissible);
    CHECK(moved.points() == data.points());
  }
}
