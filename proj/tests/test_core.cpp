#include "doctest.h"
#include "oracles.hpp"

#include "twodist/code_io.hpp"
#include "twodist/core.hpp"

#include <random>
#include <set>
#include <sstream>

using namespace twodist;

namespace {

Code random_code(std::mt19937_64& rng, int q, int n, int size) {
  std::set<Word> seen;
  std::uniform_int_distribution<int> sym(0, q - 1);
  while (static_cast<int>(seen.size()) < size) {
    Word w(static_cast<std::size_t>(n));
    for (auto& s : w) s = static_cast<Symbol>(sym(rng));
    seen.insert(w);
  }
  return Code(q, n, {seen.begin(), seen.end()});
}

}  // namespace

TEST_CASE("code invariants are enforced") {
  CHECK_THROWS_AS(Code(1, 3, {{0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Code(2, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Code(2, 3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Code(2, 3, {{0, 0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Code(2, 3, {{0, 1, 0}, {0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(TwoDistParams(2, 5, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(TwoDistParams(2, 5, 0, 2), std::invalid_argument);
}

TEST_CASE("hamming distance and weight") {
  const Word a{0, 1, 2, 0}, b{1, 1, 0, 0};
  CHECK(hamming_distance(a, b) == 2);
  CHECK(weight(a) == 2);
  CHECK(weight(Word(5, 0)) == 0);
}

TEST_CASE("distance distribution matches a brute-force pair count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int q = 2 + trial % 3, n = 3 + trial % 6;
    int cap = 1;
    for (int i = 0; i < n && cap < 40; ++i) cap *= q;
    const Code c = random_code(rng, q, n, 2 + static_cast<int>(rng() % static_cast<unsigned>(std::min(cap, 40) - 1)));
    const auto dd = distance_distribution(c);
    const auto h = oracle::pair_histogram(c.words());
    Rational total = 0;
    for (int j = 0; j <= n; ++j) {
      const long long pairs = h.count(j) ? h.at(j) : 0;
      CHECK(dd.A(j) == oracle::frac(2 * pairs, static_cast<long long>(c.size())) + (j == 0 ? 1 : 0));
      total += dd.A(j);
    }
    CHECK(total == Rational(static_cast<long long>(c.size())));
  }
}

TEST_CASE("verify_two_distance") {
  const Code c(2, 4, {{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 1}, {0, 0, 1, 1}});
  const auto ok = verify_two_distance(c, {2, 4, 2, 2});
  CHECK(ok.ok);
  CHECK(ok.observed == std::vector<int>{2, 4});
  const auto wrong = verify_two_distance(c, {2, 4, 1, 3});
  CHECK_FALSE(wrong.ok);
  CHECK_THROWS_AS(verify_two_distance(c, {3, 4, 2, 2}), std::invalid_argument);

  const Code eq(2, 3, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const auto r = verify_two_distance(eq, {2, 3, 1, 1});
  CHECK_FALSE(r.ok);
  CHECK(r.equidistant);
}

TEST_CASE("strength agrees with the column-projection oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int q = 2 + trial % 2, n = 3 + trial % 3;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= q;
    const Code c = random_code(rng, q, n, std::max(2, static_cast<int>(rng() % static_cast<unsigned>(total)) + 1));
    CHECK(strength(c) == oracle::strength(c.words(), q));
  }
  // The full space has strength n; the even-weight binary code has strength n - 1.
  std::vector<Word> even;
  for (int x = 0; x < 16; ++x)
    if (__builtin_popcount(static_cast<unsigned>(x)) % 2 == 0)
      even.push_back({Symbol(x & 1), Symbol(x >> 1 & 1), Symbol(x >> 2 & 1), Symbol(x >> 3 & 1)});
  CHECK(strength(Code(2, 4, even)) == 3);
}

TEST_CASE("moments vanish up to the strength") {
  std::vector<Word> even;
  for (int x = 0; x < 16; ++x)
    if (__builtin_popcount(static_cast<unsigned>(x)) % 2 == 0)
      even.push_back({Symbol(x & 1), Symbol(x >> 1 & 1), Symbol(x >> 2 & 1), Symbol(x >> 3 & 1)});
  const Code c(2, 4, even);
  for (int i = 1; i <= 3; ++i) CHECK(moment(c, i) == 0);
  CHECK(moment(c, 4) != 0);
  CHECK(moment(c, 0) == Rational(64));
  CHECK_THROWS_AS(moment(c, 5), std::out_of_range);
}

TEST_CASE("antipodal detection") {
  CHECK(is_antipodal(Code(2, 3, {{0, 0, 0}, {1, 1, 1}, {1, 0, 0}, {0, 1, 1}})));
  CHECK_FALSE(is_antipodal(Code(2, 3, {{0, 0, 0}, {1, 1, 1}, {1, 0, 0}})));
  CHECK(is_antipodal(Code(3, 2, {{0, 0}, {1, 1}, {2, 2}})));
}

TEST_CASE("padding and sorting") {
  const Code c(3, 2, {{2, 1}, {0, 1}});
  const Code p = c.padded(2);
  CHECK(p.n() == 4);
  CHECK(p[0] == Word{2, 1, 0, 0});
  CHECK(c.sorted()[0] == Word{0, 1});
}

TEST_CASE("code files round-trip and report the failing line") {
  const Code c(3, 3, {{0, 0, 0}, {1, 2, 0}, {2, 2, 1}});
  std::stringstream ss;
  write_code(ss, c);
  const Code back = read_code(ss);
  CHECK(back.words() == c.words());

  std::istringstream bad("# comment\nq=2 n=3\n010\n01\n");
  try {
    read_code(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  std::istringstream bad_symbol("q=2 n=2\n02\n");
  CHECK_THROWS_AS(read_code(bad_symbol), ParseError);
  std::istringstream no_header("010\n");
  CHECK_THROWS_AS(read_code(no_header), ParseError);
  std::istringstream dup("q=2 n=2\n01\n01\n");
  CHECK_THROWS_AS(read_code(dup), ParseError);
}

TEST_CASE("bound status strings") {
  CHECK(BoundStatus::exact(6).str() == "6");
  CHECK(BoundStatus::range(22, 26).str() == "22-26");
  CHECK(BoundStatus::not_well_defined().str() == "--");
  CHECK_THROWS_AS(BoundStatus::range(5, 4), std::invalid_argument);
}
