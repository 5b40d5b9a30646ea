#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "majidx/error.hpp"
#include "majidx/words.hpp"

using namespace majidx;

namespace {

std::vector<std::size_t> idx(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_SUITE("words") {

TEST_CASE("word construction rejects repeats and nonpositive letters") {
  CHECK_THROWS_AS(Word({1, 2, 2}), InputError);
  CHECK_THROWS_AS(Word({0, 1}), InputError);
  CHECK_THROWS_AS(Word({-3}), InputError);
  CHECK_NOTHROW(Word({10, 3, 70}));
  CHECK_NOTHROW(MultisetWord({1, 1, 2}));
  CHECK_THROWS_AS(MultisetWord({1, 0}), InputError);
}

TEST_CASE("word accessors are 1-based") {
  const Word w{4, 2, 6, 3, 5, 1};
  CHECK(w.letter(1) == 4);
  CHECK(w.letter(6) == 1);
  CHECK_THROWS_AS(w.letter(0), InputError);
  CHECK_THROWS_AS(w.letter(7), InputError);
  CHECK(w.position_of(6) == 3u);
  CHECK_FALSE(w.position_of(7).has_value());
  CHECK(w.max_letter() == 6);
  CHECK(w.min_letter() == 1);
  CHECK(w.is_permutation_of_n());
  CHECK_FALSE(Word({2, 3}).is_permutation_of_n());
  CHECK(Word::identity(3) == Word{1, 2, 3});
}

TEST_CASE("descent_set") {
  CHECK(descent_set(Word{4, 2, 6, 3, 5, 1}).indices == idx({1, 3, 5}));
  CHECK(descent_set(Word::identity(7)).indices.empty());
  CHECK(descent_set(MultisetWord({1, 1, 2, 2})).indices.empty());
  CHECK(descent_set(MultisetWord({2, 1, 1, 2, 1})).indices == idx({1, 4}));
  CHECK(descent_set(Word()).indices.empty());
}

TEST_CASE("maj") {
  CHECK(maj(Word{4, 2, 6, 3, 5, 1}) == 9);
  CHECK(maj(Word{5, 2, 7, 6, 3, 4, 1}) == 14);
  CHECK(maj(Word::identity(9)) == 0);
  CHECK(maj(Word()) == 0);
  CHECK(maj(MultisetWord({1, 2, 1})) == 2);
}

TEST_CASE("inv") {
  CHECK(inv(Word{6, 2, 5, 7, 4, 3, 1}) == 15);
  CHECK(inv(Word::identity(6)) == 0);
  CHECK(inv(Word{5, 1, 2, 6, 3, 7, 4}) == 7);
  CHECK(inv(MultisetWord({2, 1, 1})) == 2);
  CHECK(inv(MultisetWord({1, 1, 1})) == 0);
}

TEST_CASE("d_k") {
  const Word w{4, 2, 6, 3, 5, 1};
  CHECK(d_k(w, 1) == 3);
  CHECK(d_k(w, 4) == 1);
  CHECK(d_k(w, 6) == 0);
  CHECK(d_k(w, 7) == 0);
  CHECK_THROWS_AS(d_k(w, 0), InputError);
  CHECK_THROWS_AS(d_k(w, 8), InputError);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(d_k(Word{6, 5, 4, 3, 2, 1}, n) == static_cast<std::int64_t>(5 - std::min<std::size_t>(n - 1, 5)));
}

TEST_CASE("maj is the sum of d_k") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> v(1 + trial % 12);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const Word w(v);
    std::int64_t sum = 0;
    for (std::size_t k = 1; k <= w.size(); ++k) sum += d_k(w, k);
    CHECK(sum == maj(w));
  }
}

TEST_CASE("inversion_sequence") {
  CHECK(inversion_sequence(Word{6, 2, 5, 7, 4, 3, 1}) == std::vector<std::int64_t>{0, 1, 1, 2, 3, 5, 3});
  CHECK(inversion_sequence(Word::identity(5)) == std::vector<std::int64_t>(5, 0));
  CHECK(inversion_sequence(Word{5, 4, 3, 2, 1}) == std::vector<std::int64_t>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(inversion_sequence(Word{2, 3}), InputError);
}

TEST_CASE("inversion sequence round trip") {
  std::vector<Letter> v{1, 2, 3, 4, 5, 6};
  do {
    const Word w(v);
    const auto s = inversion_sequence(w);
    CHECK(std::accumulate(s.begin(), s.end(), std::int64_t{0}) == inv(w));
    CHECK(from_inversion_sequence(s) == w);
  } while (std::next_permutation(v.begin(), v.end()));
  CHECK_THROWS_AS(from_inversion_sequence(std::vector<std::int64_t>{0, 2}), InputError);
}

TEST_CASE("insert_at and remove_at") {
  const Word w{4, 2, 6, 3, 5, 1};
  CHECK(insert_at(w, 3, 7) == Word{4, 2, 7, 6, 3, 5, 1});
  CHECK(insert_at(w, 7, 7) == Word{4, 2, 6, 3, 5, 1, 7});
  CHECK(insert_at(Word(), 1, 5) == Word{5});
  CHECK_THROWS_AS(insert_at(w, 3, 6), InputError);
  CHECK_THROWS_AS(insert_at(w, 8, 7), InputError);
  CHECK_THROWS_AS(insert_at(w, 0, 7), InputError);
  CHECK(remove_at(insert_at(w, 4, 9), 4) == w);
  CHECK_THROWS_AS(remove_at(w, 7), InputError);
}

TEST_CASE("shuffles") {
  std::set<std::vector<Letter>> got;
  for (const Word& s : enumerate_shuffles(Word{1, 2}, Word{3})) got.insert({s.letters().begin(), s.letters().end()});
  CHECK(got == std::set<std::vector<Letter>>{{3, 1, 2}, {1, 3, 2}, {1, 2, 3}});

  ShuffleStream big(Word{5, 2, 7, 4}, Word{6, 3, 1});
  CHECK(big.count() == 35u);
  std::size_t n = 0;
  bool seen = false;
  for (const Word& s : big) {
    ++n;
    seen = seen || s == Word{5, 2, 7, 6, 3, 4, 1};
  }
  CHECK(n == 35u);
  CHECK(seen);

  std::vector<Word> only;
  for (const Word& s : enumerate_shuffles(Word(), Word{2, 1})) only.push_back(s);
  CHECK(only == std::vector<Word>{Word{2, 1}});

  std::vector<Word> none;
  for (const Word& s : enumerate_shuffles(Word(), Word())) none.push_back(s);
  CHECK(none == std::vector<Word>{Word()});

  CHECK_THROWS_AS(enumerate_shuffles(Word{1, 2}, Word{2}), InputError);
}

TEST_CASE("shuffles are distinct and keep both subsequences") {
  const Word theta{3, 8, 1}, pi{7, 2, 5, 4};
  std::set<Word> seen;
  for (const Word& s : enumerate_shuffles(theta, pi)) {
    CHECK(seen.insert(s).second);
    CHECK(subword(s, [](Letter x) { return x == 3 || x == 8 || x == 1; }) == theta);
    CHECK(subword(s, [](Letter x) { return x == 7 || x == 2 || x == 5 || x == 4; }) == pi);
  }
  CHECK(seen.size() == 35u);
}

TEST_CASE("inverse_descent_set") {
  CHECK(inverse_descent_set(Word{5, 1, 2, 3, 6, 7, 4}).indices == idx({4}));
  CHECK(inverse_descent_set(Word::identity(5)).indices.empty());
  CHECK(descent_set(inverse(Word{5, 1, 2, 3, 6, 7, 4})) == inverse_descent_set(Word{5, 1, 2, 3, 6, 7, 4}));
  for (const Word& s : enumerate_shuffles(Word{1, 2, 3}, Word{4, 5})) CHECK(inverse_descent_set(s).is_subset_of(idx({3})));
  CHECK_THROWS_AS(inverse_descent_set(Word{2, 4}), InputError);
}

TEST_CASE("inverse descents agree with descents of the inverse") {
  std::vector<Letter> v{1, 2, 3, 4, 5, 6};
  do {
    const Word w(v);
    CHECK(inverse_descent_set(w) == descent_set(inverse(w)));
    CHECK(inverse(inverse(w)) == w);
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("flatten_to_multiset") {
  const std::size_t b21[] = {2, 1};
  CHECK(flatten_to_multiset(Word{3, 1, 2}, b21) == MultisetWord({2, 1, 1}));
  const std::size_t ones[] = {1, 1, 1, 1};
  CHECK(flatten_to_multiset(Word::identity(4), ones) == MultisetWord({1, 2, 3, 4}));
  const std::size_t b43[] = {4, 3};
  const MultisetWord f = flatten_to_multiset(Word{5, 1, 2, 6, 3, 7, 4}, b43);
  CHECK(f == MultisetWord({2, 1, 1, 2, 1, 2, 1}));
  CHECK(maj(f) == maj(Word{5, 1, 2, 6, 3, 7, 4}));
  CHECK(inv(f) == inv(Word{5, 1, 2, 6, 3, 7, 4}));
  const std::size_t bad[] = {2, 2};
  CHECK_THROWS_AS(flatten_to_multiset(Word{3, 1, 2}, bad), InputError);
}

TEST_CASE("statistics depend only on relative order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 10;
    std::vector<Letter> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    std::vector<Letter> relabeled(v);
    std::vector<Letter> pool(n);
    std::set<Letter> chosen;
    while (chosen.size() < n) chosen.insert(std::uniform_int_distribution<Letter>(1, 1000)(rng));
    std::copy(chosen.begin(), chosen.end(), pool.begin());
    for (auto& x : relabeled) x = pool[static_cast<std::size_t>(x - 1)];
    const Word a(v), b(relabeled);
    CHECK(maj(a) == maj(b));
    CHECK(inv(a) == inv(b));
    CHECK(descent_set(a) == descent_set(b));
  }
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_word("426351") == Word{4, 2, 6, 3, 5, 1});
  CHECK(parse_word("4 2 6 3 5 1") == Word{4, 2, 6, 3, 5, 1});
  CHECK(parse_word("4,2,6") == Word{4, 2, 6});
  CHECK(parse_word("12, 10") == Word{12, 10});
  CHECK(parse_word("7") == Word{7});
  CHECK(parse_word("") == Word());
  CHECK(parse_letters("10", false) == std::vector<Letter>{10});
  CHECK(parse_letters("0,3,4", false) == std::vector<Letter>{0, 3, 4});
  CHECK_THROWS_AS(parse_word("4 2 x"), InputError);
  CHECK_THROWS_AS(parse_word("42a"), InputError);
  CHECK_THROWS_AS(parse_word("4 4"), InputError);
  CHECK(format_word(Word{4, 2, 6}) == "4 2 6");
  CHECK(format_word(Word()) == "");
}

}  // TEST_SUITE
