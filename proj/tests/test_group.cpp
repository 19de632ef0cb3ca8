#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "rdmap/errors.hpp"
#include "rdmap/group.hpp"
#include "rdmap/random.hpp"

namespace rdmap {
namespace {

// Independent reduction oracle: repeatedly strike out any adjacent pair of
// the form xX or Xx until none is left.
std::string reduce_by_rewriting(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const char a = w[i];
      const char b = w[i + 1];
      if (a != b && std::tolower(a) == std::tolower(b)) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Breadth-first distances from 0 in the Cayley graph of Z/m with generators +-1.
std::vector<int> cyclic_distances(int m) {
  std::vector<int> dist(m, -1);
  std::deque<int> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int step : {1, m - 1}) {
      const int y = (x + step) % m;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::string word(const GroupDescriptor& g, const GroupElement& x) { return free_word_string(g, x); }

const auto kFree2 = GroupDescriptor::free(2);

TEST(GroupCore, Identities) {
  EXPECT_TRUE(identity(kFree2).payload().empty());
  EXPECT_EQ(identity(GroupDescriptor::free_abelian(3)).payload(),
            (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_EQ(identity(GroupDescriptor::cyclic(5)).payload(), std::vector<std::int64_t>{0});
}

TEST(GroupCore, MultiplyExamples) {
  auto a = make_free_word(kFree2, "a");
  auto A = make_free_word(kFree2, "A");
  EXPECT_EQ(word(kFree2, multiply(kFree2, a, A)), "");

  const auto ab = make_free_word(kFree2, "ab");
  const auto Ba = make_free_word(kFree2, "Ba");
  EXPECT_EQ(word(kFree2, multiply(kFree2, ab, Ba)), reduce_by_rewriting("abBa"));
  EXPECT_EQ(word(kFree2, multiply(kFree2, ab, Ba)), "aa");

  const auto z2 = GroupDescriptor::free_abelian(2);
  EXPECT_EQ(multiply(z2, make_vector(z2, {1, 2}), make_vector(z2, {3, -1})).payload(),
            (std::vector<std::int64_t>{4, 1}));
}

TEST(GroupCore, InverseExamples) {
  EXPECT_EQ(word(kFree2, inverse(kFree2, make_free_word(kFree2, "ab"))), "BA");
  const auto c5 = GroupDescriptor::cyclic(5);
  EXPECT_EQ(inverse(c5, make_residue(c5, 2)).payload().front(), 3);
  const auto z2 = GroupDescriptor::free_abelian(2);
  EXPECT_EQ(inverse(z2, make_vector(z2, {1, -4})).payload(), (std::vector<std::int64_t>{-1, 4}));
}

TEST(GroupCore, WordLengthExamples) {
  EXPECT_EQ(word_length(kFree2, identity(kFree2)), 0);
  EXPECT_EQ(word_length(kFree2, make_free_word(kFree2, "aBa")), 3);
  const auto c5 = GroupDescriptor::cyclic(5);
  const auto dist = cyclic_distances(5);
  EXPECT_EQ(word_length(c5, make_residue(c5, 3)), dist[3]);
  EXPECT_EQ(word_length(c5, make_residue(c5, 3)), 2);
  for (int m : {2, 3, 7, 12}) {
    const auto g = GroupDescriptor::cyclic(m);
    const auto d = cyclic_distances(m);
    for (int r = 0; r < m; ++r) EXPECT_EQ(word_length(g, make_residue(g, r)), d[r]);
  }
}

TEST(GroupCore, BallExamples) {
  const auto b0 = ball(kFree2, 0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_TRUE(b0[0].payload().empty());

  // Brute force: every string over {a, A, b, B} of length <= 2, reduced.
  std::set<std::string> reduced;
  const std::string letters = "aAbB";
  reduced.insert("");
  for (char x : letters) {
    reduced.insert(reduce_by_rewriting(std::string(1, x)));
    for (char y : letters) reduced.insert(reduce_by_rewriting(std::string{x, y}));
  }
  const auto b2 = ball(kFree2, 2);
  EXPECT_EQ(b2.size(), reduced.size());
  EXPECT_EQ(b2.size(), 17u);
  std::set<std::string> got;
  for (const auto& x : b2) got.insert(word(kFree2, x));
  EXPECT_EQ(got, reduced);

  const auto c5 = GroupDescriptor::cyclic(5);
  EXPECT_EQ(ball(c5, 2).size(), 5u);
}

TEST(GroupCore, BallCanonicalOrder) {
  const auto b = ball(kFree2, 2);
  std::vector<std::string> words;
  for (const auto& x : b) words.push_back(word(kFree2, x));
  EXPECT_EQ(words[0], "");
  EXPECT_EQ((std::vector<std::string>(words.begin() + 1, words.begin() + 5)),
            (std::vector<std::string>{"a", "A", "b", "B"}));
  EXPECT_EQ((std::vector<std::string>(words.begin() + 5, words.begin() + 8)),
            (std::vector<std::string>{"aa", "ab", "aB"}));
  EXPECT_EQ(words.back(), "BB");
}

TEST(GroupCore, SphereSizesMatchFormula) {
  for (int k : {1, 2, 3}) {
    const auto g = GroupDescriptor::free(k);
    const auto b = ball(g, 6);
    std::map<Length, std::uint64_t> sphere;
    for (const auto& x : b) ++sphere[word_length(g, x)];
    for (Length n = 1; n <= 6; ++n) {
      std::uint64_t expected = 2 * k;
      for (Length j = 1; j < n; ++j) expected *= 2 * k - 1;
      EXPECT_EQ(sphere[n], expected) << "k=" << k << " n=" << n;
    }
    EXPECT_EQ(ball_size(g, 6), b.size());
  }
}

TEST(GroupCore, BallSizesAgreeWithEnumeration) {
  for (const auto& g : {GroupDescriptor::free_abelian(1), GroupDescriptor::free_abelian(2),
                        GroupDescriptor::free_abelian(3), GroupDescriptor::cyclic(7),
                        GroupDescriptor::cyclic(8)}) {
    for (Length n = 0; n <= 5; ++n) EXPECT_EQ(ball_size(g, n), ball(g, n).size()) << g.to_string();
  }
}

TEST(GroupCore, BallIsNestedPrefixAndReproducible) {
  for (const auto& g : {kFree2, GroupDescriptor::free_abelian(2), GroupDescriptor::cyclic(9)}) {
    for (Length n = 0; n < 4; ++n) {
      const auto small = ball(g, n);
      const auto large = ball(g, n + 1);
      ASSERT_LE(small.size(), large.size());
      EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin())) << g.to_string();
      EXPECT_EQ(small, ball(g, n));
    }
  }
}

TEST(GroupCore, BallCapIsExplicitError) {
  EXPECT_THROW(ball(kFree2, 12), BallCapExceeded);
  EXPECT_NO_THROW(ball(kFree2, 3, 53));
  EXPECT_THROW(ball(kFree2, 3, 52), BallCapExceeded);
  EXPECT_EQ(ball_size(GroupDescriptor::free(26), 1000), std::numeric_limits<std::uint64_t>::max());
}

TEST(GroupCore, NonReducedInputIsNormalized) {
  EXPECT_EQ(word(kFree2, make_free_word(kFree2, "abBAb")), "b");
  EXPECT_EQ(make_residue(GroupDescriptor::cyclic(5), -7).payload().front(), 3);
}

TEST(GroupCore, MismatchErrors) {
  const auto z2 = GroupDescriptor::free_abelian(2);
  EXPECT_THROW(multiply(z2, GroupElement({1}), GroupElement({1, 2})), GroupMismatch);
  EXPECT_THROW(make_free_word(kFree2, "c"), GroupMismatch);
  EXPECT_THROW(inverse(GroupDescriptor::cyclic(5), GroupElement({5})), GroupMismatch);
  EXPECT_THROW(word_length(kFree2, GroupElement({0, 1})), GroupMismatch);
  EXPECT_THROW(make_free_word(kFree2, "a1"), ParseError);
}

TEST(GroupCore, DescriptorParsing) {
  EXPECT_EQ(GroupDescriptor::parse("free(2)"), kFree2);
  EXPECT_EQ(GroupDescriptor::parse("free-abelian:3"), GroupDescriptor::free_abelian(3));
  EXPECT_EQ(GroupDescriptor::parse("cyclic(5)"), GroupDescriptor::cyclic(5));
  EXPECT_THROW(GroupDescriptor::parse("cyclic(1)"), std::invalid_argument);
  EXPECT_THROW(GroupDescriptor::parse("torus(2)"), ParseError);
  EXPECT_THROW(GroupDescriptor::free(0), std::invalid_argument);
}

GroupElement random_group_element(const GroupDescriptor& g, Rng& rng) {
  const auto pool = ball(g, 4);
  return pool[rng.below(pool.size())];
}

TEST(GroupCoreProperty, GroupAndLengthAxioms) {
  Rng rng(7);
  for (const auto& g : {GroupDescriptor::free(1), kFree2, GroupDescriptor::free(3),
                        GroupDescriptor::free_abelian(1), GroupDescriptor::free_abelian(3),
                        GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(11)}) {
    const auto e = identity(g);
    EXPECT_EQ(word_length(g, e), 0);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_group_element(g, rng);
      const auto y = random_group_element(g, rng);
      const auto z = random_group_element(g, rng);
      EXPECT_EQ(multiply(g, multiply(g, x, y), z), multiply(g, x, multiply(g, y, z)));
      EXPECT_EQ(multiply(g, x, inverse(g, x)), e);
      EXPECT_EQ(multiply(g, e, x), x);
      EXPECT_EQ(word_length(g, x), word_length(g, inverse(g, x)));
      EXPECT_LE(word_length(g, multiply(g, x, y)), word_length(g, x) + word_length(g, y));
      EXPECT_GE(word_length(g, x), 0);
    }
  }
}

}  // namespace
}  // namespace rdmap
