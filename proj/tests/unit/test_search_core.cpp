#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "beamkit/beam.hpp"
#include "beamkit/candidate_pool.hpp"
#include "beamkit/closed_table.hpp"
#include "beamkit/domain.hpp"
#include "beamkit/search_node.hpp"

namespace beamkit {
namespace {

struct Key {
  std::uint64_t v = 0;
  std::uint64_t hash() const { return mix64(v); }
  friend bool operator==(const Key&, const Key&) = default;
};

using Node = SearchNode<Key>;

Node node(std::uint64_t state, Cost f, Cost h = 0, std::uint64_t seq = 0) {
  Node n;
  n.state = {state};
  n.f = f;
  n.h = h;
  n.seq = seq;
  return n;
}

TEST(Pathmax, Examples) {
  EXPECT_EQ(pathmax_adjust(10, 4, 4), 10);
  EXPECT_EQ(pathmax_adjust(3, 4, 4), 8);
  EXPECT_EQ(pathmax_adjust(0, 0, 0), 0);
}

TEST(OrderingKey, CostGuided) {
  auto n = node(1, 4, 1, 7);
  EXPECT_EQ(ordering_key(n, Ordering::CostGuided), (OrderingKey{4, 1, 0, 7}));
}

TEST(OrderingKey, DistanceGuided) {
  Node n;
  n.depth = 3;
  n.d = 2;
  n.f = 9;
  n.g = 5;
  n.seq = 2;
  EXPECT_EQ(ordering_key(n, Ordering::DistanceGuided), (OrderingKey{5, 9, 5, 2}));
}

TEST(OrderingKey, LowerSeqBreaksTies) {
  auto a = node(1, 4, 1, 3);
  auto b = node(2, 4, 1, 9);
  EXPECT_TRUE(selected_before(a, b, Ordering::CostGuided));
  EXPECT_FALSE(selected_before(b, a, Ordering::CostGuided));
  CandidatePool<Key> pool(Ordering::CostGuided);
  pool.push(b);
  pool.push(a);
  EXPECT_EQ(pool.pop().seq, 3u);
}

TEST(OrderingKey, SelectedBeforeAgreesWithKey) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(0, 3);
  for (int trial = 0; trial < 5000; ++trial) {
    Node a, b;
    for (Node* n : {&a, &b}) {
      n->f = small(rng);
      n->h = small(rng);
      n->g = small(rng);
      n->d = small(rng);
      n->depth = static_cast<std::uint32_t>(small(rng));
      n->seq = static_cast<std::uint64_t>(small(rng));
    }
    for (auto o : {Ordering::CostGuided, Ordering::DistanceGuided}) {
      EXPECT_EQ(selected_before(a, b, o), ordering_key(a, o) < ordering_key(b, o));
    }
  }
}

// Random multisets pop in nondecreasing key order under both policies.
TEST(CandidatePoolProperty, PopsInKeyOrder) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    for (auto ordering : {Ordering::CostGuided, Ordering::DistanceGuided}) {
      CandidatePool<Key> pool(ordering);
      std::vector<OrderingKey> pushed;
      const int n = static_cast<int>(rng() % 60);
      for (int i = 0; i < n; ++i) {
        Node x = node(rng() % 10, static_cast<Cost>(rng() % 6), static_cast<Cost>(rng() % 4), i);
        x.g = static_cast<Cost>(rng() % 5);
        x.d = static_cast<double>(rng() % 4) * 0.5;
        x.depth = static_cast<std::uint32_t>(rng() % 5);
        pushed.push_back(ordering_key(x, ordering));
        pool.push(x);
      }
      std::sort(pushed.begin(), pushed.end());
      std::vector<OrderingKey> popped;
      while (!pool.empty()) popped.push_back(ordering_key(pool.pop(), ordering));
      EXPECT_EQ(popped, pushed);
    }
  }
}

TEST(ClosedTable, LookupStoreReplace) {
  ClosedTable<Key> closed;
  EXPECT_FALSE(closed.lookup({1}).has_value());
  closed.store({1}, {3, 2});
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{3, 2}));
  closed.store({1}, {4, 1});
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{4, 1}));
  EXPECT_EQ(closed.size(), 1u);
}

TEST(PruneNextBeam, EmptiesSlotsAtOrAboveIncumbent) {
  Beam<Key> beam(3);
  beam.place(1, node(1, 3));
  beam.place(2, node(2, 7));
  EXPECT_EQ(prune_next_beam(beam, 7), 1u);
  ASSERT_NE(beam.at(1), nullptr);
  EXPECT_EQ(beam.at(2), nullptr);
  EXPECT_EQ(beam.at(3), nullptr);
}

TEST(PruneNextBeam, InfiniteIncumbentIsNoOp) {
  Beam<Key> beam(2);
  beam.place(1, node(1, 100));
  beam.place(2, node(2, 1e12));
  EXPECT_EQ(prune_next_beam(beam, kInfinity), 0u);
  EXPECT_EQ(beam.occupied(), 2u);
}

TEST(PruneNextBeam, AllBelowIncumbentUnchanged) {
  Beam<Key> beam(2);
  beam.place(1, node(1, 1));
  beam.place(2, node(2, 2));
  EXPECT_EQ(prune_next_beam(beam, 2.5), 0u);
  EXPECT_EQ(beam.occupied(), 2u);
}

TEST(SelectForSlot, UnseenStateIsStored) {
  CandidatePool<Key> pool(Ordering::CostGuided);
  ClosedTable<Key> closed;
  pool.push(node(1, 5));
  auto got = select_for_slot(pool, closed, 3, Dedup::SlotAware);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->width, 3u);
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{5, 3}));
}

TEST(SelectForSlot, LowerSlotReplaces) {
  CandidatePool<Key> pool(Ordering::CostGuided);
  ClosedTable<Key> closed;
  closed.store({1}, {3, 2});
  pool.push(node(1, 9));
  auto got = select_for_slot(pool, closed, 1, Dedup::SlotAware);
  ASSERT_TRUE(got);
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{9, 1}));
}

TEST(SelectForSlot, HigherSlotWorseFIsDiscarded) {
  CandidatePool<Key> pool(Ordering::CostGuided);
  ClosedTable<Key> closed;
  closed.store({1}, {4, 1});
  pool.push(node(1, 5, 0, 0));
  pool.push(node(2, 6, 0, 1));
  int rejected = 0;
  auto got = select_for_slot(pool, closed, 3, Dedup::SlotAware, [&](const Node&) { ++rejected; });
  ASSERT_TRUE(got);
  EXPECT_EQ(got->state.v, 2u);
  EXPECT_EQ(rejected, 1);
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{4, 1}));
}

TEST(SelectForSlot, EqualSlotEqualFReplaces) {
  CandidatePool<Key> pool(Ordering::CostGuided);
  ClosedTable<Key> closed;
  closed.store({1}, {4, 2});
  Node n = node(1, 4);
  n.h = 1;
  pool.push(n);
  ASSERT_TRUE(select_for_slot(pool, closed, 2, Dedup::SlotAware));
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{4, 2}));
}

// The branch that accepts a higher slot with f <= stored f leaves the entry alone.
TEST(SelectForSlot, HigherSlotBetterFAcceptsWithoutUpdate) {
  CandidatePool<Key> pool(Ordering::CostGuided);
  ClosedTable<Key> closed;
  closed.store({1}, {6, 1});
  pool.push(node(1, 5));
  ASSERT_TRUE(select_for_slot(pool, closed, 2, Dedup::SlotAware));
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{6, 1}));
}

TEST(SelectForSlot, EmptyPoolGivesNothing) {
  CandidatePool<Key> pool(Ordering::CostGuided);
  ClosedTable<Key> closed;
  EXPECT_FALSE(select_for_slot(pool, closed, 1, Dedup::SlotAware));
  EXPECT_FALSE(select_for_slot(pool, closed, 1, Dedup::None));
}

TEST(SelectForSlot, FullBeamKeepsLowestF) {
  CandidatePool<Key> pool(Ordering::CostGuided);
  ClosedTable<Key> closed;
  closed.store({1}, {4, 1});
  pool.push(node(1, 6));
  ASSERT_TRUE(select_for_slot(pool, closed, 2, Dedup::FullBeam));
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{4, 1}));
  pool.push(node(1, 3));
  ASSERT_TRUE(select_for_slot(pool, closed, 2, Dedup::FullBeam));
  EXPECT_EQ(closed.lookup({1}), (ClosedEntry{3, 2}));
}

// Over random selection sequences with slots visited in order per level,
// a state's stored slot never grows.
TEST(SelectForSlotProperty, StoredWidthNeverIncreases) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    ClosedTable<Key> closed;
    std::vector<std::uint32_t> last(8, 0);
    std::uint64_t seq = 0;
    for (int level = 0; level < 6; ++level) {
      CandidatePool<Key> pool(Ordering::CostGuided);
      for (int i = 0; i < 12; ++i) pool.push(node(rng() % 8, static_cast<Cost>(rng() % 5), 0, seq++));
      for (std::uint32_t slot = 1; slot <= 5; ++slot) {
        select_for_slot(pool, closed, slot, Dedup::SlotAware);
        for (std::uint64_t s = 0; s < 8; ++s) {
          if (auto e = closed.lookup({s})) {
            if (last[s] != 0) {
              EXPECT_LE(e->width, last[s]);
            }
            last[s] = e->width;
          }
        }
      }
    }
  }
}

TEST(Beam, SparseSlots) {
  Beam<Key> beam(1'000'000);
  beam.place(2, node(1, 1));
  beam.place(999'999, node(2, 1));
  EXPECT_EQ(beam.occupied(), 2u);
  EXPECT_EQ(beam.at(1), nullptr);
  ASSERT_NE(beam.at(999'999), nullptr);
  EXPECT_EQ(beam.at(999'999)->width, 999'999u);
}

}  // namespace
}  // namespace beamkit
