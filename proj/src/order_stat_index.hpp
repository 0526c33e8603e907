#pragma once

#include <cstdint>
#include <vector>

namespace tstar {

// Ordered multiset of doubles backed by an AVL tree. Each distinct value owns
// one node holding its multiplicity; every node also caches the total
// multiplicity of its subtree so rank queries are a single root-to-leaf walk.
//
// Values compare exactly (no epsilon). Inserting or probing a non-finite value
// throws tstar::Error.
class OrderStatIndex {
 public:
  // Result of one descent: number of stored values strictly below the probe
  // and the multiplicity of the probe itself.
  struct Rank {
    std::int64_t less = 0;
    std::int64_t equal = 0;
  };

  OrderStatIndex() = default;

  void insert(double v);
  void clear();

  Rank rank(double v) const;

  std::int64_t countLess(double v) const { return rank(v).less; }
  std::int64_t countEqual(double v) const { return rank(v).equal; }
  std::int64_t countGreater(double v) const;
  // Open interval (lo, hi). Requires lo <= hi.
  std::int64_t countBetween(double lo, double hi) const;

  std::int64_t size() const noexcept { return size_; }
  std::size_t distinct() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return size_ == 0; }

  // Instrumentation: number of node comparisons performed so far.
  std::uint64_t comparisons() const noexcept { return comparisons_; }
  void resetComparisons() noexcept { comparisons_ = 0; }

  // Height of the tree; exposed for balance tests.
  int height() const noexcept { return heightOf(root_); }

 private:
  using NodeId = std::int32_t;
  static constexpr NodeId kNil = -1;

  struct Node {
    double value;
    std::int64_t count;
    std::int64_t total;
    NodeId left;
    NodeId right;
    std::int32_t height;
  };

  int heightOf(NodeId id) const noexcept {
    return id == kNil ? 0 : nodes_[static_cast<std::size_t>(id)].height;
  }
  std::int64_t totalOf(NodeId id) const noexcept {
    return id == kNil ? 0 : nodes_[static_cast<std::size_t>(id)].total;
  }
  Node& at(NodeId id) { return nodes_[static_cast<std::size_t>(id)]; }

  void update(NodeId id);
  NodeId rotateLeft(NodeId id);
  NodeId rotateRight(NodeId id);
  NodeId rebalance(NodeId id);
  NodeId insertAt(NodeId id, double v);

  std::vector<Node> nodes_;
  NodeId root_ = kNil;
  std::int64_t size_ = 0;
  mutable std::uint64_t comparisons_ = 0;
};

}  // namespace tstar
