#include "order_stat_index.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace tstar {

namespace {

void requireFinite(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::NonFinite,
                "order statistic index: non-finite value " + std::to_string(v));
  }
}

}  // namespace

void OrderStatIndex::insert(double v) {
  requireFinite(v);
  root_ = insertAt(root_, v);
  ++size_;
}

void OrderStatIndex::clear() {
  nodes_.clear();
  root_ = kNil;
  size_ = 0;
}

OrderStatIndex::Rank OrderStatIndex::rank(double v) const {
  requireFinite(v);
  Rank r;
  NodeId id = root_;
  while (id != kNil) {
    const Node& node = nodes_[static_cast<std::size_t>(id)];
    ++comparisons_;
    if (v < node.value) {
      id = node.left;
    } else if (node.value < v) {
      r.less += totalOf(node.left) + node.count;
      id = node.right;
    } else {
      r.less += totalOf(node.left);
      r.equal = node.count;
      break;
    }
  }
  return r;
}

std::int64_t OrderStatIndex::countGreater(double v) const {
  const Rank r = rank(v);
  return size_ - r.less - r.equal;
}

std::int64_t OrderStatIndex::countBetween(double lo, double hi) const {
  requireFinite(lo);
  requireFinite(hi);
  if (hi < lo) {
    throw Error(ErrorCode::InvalidArgument,
                "order statistic index: countBetween requires lo <= hi");
  }
  if (!(lo < hi)) return 0;
  const Rank below = rank(lo);
  return rank(hi).less - below.less - below.equal;
}

void OrderStatIndex::update(NodeId id) {
  Node& node = at(id);
  node.height = 1 + std::max(heightOf(node.left), heightOf(node.right));
  node.total = node.count + totalOf(node.left) + totalOf(node.right);
}

OrderStatIndex::NodeId OrderStatIndex::rotateLeft(NodeId id) {
  const NodeId pivot = at(id).right;
  at(id).right = at(pivot).left;
  at(pivot).left = id;
  update(id);
  update(pivot);
  return pivot;
}

OrderStatIndex::NodeId OrderStatIndex::rotateRight(NodeId id) {
  const NodeId pivot = at(id).left;
  at(id).left = at(pivot).right;
  at(pivot).right = id;
  update(id);
  update(pivot);
  return pivot;
}

OrderStatIndex::NodeId OrderStatIndex::rebalance(NodeId id) {
  update(id);
  const int balance = heightOf(at(id).left) - heightOf(at(id).right);
  if (balance > 1) {
    const NodeId child = at(id).left;
    if (heightOf(at(child).left) < heightOf(at(child).right)) {
      at(id).left = rotateLeft(child);
    }
    return rotateRight(id);
  }
  if (balance < -1) {
    const NodeId child = at(id).right;
    if (heightOf(at(child).right) < heightOf(at(child).left)) {
      at(id).right = rotateRight(child);
    }
    return rotateLeft(id);
  }
  return id;
}

OrderStatIndex::NodeId OrderStatIndex::insertAt(NodeId id, double v) {
  if (id == kNil) {
    nodes_.push_back(Node{v, 1, 1, kNil, kNil, 1});
    return static_cast<NodeId>(nodes_.size() - 1);
  }
  ++comparisons_;
  // nodes_ may reallocate inside the recursive call; re-index afterwards.
  if (v < at(id).value) {
    const NodeId child = insertAt(at(id).left, v);
    at(id).left = child;
  } else if (at(id).value < v) {
    const NodeId child = insertAt(at(id).right, v);
    at(id).right = child;
  } else {
    ++at(id).count;
    ++at(id).total;
    return id;
  }
  return rebalance(id);
}

}  // namespace tstar
