#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace decyc {

struct EdgeTag {};
struct VertexTag {};

/// Bitset over the id range of one graph. The tag keeps edge sets and vertex
/// sets from being mixed up.
template <class Tag>
class IdSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  IdSet() = default;
  explicit IdSet(std::size_t universe) : bits_(universe) {}
  IdSet(std::size_t universe, std::initializer_list<int> ids) : bits_(universe) {
    for (int id : ids) insert(id);
  }
  IdSet(std::size_t universe, const std::vector<int>& ids) : bits_(universe) {
    for (int id : ids) insert(id);
  }

  static IdSet full(std::size_t universe) {
    IdSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(int id) const { return id >= 0 && static_cast<std::size_t>(id) < bits_.size() && bits_.test(id); }
  void insert(int id) { bits_.set(static_cast<std::size_t>(id)); }
  void erase(int id) { bits_.reset(static_cast<std::size_t>(id)); }
  void clear() { bits_.reset(); }

  IdSet complement() const {
    IdSet s = *this;
    s.bits_.flip();
    return s;
  }

  IdSet& operator|=(const IdSet& o) { bits_ |= o.bits_; return *this; }
  IdSet& operator&=(const IdSet& o) { bits_ &= o.bits_; return *this; }
  IdSet& operator-=(const IdSet& o) { bits_ -= o.bits_; return *this; }
  friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }
  friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
  friend IdSet operator-(IdSet a, const IdSet& b) { return a -= b; }
  friend bool operator==(const IdSet& a, const IdSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const IdSet& a, const IdSet& b) { return a.to_vector() < b.to_vector(); }

  bool is_subset_of(const IdSet& o) const { return bits_.is_subset_of(o.bits_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
  }

  class const_iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    const_iterator() = default;
    const_iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}
    int operator*() const { return static_cast<int>(pos_); }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_ = Bits::npos;
  };

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

using EdgeSet = IdSet<EdgeTag>;
using VertexSet = IdSet<VertexTag>;

}  // namespace decyc
