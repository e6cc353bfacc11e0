#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qsk/error.hpp"

namespace qsk {

// Integer partition: weakly decreasing positive parts. Value type, ordered
// lexicographically (so it can key std::map).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // cols^rows rectangle, e.g. rectangle(3, 2) = (3,3).
  static Partition rectangle(int cols, int rows);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const;  // 1-based; 0 past the end

  Partition conjugate() const;
  bool contains(const Partition& mu) const;
  Partition union_parts(const Partition& other) const;  // multiset union

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  std::string str() const;  // "[3,2,1]", "[]"
  // Accepts "[3,2,1]", "3,2,1", "[]" and "".
  static Partition parse(std::string_view text);

  // All partitions of `size`, optionally bounding the largest part and the
  // number of parts. Listed in descending lexicographic order.
  static std::vector<Partition> all(int size, int max_part = -1, int max_length = -1);

 private:
  std::vector<int> parts_;
};

// a >= b in dominance order. Requires |a| == |b| (returns false otherwise).
bool dominates(const Partition& a, const Partition& b);

// outer/inner is a horizontal strip: containment plus at most one new cell per
// column, i.e. outer_{i+1} <= inner_i.
bool is_horizontal_strip(const Partition& inner, const Partition& outer);
// Vertical strip: at most one new cell per row.
bool is_vertical_strip(const Partition& inner, const Partition& outer);

}  // namespace qsk
