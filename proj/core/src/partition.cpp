#include "qsk/partition.hpp"

#include <algorithm>
#include <numeric>

namespace qsk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw error("partition parts must be weakly decreasing");
  }
}

Partition Partition::rectangle(int cols, int rows) {
  if (cols < 0 || rows < 0) throw error("rectangle dimensions must be nonnegative");
  if (cols == 0 || rows == 0) return Partition();
  return Partition(std::vector<int>(rows, cols));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw error("partition parts are 1-indexed");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> out(parts_[0]);
  for (int c = 1; c <= parts_[0]; ++c)
    out[c - 1] = static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [&](int p) { return p >= c; }));
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::union_parts(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  std::sort(all.rbegin(), all.rend());
  return Partition(std::move(all));
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition Partition::parse(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return c == '[' || c == ']' || c == ' '; });
  if (s.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    try {
      parts.push_back(std::stoi(s.substr(pos, comma - pos)));
    } catch (const std::exception&) {
      throw error("bad partition text: '" + std::string(text) + "'");
    }
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void enumerate(int remaining, int max_part, int max_length, std::vector<int>& acc,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (max_length == 0) return;
  int cap = std::min(remaining, max_part);
  for (int p = cap; p >= 1; --p) {
    acc.push_back(p);
    enumerate(remaining - p, p, max_length - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> Partition::all(int size, int max_part, int max_length) {
  if (size < 0) throw error("partition size must be nonnegative");
  if (max_part < 0) max_part = size;
  if (max_length < 0) max_length = size;
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate(size, max_part, max_length, acc, out);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int ra = 0, rb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    ra += a.part(i);
    rb += b.part(i);
    if (ra < rb) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i < outer.length(); ++i)
    if (outer.part(i + 1) > inner.part(i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer.part(i) - inner.part(i) > 1) return false;
  return true;
}

}  // namespace qsk
