#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperoct {

/// Subset of [n-1]_0 = {0, ..., n-1}, stored as a bit mask (bit i <=> i in
/// the set). Used both for descent sets D(w) and for subset parameters I.
class IndexSet {
 public:
  static constexpr unsigned kMaxAmbient = 63;

  IndexSet() = default;
  explicit IndexSet(unsigned ambient);
  IndexSet(unsigned ambient, std::initializer_list<unsigned> members);

  static IndexSet from_mask(unsigned ambient, std::uint64_t mask);
  static IndexSet full(unsigned ambient);
  /// "0,2,4" or "" for the empty set; whitespace tolerated.
  static IndexSet parse(unsigned ambient, std::string_view text);

  unsigned ambient() const noexcept { return ambient_; }
  std::uint64_t mask() const noexcept { return mask_; }

  bool contains(unsigned i) const noexcept {
    return i < ambient_ && ((mask_ >> i) & 1u) != 0;
  }
  bool empty() const noexcept { return mask_ == 0; }
  unsigned size() const noexcept;
  std::vector<unsigned> members() const;

  IndexSet with(unsigned i) const;
  IndexSet without(unsigned i) const;
  IndexSet complement() const;
  bool subset_of(const IndexSet& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  /// True iff every member is even ("even" subsets I of [n-1]_0 ∩ 2Z).
  bool is_even() const noexcept;
  /// I/2 inside [n/2 - 1]_0; requires an even set and even ambient.
  IndexSet halved() const;

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  unsigned ambient_ = 0;
  std::uint64_t mask_ = 0;
};

/// Number of subsets of [n-1]_0.
inline std::uint64_t subset_count(unsigned ambient) {
  return std::uint64_t{1} << ambient;
}

}  // namespace hyperoct
