#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace softdx {

// Fixed-capacity bitset over universe indices [0, capacity).
class PatientSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PatientSet() = default;
  explicit PatientSet(std::size_t capacity);

  static PatientSet full(std::size_t capacity);
  static std::size_t words_for(std::size_t capacity) noexcept { return (capacity + kWordBits - 1) / kWordBits; }

  std::size_t capacity() const noexcept { return capacity_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  void insert(std::size_t index);
  void erase(std::size_t index);
  bool contains(std::size_t index) const;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == capacity_; }
  bool is_subset_of(const PatientSet& other) const;

  PatientSet& operator&=(const PatientSet& other);
  PatientSet& operator|=(const PatientSet& other);
  friend PatientSet operator&(PatientSet a, const PatientSet& b) { return a &= b; }
  friend PatientSet operator|(PatientSet a, const PatientSet& b) { return a |= b; }
  friend bool operator==(const PatientSet& a, const PatientSet& b) = default;

  // Member indices in ascending order.
  std::vector<std::size_t> indices() const;

  std::size_t hash() const noexcept;

 private:
  void check_compatible(const PatientSet& other) const;

  std::size_t capacity_ = 0;
  std::vector<Word> words_;
};

struct PatientSetHash {
  std::size_t operator()(const PatientSet& s) const noexcept { return s.hash(); }
};

}  // namespace softdx
