#include "softdx/patient_set.hpp"

#include <bit>

#include "softdx/error.hpp"

namespace softdx {

PatientSet::PatientSet(std::size_t capacity) : capacity_(capacity), words_(words_for(capacity), 0) {}

PatientSet PatientSet::full(std::size_t capacity) {
  PatientSet s(capacity);
  for (std::size_t i = 0; i < capacity; ++i) s.insert(i);
  return s;
}

void PatientSet::insert(std::size_t index) {
  SOFTDX_ENSURE(index < capacity_, "patient index out of range");
  words_[index / kWordBits] |= Word{1} << (index % kWordBits);
}

void PatientSet::erase(std::size_t index) {
  SOFTDX_ENSURE(index < capacity_, "patient index out of range");
  words_[index / kWordBits] &= ~(Word{1} << (index % kWordBits));
}

bool PatientSet::contains(std::size_t index) const {
  if (index >= capacity_) return false;
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

std::size_t PatientSet::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool PatientSet::empty() const noexcept {
  for (Word w : words_)
    if (w != 0) return false;
  return true;
}

bool PatientSet::is_subset_of(const PatientSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

PatientSet& PatientSet::operator&=(const PatientSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PatientSet& PatientSet::operator|=(const PatientSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<std::size_t> PatientSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t PatientSet::hash() const noexcept {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ capacity_;
  for (Word w : words_) {
    std::uint64_t z = h + w + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

void PatientSet::check_compatible(const PatientSet& other) const {
  SOFTDX_ENSURE(capacity_ == other.capacity_, "patient sets over different universe sizes");
}

}  // namespace softdx
