#include "soficshift/vertex_set.hpp"

#include <bit>

#include "soficshift/error.hpp"

namespace soficshift {

VertexSet::VertexSet(std::uint64_t owner, std::size_t universe)
    : owner_(owner), universe_(universe), words_((universe + 63) / 64, 0) {}

bool VertexSet::test(VertexId v) const {
  if (v >= universe_) fail(ErrorCode::InvalidArgument, "vertex index out of range");
  return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::set(VertexId v) {
  if (v >= universe_) fail(ErrorCode::InvalidArgument, "vertex index out of range");
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::reset(VertexId v) {
  if (v >= universe_) fail(ErrorCode::InvalidArgument, "vertex index out of range");
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

void VertexSet::fill() noexcept {
  for (auto& w : words_) w = ~std::uint64_t{0};
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() = (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

std::size_t VertexSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (universe_ != other.universe_ ||
      (owner_ != 0 && other.owner_ != 0 && owner_ != other.owner_)) {
    fail(ErrorCode::GraphMismatch, "vertex sets belong to different graphs");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  if (owner_ == 0) owner_ = other.owner_;
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  if (owner_ == 0) owner_ = other.owner_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  if (owner_ == 0) owner_ = other.owner_;
  return *this;
}

bool operator<(const VertexSet& a, const VertexSet& b) noexcept {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  // Smaller least differing member sorts first.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) != 0;
    }
  }
  return false;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace soficshift
