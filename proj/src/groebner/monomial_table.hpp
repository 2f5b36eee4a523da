#pragma once

#include <cstdint>
#include <vector>

#include "critpoints/monomial.hpp"

namespace critpoints::detail {

/// Interns monomials to dense 32-bit ids (open addressing, linear probing).
class MonomialTable {
 public:
  explicit MonomialTable(int nvars) : nvars_(nvars), slots_(1024, 0) {}

  std::uint32_t intern(const Monomial& m) {
    const std::uint64_t h = m.hash();
    std::size_t mask = slots_.size() - 1;
    std::size_t i = h & mask;
    while (true) {
      std::uint32_t s = slots_[i];
      if (s == 0) break;
      if (hashes_[s - 1] == h && monos_[s - 1] == m) return s - 1;
      i = (i + 1) & mask;
    }
    const auto id = static_cast<std::uint32_t>(monos_.size());
    monos_.push_back(m);
    hashes_.push_back(h);
    masks_.push_back(m.support_mask());
    slots_[i] = id + 1;
    if (2 * monos_.size() > slots_.size()) rehash();
    return id;
  }

  const Monomial& operator[](std::uint32_t id) const { return monos_[id]; }
  std::uint64_t mask(std::uint32_t id) const { return masks_[id]; }
  std::size_t size() const { return monos_.size(); }
  int nvars() const { return nvars_; }

  /// Whether monomial `a` divides monomial `b`.
  bool divides(std::uint32_t a, std::uint32_t b) const {
    return (masks_[a] & ~masks_[b]) == 0 && monos_[a].divides(monos_[b]);
  }

 private:
  void rehash() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
    const std::size_t mask = fresh.size() - 1;
    for (std::uint32_t id = 0; id < monos_.size(); ++id) {
      std::size_t i = hashes_[id] & mask;
      while (fresh[i] != 0) i = (i + 1) & mask;
      fresh[i] = id + 1;
    }
    slots_ = std::move(fresh);
  }

  int nvars_;
  std::vector<Monomial> monos_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace critpoints::detail
