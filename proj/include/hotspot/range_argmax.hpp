#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hotspot {

/*
 * Range argmax over a fixed array of doubles: query(i, j) returns an index
 * k in [i, j] with values[k] maximal, ties broken toward the smaller
 * index. Block decomposition plus a sparse table over per-block argmaxes:
 * linear space, constant-bounded queries.
 *
 * Non-owning: the source array must stay alive and unmodified. Vectors may
 * be moved (their buffers are stable); rebuild after any reallocation.
 */
class RangeArgmax {
 public:
  RangeArgmax() = default;

  explicit RangeArgmax(std::span<const double> values) : values_(values) {
    if (values.empty()) throw std::invalid_argument("range argmax over empty sequence");
    std::size_t blocks = (values.size() + kBlock - 1) / kBlock;
    table_.emplace_back(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      std::size_t lo = b * kBlock;
      std::size_t hi = std::min(lo + kBlock - 1, values.size() - 1);
      table_[0][b] = static_cast<std::uint32_t>(scan(lo, hi));
    }
    for (std::size_t k = 1; (std::size_t{1} << k) <= blocks; ++k) {
      std::size_t len = blocks - (std::size_t{1} << k) + 1;
      table_.emplace_back(len);
      for (std::size_t b = 0; b < len; ++b) {
        table_[k][b] = static_cast<std::uint32_t>(
            pick(table_[k - 1][b], table_[k - 1][b + (std::size_t{1} << (k - 1))]));
      }
    }
  }

  std::size_t size() const { return values_.size(); }

  std::size_t query(std::size_t i, std::size_t j) const {
    if (i > j || j >= values_.size()) throw std::out_of_range("invalid argmax range");
    std::size_t bi = i / kBlock, bj = j / kBlock;
    if (bi == bj) return scan(i, j);
    std::size_t best = scan(i, (bi + 1) * kBlock - 1);
    if (bj > bi + 1) {
      std::size_t nb = bj - bi - 1;  // full blocks strictly between
      std::size_t k = std::bit_width(nb) - 1;
      best = pick(best, table_[k][bi + 1]);
      best = pick(best, table_[k][bj - (std::size_t{1} << k)]);
    }
    return pick(best, scan(bj * kBlock, j));
  }

 private:
  static constexpr std::size_t kBlock = 32;

  std::size_t scan(std::size_t lo, std::size_t hi) const {
    std::size_t best = lo;
    for (std::size_t k = lo + 1; k <= hi; ++k) {
      if (values_[k] > values_[best]) best = k;
    }
    return best;
  }

  std::size_t pick(std::size_t a, std::size_t b) const {
    if (values_[a] != values_[b]) return values_[a] > values_[b] ? a : b;
    return a < b ? a : b;
  }

  std::span<const double> values_;
  std::vector<std::vector<std::uint32_t>> table_;  // [k][b]: argmax over blocks [b, b + 2^k)
};

inline RangeArgmax build_range_argmax(std::span<const double> values) {
  return RangeArgmax(values);
}

}  // namespace hotspot
