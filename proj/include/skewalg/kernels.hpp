#pragma once

// Exhaustive scans over pairs and triples of carrier elements. Each scan has
// a serial reference and an OpenMP version; both report the lexicographically
// first failing tuple, so results do not depend on the schedule.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include <omp.h>

#include "skewalg/core.hpp"

namespace skewalg::kernels {

using Triple = std::array<Element, 3>;
using Pair = std::array<Element, 2>;

/// Below this many triples the parallel scan just runs the serial loop.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

template <typename Pred>
std::optional<Triple> first_failing_triple_serial(std::size_t n, Pred&& holds) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!holds(Element(a), Element(b), Element(c)))
          return Triple{Element(a), Element(b), Element(c)};
  return std::nullopt;
}

template <typename Pred>
std::optional<Triple> first_failing_triple_parallel(std::size_t n, Pred&& holds) {
  constexpr std::int64_t none = std::numeric_limits<std::int64_t>::max();
  std::int64_t best = none;
  const std::int64_t rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (std::int64_t a = 0; a < rows; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!holds(Element(a), Element(b), Element(c))) {
          best = std::min<std::int64_t>(best, (a * rows + std::int64_t(b)) * rows + std::int64_t(c));
          found = true;
          break;
        }
  }
  if (best == none) return std::nullopt;
  const auto idx = static_cast<std::size_t>(best);
  return Triple{Element(idx / (n * n)), Element((idx / n) % n), Element(idx % n)};
}

template <typename Pred>
std::optional<Triple> first_failing_triple(std::size_t n, Pred&& holds) {
  if (n * n * n < kParallelThreshold || omp_in_parallel())
    return first_failing_triple_serial(n, holds);
  return first_failing_triple_parallel(n, holds);
}

template <typename Pred>
std::optional<Pair> first_failing_pair(std::size_t n, Pred&& holds) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!holds(Element(a), Element(b))) return Pair{Element(a), Element(b)};
  return std::nullopt;
}

}  // namespace skewalg::kernels
