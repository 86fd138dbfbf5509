#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace sponge {

/// Resource limits shared by every enumeration. `threads` changes wall time only.
struct Limits {
  std::uint64_t box_budget = 10'000'000;
  unsigned threads = 1;
};

/// Throws BudgetExceeded when `required` exceeds the budget.
void check_budget(std::uint64_t required, const Limits& limits, const char* what);

/// Splits [0, count) into at most `threads` contiguous chunks. Chunk `t` always
/// covers the same range for a given (count, threads), so per-chunk outputs
/// concatenated in chunk order are independent of scheduling.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t begin, std::size_t end, unsigned chunk)>& body);

unsigned chunk_count(std::size_t count, unsigned threads);

}  // namespace sponge
