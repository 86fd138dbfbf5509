#include "sponge/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "sponge/error.hpp"

namespace sponge {

void check_budget(std::uint64_t required, const Limits& limits, const char* what) {
  if (required > limits.box_budget) throw BudgetExceeded(required, limits.box_budget, what);
}

unsigned chunk_count(std::size_t count, unsigned threads) {
  if (count == 0) return 0;
  const std::size_t t = threads == 0 ? 1 : threads;
  // Small inputs are not worth a thread.
  const std::size_t useful = (count + 4095) / 4096;
  return static_cast<unsigned>(std::min(t, std::max<std::size_t>(useful, 1)));
}

void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
  const unsigned chunks = chunk_count(count, threads);
  if (chunks <= 1) {
    if (count > 0) body(0, count, 0);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (unsigned c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    workers.emplace_back([&, begin, end, c] {
      try {
        body(begin, end, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace sponge
