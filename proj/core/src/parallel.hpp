#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "torusvoa/qseries.hpp"

namespace torusvoa::detail {

/// Sum of term(0) + ... + term(count-1), evaluated on up to `threads`
/// workers. Partial results are combined in index order.
template <typename Term>
QSeries parallel_sum(std::size_t count, unsigned threads, Term&& term, QSeries init = QSeries()) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) init = init + term(i);
    return init;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<QSeries> results(count);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) results[i] = term(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& r : results) init = init + r;
  return init;
}

}  // namespace torusvoa::detail
