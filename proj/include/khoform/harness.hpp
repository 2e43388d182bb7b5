#pragma once

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "khoform/braid.hpp"

namespace khoform {

/// Hardware concurrency, capped by KHOFORM_THREADS when set (minimum 1).
unsigned worker_count();

/// Signed generators drawn uniformly from the 2(n-1) letters.
BraidWord random_word(std::mt19937_64& rng, std::size_t length, int strands = 4);
/// Length uniform in [0, max_length], then letters as above.
BraidWord random_word_up_to(std::mt19937_64& rng, std::size_t max_length, int strands = 4);

/// Number of words of exactly this length over the 2(n-1) letters.
std::uint64_t word_count(std::size_t length, int strands = 4);
/// The index-th word of the given length in lexicographic order over
/// 1, 2, .., n-1, -1, .., -(n-1).
BraidWord nth_word(std::size_t length, std::uint64_t index, int strands = 4);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Computes work(i) for i < count on `threads` workers and hands the results
/// to emit(i, result) on the calling thread in increasing i.
template <class T>
void ordered_parallel(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& work,
                      const std::function<void(std::size_t, T&)>& emit) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      T r = work(i);
      emit(i, r);
    }
    return;
  }
  std::vector<std::optional<T>> slots(count);
  std::mutex m;
  std::condition_variable ready;
  std::size_t next = 0;
  std::exception_ptr failure;
  auto run = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(m);
        if (next >= count || failure) return;
        i = next++;
      }
      try {
        T r = work(i);
        std::lock_guard lock(m);
        slots[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(m);
        if (!failure) failure = std::current_exception();
      }
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run);
  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(m);
    ready.wait(lock, [&] { return slots[i].has_value() || failure; });
    if (failure) break;
    T r = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    emit(i, r);
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace khoform
