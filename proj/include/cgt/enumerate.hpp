// Exhaustive enumeration of reduced words, optionally split across worker
// threads by first letter.

#ifndef CGT_ENUMERATE_HPP_
#define CGT_ENUMERATE_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "cgt/word.hpp"

namespace cgt {

  // Number of reduced words of length exactly `length` over `rank`
  // generators.
  std::size_t count_reduced_words(std::size_t rank, std::size_t length);

  // Calls `fn` on every reduced word of length <= max_length, in shortlex
  // order when `first` is unrestricted. With `first` set, only the words
  // starting with that letter are visited (the empty word is skipped).
  void for_each_reduced_word(std::size_t rank,
                             std::size_t max_length,
                             std::function<void(Word const&)> const& fn);

  void for_each_reduced_word_starting(
      std::size_t                             rank,
      std::size_t                             max_length,
      Letter                                  first,
      std::function<void(Word const&)> const& fn);

  // All reduced words of length <= max_length in shortlex order.
  std::vector<Word> reduced_words(std::size_t rank, std::size_t max_length);

  // Worker count from the CGT_WORKERS environment variable (default 1).
  unsigned default_workers();

  // Runs `search(first_letter)` for every letter of the alphabet across up to
  // `workers` threads and returns the concatenated results, always in
  // first-letter order. `search` receives the letter slot index.
  template <typename T>
  std::vector<T> partition_by_first_letter(
      std::size_t                                        rank,
      unsigned                                           workers,
      std::function<std::vector<T>(Letter)> const&       search);

  namespace detail {
    void run_partitioned(std::size_t                              slots,
                         unsigned                                 workers,
                         std::function<void(std::size_t)> const&  job);
  }

  template <typename T>
  std::vector<T> partition_by_first_letter(
      std::size_t                                  rank,
      unsigned                                     workers,
      std::function<std::vector<T>(Letter)> const& search) {
    std::vector<std::vector<T>> parts(2 * rank);
    detail::run_partitioned(2 * rank, workers, [&](std::size_t slot) {
      parts[slot] = search(Letter::from_slot(slot));
    });
    std::vector<T> merged;
    for (auto& part : parts) {
      merged.insert(merged.end(),
                    std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    return merged;
  }

}  // namespace cgt

#endif  // CGT_ENUMERATE_HPP_
