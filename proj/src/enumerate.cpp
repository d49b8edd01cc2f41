#include "cgt/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace cgt {

  std::size_t count_reduced_words(std::size_t rank, std::size_t length) {
    if (length == 0) {
      return 1;
    }
    std::size_t count = 2 * rank;
    for (std::size_t i = 1; i < length; ++i) {
      count *= 2 * rank - 1;
    }
    return count;
  }

  namespace {
    // Depth-first extension of `prefix` to every reduced word of length
    // exactly `target`, visiting in lexicographic order.
    void extend(std::vector<Letter>&                    prefix,
                std::size_t                             rank,
                std::size_t                             target,
                std::function<void(Word const&)> const& fn) {
      if (prefix.size() == target) {
        fn(Word(std::span<Letter const>(prefix)));
        return;
      }
      for (std::size_t s = 0; s < 2 * rank; ++s) {
        Letter l = Letter::from_slot(s);
        if (!prefix.empty() && prefix.back().cancels(l)) {
          continue;
        }
        prefix.push_back(l);
        extend(prefix, rank, target, fn);
        prefix.pop_back();
      }
    }
  }  // namespace

  void for_each_reduced_word(std::size_t                             rank,
                             std::size_t                             max_length,
                             std::function<void(Word const&)> const& fn) {
    std::vector<Letter> prefix;
    for (std::size_t len = 0; len <= max_length; ++len) {
      extend(prefix, rank, len, fn);
    }
  }

  void for_each_reduced_word_starting(
      std::size_t                             rank,
      std::size_t                             max_length,
      Letter                                  first,
      std::function<void(Word const&)> const& fn) {
    std::vector<Letter> prefix{first};
    for (std::size_t len = 1; len <= max_length; ++len) {
      extend(prefix, rank, len, fn);
    }
  }

  std::vector<Word> reduced_words(std::size_t rank, std::size_t max_length) {
    std::vector<Word> result;
    for_each_reduced_word(rank, max_length,
                          [&](Word const& w) { result.push_back(w); });
    return result;
  }

  unsigned default_workers() {
    if (char const* env = std::getenv("CGT_WORKERS")) {
      try {
        int n = std::stoi(env);
        if (n > 0) {
          return static_cast<unsigned>(n);
        }
      } catch (std::exception const&) {
      }
    }
    return 1;
  }

  namespace detail {
    void run_partitioned(std::size_t                             slots,
                         unsigned                                workers,
                         std::function<void(std::size_t)> const& job) {
      workers = std::max(1u, std::min<unsigned>(workers, slots));
      if (workers == 1) {
        for (std::size_t s = 0; s < slots; ++s) {
          job(s);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t s = next++; s < slots; s = next++) {
            job(s);
          }
        });
      }
    }
  }  // namespace detail

}  // namespace cgt
