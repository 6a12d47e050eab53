#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace uniqmax {

/// Splits [0, count) into `threads` contiguous blocks and runs
/// fn(block_index, begin, end) for each. Block boundaries depend only on
/// (count, threads); callers that merge per-block results in block order get
/// the same answer for any thread count as long as the merge is associative.
template <class Fn>
void parallel_blocks(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        fn(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::size_t blocks = std::min<std::size_t>(threads, count);
    std::vector<std::exception_ptr> errors(blocks);
    std::vector<std::jthread> workers;
    workers.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t begin = count * b / blocks;
        std::size_t end = count * (b + 1) / blocks;
        workers.emplace_back([&, b, begin, end] {
            try {
                fn(b, begin, end);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    }
    workers.clear();
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace uniqmax
