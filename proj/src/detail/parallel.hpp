#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace patcount::detail {

/// Sum of fn(i) over i in [0, count). Index i goes to worker i % jobs and the
/// per-worker partial sums are added in worker order, so the result does not
/// depend on the worker count.
template <class Fn>
std::uint64_t parallel_sum(std::size_t count, unsigned jobs, Fn const& fn)
{
    if (jobs <= 1 || count < 2) {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < count; ++i)
            total += fn(i);
        return total;
    }
    if (jobs > count)
        jobs = static_cast<unsigned>(count);
    std::vector<std::uint64_t> partial(jobs, 0);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            try {
                std::uint64_t s = 0;
                for (std::size_t i = t; i < count; i += jobs)
                    s += fn(i);
                partial[t] = s;
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers)
        w.join();
    for (auto const& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }
    std::uint64_t total = 0;
    for (auto s : partial)
        total += s;
    return total;
}

}  // namespace patcount::detail
