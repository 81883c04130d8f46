#pragma once

#include "identities.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace useq {

/**
 * A finite parameter grid for one identity. Each free parameter needs at
 * least one value; pinned parameters may be left empty (the pin is used)
 * or listed with exactly the pinned value.
 */
struct sweep_config {
    identity_id id = identity_id::master;
    std::vector<rational> a;
    std::vector<rational> b;
    std::vector<rational> r;
    std::vector<rational> c;
    std::vector<std::int64_t> m;
};

struct sweep_summary {
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
};

/**
 * Materializes the grid in lexicographic (a, b, r, c, m) order, values in
 * the order given. Throws std::invalid_argument on an empty grid or any
 * pin/precondition violation, before anything is evaluated.
 */
inline std::vector<identity_instance> sweep_grid(const sweep_config& cfg) {
    const identity_info& inf = info(cfg.id);
    auto axis = [&](const std::vector<rational>& values, const std::optional<rational>& pin,
                    const char* name) -> std::vector<rational> {
        if (pin) {
            for (const auto& v : values)
                if (v != *pin)
                    throw std::invalid_argument(std::string(inf.name) + " pins " + name + " = " +
                                                pin->str() + " (got " + v.str() + ")");
            return {*pin};
        }
        if (values.empty())
            throw std::invalid_argument(std::string("empty grid: no values for ") + name);
        return values;
    };
    const auto as = axis(cfg.a, inf.pin_a, "a");
    const auto bs = axis(cfg.b, inf.pin_b, "b");
    const auto rs = axis(cfg.r, inf.pin_r, "r");
    const auto cs = axis(cfg.c, inf.pin_c, "c");
    if (cfg.m.empty()) throw std::invalid_argument("empty grid: no values for m");
    for (const auto& c : cs) detail::require_c(c);
    for (const auto m : cfg.m) detail::require_m(m);

    std::vector<identity_instance> grid;
    grid.reserve(as.size() * bs.size() * rs.size() * cs.size() * cfg.m.size());
    for (const auto& a : as)
        for (const auto& b : bs)
            for (const auto& r : rs)
                for (const auto& c : cs)
                    for (const auto m : cfg.m)
                        grid.push_back(identity_instance{cfg.id, {a, b, r}, c, m});
    return grid;
}

/**
 * Evaluates every grid point and hands reports to the sink in grid order.
 * The order and the summary are independent of the thread count.
 */
inline sweep_summary sweep(const sweep_config& cfg,
                           const std::function<void(const identity_report&)>& sink,
                           unsigned threads = 1) {
    const auto grid = sweep_grid(cfg);
    sweep_summary summary;
    auto tally = [&](const identity_report& rep) {
        ++summary.total;
        if (rep.pass)
            ++summary.passed;
        else
            ++summary.failed;
        if (sink) sink(rep);
    };

    if (threads <= 1) {
        for (const auto& inst : grid) tally(evaluate(inst));
        return summary;
    }

    std::vector<identity_report> reports(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
            reports[i] = evaluate(grid[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& rep : reports) tally(rep);
    return summary;
}

}  // namespace useq
