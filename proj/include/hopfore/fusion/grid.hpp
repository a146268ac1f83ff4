/*
   Copyright 2026 The hopfore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   Closed-form fusion rules against the matrix decomposition of the explicit
   tensor product, over a grid of label pairs. Cases are independent and are
   handed out to worker threads through a shared counter; results land in
   fixed slots, so the output order does not depend on scheduling.
*/

#ifndef HOPFORE_FUSION_GRID_HPP
#define HOPFORE_FUSION_GRID_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "hopfore/decomp/decompose.hpp"
#include "hopfore/fusion/fusion.hpp"

namespace hopfore {

/// Nil(t, i) for t <= nil_max over all simples, then Eig(t, [j], b) for
/// t <= eig_max over orbit representatives and the given betas.
inline std::vector<IndecLabel> grid_labels(const AlgebraData& alg, int nil_max, int eig_max, const std::vector<Cyclotomic>& betas) {
    std::vector<IndecLabel> out;
    for (int t = 1; t <= nil_max; ++t)
        for (SimpleIndex i = 0; i < alg.simple_count(); ++i) out.push_back(IndecLabel::nil(t, i));
    for (int t = 1; t <= eig_max; ++t)
        for (SimpleIndex j : alg.representatives())
            for (const auto& b : betas) out.push_back(IndecLabel::eig(t, j, b));
    return out;
}

struct GridCase {
    IndecLabel left, right;
    LabelMultiset<IndecLabel> closed;
    LabelMultiset<IndecLabel> oracle;
    std::size_t tensor_dim = 0;
    std::string error;  ///< non-empty if either side threw
    bool agree() const { return error.empty() && closed == oracle; }
};

/// Runs work(k) for k in [0, count) on up to `threads` workers (0 = hardware).
template <class Work>
void parallel_for(std::size_t count, unsigned threads, Work work) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < count;) {
            try {
                work(k);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
}

inline GridCase run_grid_case(const AlgebraPtr& alg, const IndecLabel& L, const IndecLabel& R, const FusionOptions& options = {}) {
    GridCase c{L, R, {}, {}, 0, {}};
    try {
        c.closed = tensor_labels(*alg, L, R, options);
        const ExplicitModule t = tensor(build_module(alg, L), build_module(alg, R));
        c.tensor_dim = t.dim;
        c.oracle = decompose(t).multiset;
    } catch (const Error& e) {
        c.error = e.what();
    }
    return c;
}

/// All ordered pairs from `labels`.
inline std::vector<GridCase> run_fusion_grid(const AlgebraPtr& alg, const std::vector<IndecLabel>& labels, unsigned threads = 0,
                                             const FusionOptions& options = {}) {
    const std::size_t n = labels.size();
    std::vector<GridCase> out(n * n);
    parallel_for(n * n, threads, [&](std::size_t k) { out[k] = run_grid_case(alg, labels[k / n], labels[k % n], options); });
    return out;
}

}  // namespace hopfore

#endif
