#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace capset {

// Worker-count default: CAPSET_JOBS env var, else hardware concurrency.
int default_jobs();

// Runs fn(shard) for shard in [0, num_shards) on up to `jobs` threads and
// returns the results indexed by shard. Output depends only on fn, never on
// scheduling; callers merge the slots in shard order.
template <class T, class Fn>
std::vector<T> sharded_map(int num_shards, int jobs, Fn&& fn) {
    std::vector<T> results(num_shards);
    if (jobs <= 1 || num_shards <= 1) {
        for (int s = 0; s < num_shards; ++s) results[s] = fn(s);
        return results;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int s = next.fetch_add(1);
            if (s >= num_shards) break;
            results[s] = fn(s);
        }
    };
    int nthreads = std::min(jobs, num_shards);
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return results;
}

// Deterministic sharded reduction over [0, count): each shard folds its
// stride-partitioned indices with fold(acc, i), then the shard accumulators
// are combined in shard order.
template <class T, class Fold, class Combine>
T sharded_reduce(long long count, int jobs, T init, Fold&& fold, Combine&& combine) {
    int shards = (jobs <= 1) ? 1 : jobs * 4;
    auto partials = sharded_map<T>(shards, jobs, [&](int s) {
        T acc = init;
        for (long long i = s; i < count; i += shards) acc = fold(acc, i);
        return acc;
    });
    T out = init;
    for (auto& p : partials) out = combine(out, p);
    return out;
}

}  // namespace capset
