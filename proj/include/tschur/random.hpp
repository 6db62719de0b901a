#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace tschur {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& s)
{
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent stream `stream` of the experiment seeded by `seed`.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0)
{
    std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL * (stream + 1));
    std::seed_seq seq{splitmix64(s), splitmix64(s), splitmix64(s), splitmix64(s)};
    return Rng(seq);
}

/// Uniform on (0, 1], 53 random bits.
inline double uniform01(Rng& g) { return (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53; }

/// k >= 1 with P(k) = (1 − q) q^{k−1}, by inverse CDF.
inline int geometric_from_one(Rng& g, double q)
{
    if (q <= 0) return 1;
    double u = uniform01(g);
    return 1 + static_cast<int>(std::floor(std::log(u) / std::log(q)));
}

inline int resolve_threads(int threads)
{
    if (threads > 0) return threads;
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

/// Fixed partition of `trials` into blocks; block b gets its own stream and the
/// results come back in block order, so output does not depend on `threads`.
template <class R, class F>
std::vector<R> run_blocks(long trials, int threads, F&& body, int blocks = 64)
{
    blocks = static_cast<int>(std::max<long>(1, std::min<long>(blocks, trials)));
    std::vector<R> out(blocks);
    auto range = [&](int b) { return std::make_pair(trials * b / blocks, trials * (b + 1) / blocks); };
    threads = std::min(resolve_threads(threads), blocks);
    if (threads <= 1) {
        for (int b = 0; b < blocks; ++b) out[b] = body(b, range(b).first, range(b).second);
        return out;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (int b = w; b < blocks; b += threads) out[b] = body(b, range(b).first, range(b).second);
        });
    for (auto& th : pool) th.join();
    return out;
}

} // namespace tschur
