#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace shearlab {

// Library error codes. Each failure mode named by the operation contracts
// maps to one of these; the CLI turns them into process exit codes.
enum class Errc {
    NotHyperbolic,
    DegeneratePoints,
    SharedEndpoint,
    Intersecting,
    PointOffGeodesic,
    LeafMissesAxis,
    LeavesCross,
    DuplicateCrossing,
    DegenerateResult,
    CrossingLost,
    SingleCrossing,
    HypothesesFail,
    ProbeOutOfRange,
    BadSeedLeaves,
    UnsupportedOrder,
    TraceTooClose,
    NonFiniteSample,
    Schema,
    Io,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Residual tolerances. geometric covers residuals of constructions
// (fixed points, perpendicularity, on-geodesic checks); algebraic covers
// exact group/algebra identities.
struct Tolerances {
    double geometric = 1e-10;
    double algebraic = 1e-12;
};

// Global tolerance set; the CLI may scale it (SHEARLAB_TOL_SCALE).
Tolerances& tolerances();

// Neumaier compensated accumulator. Triple sums over six-leaf configs have
// a few hundred terms; this keeps their rounding below test tolerances.
class CompensatedSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Deterministic, platform-independent RNG (splitmix64 core).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next() & 1u) != 0; }

  private:
    std::uint64_t state_;
};

// Evaluates fn(i) for i in [0,n) on a small worker pool and returns results
// ordered by index. Falls back to a plain loop for small n or single-core
// hosts, so outputs are identical either way.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    unsigned workers = std::min<unsigned>(hw, 8);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace shearlab
