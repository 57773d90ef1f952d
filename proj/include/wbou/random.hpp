#pragma once

#include <cstdint>
#include <random>

namespace wbou {

/// Which half of the two-sided driver a substream feeds. The past axis drives
/// L on (-inf, 0], the future axis drives L on [0, inf); they are always
/// derived from distinct substreams so the two one-sided copies are
/// independent.
enum class Axis : std::uint32_t { past = 0, future = 1, brownian = 2, aux = 3 };

/// A deterministic random stream.
///
/// The engine is std::mt19937_64; the distribution transforms are the
/// Boost.Random implementations (ziggurat normal/exponential, Marsaglia-Tsang
/// gamma, PTRS Poisson), whose algorithms are fixed by the Boost version
/// rather than by the standard library vendor. A stream is never shared
/// between threads.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    /// Substream for (root seed, path index, axis).
    static Stream derive(std::uint64_t root_seed, std::uint64_t path_index, Axis axis);

    double uniform();          // [0, 1)
    double normal();           // N(0, 1)
    double exponential(double rate);
    double gamma(double shape, double rate);
    std::uint64_t poisson(double mean);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to spread (seed, index, axis) into engine seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace wbou
