#include "wbou/random.hpp"

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>
#include <boost/random/uniform_01.hpp>

namespace wbou {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Stream Stream::derive(std::uint64_t root_seed, std::uint64_t path_index, Axis axis) {
    std::uint64_t h = mix64(root_seed);
    h = mix64(h ^ path_index);
    h = mix64(h ^ static_cast<std::uint64_t>(axis));
    return Stream(h);
}

double Stream::uniform() { return boost::random::uniform_01<double>{}(engine_); }

double Stream::normal() { return boost::random::normal_distribution<double>{}(engine_); }

double Stream::exponential(double rate) {
    return boost::random::exponential_distribution<double>{rate}(engine_);
}

double Stream::gamma(double shape, double rate) {
    return boost::random::gamma_distribution<double>{shape, 1.0 / rate}(engine_);
}

std::uint64_t Stream::poisson(double mean) {
    if (mean <= 0.0) return 0;
    return boost::random::poisson_distribution<std::uint64_t, double>{mean}(engine_);
}

}  // namespace wbou
