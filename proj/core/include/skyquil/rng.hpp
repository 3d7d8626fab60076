#pragma once

#include <cstdint>
#include <string_view>

namespace skyquil {

// Counter-based random streams. Every consumer derives its own stream from a
// root seed plus a chain of labels/indices, so parallel workers and repeated
// runs see identical draws regardless of evaluation order.
struct StreamKey {
    std::uint64_t state{0x9e3779b97f4a7c15ull};

    StreamKey() = default;
    explicit StreamKey(std::uint64_t seed) { *this = with(seed); }

    [[nodiscard]] StreamKey with(std::uint64_t v) const;
    [[nodiscard]] StreamKey with(std::string_view label) const;
    [[nodiscard]] StreamKey with(std::int64_t v) const { return with(static_cast<std::uint64_t>(v)); }
    [[nodiscard]] StreamKey with(int v) const { return with(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }
};

// Stateful generator seeded from a StreamKey (splitmix64 sequence).
class Rng {
  public:
    explicit Rng(StreamKey key) : state_(key.state) {}

    std::uint64_t next_u64();
    // uniform on (0,1), never returns an endpoint
    double uniform();
    double uniform(double lo, double hi);
    double normal(double mean = 0.0, double sd = 1.0);
    // standard-normal draw conditioned on x <= bound / x >= bound;
    // degenerate tails collapse to the bound (caller may log)
    double truncated_normal_below(double bound, double sd);
    double truncated_normal_above(double bound, double sd);
    // index in [0, n)
    std::size_t index(std::size_t n);

  private:
    std::uint64_t state_;
};

// Standard normal CDF and its inverse (double precision).
double normal_cdf(double x);
double normal_icdf(double p);

}  // namespace skyquil
