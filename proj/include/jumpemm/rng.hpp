#pragma once

#include <array>
#include <cstdint>

namespace jumpemm {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Stateless: every output block is a pure function of (counter, key), so a
/// draw can be addressed directly by path and step index.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter counter, Key key);
};

/// Maps 64 random bits to the open interval (0,1) on a 2^-52 grid.
constexpr double to_open_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

/// Two independent uniforms addressed by (seed, path, step, lane).
///
/// Distinct addresses never share a Philox block, so paths are reproducible
/// regardless of evaluation order or thread count.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t master_seed)
      : key_{static_cast<std::uint32_t>(master_seed),
             static_cast<std::uint32_t>(master_seed >> 32)} {}

  std::array<double, 2> uniforms(std::uint64_t path, std::uint32_t step,
                                 std::uint32_t lane) const;

 private:
  Philox4x32::Key key_;
};

}  // namespace jumpemm
