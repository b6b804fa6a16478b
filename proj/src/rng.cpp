#include "jumpemm/rng.hpp"

namespace jumpemm {

namespace {

constexpr std::uint32_t kMulA = 0xD2511F53;
constexpr std::uint32_t kMulB = 0xCD9E8D57;
constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;

inline void round(Philox4x32::Counter& c, const Philox4x32::Key& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMulA) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMulB) * c[2];
  c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
       static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter counter, Key key) {
  for (int i = 0; i < 10; ++i) {
    if (i > 0) {
      key[0] += kWeylA;
      key[1] += kWeylB;
    }
    round(counter, key);
  }
  return counter;
}

std::array<double, 2> CounterStream::uniforms(std::uint64_t path, std::uint32_t step,
                                              std::uint32_t lane) const {
  const auto out = Philox4x32::generate(
      {step, lane, static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32)},
      key_);
  const std::uint64_t a = (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
  const std::uint64_t b = (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
  return {to_open_unit(a), to_open_unit(b)};
}

}  // namespace jumpemm
