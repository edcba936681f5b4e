#include "sjaya/random.hpp"

namespace sjaya {

RandomSource::RandomSource(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream, 0x5a1a7a5bu};
  engine_.seed(seq);
}

}  // namespace sjaya
