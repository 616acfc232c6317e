#include "dioph/q_sequence.hpp"

namespace dioph {

QSequence QSequence::doubly_exponential(std::uint64_t i, SizeCap cap) {
  if (i > 60) throw UsageError("doubly exponential preset index too large");
  auto gen = [i, cap](std::uint64_t n) -> Integer {
    std::uint64_t e = 2 * n + i;
    if (e >= 63 || (std::uint64_t{1} << e) + 1 > cap.bits) {
      throw SizeCapExceeded("Q_" + std::to_string(n) + " = 2^(2^" + std::to_string(e) + ") exceeds the " +
                            std::to_string(cap.bits) + "-bit cap");
    }
    return pow2(std::uint64_t{1} << e);
  };
  return QSequence("dexp:" + std::to_string(i), gen, cap, i);
}

QSequence QSequence::from_generator(std::string name, Generator g, SizeCap cap) {
  return QSequence(std::move(name), std::move(g), cap, std::nullopt);
}

Integer QSequence::term(std::uint64_t n) const {
  if (n == 0) throw UsageError("sequence terms are indexed from 1");
  Integer v = gen_(n);
  if (bit_length(v) > cap_.bits) {
    throw SizeCapExceeded("Q_" + std::to_string(n) + " of " + name_ + " exceeds the " + std::to_string(cap_.bits) +
                          "-bit cap");
  }
  return v;
}

std::pair<std::uint64_t, Integer> QSequence::cover(const Integer& q) const {
  Integer previous = 0;
  for (std::uint64_t n = 1;; ++n) {
    Integer v = term(n);
    if (v <= previous || v < 1) {
      throw UsageError("sequence " + name_ + " is not strictly increasing at n = " + std::to_string(n));
    }
    if (v >= q) return {n, v};
    previous = v;
  }
}

}  // namespace dioph
