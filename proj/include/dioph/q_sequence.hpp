#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "dioph/errors.hpp"
#include "dioph/rational.hpp"

namespace dioph {

/// Strictly increasing unbounded sequence Q_1 < Q_2 < ... of positive
/// integers, produced on demand.
class QSequence {
 public:
  using Generator = std::function<Integer(std::uint64_t)>;

  // Q_n = 2^(2^(2n + i)).
  static QSequence doubly_exponential(std::uint64_t i, SizeCap cap = {});
  // Any generator; monotonicity is checked on every scan.
  static QSequence from_generator(std::string name, Generator g, SizeCap cap = {});

  // Q_n for n >= 1. Throws SizeCapExceeded when Q_n is too large.
  Integer term(std::uint64_t n) const;
  // Least n with Q_n >= q, together with Q_n.
  std::pair<std::uint64_t, Integer> cover(const Integer& q) const;

  const std::string& name() const { return name_; }
  std::optional<std::uint64_t> doubly_exponential_index() const { return dexp_; }
  const SizeCap& cap() const { return cap_; }

 private:
  QSequence(std::string name, Generator g, SizeCap cap, std::optional<std::uint64_t> dexp)
      : name_(std::move(name)), gen_(std::move(g)), cap_(cap), dexp_(dexp) {}

  std::string name_;
  Generator gen_;
  SizeCap cap_;
  std::optional<std::uint64_t> dexp_;
};

}  // namespace dioph
