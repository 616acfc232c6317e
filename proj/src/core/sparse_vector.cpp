#include "dioph/sparse_vector.hpp"

#include <algorithm>

#include "dioph/errors.hpp"

namespace dioph {

std::vector<Run> SparseVector::normalize(std::vector<Run> runs) {
  std::erase_if(runs, [](const Run& r) { return r.value == 0 || r.length == 0; });
  for (const Run& r : runs) {
    if (r.start < 1) throw UsageError("sequence indices start at 1, got " + to_string(r.start));
    if (r.length < 0) throw UsageError("negative run length");
  }
  std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.start < b.start; });
  std::vector<Run> out;
  out.reserve(runs.size());
  for (Run& r : runs) {
    if (!out.empty()) {
      Run& last = out.back();
      if (last.end() > r.start) throw UsageError("overlapping runs at index " + to_string(r.start));
      if (last.end() == r.start && last.value == r.value) {
        last.length += r.length;
        continue;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

SparseVector SparseVector::from_entries(const std::map<Integer, Rational>& entries) {
  std::vector<Run> runs;
  runs.reserve(entries.size());
  for (const auto& [index, value] : entries) runs.push_back({index, Integer(1), value});
  return SparseVector(normalize(std::move(runs)));
}

SparseVector SparseVector::unit(const Integer& index) { return block(index, 1, Rational(1)); }

SparseVector SparseVector::block(const Integer& start, const Integer& length, const Rational& value) {
  return SparseVector(normalize({Run{start, length, value}}));
}

SparseVector SparseVector::from_runs(std::vector<Run> runs) { return SparseVector(normalize(std::move(runs))); }

Rational SparseVector::at(const Integer& index) const {
  auto it = std::upper_bound(runs_.begin(), runs_.end(), index,
                             [](const Integer& i, const Run& r) { return i < r.start; });
  if (it == runs_.begin()) return Rational(0);
  --it;
  return index < it->end() ? it->value : Rational(0);
}

Integer SparseVector::support_size() const {
  Integer total = 0;
  for (const Run& r : runs_) total += r.length;
  return total;
}

Integer SparseVector::max_index() const { return runs_.empty() ? Integer(0) : runs_.back().end() - 1; }

Integer SparseVector::first_free_index() const {
  Integer pos = 1;
  for (const Run& r : runs_) {
    if (r.start > pos) break;
    pos = r.end();
  }
  return pos;
}

std::map<Integer, Rational> SparseVector::entries() const {
  std::map<Integer, Rational> out;
  for (const Run& r : runs_) {
    for (Integer i = r.start; i < r.end(); ++i) out.emplace(i, r.value);
  }
  return out;
}

bool SparseVector::is_integral() const {
  return std::all_of(runs_.begin(), runs_.end(), [](const Run& r) { return r.value.get_den() == 1; });
}

void SparseVector::for_each_segment(
    const SparseVector& a, const SparseVector& b,
    const std::function<void(const Integer&, const Integer&, const Rational&, const Rational&)>& f) {
  std::vector<Integer> cuts;
  cuts.reserve(2 * (a.runs_.size() + b.runs_.size()));
  for (const auto* v : {&a, &b}) {
    for (const Run& r : v->runs_) {
      cuts.push_back(r.start);
      cuts.push_back(r.end());
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const Rational zero(0);
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Integer& lo = cuts[k];
    while (ia < a.runs_.size() && a.runs_[ia].end() <= lo) ++ia;
    while (ib < b.runs_.size() && b.runs_[ib].end() <= lo) ++ib;
    bool in_a = ia < a.runs_.size() && a.runs_[ia].start <= lo;
    bool in_b = ib < b.runs_.size() && b.runs_[ib].start <= lo;
    if (!in_a && !in_b) continue;
    f(lo, cuts[k + 1] - lo, in_a ? a.runs_[ia].value : zero, in_b ? b.runs_[ib].value : zero);
  }
}

SparseVector SparseVector::combine(const SparseVector& a, const SparseVector& b,
                                   const std::function<Rational(const Rational&, const Rational&)>& f) {
  std::vector<Run> runs;
  for_each_segment(a, b, [&](const Integer& start, const Integer& len, const Rational& x, const Rational& y) {
    runs.push_back({start, len, f(x, y)});
  });
  return SparseVector(normalize(std::move(runs)));
}

SparseVector SparseVector::map(const std::function<Rational(const Rational&)>& f) const {
  std::vector<Run> runs = runs_;
  for (Run& r : runs) r.value = f(r.value);
  return SparseVector(normalize(std::move(runs)));
}

SparseVector SparseVector::operator+(const SparseVector& other) const {
  return combine(*this, other, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

SparseVector SparseVector::operator-(const SparseVector& other) const {
  return combine(*this, other, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

SparseVector SparseVector::operator-() const {
  return map([](const Rational& x) { return Rational(-x); });
}

SparseVector SparseVector::operator*(const Rational& factor) const {
  return map([&](const Rational& x) { return Rational(x * factor); });
}

SparseVector SparseVector::operator/(const Rational& divisor) const {
  if (divisor == 0) throw UsageError("division of a vector by zero");
  return map([&](const Rational& x) { return Rational(x / divisor); });
}

std::strong_ordering lex_compare(const SparseVector& a, const SparseVector& b) {
  std::strong_ordering result = std::strong_ordering::equal;
  SparseVector::for_each_segment(a, b, [&](const Integer&, const Integer&, const Rational& x, const Rational& y) {
    if (result == std::strong_ordering::equal && x != y) result = compare(x, y);
  });
  return result;
}

Integer height_std(const SparseVector& r) {
  Integer h = 1;
  for (const Run& run : r.runs()) h = lcm(h, run.value.get_den());
  return h;
}

}  // namespace dioph
