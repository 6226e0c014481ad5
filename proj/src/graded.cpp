#include "maroni/graded.hpp"

#include <algorithm>
#include <climits>

namespace maroni {

GradedTate GradedTate::unit() { return single(0, 0, 1); }

GradedTate GradedTate::single(int degree, int weight, long long mult) {
  GradedTate g;
  g.add(degree, weight, mult);
  return g;
}

void GradedTate::add(int degree, int weight, long long mult) {
  if (mult == 0) return;
  auto key = Key{degree, weight};
  auto it = entries_.find(key);
  long long next = (it == entries_.end() ? 0 : it->second) + mult;
  if (next < 0) throw consistency_error(errc::not_divisible, "negative multiplicity");
  if (next == 0) {
    if (it != entries_.end()) entries_.erase(it);
  } else {
    entries_[key] = next;
  }
}

long long GradedTate::multiplicity(int degree, int weight) const {
  auto it = entries_.find(Key{degree, weight});
  return it == entries_.end() ? 0 : it->second;
}

long long GradedTate::class_count() const {
  long long total = 0;
  for (const auto& [key, mult] : entries_) total += mult;
  return total;
}

long long GradedTate::euler() const {
  long long total = 0;
  for (const auto& [key, mult] : entries_) total += (key.first % 2 == 0 ? mult : -mult);
  return total;
}

int GradedTate::min_degree() const {
  if (entries_.empty()) throw std::logic_error("min_degree of empty GradedTate");
  return entries_.begin()->first.first;
}

int GradedTate::max_degree() const {
  if (entries_.empty()) throw std::logic_error("max_degree of empty GradedTate");
  return entries_.rbegin()->first.first;
}

GradedTate GradedTate::tensor(const GradedTate& other) const {
  GradedTate out;
  for (const auto& [ka, ma] : entries_)
    for (const auto& [kb, mb] : other.entries_)
      out.add(ka.first + kb.first, ka.second + kb.second, ma * mb);
  return out;
}

GradedTate GradedTate::twist_shift(int d_degree, int d_weight) const {
  GradedTate out;
  for (const auto& [key, mult] : entries_)
    out.add(key.first + d_degree, key.second + d_weight, mult);
  return out;
}

bool GradedTate::subtract(const GradedTate& other) {
  for (const auto& [key, mult] : other.entries_) {
    auto it = entries_.find(key);
    if (it == entries_.end() || it->second < mult) return false;
    it->second -= mult;
    if (it->second == 0) entries_.erase(it);
  }
  return true;
}

bool GradedTate::subtract_up_to(const GradedTate& other, int max_degree) {
  for (const auto& [key, mult] : other.entries_) {
    if (key.first > max_degree) continue;
    auto it = entries_.find(key);
    if (it == entries_.end() || it->second < mult) return false;
    it->second -= mult;
    if (it->second == 0) entries_.erase(it);
  }
  return true;
}

GradedTate GradedTate::divide_impl(const GradedTate& fiber, bool truncated,
                                   int max_degree) const {
  if (fiber.multiplicity(0, 0) != 1)
    throw consistency_error(errc::not_divisible, "fiber must contain (0,0) once");
  for (const auto& [key, mult] : fiber.entries_)
    if (key.first < 0 || (key.first == 0 && key != Key{0, 0}))
      throw consistency_error(errc::not_divisible,
                              "fiber entries other than (0,0) must sit in positive degree");

  // Deconvolution in increasing degree. Every remaining entry in the lowest
  // degree must come from quotient * (0,0), so that slice of the remainder is
  // a quotient slice; subtracting its product with the whole fiber clears it
  // and only touches higher degrees.
  GradedTate remainder = truncated ? truncate(max_degree) : *this;
  GradedTate quotient;
  while (!remainder.empty()) {
    int degree = remainder.min_degree();
    if (truncated && degree > max_degree) break;
    GradedTate slice;
    for (const auto& [key, mult] : remainder.entries_) {
      if (key.first != degree) break;
      slice.add(key.first, key.second, mult);
    }
    bool ok = truncated ? remainder.subtract_up_to(slice.tensor(fiber), max_degree)
                        : remainder.subtract(slice.tensor(fiber));
    if (!ok)
      throw consistency_error(errc::not_divisible,
                              "no exact quotient at degree " + std::to_string(degree));
    quotient = quotient + slice;
  }
  return quotient;
}

GradedTate GradedTate::divide(const GradedTate& fiber) const {
  return divide_impl(fiber, false, 0);
}

GradedTate GradedTate::divide_up_to(const GradedTate& fiber, int max_degree) const {
  return divide_impl(fiber, true, max_degree);
}

GradedTate GradedTate::truncate(int max_degree) const {
  GradedTate out;
  for (const auto& [key, mult] : entries_) {
    if (key.first <= max_degree) out.add(key.first, key.second, mult);
  }
  return out;
}

std::vector<std::pair<int, long long>> GradedTate::weights_in_degree(int degree) const {
  std::vector<std::pair<int, long long>> out;
  for (auto it = entries_.lower_bound(Key{degree, INT_MIN}); it != entries_.end(); ++it) {
    if (it->first.first != degree) break;
    out.emplace_back(it->first.second, it->second);
  }
  return out;
}

GradedTate GradedTate::operator+(const GradedTate& other) const {
  GradedTate out = *this;
  for (const auto& [key, mult] : other.entries_) out.add(key.first, key.second, mult);
  return out;
}

}  // namespace maroni
