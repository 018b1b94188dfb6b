#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "apportion/methods.hpp"

namespace apportion::detail {

/// Position on the multiplier axis, stored as M / V so that keys of
/// different parties compare by a single cross-multiplication.
struct ThresholdKey {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend std::strong_ordering operator<=>(const ThresholdKey& a, const ThresholdKey& b) {
    return compare_fractions(a.num, a.den, b.num, b.den);
  }
  friend bool operator==(const ThresholdKey& a, const ThresholdKey& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

/// Multipliers at which each party gains its next seat under a rounding rule,
/// optionally offset by seats the party already holds (district seeds).
///
/// Party i gains extra seat s at M = (d_i + s - 1 + t) * V / v_i, which is the
/// smallest M with round(M f_i - d_i) >= s.
class ThresholdSchedule {
 public:
  ThresholdSchedule(const VoteTally& tally, const RoundingRule& rounding,
                    std::span<const Seats> offset = {})
      : tally_(tally), rounding_(rounding), offset_(offset.begin(), offset.end()) {
    if (offset_.empty()) offset_.assign(tally.size(), 0);
  }

  bool eligible(std::size_t i) const { return tally_.votes(i) > 0; }

  ThresholdKey key(std::size_t i, Seats s) const {
    const auto& t = rounding_.threshold();
    return {(offset_[i] + s - 1) * t.den() + t.num(), t.den() * tally_.votes(i)};
  }

  Rational multiplier(const ThresholdKey& k) const {
    return Rational(k.num, k.den) * Rational(tally_.total());
  }

  /// Extra seats of party i at multiplier M.
  Seats seats_at(std::size_t i, const Rational& m) const {
    if (!eligible(i)) return 0;
    const Rational x = m * tally_.share(i) - offset_[i];
    return rounding_.apply(x);
  }

  std::vector<Seats> seats_at(const Rational& m) const {
    std::vector<Seats> out(tally_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = seats_at(i, m);
    return out;
  }

 private:
  const VoteTally& tally_;
  RoundingRule rounding_;
  std::vector<Seats> offset_;
};

}  // namespace apportion::detail
