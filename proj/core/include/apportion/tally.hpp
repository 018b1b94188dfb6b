#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apportion/rational.hpp"

namespace apportion {

using Votes = std::int64_t;
using Seats = std::int64_t;

struct Party {
  std::string id;
  Votes votes = 0;
};

/// Validated vote counts, in input order.
///
/// At least one party, at least one positive count, unique ids, and a total
/// that fits in 64 bits. Vote shares are only ever exposed as exact rationals.
class VoteTally {
 public:
  explicit VoteTally(std::vector<Party> parties);

  /// Parties named P1..Pk.
  static VoteTally from_votes(std::span<const Votes> votes);

  std::size_t size() const { return parties_.size(); }
  const std::vector<Party>& parties() const { return parties_; }
  const std::string& id(std::size_t i) const { return parties_.at(i).id; }
  Votes votes(std::size_t i) const { return parties_.at(i).votes; }
  Votes total() const { return total_; }
  std::vector<Votes> vote_vector() const;

  /// v_i / V
  Rational share(std::size_t i) const;

 private:
  std::vector<Party> parties_;
  Votes total_ = 0;
};

struct PartyQuota {
  Rational ideal;  // N * v_i / V
  Seats lower = 0;
  Seats upper = 0;
};

struct QuotaReport {
  Seats house_size = 0;
  std::vector<PartyQuota> parties;
  /// V / N; absent for an empty house.
  std::optional<Rational> ideal_quota;

  /// ideal_i - seats_i for every party.
  std::vector<Rational> residuals(std::span<const Seats> seats) const;
};

QuotaReport compute_quotas(const VoteTally& tally, Seats house_size);

}  // namespace apportion
