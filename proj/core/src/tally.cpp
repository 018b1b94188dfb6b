#include "apportion/tally.hpp"

#include <limits>
#include <unordered_set>

#include "apportion/errors.hpp"

namespace apportion {

VoteTally::VoteTally(std::vector<Party> parties) : parties_(std::move(parties)) {
  if (parties_.empty()) throw InvalidInput("tally has no parties");
  std::unordered_set<std::string> seen;
  bool any_positive = false;
  for (const auto& p : parties_) {
    if (!seen.insert(p.id).second) throw InvalidInput("duplicate party id: " + p.id);
    if (p.votes < 0) throw InvalidInput("negative vote count for party " + p.id);
    if (p.votes > std::numeric_limits<Votes>::max() - total_)
      throw InvalidInput("total vote count overflows");
    total_ += p.votes;
    any_positive = any_positive || p.votes > 0;
  }
  if (!any_positive) throw InvalidInput("no party has positive votes");
}

VoteTally VoteTally::from_votes(std::span<const Votes> votes) {
  std::vector<Party> parties;
  parties.reserve(votes.size());
  for (std::size_t i = 0; i < votes.size(); ++i)
    parties.push_back({"P" + std::to_string(i + 1), votes[i]});
  return VoteTally(std::move(parties));
}

std::vector<Votes> VoteTally::vote_vector() const {
  std::vector<Votes> out;
  out.reserve(parties_.size());
  for (const auto& p : parties_) out.push_back(p.votes);
  return out;
}

Rational VoteTally::share(std::size_t i) const { return Rational(votes(i), total_); }

std::vector<Rational> QuotaReport::residuals(std::span<const Seats> seats) const {
  if (seats.size() != parties.size()) throw InvalidInput("seat vector does not match tally");
  std::vector<Rational> out;
  out.reserve(parties.size());
  for (std::size_t i = 0; i < parties.size(); ++i) out.push_back(parties[i].ideal - seats[i]);
  return out;
}

QuotaReport compute_quotas(const VoteTally& tally, Seats house_size) {
  if (house_size < 0) throw InvalidInput("house size must be non-negative");
  QuotaReport report;
  report.house_size = house_size;
  report.parties.reserve(tally.size());
  for (std::size_t i = 0; i < tally.size(); ++i) {
    Rational ideal = tally.share(i) * house_size;
    report.parties.push_back({ideal, ideal.floor(), ideal.ceil()});
  }
  if (house_size > 0) report.ideal_quota = Rational(tally.total(), house_size);
  return report;
}

}  // namespace apportion
