#include <algorithm>
#include <numeric>

#include "apportion/errors.hpp"
#include "apportion/methods.hpp"

namespace apportion {

Allocation hare_niemeyer(const VoteTally& tally, Seats house_size, const TiePolicy& tie,
                         Form form) {
  if (house_size < 0) throw InvalidInput("house size must be non-negative");
  if (form == Form::sequential) return sequential_hare(tally, house_size, tie).allocation;

  const std::size_t k = tally.size();
  Allocation out;
  out.method = Method::hare;
  out.form = form;
  out.house_size = house_size;
  out.seats.assign(k, 0);
  if (house_size == 0) return out;

  std::vector<Rational> quotient(k);
  if (form == Form::divisor) {
    const Rational q(tally.total(), house_size);
    for (std::size_t i = 0; i < k; ++i) quotient[i] = Rational(tally.votes(i)) / q;
  } else {
    for (std::size_t i = 0; i < k; ++i) quotient[i] = tally.share(i) * house_size;
  }

  std::vector<Rational> residual(k);
  Seats assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    out.seats[i] = quotient[i].floor();
    residual[i] = quotient[i] - out.seats[i];
    assigned += out.seats[i];
  }

  const auto remaining = static_cast<std::size_t>(house_size - assigned);
  if (remaining == 0) return out;

  const TieOrder order(tally, tie);
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (residual[a] != residual[b]) return residual[a] > residual[b];
    return order.before(a, b);
  });
  for (std::size_t r = 0; r < remaining; ++r) ++out.seats[idx[r]];

  if (remaining < k && residual[idx[remaining - 1]] == residual[idx[remaining]]) {
    const Rational cut = residual[idx[remaining]];
    TieEvent ev{"residual", std::nullopt, cut, {}, {}};
    for (std::size_t r = 0; r < k; ++r) {
      if (residual[idx[r]] != cut) continue;
      ev.tied.push_back(idx[r]);
      if (r < remaining) ev.chosen.push_back(idx[r]);
    }
    out.tie_events.push_back(std::move(ev));
  }
  return out;
}

SequentialResult sequential_hare(const VoteTally& tally, Seats house_size, const TiePolicy& tie) {
  if (house_size < 0) throw InvalidInput("house size must be non-negative");
  const std::size_t k = tally.size();
  const TieOrder order(tally, tie);

  SequentialResult res;
  Allocation& out = res.allocation;
  out.method = Method::hare;
  out.form = Form::sequential;
  out.house_size = house_size;
  out.seats.assign(k, 0);

  std::vector<Rational> deficit(k);
  for (std::size_t i = 0; i < k; ++i) deficit[i] = tally.share(i) * house_size;

  for (Seats step = 1; step <= house_size; ++step) {
    std::size_t best = order.order().front();
    for (std::size_t i : order.order())
      if (deficit[i] > deficit[best]) best = i;

    std::vector<std::size_t> tied;
    for (std::size_t i : order.order())
      if (deficit[i] == deficit[best]) tied.push_back(i);
    if (tied.size() > 1) out.tie_events.push_back({"deficit", step, deficit[best], tied, {best}});

    res.events.push_back({step, best, deficit[best]});
    ++out.seats[best];
    deficit[best] -= 1;
  }
  return res;
}

}  // namespace apportion
