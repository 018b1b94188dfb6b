#pragma once

#include <nlohmann/json.hpp>

#include "apportion/allocation.hpp"
#include "apportion/methods.hpp"
#include "apportion/oracle.hpp"
#include "apportion/seeded.hpp"

// JSON encoding of engine results. Rationals are always {"num": n, "den": d}
// so that audit output stays exact; party references are input indices.

namespace apportion {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const TiePolicy& t);
void from_json(const nlohmann::json& j, TiePolicy& t);

void to_json(nlohmann::json& j, const TieEvent& e);
void from_json(const nlohmann::json& j, TieEvent& e);

void to_json(nlohmann::json& j, const Allocation& a);
void from_json(const nlohmann::json& j, Allocation& a);

void to_json(nlohmann::json& j, const DivisorStep& s);
void from_json(const nlohmann::json& j, DivisorStep& s);

void to_json(nlohmann::json& j, const MultiplierStep& s);
void from_json(const nlohmann::json& j, MultiplierStep& s);

void to_json(nlohmann::json& j, const TraceTable& t);
void from_json(const nlohmann::json& j, TraceTable& t);

void to_json(nlohmann::json& j, const SequentialAward& a);
void from_json(const nlohmann::json& j, SequentialAward& a);

void to_json(nlohmann::json& j, const SeededStep& s);
void from_json(const nlohmann::json& j, SeededStep& s);

void to_json(nlohmann::json& j, const SeededRun& r);
void from_json(const nlohmann::json& j, SeededRun& r);

void to_json(nlohmann::json& j, const QuotaReport& q);

nlohmann::json tally_to_json(const VoteTally& tally);

namespace oracle {

void to_json(nlohmann::json& j, const InstanceSpace& s);
void to_json(nlohmann::json& j, const Instance& i);
void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const Disagreement& d);
void to_json(nlohmann::json& j, const SuiteReport& r);

}  // namespace oracle
}  // namespace apportion
