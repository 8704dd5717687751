#pragma once

#include <json.hpp>

#include "saito/burnside.hpp"
#include "saito/euler.hpp"
#include "saito/perm_group.hpp"
#include "saito/polynomial.hpp"

namespace saito {

using Json = nlohmann::ordered_json;

Json to_json(const HTClass& k, const BigInt& coefficient);
Json to_json(const BurnsideElement& x);  // array of class records
Json to_json(const std::vector<AtomicBlock>& blocks);
Json to_json(const BlockActionReport& report);
Json to_json(const PcResult& pc);
Json to_json(const StratumContribution& c);
Json to_json(const DualityReport& report);
Json to_json(const LemmaReport& report);

}  // namespace saito
