#include "saito/report.hpp"

#include <limits>

namespace saito {

namespace {

Json integer(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return to_int64(c);
  return c.str();
}

Json cycles(const PermGroup& t) {
  Json out = Json::array();
  for (const auto& p : t.canonical_generators()) out.push_back(p.to_cycles());
  return out;
}

}  // namespace

Json to_json(const HTClass& k, const BigInt& coefficient) {
  Json rec;
  rec["orbitType"] = k.orbit_type();
  rec["T"] = cycles(k.t);
  Json h = Json::array();
  for (const auto& v : k.h.generators()) h.push_back(v.to_string());
  rec["H"] = h;
  rec["coefficient"] = integer(coefficient);
  return rec;
}

Json to_json(const BurnsideElement& x) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms()) out.push_back(to_json(k, c));
  return out;
}

Json to_json(const std::vector<AtomicBlock>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) {
    Json vars = Json::array();
    for (int v : b.variables) vars.push_back(v + 1);
    out.push_back({{"kind", b.kind == BlockKind::Chain ? "chain" : "loop"},
                   {"variables", vars},
                   {"exponents", b.exponents}});
  }
  return out;
}

Json to_json(const BlockActionReport& report) {
  Json out = Json::array();
  for (const auto& o : report.orbits) {
    Json blocks = Json::array();
    for (auto b : o.blocks) blocks.push_back(b);
    Json rec{{"blocks", blocks}, {"type", o.type == BlockActionType::First ? "first" : "second"}};
    if (o.type == BlockActionType::Second) {
      rec["period"] = o.period;
      rec["rotationOrder"] = o.rotation_order;
    }
    out.push_back(rec);
  }
  return out;
}

Json to_json(const PcResult& pc) {
  Json out{{"satisfies", pc.satisfies}};
  if (pc.witness) out["witness"] = pc.witness->to_string();
  return out;
}

Json to_json(const StratumContribution& c) {
  Json set = Json::array();
  for (int i : c.set) set.push_back(i + 1);
  Json classes = Json::array();
  for (std::size_t i = 0; i < c.classes.size(); ++i)
    classes.push_back({{"T", c.classes[i].to_string()},
                       {"fixed", integer(c.fixed[i])},
                       {"coefficient", integer(c.coefficients[i])}});
  Json out{{"stratum", set},
           {"stabilizer", c.stabilizer.to_string()},
           {"isotropyOrder", c.isotropy.order()},
           {"classes", classes}};
  if (!c.notes.empty()) out["notes"] = c.notes;
  return out;
}

Json to_json(const DualityReport& report) {
  return {{"equal", report.equal},
          {"pc", to_json(report.pc)},
          {"lhs", to_json(report.lhs)},
          {"rhs", to_json(report.rhs)},
          {"diff", to_json(report.diff)}};
}

Json to_json(const LemmaReport& report) {
  Json out = Json::array();
  for (const auto& c : report.checks) out.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

}  // namespace saito
