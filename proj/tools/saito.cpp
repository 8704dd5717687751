// Command-line front end over the bundled fixtures.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oracle.hpp"
#include "saito/errors.hpp"
#include "saito/euler.hpp"
#include "saito/fixture.hpp"
#include "saito/report.hpp"

#ifndef SAITO_FIXTURE_DIR
#define SAITO_FIXTURE_DIR "fixtures"
#endif

namespace fs = std::filesystem;
using namespace saito;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct Options {
  bool json = false;
  bool oracle = false;
  bool reduced = false;
  std::size_t max_group_order = 0;
  std::string fixtures;
  std::vector<std::string> files;
};

fs::path fixture_dir(const Options& opt) {
  if (!opt.fixtures.empty()) return opt.fixtures;
  if (const char* env = std::getenv("SAITO_FIXTURES"); env && *env) return env;
  return SAITO_FIXTURE_DIR;
}

// A path, or a fixture name looked up in the fixture directory.
fs::path locate(const Options& opt, const std::string& arg) {
  if (fs::exists(arg)) return arg;
  const fs::path named = fixture_dir(opt) / (arg + ".fixture");
  if (fs::exists(named)) return named;
  throw Error(ErrorCode::InvalidArgument, "no fixture " + arg);
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::StructuralAssumptionViolated ? kMismatch : kInputError;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void emit(const Options& opt, const Json& record, const std::string& text) {
  if (opt.json) std::cout << record.dump() << "\n";
  else std::cout << text << std::flush;
}

bool too_large(const Options& opt, const PermGroup& s) {
  return opt.max_group_order > 0 && s.order() > opt.max_group_order;
}

template <class Fn>
int for_each_file(const Options& opt, Fn fn) {
  int code = kOk;
  for (const auto& arg : opt.files) {
    try {
      code = std::max(code, fn(locate(opt, arg)));
    } catch (const Error& e) {
      std::cerr << arg << ": " << e.what() << "\n";
      code = std::max(code, exit_code_for(e));
    }
  }
  return code;
}

std::string describe_blocks(const std::vector<AtomicBlock>& blocks) {
  std::ostringstream out;
  for (const auto& b : blocks) {
    out << "  " << (b.kind == BlockKind::Chain ? "chain" : "loop ") << " (";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << "x" << b.variables[i] + 1;
    out << ") p=(";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b.exponents[i];
    out << ")\n";
  }
  return out.str();
}

int cmd_validate(const Options& opt) {
  return for_each_file(opt, [&](const fs::path& path) {
    const FixtureSpec spec = load_fixture(path);
    const ExponentMatrix e = parse_polynomial(spec.polynomial);
    const auto blocks = decompose_blocks(e);
    const PermGroup s = parse_perm_group(static_cast<int>(e.variables()), spec.s);
    const BlockActionReport action = check_S_invariance(e, blocks, s);
    validate_invertible(e);
    std::size_t chains = 0;
    for (const auto& b : blocks) chains += b.kind == BlockKind::Chain;
    std::ostringstream text;
    text << spec.name << ": " << chains << " chains, " << blocks.size() - chains << " loops\n"
         << describe_blocks(blocks);
    for (const auto& o : action.orbits)
      if (o.type == BlockActionType::Second)
        text << "  block orbit of x" << blocks[o.blocks[0]].variables[0] + 1 << ": rotated, l=" << o.period
             << ", k=" << o.rotation_order << "\n";
    emit(opt, Json{{"fixture", spec.name}, {"blocks", to_json(blocks)}, {"action", to_json(action)}}, text.str());
    return kOk;
  });
}

int cmd_pc(const Options& opt) {
  return for_each_file(opt, [&](const fs::path& path) {
    const FixtureSpec spec = load_fixture(path);
    const ExponentMatrix e = parse_polynomial(spec.polynomial);
    const PermGroup s = parse_perm_group(static_cast<int>(e.variables()), spec.s);
    const PcResult pc = pc_check(s);
    const bool ok = !spec.expect_pc || *spec.expect_pc == pc.satisfies;
    std::string text = spec.name + ": S=" + s.to_string() + " PC " + (pc.satisfies ? "holds" : "fails");
    if (pc.witness) text += " (witness " + pc.witness->to_string() + ")";
    if (!ok) text += "  MISMATCH: expected " + yes_no(*spec.expect_pc);
    Json rec{{"fixture", spec.name}, {"S", s.to_string()}, {"pc", to_json(pc)}, {"ok", ok}};
    emit(opt, rec, text + "\n");
    return ok ? kOk : kMismatch;
  });
}

int cmd_dual(const Options& opt) {
  return for_each_file(opt, [&](const fs::path& path) {
    const LoadedFixture fx = resolve_fixture(load_fixture(path));
    const FixtureSpec dual = dual_fixture(fx);
    int code = kOk;
    if (fx.spec.dual_g) {
      const auto g_dual = DiagonalGroup::create(fx.f.transposed().exponents());
      std::vector<DiagonalElement> listed;
      for (const auto& x : *fx.spec.dual_g) listed.push_back(g_dual->parse_element(x));
      const DiagonalSubgroup expected = subgroup_generated(g_dual, listed);
      const DiagonalSubgroup computed = annihilator(fx.g, g_dual);
      if (!(expected == computed)) {
        std::cerr << fx.spec.name << ": listed dual group (order " << expected.order()
                  << ") differs from the annihilator (order " << computed.order() << ")\n";
        code = kMismatch;
      }
    }
    if (opt.json) std::cout << Json{{"fixture", fx.spec.name}, {"dual", dual.serialize()}}.dump() << "\n";
    else std::cout << dual.serialize();
    return code;
  });
}

fs::path golden_path(const fs::path& fixture, const std::string& golden) {
  return fixture.parent_path() / "golden" / golden;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_euler(const Options& opt) {
  return for_each_file(opt, [&](const fs::path& path) {
    const LoadedFixture fx = resolve_fixture(load_fixture(path));
    EulerContext ctx(fx.f, fx.s);
    const EulerResult result = equivariant_euler_detailed(ctx);
    const BurnsideElement value = opt.reduced ? result.total.reduced() : result.total;
    int code = kOk;
    if (fx.spec.golden && !opt.reduced) {
      const fs::path golden = golden_path(path, *fx.spec.golden);
      if (fs::exists(golden) && read_file(golden) != value.to_jsonl()) {
        std::cerr << fx.spec.name << ": output differs from " << golden << "\n";
        code = kMismatch;
      }
    }
    if (opt.json) {
      Json strata = Json::array();
      for (const auto& c : result.strata) strata.push_back(to_json(c));
      std::cout << Json{{"fixture", fx.spec.name}, {"element", to_json(value)}, {"strata", strata}}.dump() << "\n";
    } else {
      std::cout << value.to_jsonl();
    }
    return code;
  });
}

std::string oracle_checks(const LoadedFixture& fx, const DualityReport& report) {
  const SemidirectProduct& amb = *report.lhs.ambient();
  if (amb.order() > 2000) return "oracle skipped (|G x| S| > 2000)";
  std::vector<HTClass> keys;
  for (const auto& [k, c] : report.lhs.terms()) keys.push_back(k);
  keys.push_back(canonicalize(amb, DiagonalSubgroup::trivial(fx.g_f), PermGroup::trivial(fx.f.n())));
  std::size_t checked = 0;
  for (const auto& a : keys)
    for (const auto& b : keys) {
      if (mark(amb, a, b) != oracle::naive_mark(amb, a, b))
        throw Error(ErrorCode::StructuralAssumptionViolated, "mark disagrees with the naive count");
      if (ht_conjugate_test(amb, a, b).has_value() != oracle::naive_conjugate(amb, a, b))
        throw Error(ErrorCode::StructuralAssumptionViolated, "conjugacy test disagrees with brute force");
      ++checked;
    }
  return "oracle: " + std::to_string(checked) + " class pairs agree";
}

int cmd_verify(const Options& opt) {
  return for_each_file(opt, [&](const fs::path& path) {
    const LoadedFixture fx = resolve_fixture(load_fixture(path));
    const auto start = std::chrono::steady_clock::now();
    const DualityReport report = verify_duality(fx.f, fx.s);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = !fx.spec.expect_duality || *fx.spec.expect_duality == report.equal;
    std::string text = fx.spec.name + ": equal=" + yes_no(report.equal) + " pc=" + yes_no(report.pc.satisfies);
    if (!ok) text += "  MISMATCH: expected " + yes_no(*fx.spec.expect_duality);
    text += "\n";
    if (!report.equal) text += "  lhs - rhs = " + report.diff.to_string() + "\n";
    Json rec = to_json(report);
    rec["fixture"] = fx.spec.name;
    rec["seconds"] = seconds;
    rec["ok"] = ok;
    if (opt.oracle) {
      const std::string msg = oracle_checks(fx, report);
      text += "  " + msg + "\n";
      rec["oracle"] = msg;
    }
    emit(opt, rec, text);
    return ok ? kOk : kMismatch;
  });
}

int cmd_table1(Options opt) {
  int code = kOk;
  for (const auto& path : list_fixtures(fixture_dir(opt))) {
    if (path.stem().string().rfind("table1_", 0) != 0) continue;
    try {
      const LoadedFixture fx = resolve_fixture(load_fixture(path));
      if (too_large(opt, fx.s)) {
        emit(opt, Json{{"fixture", fx.spec.name}, {"skipped", true}},
             fx.spec.name + ": skipped (|S| = " + std::to_string(fx.s.order()) + ")\n");
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      const DualityReport report = verify_duality(fx.f, fx.s);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool ok = (!fx.spec.expect_pc || *fx.spec.expect_pc == report.pc.satisfies) &&
                      (!fx.spec.expect_duality || *fx.spec.expect_duality == report.equal);
      std::ostringstream text;
      text << fx.spec.name << ": S=" << fx.s.to_string() << " |S|=" << fx.s.order()
           << " pc=" << yes_no(report.pc.satisfies) << " equal=" << yes_no(report.equal)
           << " time=" << std::fixed << std::setprecision(2) << seconds << "s" << (ok ? "" : "  MISMATCH")
           << "\n";
      emit(opt,
           Json{{"fixture", fx.spec.name}, {"S", fx.s.to_string()}, {"pc", report.pc.satisfies},
                {"equal", report.equal}, {"seconds", seconds}, {"ok", ok}},
           text.str());
      if (!ok) code = std::max(code, kMismatch);
    } catch (const Error& e) {
      std::cerr << path.stem().string() << ": " << e.what() << "\n";
      code = std::max(code, exit_code_for(e));
    }
  }
  return code;
}

int cmd_selftest(Options opt) {
  int code = kOk;
  const fs::path dir = fixture_dir(opt);
  for (const auto& path : list_fixtures(dir)) {
    const std::string name = path.stem().string();
    std::vector<std::string> problems;
    try {
      const FixtureSpec spec = load_fixture(path);
      if (!(parse_fixture(spec.serialize(), spec.name) == spec)) problems.push_back("round trip");
      const LoadedFixture fx = resolve_fixture(spec);
      if (too_large(opt, fx.s)) {
        std::cout << name << ": skipped\n";
        continue;
      }
      check_S_invariance(fx.f, fx.s);
      const PcResult pc = pc_check(fx.s);
      if (spec.expect_pc && *spec.expect_pc != pc.satisfies) problems.push_back("pc");
      if (spec.expect_duality) {
        const DualityReport report = verify_duality(fx.f, fx.s);
        if (*spec.expect_duality != report.equal) problems.push_back("duality");
      }
      if (spec.golden) {
        EulerContext ctx(fx.f, fx.s);
        const auto golden = golden_path(path, *spec.golden);
        if (!fs::exists(golden) || read_file(golden) != equivariant_euler_detailed(ctx).total.to_jsonl())
          problems.push_back("golden");
      }
      if (spec.dual_g) {
        const auto g_dual = DiagonalGroup::create(fx.f.transposed().exponents());
        std::vector<DiagonalElement> listed;
        for (const auto& x : *spec.dual_g) listed.push_back(g_dual->parse_element(x));
        if (!(subgroup_generated(g_dual, listed) == annihilator(fx.g, g_dual))) problems.push_back("dual group");
      }
    } catch (const Error& e) {
      problems.push_back(e.what());
    }
    std::cout << name << ": " << (problems.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& p : problems) std::cout << "  " << p << "\n";
    if (!problems.empty()) code = kMismatch;
  }
  if (fs::is_directory(dir / "invalid")) {
    for (const auto& path : list_fixtures(dir / "invalid")) {
      bool rejected = false;
      try {
        const FixtureSpec spec = load_fixture(path);
        const ExponentMatrix e = parse_polynomial(spec.polynomial);
        const auto blocks = decompose_blocks(e);
        check_S_invariance(e, blocks, parse_perm_group(static_cast<int>(e.variables()), spec.s));
        validate_invertible(e);
      } catch (const Error&) {
        rejected = true;
      }
      std::cout << "invalid/" << path.stem().string() << ": " << (rejected ? "rejected" : "ACCEPTED") << "\n";
      if (!rejected) code = kMismatch;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Euler characteristics and Saito duality for invertible polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "JSON output, one object per line");
  app.add_flag("--oracle", opt.oracle, "run brute-force cross-checks on small groups");
  app.add_option("--max-group-order", opt.max_group_order, "skip fixtures with larger |S|");
  app.add_option("--fixtures", opt.fixtures, "fixture directory (default: $SAITO_FIXTURES or the bundled one)");

  auto files = [&](CLI::App* sub) { sub->add_option("fixtures", opt.files, "fixture files or names")->required(); };
  auto* validate = app.add_subcommand("validate", "chain/loop decomposition and S-action");
  files(validate);
  auto* pc = app.add_subcommand("pc", "parity condition of S");
  files(pc);
  auto* dual = app.add_subcommand("dual", "print the BHHT dual fixture");
  files(dual);
  auto* euler = app.add_subcommand("euler", "equivariant Euler characteristic as JSON lines");
  files(euler);
  euler->add_flag("--reduced", opt.reduced, "subtract [G^/G^]");
  auto* verify = app.add_subcommand("verify", "compare both sides of the duality");
  files(verify);
  auto* table1 = app.add_subcommand("table1", "summary over the catalogue pairs (table1_* fixtures)");
  auto* selftest = app.add_subcommand("selftest", "check every bundled fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (pc->parsed()) return cmd_pc(opt);
    if (dual->parsed()) return cmd_dual(opt);
    if (euler->parsed()) return cmd_euler(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (table1->parsed()) return cmd_table1(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  return kInputError;
}
