#include "saito/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "saito/errors.hpp"

namespace saito {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parse_bool(const std::string& value, std::size_t line) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw Error(ErrorCode::Syntax, "line " + std::to_string(line) + ": expected true or false");
}

}  // namespace

FixtureSpec parse_fixture(std::string_view text, std::string name) {
  FixtureSpec spec;
  spec.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string raw, section;
  std::size_t line_no = 0;
  std::map<std::string, std::vector<std::string>> sections;
  std::vector<std::string> order;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (section.empty()) spec.comments.push_back(trim(line.substr(1)));
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      static const std::vector<std::string> known{"polynomial", "G", "dual-G", "S", "expect"};
      if (std::find(known.begin(), known.end(), section) == known.end())
        throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      if (sections.count(section))
        throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": repeated section [" + section + "]");
      sections[section];
      continue;
    }
    if (section.empty())
      throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": text before the first section");
    if (section == "expect") {
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "pc") spec.expect_pc = parse_bool(value, line_no);
      else if (key == "duality") spec.expect_duality = parse_bool(value, line_no);
      else if (key == "golden") spec.golden = value;
      else throw Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": unknown key " + key);
      continue;
    }
    sections[section].push_back(line);
  }
  if (!sections.count("polynomial") || sections["polynomial"].empty())
    throw Error(ErrorCode::Syntax, "missing [polynomial]");
  for (const auto& part : sections["polynomial"]) spec.polynomial += part;
  if (sections.count("G")) spec.g = sections["G"];
  if (sections.count("dual-G")) spec.dual_g = sections["dual-G"];
  if (sections.count("S")) spec.s = sections["S"];
  return spec;
}

std::string FixtureSpec::serialize() const {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "[polynomial]\n" + polynomial + "\n";
  auto list = [&](const char* title, const std::vector<std::string>& items) {
    out += std::string("[") + title + "]\n";
    for (const auto& x : items) out += x + "\n";
  };
  if (g) list("G", *g);
  if (dual_g) list("dual-G", *dual_g);
  list("S", s);
  if (expect_pc || expect_duality || golden) {
    out += "[expect]\n";
    if (expect_pc) out += std::string("pc = ") + (*expect_pc ? "true" : "false") + "\n";
    if (expect_duality) out += std::string("duality = ") + (*expect_duality ? "true" : "false") + "\n";
    if (golden) out += "golden = " + *golden + "\n";
  }
  return out;
}

FixtureSpec load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str(), path.stem().string());
}

std::vector<std::filesystem::path> list_fixtures(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  if (!std::filesystem::is_directory(dir))
    throw Error(ErrorCode::InvalidArgument, "not a directory: " + dir.string());
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".fixture") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::string>> named_group(std::string_view name) {
  static const std::map<std::string, std::vector<std::string>, std::less<>> groups{
      {"A3", {"(123)"}},
      {"A4", {"(123)", "(12)(34)"}},
      {"A5", {"(12345)", "(123)"}},
      {"D10", {"(12345)", "(14)(23)"}},
      {"Z2x2", {"(12)(34)", "(13)(24)"}},
  };
  auto it = groups.find(name);
  if (it == groups.end()) return std::nullopt;
  return it->second;
}

PermGroup parse_perm_group(int n, const std::vector<std::string>& generators) {
  std::vector<Permutation> perms;
  for (const auto& g : generators) {
    if (auto named = named_group(g)) {
      for (const auto& x : *named) perms.push_back(Permutation::from_cycles(n, x));
    } else {
      perms.push_back(Permutation::from_cycles(n, g));
    }
  }
  return PermGroup::from_generators(n, std::move(perms));
}

LoadedFixture resolve_fixture(const FixtureSpec& spec) {
  LoadedFixture out{spec, InvertiblePolynomial::parse(spec.polynomial), {}, {}, {}};
  out.s = parse_perm_group(out.f.n(), spec.s);
  out.g_f = DiagonalGroup::create(out.f.exponents());
  if (spec.g) {
    std::vector<DiagonalElement> gens;
    for (const auto& x : *spec.g) gens.push_back(out.g_f->parse_element(x));
    out.g = subgroup_generated(out.g_f, gens);
  } else {
    out.g = DiagonalSubgroup::whole(out.g_f);
  }
  return out;
}

FixtureSpec dual_fixture(const LoadedFixture& fixture) {
  if (!fixture.g.is_invariant(fixture.s))
    throw Error(ErrorCode::NotPreserved, "G is not S-invariant");
  const InvertiblePolynomial ft = fixture.f.transposed();
  const DiagonalSubgroup dual = annihilator(fixture.g, DiagonalGroup::create(ft.exponents()));
  FixtureSpec out;
  out.name = fixture.spec.name + "_dual";
  out.comments.push_back("dual of " + fixture.spec.name);
  out.polynomial = ft.to_string();
  std::vector<std::string> gens;
  for (const auto& v : dual.generators()) gens.push_back(v.to_string());
  if (gens.empty()) gens.push_back("0");
  out.g = gens;
  std::vector<std::string> original;
  for (const auto& v : fixture.g.generators()) original.push_back(v.to_string());
  if (original.empty()) original.push_back("0");
  out.dual_g = original;
  out.s = fixture.spec.s;
  out.expect_pc = fixture.spec.expect_pc;
  return out;
}

}  // namespace saito
