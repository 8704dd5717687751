#include "saito/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "saito/errors.hpp"

namespace saito {

IndexSet complement(const IndexSet& set, int n) {
  IndexSet out;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    if (k < set.size() && set[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

IndexSet full_set(int n) {
  IndexSet out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

std::string index_set_to_string(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set[i] + 1);
  }
  return out + "}";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidArgument, "image list is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, std::string_view text) {
  Permutation result = identity(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Syntax, "cycle notation '" + std::string(text) + "': " + why);
  };
  std::vector<Permutation> cycles;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("missing ')'");
    const std::string_view body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;

    std::vector<int> points;
    const bool separated = body.find_first_of(", ") != std::string_view::npos;
    if (separated) {
      std::string token;
      auto flush = [&] {
        if (!token.empty()) {
          points.push_back(std::stoi(token));
          token.clear();
        }
      };
      for (char c : body) {
        if (c == ',' || c == ' ') {
          flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          token += c;
        } else {
          fail("unexpected character");
        }
      }
      flush();
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("unexpected character");
        points.push_back(c - '0');
      }
    }
    std::vector<int> images = identity(n).images();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int from = points[i] - 1;
      const int to = points[(i + 1) % points.size()] - 1;
      if (from < 0 || from >= n) fail("point out of range");
      if (used[static_cast<std::size_t>(from)]) fail("repeated point in cycle");
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = to;
    }
    cycles.emplace_back(std::move(images));
  }
  for (const auto& c : cycles) result = result * c;
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw Error(ErrorCode::InvalidArgument, "degree mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::conjugated_by(const Permutation& s) const {
  return s * (*this) * s.inverse();
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = true;
  }
  return count;
}

bool Permutation::is_even() const { return (degree() - cycle_count()) % 2 == 0; }

IndexSet Permutation::apply(const IndexSet& set) const {
  IndexSet out;
  out.reserve(set.size());
  for (int i : set) out.push_back((*this)(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::to_cycles() const {
  const bool compact = degree() < 10;
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (!first && !compact) out << ',';
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace saito
