#include "pzeta/perm.hpp"

#include <algorithm>
#include <sstream>

#include "pzeta/error.hpp"

namespace pzeta {

namespace {

constexpr int kMaxDegree = 65535;

// Splits "(1 2 3)(4 5)" into cycles of 1-based points.
std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw Error("expected '(' in cycle notation: '" + text + "'");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw Error("unterminated cycle in '" + text + "'");
      if (text[i] == ')') { ++i; break; }
      if (text[i] == ',') { ++i; continue; }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("unexpected character in cycle notation: '" + text + "'");
      int p = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        p = p * 10 + (text[i] - '0');
        if (p > kMaxDegree) throw Error("point too large in '" + text + "'");
        ++i;
      }
      if (p < 1) throw Error("points are 1-based in '" + text + "'");
      cycle.push_back(p);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree)
    throw Error("permutation degree must be in [1, 65535]");
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw Error("image array is not a permutation");
    seen[p] = true;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 1) throw Error("degree must be >= 1");
  std::vector<Point> img(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Point>(i);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  auto cycles = parse_cycles(text);
  int max_point = 1;
  for (const auto& cyc : cycles)
    for (int p : cyc) max_point = std::max(max_point, p);
  if (degree < 0) degree = max_point;
  if (degree < max_point)
    throw Error("cycle mentions point beyond degree " + std::to_string(degree));

  Perm result = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
  for (const auto& cyc : cycles) {
    for (int p : cyc) {
      if (used[static_cast<std::size_t>(p)])
        throw Error("cycles must be disjoint in '" + text + "'");
      used[static_cast<std::size_t>(p)] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k] - 1;
      int to = cyc[(k + 1) % cyc.size()] - 1;
      result.images_[static_cast<std::size_t>(from)] = static_cast<Point>(to);
    }
  }
  return result;
}

Perm Perm::compose(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw Error("cannot compose permutations of different degree");
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = images_[rhs.images_[i]];
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::inverse() const {
  std::vector<Point> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[images_[i]] = static_cast<Point>(i);
  return Perm(std::move(img), Unchecked{});
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    std::size_t p = start;
    bool first = true;
    do {
      seen[p] = true;
      if (!first) os << ' ';
      os << (p + 1);
      first = false;
      p = images_[p];
    } while (p != start);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::vector<Perm> parse_generators(const std::string& text, int degree) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream is(text);
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }

  if (degree < 0) {
    int max_point = 1;
    for (const auto& l : lines)
      for (const auto& cyc : parse_cycles(l))
        for (int p : cyc) max_point = std::max(max_point, p);
    degree = max_point;
  }

  std::vector<Perm> gens;
  gens.reserve(lines.size());
  for (const auto& l : lines) gens.push_back(Perm::from_cycles(l, degree));
  return gens;
}

}  // namespace pzeta
