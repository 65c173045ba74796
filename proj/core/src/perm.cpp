#include "permblocks/perm.hpp"

#include "union_find.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permblocks {

namespace {

bool all_digits(std::string_view token) {
  if (token.empty())
    return false;
  return std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

IndexSet::IndexSet(std::size_t size) : size_(size), names_(size) {}

IndexSet::IndexSet(std::size_t size, const std::map<std::size_t, std::string> &names)
    : size_(size), names_(size) {
  for (const auto &[index, name] : names) {
    if (index >= size)
      raise(ErrorKind::SchemaError,
            "name assigned to element " + std::to_string(index + 1) +
                " outside ground of size " + std::to_string(size));
    if (name.empty())
      raise(ErrorKind::SchemaError, "empty element name");
    if (all_digits(name))
      raise(ErrorKind::SchemaError,
            "element name '" + name + "' consists only of digits");
    for (unsigned char c : name)
      if (std::isspace(c) || c == '(' || c == ')' || c == ',')
        raise(ErrorKind::SchemaError,
              "element name '" + name + "' contains cycle-syntax characters");
    names_[index] = name;
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (!names_[i].empty() && names_[i] == names_[j])
        raise(ErrorKind::SchemaError, "duplicate element name '" + names_[i] + "'");
}

std::string IndexSet::display(std::size_t i) const {
  if (!names_[i].empty())
    return names_[i];
  return std::to_string(i + 1);
}

std::optional<std::size_t> IndexSet::find(std::string_view token) const {
  if (all_digits(token)) {
    std::size_t value = 0;
    for (char c : token) {
      if (value > size_) // avoid overflow; anything past size is unknown
        return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value == 0 || value > size_)
      return std::nullopt;
    return value - 1;
  }
  for (std::size_t i = 0; i < size_; ++i)
    if (names_[i] == token)
      return i;
  return std::nullopt;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t image : images_) {
    if (image >= images_.size() || seen[image])
      raise(ErrorKind::MalformedSyntax, "image table is not a bijection");
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t e = 0; e < images_.size(); ++e)
    if (images_[e] != e)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> images(images_.size());
  for (std::size_t e = 0; e < images_.size(); ++e)
    images[images_[e]] = e;
  return Permutation(std::move(images));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::uint64_t length = 0;
    for (std::size_t e = start; !seen[e]; e = images_[e]) {
      seen[e] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<std::size_t> cycle;
    for (std::size_t e = start; !seen[e]; e = images_[e]) {
      seen[e] = true;
      cycle.push_back(e);
    }
    if (cycle.size() > 1)
      result.push_back(std::move(cycle));
  }
  return result;
}

Permutation compose(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    raise(ErrorKind::GroundMismatch,
          "composing permutations of degree " + std::to_string(a.degree()) +
              " and " + std::to_string(b.degree()));
  std::vector<std::size_t> images(a.degree());
  for (std::size_t e = 0; e < a.degree(); ++e)
    images[e] = a(b(e));
  return Permutation(std::move(images));
}

Permutation parse_cycles(std::string_view text, const IndexSet &ground) {
  std::vector<std::size_t> images(ground.size());
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> used(ground.size(), false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  if (pos >= text.size())
    raise(ErrorKind::MalformedSyntax, "empty permutation string");

  // Bare "id" token (nothing may follow it).
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_space();
    if (pos != text.size())
      raise(ErrorKind::MalformedSyntax, "trailing input after 'id'");
    return Permutation(std::move(images));
  }

  bool saw_cycle = false;
  bool saw_empty = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      raise(ErrorKind::MalformedSyntax,
            std::string("expected '(' at position ") + std::to_string(pos + 1));
    ++pos;
    skip_space();

    std::vector<std::size_t> cycle;
    bool closed = false;
    while (pos < text.size()) {
      if (text[pos] == ')') {
        ++pos;
        closed = true;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        skip_space();
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != ')' && text[pos] != ',' && text[pos] != '(' &&
             !std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start)
        raise(ErrorKind::MalformedSyntax, "unexpected '(' inside a cycle");
      std::string_view token = text.substr(start, pos - start);
      auto element = ground.find(token);
      if (!element)
        raise(ErrorKind::UnknownElement,
              "'" + std::string(token) + "' is not an element of the ground set");
      if (used[*element])
        raise(ErrorKind::RepeatedElement,
              "element '" + ground.display(*element) + "' appears twice");
      used[*element] = true;
      cycle.push_back(*element);
      skip_space();
    }
    if (!closed)
      raise(ErrorKind::MalformedSyntax, "unterminated cycle, missing ')'");

    if (cycle.empty()) {
      // "()" denotes the identity and must stand alone.
      saw_empty = true;
    } else if (cycle.size() == 1) {
      raise(ErrorKind::MalformedSyntax,
            "cycle with a single element '" + ground.display(cycle[0]) +
                "'; fixed points are omitted");
    } else {
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      saw_cycle = true;
    }
    skip_space();
  }

  if (saw_empty && saw_cycle)
    raise(ErrorKind::MalformedSyntax, "'()' cannot be mixed with cycles");
  if (!saw_empty && !saw_cycle)
    raise(ErrorKind::MalformedSyntax, "no cycles found");
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation &perm, const IndexSet &ground) {
  if (perm.degree() != ground.size())
    raise(ErrorKind::GroundMismatch,
          "permutation degree " + std::to_string(perm.degree()) +
              " does not match ground size " + std::to_string(ground.size()));
  auto cycles = perm.cycles();
  if (cycles.empty())
    return "id";
  std::ostringstream out;
  for (const auto &cycle : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        out << ' ';
      out << ground.display(cycle[i]);
    }
    out << ')';
  }
  return out.str();
}

std::vector<std::vector<std::size_t>> orbits(std::span<const Permutation> gens,
                                             std::size_t ground_size) {
  for (const Permutation &g : gens)
    if (g.degree() != ground_size)
      raise(ErrorKind::GroundMismatch,
            "generator of degree " + std::to_string(g.degree()) +
                " on ground of size " + std::to_string(ground_size));
  detail::UnionFind uf(ground_size);
  for (const Permutation &g : gens)
    for (std::size_t e = 0; e < ground_size; ++e)
      uf.unite(e, g(e));
  std::vector<std::vector<std::size_t>> by_root(ground_size);
  for (std::size_t e = 0; e < ground_size; ++e)
    by_root[uf.find(e)].push_back(e);
  std::vector<std::vector<std::size_t>> result;
  for (auto &orbit : by_root)
    if (!orbit.empty())
      result.push_back(std::move(orbit)); // members pushed ascending
  // union-by-size roots are arbitrary, so restore the least-element order
  std::sort(result.begin(), result.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return result;
}

Permutation eval_word(const GroupWord &word, std::span<const Permutation> gens) {
  std::size_t degree = gens.empty() ? 0 : gens[0].degree();
  for (const Permutation &g : gens)
    if (g.degree() != degree)
      raise(ErrorKind::GroundMismatch, "generators act on different ground sets");
  Permutation result = Permutation::identity(degree);
  for (const WordLetter &letter : word.letters) {
    if (letter.generator >= gens.size())
      raise(ErrorKind::BadGeneratorIndex,
            "word references generator " + std::to_string(letter.generator) +
                " of " + std::to_string(gens.size()));
    if (letter.exponent == 0)
      raise(ErrorKind::MalformedSyntax, "word letter with zero exponent");
    Permutation base = letter.exponent > 0 ? gens[letter.generator]
                                           : gens[letter.generator].inverse();
    std::int64_t count = letter.exponent > 0 ? letter.exponent : -letter.exponent;
    for (std::int64_t i = 0; i < count; ++i)
      result = compose(result, base);
  }
  return result;
}

} // namespace permblocks
