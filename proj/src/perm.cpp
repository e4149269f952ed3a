#include "psigmat/perm.hpp"

#include <algorithm>
#include <cctype>

#include "psigmat/errors.hpp"

namespace psigmat {

Perm::Perm(int degree) : images_(degree) {
  for (int i = 0; i < degree; ++i) images_[i] = i;
}

Perm::Perm(int degree, std::vector<int> images) : images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != degree)
    throw ParseError("permutation image list does not match degree");
  std::vector<char> seen(degree, 0);
  for (int v : images_) {
    if (v < 0 || v >= degree || seen[v])
      throw ParseError("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::compose(const Perm& then) const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[i] = then.images_[images_[i]];
  return Perm(degree(), std::move(im));
}

Perm Perm::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<int>(i);
  return Perm(degree(), std::move(im));
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) != 0)) ++pos;
  };

  skip_ws();
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation near \"" + text.substr(pos) + "\"");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
      if (pos >= text.size()) throw ParseError("unterminated cycle in \"" + text + "\"");
      if (text[pos] == ')') { ++pos; break; }
      if (std::isdigit(static_cast<unsigned char>(text[pos])) == 0)
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in cycle notation");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > degree)
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      cycle.push_back(value - 1);
    }
    any_cycle = true;
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (im[from] != from)
        throw ParseError("point " + std::to_string(from + 1) + " appears twice in cycle notation");
      im[from] = to;
    }
    skip_ws();
  }
  if (!any_cycle) throw ParseError("empty permutation text");
  return Perm(degree, std::move(im));
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<char> done(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (done[start] || p.image(start) == start) continue;
    out += '(';
    int pt = start;
    bool first = true;
    while (!done[pt]) {
      done[pt] = 1;
      if (!first) out += ' ';
      out += std::to_string(pt + 1);
      first = false;
      pt = p.image(pt);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace psigmat
