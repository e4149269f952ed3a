#include "psigmat/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "psigmat/errors.hpp"
#include "psigmat/numeric.hpp"

namespace psigmat {

GroupPtr cyclic(int n, const GroupOptions& opts) {
  if (n < 1) throw ParseError("cyclic: order must be positive");
  if (n == 1) return group_from_generators(1, {}, opts);
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return group_from_generators(n, {Perm(n, std::move(im))}, opts);
}

namespace {

// x -> x^-1 on a cyclic (or any abelian) group, as an index table.
std::vector<Elem> inversion_action(const FiniteGroup& n) {
  std::vector<Elem> a(n.order());
  for (Elem x = 0; x < n.order(); ++x) a[x] = n.inv(x);
  return a;
}

}  // namespace

GroupPtr dihedral(int order, const GroupOptions& opts) {
  if (order < 6 || order % 2 != 0) throw ParseError("dihedral: order must be even and >= 6");
  GroupPtr rot = cyclic(order / 2, opts);
  GroupPtr flip = cyclic(2, opts);
  std::vector<std::vector<Elem>> action(2);
  action[0].resize(rot->order());
  for (Elem x = 0; x < rot->order(); ++x) action[0][x] = x;
  action[1] = inversion_action(*rot);
  return semidirect_product(*rot, *flip, action, opts);
}

GroupPtr symmetric(int n, const GroupOptions& opts) {
  if (n < 1 || n > 5) throw ParseError("symmetric: supported degrees are 1..5");
  if (n == 1) return group_from_generators(1, {}, opts);
  std::vector<Perm> gens;
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  gens.emplace_back(n, std::move(cyc));
  if (n > 2) {
    std::vector<int> swap01(n);
    for (int i = 0; i < n; ++i) swap01[i] = i;
    std::swap(swap01[0], swap01[1]);
    gens.emplace_back(n, std::move(swap01));
  }
  return group_from_generators(n, gens, opts);
}

GroupPtr alternating(int n, const GroupOptions& opts) {
  if (n < 3 || n > 5) throw ParseError("alternating: supported degrees are 3..5");
  std::vector<Perm> gens{parse_cycles("(1 2 3)", n)};
  if (n == 4) gens.push_back(parse_cycles("(1 2)(3 4)", 4));
  if (n == 5) gens.push_back(parse_cycles("(1 2 3 4 5)", 5));
  return group_from_generators(n, gens, opts);
}

GroupPtr quaternion8(const GroupOptions& opts) {
  // Elements encoded as sign * basis: index = sign*4 + basis with basis
  // 0..3 = 1, i, j, k.
  auto basis_mult = [](int a, int b, int& sign) {
    // returns basis index of (basis a)*(basis b), accumulating sign
    static const int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int signs[4][4] = {{+1, +1, +1, +1},
                                    {+1, -1, +1, -1},
                                    {+1, -1, -1, +1},
                                    {+1, +1, -1, -1}};
    sign *= signs[a][b];
    return table[a][b];
  };
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sign = (x >= 4 ? -1 : 1) * (y >= 4 ? -1 : 1);
      int basis = basis_mult(x % 4, y % 4, sign);
      table[x][y] = (sign < 0 ? 4 : 0) + basis;
    }
  std::vector<std::string> labels{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  GroupPtr q = group_from_table(std::move(table), std::move(labels), {1, 2});
  if (q->order() > opts.order_cap) throw CapExceeded("order cap below 8");
  return q;
}

GroupPtr c5xs3(const GroupOptions& opts) {
  GroupPtr c3 = cyclic(3, opts);
  GroupPtr c2 = cyclic(2, opts);
  std::vector<std::vector<Elem>> action(2);
  action[0] = {0, 1, 2};
  action[1] = inversion_action(*c3);
  GroupPtr s3 = semidirect_product(*c3, *c2, action, opts);
  return direct_product(*cyclic(5, opts), *s3, opts);
}

GroupPtr c5_semidirect_c4(const GroupOptions& opts) {
  GroupPtr c5 = cyclic(5, opts);
  GroupPtr c4 = cyclic(4, opts);
  // Generator acts as x -> x^2; 2 has order 4 mod 5, so the action is faithful.
  std::vector<std::vector<Elem>> action(4, std::vector<Elem>(5));
  int power = 1;
  for (int j = 0; j < 4; ++j) {
    for (Elem x = 0; x < 5; ++x) action[j][x] = static_cast<Elem>((x * power) % 5);
    power = (power * 2) % 5;
  }
  return semidirect_product(*c5, *c4, action, opts);
}

GroupPtr q8_semidirect_c3(const GroupOptions& opts) {
  GroupPtr q8 = quaternion8(opts);
  GroupPtr c3 = cyclic(3, opts);
  // alpha cycles i -> j -> k -> i (indices per quaternion8's numbering).
  std::vector<Elem> alpha{0, 2, 3, 1, 4, 6, 7, 5};
  std::vector<std::vector<Elem>> action(3, std::vector<Elem>(8));
  for (Elem x = 0; x < 8; ++x) {
    action[0][x] = x;
    action[1][x] = alpha[x];
    action[2][x] = alpha[alpha[x]];
  }
  return semidirect_product(*q8, *c3, action, opts);
}

// ---- text formats ----------------------------------------------------------

namespace {

std::string strip_comment(const std::string& line) {
  size_t hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupPtr parse_group_file(const std::string& text, const GroupOptions& opts) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (s.rfind("degree:", 0) == 0) {
      if (degree >= 0) fail("duplicate degree line");
      try {
        degree = std::stoi(s.substr(7));
      } catch (const std::exception&) {
        fail("invalid degree value");
      }
      if (degree < 1) fail("degree must be positive");
    } else if (s.rfind("gen:", 0) == 0) {
      if (degree < 0) fail("gen line before degree line");
      try {
        gens.push_back(parse_cycles(s.substr(4), degree));
      } catch (const ParseError& e) {
        fail(e.what());
      }
    } else {
      fail("expected 'degree:' or 'gen:'");
    }
  }
  if (degree < 0) throw ParseError("missing degree line");
  return group_from_generators(degree, gens, opts);
}

SigmaPartition parse_sigma_spec(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  bool rest = false;
  std::string token;
  std::vector<std::string> parts;
  std::istringstream in(text);
  while (std::getline(in, token, '|')) parts.push_back(token);
  if (parts.empty()) throw ParseError("empty sigma spec");
  for (std::string part : parts) {
    size_t b = part.find_first_not_of(" \t");
    size_t e = part.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty block in sigma spec");
    part = part.substr(b, e - b + 1);
    if (part == "*") {
      if (rest) throw ParseError("sigma spec has more than one '*' block");
      rest = true;
      continue;
    }
    std::vector<int> primes;
    std::istringstream bp(part);
    std::string num;
    while (std::getline(bp, num, ',')) {
      size_t nb = num.find_first_not_of(" \t");
      size_t ne = num.find_last_not_of(" \t");
      if (nb == std::string::npos) throw ParseError("empty prime in sigma spec block");
      num = num.substr(nb, ne - nb + 1);
      int value = 0;
      try {
        size_t used = 0;
        value = std::stoi(num, &used);
        if (used != num.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("'" + num + "' is not a prime number");
      }
      if (!is_prime(value)) throw ParseError("'" + num + "' is not a prime number");
      primes.push_back(value);
    }
    blocks.push_back(std::move(primes));
  }
  return SigmaPartition::make(std::move(blocks), rest);
}

std::string render_sigma_spec(const SigmaPartition& sigma) { return sigma.canonical_spec(); }

// ---- bundled corpus --------------------------------------------------------

std::vector<CatalogEntry> standard_catalog(const GroupOptions& opts) {
  std::vector<CatalogEntry> catalog;
  auto add = [&](const std::string& key, GroupPtr g, const std::string& prov) {
    for (const CatalogEntry& e : catalog)
      if (e.key == key) throw DomainError("duplicate catalog key " + key);
    catalog.push_back(CatalogEntry{key, std::move(g), prov});
  };
  for (int n = 1; n <= 24; ++n)
    add("C" + std::to_string(n), cyclic(n, opts), "cyclic(" + std::to_string(n) + ")");
  for (int m = 6; m <= 24; m += 2)
    add("D" + std::to_string(m), dihedral(m, opts), "dihedral(" + std::to_string(m) + ")");
  add("S3", symmetric(3, opts), "symmetric(3)");
  add("S4", symmetric(4, opts), "symmetric(4)");
  add("A4", alternating(4, opts), "alternating(4)");
  add("A5", alternating(5, opts), "alternating(5)");
  add("Q8", quaternion8(opts), "quaternion8()");
  add("C5xS3", c5xs3(opts), "cyclic(5) x (cyclic(3) : cyclic(2))");
  add("D8xC3", direct_product(*dihedral(8, opts), *cyclic(3, opts), opts),
      "dihedral(8) x cyclic(3)");
  add("C5:C4", c5_semidirect_c4(opts), "cyclic(5) : cyclic(4), faithful");
  add("A4xC5", direct_product(*alternating(4, opts), *cyclic(5, opts), opts),
      "alternating(4) x cyclic(5)");
  add("Q8:C3", q8_semidirect_c3(opts), "quaternion8() : cyclic(3)");
  return catalog;
}

std::vector<std::string> standard_sigma_specs() {
  return {"*", "2|*", "3,5|*", "2,3|*", "2|3|*", "2|3|5|*", "2,5|3|*"};
}

const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& catalog,
                                  const std::string& key) {
  for (const CatalogEntry& e : catalog)
    if (e.key == key) return e;
  throw ParseError("unknown catalog key '" + key + "'");
}

}  // namespace psigmat
