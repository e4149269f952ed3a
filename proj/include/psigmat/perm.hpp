#ifndef PSIGMAT_PERM_HPP_
#define PSIGMAT_PERM_HPP_

#include <string>
#include <vector>

namespace psigmat {

// Permutation of {0, ..., degree-1}.  Points are 0-based internally;
// all text I/O (cycle notation) is 1-based.
//
// Composition is left-to-right: (a * b) means "apply a, then b", so
// (a * b).image(i) == b.image(a.image(i)).  Under this convention the
// conjugate x^g = g^-1 * x * g relabels the points of x by g.
class Perm {
 public:
  explicit Perm(int degree);                       // identity
  Perm(int degree, std::vector<int> images);       // validates bijection

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  Perm compose(const Perm& then) const;            // *this, then `then`
  Perm inverse() const;
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

// Parses disjoint-cycle notation, e.g. "(1 2 3)(4 5)".  Points may be
// separated by spaces or commas; fixed points are omitted; "()" is the
// identity.  Throws ParseError on malformed text or points > degree.
Perm parse_cycles(const std::string& text, int degree);

// Canonical disjoint-cycle rendering with 1-based points, "()" for identity.
std::string cycle_string(const Perm& p);

}  // namespace psigmat

#endif
