#pragma once

#include "nilcoh/numeric.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nilcoh {

// Central coordinates are indexed by pairs (j,k), 1 <= j < k <= n, in
// colexicographic order: (i,j) < (k,l) iff j < l, or j = l and i < k.
// For n = 4 this enumerates (1,2),(1,3),(2,3),(1,4),(2,4),(3,4).

inline std::size_t central_dim(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

inline std::size_t pair_index(int j, int k) {
  // position of (j,k) within the central block, 0-based
  return static_cast<std::size_t>(k - 1) * (k - 2) / 2 + (j - 1);
}

std::pair<int, int> pair_at(std::size_t index);

// Element of the rank-n free nilpotent group of class 2, in the coordinate
// realization: n base entries followed by n(n-1)/2 central entries in colex
// pair order. Immutable value type.
class GroupElement {
public:
  explicit GroupElement(int n);  // identity
  GroupElement(int n, std::vector<Int> coords);

  static GroupElement identity(int n) { return GroupElement(n); }

  int rank() const { return n_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<Int>& coords() const { return coords_; }

  const Int& base(int i) const;               // 1-based, 1 <= i <= n
  const Int& central(int j, int k) const;     // 1-based pair, j < k

  bool is_identity() const;
  bool is_central() const;                    // all base coordinates zero

  bool operator==(const GroupElement&) const = default;

  std::string str() const;

private:
  int n_;
  std::vector<Int> coords_;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, const Int& p);
GroupElement commutator(const GroupElement& a, const GroupElement& b);

// s r s^{-1}
GroupElement conjugate(const GroupElement& s, const GroupElement& r);

bool is_central(const GroupElement& r);

// Generator with 1 in the given flat coordinate and 0 elsewhere.
// Ids 0..n-1 are u_1..u_n, ids n.. are v_{jk} in colex order.
GroupElement generator(int n, std::size_t id);
GroupElement u_gen(int n, int i);             // u_i, 1-based
GroupElement v_gen(int n, int j, int k);      // v_{jk}, 1-based pair
std::vector<GroupElement> generators(int n);

struct WordLetter {
  std::size_t gen = 0;  // flat coordinate id, see generator()
  Int power = 0;
};

GroupElement word_evaluate(int n, std::span<const WordLetter> word);

// The ordered word v_12^{r_12} ... v_{n-1,n}^{r_{n-1,n}} u_n^{r_n} ... u_1^{r_1}
// with zero-exponent letters omitted. word_evaluate inverts it.
std::vector<WordLetter> normal_form(const GroupElement& r);

// Unique factorization r = a b with a supported on H(n) = <u_n, v_{1n..n-1,n}>
// and b supported on G(n-1). Requires n >= 2.
std::pair<GroupElement, GroupElement> decompose(const GroupElement& r);

// alpha_b(a) = b a b^{-1} for a in H(n), b in G(n-1); rejects other supports.
GroupElement alpha(const GroupElement& b, const GroupElement& a);

}  // namespace nilcoh
