#include "nilcoh/group.hpp"

#include <sstream>
#include <stdexcept>

namespace nilcoh {

std::pair<int, int> pair_at(std::size_t index) {
  int k = 2;
  while (central_dim(k) <= index)
    ++k;
  int j = static_cast<int>(index - pair_index(1, k)) + 1;
  return {j, k};
}

GroupElement::GroupElement(int n) : n_(n) {
  if (n < 1)
    throw std::invalid_argument("group rank must be >= 1");
  coords_.assign(n + central_dim(n), Int(0));
}

GroupElement::GroupElement(int n, std::vector<Int> coords)
    : n_(n), coords_(std::move(coords)) {
  if (n < 1)
    throw std::invalid_argument("group rank must be >= 1");
  if (coords_.size() != static_cast<std::size_t>(n) + central_dim(n))
    throw std::invalid_argument("coordinate vector has wrong length for rank " +
                                std::to_string(n));
}

const Int& GroupElement::base(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("base index out of range");
  return coords_[i - 1];
}

const Int& GroupElement::central(int j, int k) const {
  if (!(1 <= j && j < k && k <= n_))
    throw std::invalid_argument("central pair index out of range");
  return coords_[n_ + pair_index(j, k)];
}

bool GroupElement::is_identity() const {
  for (const Int& c : coords_)
    if (c != 0)
      return false;
  return true;
}

bool GroupElement::is_central() const {
  for (int i = 0; i < n_; ++i)
    if (coords_[i] != 0)
      return false;
  return true;
}

std::string GroupElement::str() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < n_; ++i) {
    if (i) out << ",";
    out << coords_[i];
  }
  out << " | ";
  for (std::size_t c = n_; c < coords_.size(); ++c) {
    if (c > static_cast<std::size_t>(n_)) out << ",";
    out << coords_[c];
  }
  out << ")";
  return out.str();
}

static void check_same_rank(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("incompatible elements: ranks " +
                                std::to_string(a.rank()) + " and " +
                                std::to_string(b.rank()));
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_same_rank(a, b);
  const int n = a.rank();
  std::vector<Int> out(a.coords());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += b.coords()[i];
  // central slot (j,k) picks up the cross term a_j b_k
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j)
      out[n + pair_index(j, k)] += a.base(j) * b.base(k);
  return GroupElement(n, std::move(out));
}

GroupElement inverse(const GroupElement& a) {
  const int n = a.rank();
  std::vector<Int> out(a.dim());
  for (int i = 0; i < n; ++i)
    out[i] = -a.coords()[i];
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j)
      out[n + pair_index(j, k)] = -a.central(j, k) + a.base(j) * a.base(k);
  return GroupElement(n, std::move(out));
}

GroupElement power(const GroupElement& a, const Int& p) {
  // a^p = (p*base | p*a_jk + binom2(p)*a_j*a_k), valid for negative p
  const int n = a.rank();
  std::vector<Int> out(a.dim());
  for (int i = 0; i < n; ++i)
    out[i] = p * a.coords()[i];
  const Int half = binom2(p);
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j)
      out[n + pair_index(j, k)] = p * a.central(j, k) + half * a.base(j) * a.base(k);
  return GroupElement(n, std::move(out));
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return multiply(multiply(multiply(a, b), inverse(a)), inverse(b));
}

GroupElement conjugate(const GroupElement& s, const GroupElement& r) {
  return multiply(multiply(s, r), inverse(s));
}

bool is_central(const GroupElement& r) { return r.is_central(); }

GroupElement generator(int n, std::size_t id) {
  const std::size_t dim = n + central_dim(n);
  if (id >= dim)
    throw std::invalid_argument("unknown generator id " + std::to_string(id) +
                                " for rank " + std::to_string(n));
  std::vector<Int> coords(dim, Int(0));
  coords[id] = 1;
  return GroupElement(n, std::move(coords));
}

GroupElement u_gen(int n, int i) {
  if (i < 1 || i > n)
    throw std::invalid_argument("unknown generator u_" + std::to_string(i));
  return generator(n, i - 1);
}

GroupElement v_gen(int n, int j, int k) {
  if (!(1 <= j && j < k && k <= n))
    throw std::invalid_argument("unknown generator v_{" + std::to_string(j) +
                                "," + std::to_string(k) + "}");
  return generator(n, n + pair_index(j, k));
}

std::vector<GroupElement> generators(int n) {
  std::vector<GroupElement> gens;
  const std::size_t dim = n + central_dim(n);
  gens.reserve(dim);
  for (std::size_t id = 0; id < dim; ++id)
    gens.push_back(generator(n, id));
  return gens;
}

GroupElement word_evaluate(int n, std::span<const WordLetter> word) {
  GroupElement acc = GroupElement::identity(n);
  for (const WordLetter& letter : word)
    acc = multiply(acc, power(generator(n, letter.gen), letter.power));
  return acc;
}

std::vector<WordLetter> normal_form(const GroupElement& r) {
  const int n = r.rank();
  std::vector<WordLetter> word;
  for (std::size_t c = 0; c < central_dim(n); ++c)
    if (r.coords()[n + c] != 0)
      word.push_back({n + c, r.coords()[n + c]});
  for (int i = n; i >= 1; --i)
    if (r.base(i) != 0)
      word.push_back({static_cast<std::size_t>(i - 1), r.base(i)});
  return word;
}

std::pair<GroupElement, GroupElement> decompose(const GroupElement& r) {
  const int n = r.rank();
  if (n < 2)
    throw std::invalid_argument("decompose requires rank >= 2");
  std::vector<Int> a(r.dim()), b(r.dim());
  for (int i = 1; i <= n; ++i)
    (i == n ? a : b)[i - 1] = r.base(i);
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j)
      (k == n ? a : b)[n + pair_index(j, k)] = r.central(j, k);
  return {GroupElement(n, std::move(a)), GroupElement(n, std::move(b))};
}

static bool supported_on_h(const GroupElement& a) {
  const int n = a.rank();
  for (int i = 1; i < n; ++i)
    if (a.base(i) != 0)
      return false;
  for (int k = 2; k < n; ++k)
    for (int j = 1; j < k; ++j)
      if (a.central(j, k) != 0)
        return false;
  return true;
}

static bool supported_on_sub(const GroupElement& b) {
  const int n = b.rank();
  if (b.base(n) != 0)
    return false;
  for (int j = 1; j < n; ++j)
    if (b.central(j, n) != 0)
      return false;
  return true;
}

GroupElement alpha(const GroupElement& b, const GroupElement& a) {
  check_same_rank(a, b);
  if (a.rank() < 2)
    throw std::invalid_argument("alpha requires rank >= 2");
  if (!supported_on_h(a))
    throw std::invalid_argument("alpha: first argument must lie in H(n)");
  if (!supported_on_sub(b))
    throw std::invalid_argument("alpha: second argument must lie in G(n-1)");
  return conjugate(b, a);
}

}  // namespace nilcoh
