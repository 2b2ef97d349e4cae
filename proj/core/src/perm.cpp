#include "opdcat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opdcat {

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_indexed(const std::vector<int>& images) {
  std::vector<int> v(images.size());
  for (size_t j = 0; j < images.size(); ++j) v[j] = images[j] - 1;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int j = 0; j < n(); ++j)
    if (img[j] != j) return false;
  return true;
}

bool Permutation::is_valid() const {
  std::vector<char> seen(img.size(), 0);
  for (int x : img) {
    if (x < 0 || x >= (int)img.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img.size());
  for (int j = 0; j < n(); ++j) v[img[j]] = j;
  return Permutation(std::move(v));
}

std::vector<int> Permutation::one_indexed() const {
  std::vector<int> v(img.size());
  for (size_t j = 0; j < img.size(); ++j) v[j] = img[j] + 1;
  return v;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (int j = 0; j < n(); ++j) {
    if (j) s += ',';
    s += std::to_string(img[j] + 1);
  }
  return s + "]";
}

Permutation compose(const Permutation& p1, const Permutation& p2) {
  if (p1.n() != p2.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> v(p1.n());
  for (int j = 0; j < p1.n(); ++j) v[j] = p1(p2(j));
  return Permutation(std::move(v));
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation block_perm(const Permutation& rho,
                       const std::vector<Permutation>& rhos) {
  int n = rho.n();
  if ((int)rhos.size() != n) throw std::invalid_argument("block_perm: size mismatch");
  std::vector<int> off(n, 0);
  for (int j = 1; j < n; ++j) off[j] = off[j - 1] + rhos[j - 1].n();
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    int b = rho(k);
    for (int r = 0; r < rhos[b].n(); ++r) out.push_back(off[b] + rhos[b](r));
  }
  return Permutation(std::move(out));
}

Permutation block_substitute(const Permutation& c,
                             const std::vector<Permutation>& ds) {
  std::vector<Permutation> di;
  di.reserve(ds.size());
  for (auto& d : ds) di.push_back(d.inverse());
  return block_perm(c.inverse(), di).inverse();
}

Permutation shuffle_perm(int n) {
  std::vector<int> v(2 * n);
  for (int j = 1; j <= 2 * n; ++j)
    v[j - 1] = (j % 2 == 1) ? (j + 1) / 2 - 1 : n + j / 2 - 1;
  return Permutation(std::move(v));
}

}  // namespace opdcat
