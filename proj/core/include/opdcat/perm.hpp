#pragma once
// Finite permutations. Stored 0-indexed internally; file formats use
// one-indexed image lists. Composition convention: (p1*p2)(j) = p1(p2(j)).
#include <string>
#include <vector>

namespace opdcat {

struct Permutation {
  std::vector<int> img;  // img[j] = rho(j), 0-indexed

  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img(std::move(images)) {}

  static Permutation identity(int n);
  static Permutation from_one_indexed(const std::vector<int>& images);

  int n() const { return (int)img.size(); }
  int operator()(int j) const { return img[j]; }
  bool is_identity() const;
  bool is_valid() const;  // img is a bijection on {0..n-1}
  Permutation inverse() const;
  std::vector<int> one_indexed() const;
  std::string str() const;  // "[2,1]" one-indexed, canonical

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }
};

// (p1*p2)(j) = p1(p2(j))
Permutation compose(const Permutation& p1, const Permutation& p2);

// All of S_n in lexicographic order of image lists (identity first).
std::vector<Permutation> all_perms(int n);

// The permutation rho(rho_1,...,rho_n) acting on sum(m_j) letters that
// permutes the n blocks of sizes (m_1..m_n) using rho and block j
// internally using rho_j: output block k is input block rho(k) permuted
// by rho_{rho(k)}.  This is the permutation appearing in the operad
// equivariance axiom and in mu on arrows.
Permutation block_perm(const Permutation& rho,
                       const std::vector<Permutation>& rhos);

// Composite of permutations viewed as operations of the associativity
// operad: blocks substituted into c.  Inverse-conjugate of block_perm;
// satisfies c*(d_j) . block_perm(r,(r_j)) = (c r)*(d_{rk} r_{rk})_k.
Permutation block_substitute(const Permutation& c,
                             const std::vector<Permutation>& ds);

// sh_n on 2n letters: sh(j) = (j+1)/2 for odd j, n + j/2 for even j
// (one-indexed formula).
Permutation shuffle_perm(int n);

}  // namespace opdcat
