#ifndef PAIROPS_SUBSPACE_HPP
#define PAIROPS_SUBSPACE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pairops/matrix.hpp"

namespace pairops {

// A subspace of F^n held in reduced row echelon form.  The representation is
// canonical: two subspaces are equal iff their basis matrices are identical,
// which makes equality, hashing by bytes, and sorted lattices trivial.
class Subspace {
 public:
  Subspace(const PrimeField& F, size_t ambient);  // zero subspace

  static Subspace span(const PrimeField& F, size_t ambient,
                       const std::vector<Row>& generators);
  static Subspace full(const PrimeField& F, size_t ambient);

  const PrimeField& field() const { return F_; }
  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows; }
  const Matrix& basis() const { return basis_; }
  std::vector<Row> basis_rows() const;

  bool is_zero() const { return basis_.rows == 0; }
  bool is_full() const { return basis_.rows == ambient_; }

  // Residue of v after eliminating all pivots; zero iff v lies in the space.
  Row reduce(Row v) const;
  bool contains(const Row& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;  // Zassenhaus

  // Every vector of the space, in odometer order over the basis. Small
  // spaces only; used by exhaustive test sweeps.
  std::vector<Row> vectors() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  // Canonical ordering used for deterministic lattice listings.
  bool operator<(const Subspace& o) const;

 private:
  PrimeField F_;
  size_t ambient_;
  Matrix basis_;
};

// A nondegenerate bilinear form <v,w> = v^T G w between F^n and its dual
// copy.  Construction checks nondegeneracy once.
class PerfectPairing {
 public:
  PerfectPairing(const PrimeField& F, Matrix gram);  // throws std::invalid_argument if degenerate
  static PerfectPairing standard(const PrimeField& F, size_t n);

  size_t dim() const { return gram_.rows; }
  uint32_t pair(const Row& v, const Row& w) const;

  // {w : <u, w> = 0 for all u in U}; dim ann(U) = n - dim U.
  Subspace annihilator(const Subspace& U) const;

 private:
  PrimeField F_;
  Matrix gram_;
};

inline constexpr uint64_t kDefaultEnumerationCap = 1u << 16;

// All subspaces of F^dim stable under every operator, via stable closures of
// cyclic spans followed by a sum fixpoint.  Sorted canonically.  Throws
// CapExceeded when p^dim exceeds the cap.
std::vector<Subspace> enumerate_stable_subspaces(
    const PrimeField& F, size_t dim, const std::vector<Matrix>& operators,
    uint64_t cap = kDefaultEnumerationCap);

// Smallest operator-stable subspace containing the given generators.
Subspace stable_closure(const PrimeField& F, size_t dim,
                        const std::vector<Matrix>& operators,
                        const std::vector<Row>& generators);

}  // namespace pairops

#endif
