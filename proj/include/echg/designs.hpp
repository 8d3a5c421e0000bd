#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "echg/combinatorics.hpp"

namespace echg {

using Rational = boost::rational<std::int64_t>;

// ---------------------------------------------------------------------------
// Latin squares
// ---------------------------------------------------------------------------

/// q x q grid over the symbols [0, q), stored row-major. Construction checks
/// the Latin property.
class LatinSquare {
 public:
  explicit LatinSquare(const std::vector<std::vector<std::uint32_t>>& rows);

  std::uint32_t order() const { return order_; }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return cells_[row * order_ + col]; }
  std::span<const std::uint32_t> cells() const { return cells_; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::uint32_t order_;
  std::vector<std::uint32_t> cells_;
};

/// True iff every symbol appears once per row and column. Throws
/// std::invalid_argument on a non-square grid or a symbol outside [0, q).
bool is_latin(const std::vector<std::vector<std::uint32_t>>& rows);

/// True iff superimposing the squares yields q^2 distinct ordered pairs.
/// Throws std::invalid_argument on an order mismatch.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Family of Latin squares of one order. Construction checks pairwise
/// orthogonality and the q - 1 size limit.
class MolsSet {
 public:
  MolsSet(std::uint32_t order, std::vector<LatinSquare> squares);

  std::uint32_t order() const { return order_; }
  const std::vector<LatinSquare>& squares() const { return squares_; }
  std::size_t size() const { return squares_.size(); }
  bool is_complete() const { return order_ >= 2 && squares_.size() == order_ - 1; }

 private:
  std::uint32_t order_;
  std::vector<LatinSquare> squares_;
};

/// The q - 1 squares L_a(x, y) = a*x + y over GF(q), one per nonzero a in
/// canonical element order; rows and columns indexed by element index.
/// Requires q >= 3 a prime power.
MolsSet complete_mols(std::uint32_t q);

// ---------------------------------------------------------------------------
// Block designs
// ---------------------------------------------------------------------------

/// Candidate t-(v,k,lambda) design. Construction checks structure only:
/// 1 <= t <= k <= v, lambda >= 1, each block k distinct points in [0, v).
/// Blocks are kept as given apart from sorting points within each block.
struct Design {
  Design(std::uint32_t t, std::uint32_t v, std::uint32_t k, std::uint32_t lambda,
         std::vector<VertexSet> blocks);

  std::uint32_t t;
  std::uint32_t v;
  std::uint32_t k;
  std::uint32_t lambda;
  std::vector<VertexSet> blocks;

  std::size_t block_count() const { return blocks.size(); }
};

struct DesignValidation {
  bool valid = false;
  std::uint64_t t_subsets = 0;     // C(v, t)
  std::uint64_t min_coverage = 0;  // over all t-subsets
  std::uint64_t max_coverage = 0;
  std::uint64_t deficient = 0;     // t-subsets covered fewer than lambda times
  std::uint64_t excess = 0;        // t-subsets covered more than lambda times
  bool repeated_blocks = false;
};

/// Counts, for each t-subset of points, how many blocks contain it.
DesignValidation validate_design(const Design& design);

struct DesignParams {
  Rational b_formula;  // lambda v (v-1) / (k (k-1))
  Rational r_formula;  // lambda (v-1) / (k-1)
  std::uint64_t b_observed = 0;
  std::vector<std::uint64_t> replication;  // per point
  bool b_matches = false;
  bool r_matches = false;  // every point's replication equals r_formula
};

/// Block and replication numbers of a 2-design, formula against observed.
/// Throws std::invalid_argument if t != 2.
DesignParams design_params(const Design& design);

/// lambda * C(v-i-j, k-i) / C(v-t, k-t): blocks through a fixed i-set
/// avoiding a disjoint j-set. Throws std::invalid_argument if i + j > t.
Rational lambda_ij(const Design& design, std::uint32_t i, std::uint32_t j);

/// Blocks that contain every point of `include` and no point of `exclude`.
std::uint64_t count_blocks(const Design& design, std::span<const Vertex> include,
                           std::span<const Vertex> exclude);

/// PG(2, q) as a 2-(q^2+q+1, q+1, 1) design. Points are the normalized
/// (first nonzero coordinate 1) vectors of GF(q)^3 in lexicographic order of
/// element indices; blocks are lines a.x = 0 ordered by their normalized
/// coefficient vectors. Requires q >= 2 a prime power.
Design projective_plane(std::uint32_t q);

/// Miquelian inversive plane as a 3-(q^2+1, q+1, 1) design on the projective
/// line over GF(q^2): point z < q^2 is the field element of index z, point q^2
/// is infinity. Blocks are the images of GF(q) u {infinity} under every
/// invertible 2x2 matrix acting by z -> (az+b)/(cz+d), deduplicated and sorted.
/// Requires q >= 2 a prime power with q^2 within the field size cap.
Design inversive_plane(std::uint32_t q);

/// The seven Fano lines {1,2,3},{3,4,5},{1,5,6},{1,4,7},{2,5,7},{3,6,7},{2,4,6}
/// shifted to 0-based labels, as a 2-(7,3,1) design.
Design fano();

}  // namespace echg
