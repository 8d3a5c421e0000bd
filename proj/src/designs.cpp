#include "echg/designs.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "echg/galois.hpp"

namespace echg {

namespace {

void check_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t q = rows.size();
  for (const auto& row : rows) {
    if (row.size() != q) throw std::invalid_argument("Latin square grid is not square");
    for (std::uint32_t s : row)
      if (s >= q)
        throw std::invalid_argument("symbol " + std::to_string(s) + " outside [0, " + std::to_string(q) + ")");
  }
}

std::int64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
  const auto value = binomial(n, k);
  if (value > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("binomial coefficient exceeds 63 bits");
  return static_cast<std::int64_t>(value);
}

}  // namespace

bool is_latin(const std::vector<std::vector<std::uint32_t>>& rows) {
  check_rows(rows);
  const std::size_t q = rows.size();
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<bool> in_row(q, false), in_col(q, false);
    for (std::size_t j = 0; j < q; ++j) {
      if (in_row[rows[i][j]] || in_col[rows[j][i]]) return false;
      in_row[rows[i][j]] = true;
      in_col[rows[j][i]] = true;
    }
  }
  return true;
}

LatinSquare::LatinSquare(const std::vector<std::vector<std::uint32_t>>& rows)
    : order_(static_cast<std::uint32_t>(rows.size())) {
  if (order_ == 0) throw std::invalid_argument("Latin square of order 0");
  if (!is_latin(rows)) throw std::invalid_argument("grid is not a Latin square");
  cells_.reserve(std::size_t{order_} * order_);
  for (const auto& row : rows) cells_.insert(cells_.end(), row.begin(), row.end());
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) throw std::invalid_argument("orthogonality check on squares of different order");
  const std::uint32_t q = a.order();
  std::vector<bool> seen(std::size_t{q} * q, false);
  for (std::size_t cell = 0; cell < a.cells().size(); ++cell) {
    const std::size_t pair = std::size_t{a.cells()[cell]} * q + b.cells()[cell];
    if (seen[pair]) return false;
    seen[pair] = true;
  }
  return true;
}

MolsSet::MolsSet(std::uint32_t order, std::vector<LatinSquare> squares)
    : order_(order), squares_(std::move(squares)) {
  for (const auto& sq : squares_)
    if (sq.order() != order_) throw std::invalid_argument("MOLS family mixes square orders");
  if (order_ >= 2 && squares_.size() > order_ - 1)
    throw std::invalid_argument("more than q - 1 mutually orthogonal squares is impossible");
  for (std::size_t i = 0; i < squares_.size(); ++i)
    for (std::size_t j = i + 1; j < squares_.size(); ++j)
      if (!are_orthogonal(squares_[i], squares_[j]))
        throw std::invalid_argument("squares " + std::to_string(i) + " and " + std::to_string(j) +
                                    " are not orthogonal");
}

MolsSet complete_mols(std::uint32_t q) {
  if (q < 3) throw std::invalid_argument("complete_mols requires q >= 3");
  const GfField field = GfField::of_order(q);
  std::vector<LatinSquare> squares;
  for (std::uint32_t a = 1; a < q; ++a) {
    std::vector<std::vector<std::uint32_t>> rows(q, std::vector<std::uint32_t>(q));
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y) rows[x][y] = field.add(field.mul(a, x), y);
    squares.emplace_back(rows);
  }
  return MolsSet(q, std::move(squares));
}

Design::Design(std::uint32_t t_, std::uint32_t v_, std::uint32_t k_, std::uint32_t lambda_,
               std::vector<VertexSet> blocks_)
    : t(t_), v(v_), k(k_), lambda(lambda_), blocks(std::move(blocks_)) {
  if (t < 1 || t > k || k > v) throw std::invalid_argument("design parameters need 1 <= t <= k <= v");
  if (lambda < 1) throw std::invalid_argument("design lambda must be at least 1");
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    if (block.size() != k)
      throw std::invalid_argument("block has " + std::to_string(block.size()) + " points, expected " +
                                  std::to_string(k));
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw std::invalid_argument("block has a repeated point");
    if (block.back() >= v)
      throw std::invalid_argument("block point " + std::to_string(block.back()) + " outside [0, " +
                                  std::to_string(v) + ")");
  }
}

DesignValidation validate_design(const Design& design) {
  DesignValidation report;
  report.t_subsets = binomial(design.v, design.t);
  if (report.t_subsets > (std::uint64_t{1} << 30))
    throw std::invalid_argument("too many t-subsets to validate exhaustively");

  // Coverage counter per t-subset, indexed by colexicographic rank.
  std::vector<std::uint32_t> coverage(report.t_subsets, 0);
  std::vector<std::uint32_t> points(design.t);
  for (const auto& block : design.blocks) {
    for_each_combination(design.k, design.t, [&](std::span<const std::uint32_t> pos) {
      for (std::size_t i = 0; i < pos.size(); ++i) points[i] = block[pos[i]];
      ++coverage[rank_colex(points)];
    });
  }
  const auto [lo, hi] = std::minmax_element(coverage.begin(), coverage.end());
  report.min_coverage = *lo;
  report.max_coverage = *hi;
  for (std::uint32_t c : coverage) {
    if (c < design.lambda) ++report.deficient;
    if (c > design.lambda) ++report.excess;
  }
  auto sorted = design.blocks;
  std::sort(sorted.begin(), sorted.end());
  report.repeated_blocks = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  report.valid = report.deficient == 0 && report.excess == 0;
  return report;
}

DesignParams design_params(const Design& design) {
  if (design.t != 2) throw std::invalid_argument("design_params is defined for t = 2 only");
  if (design.k < 2) throw std::invalid_argument("design_params needs k >= 2");
  const std::int64_t v = design.v, k = design.k, lambda = design.lambda;
  DesignParams params;
  params.b_formula = Rational(lambda * v * (v - 1), k * (k - 1));
  params.r_formula = Rational(lambda * (v - 1), k - 1);
  params.b_observed = design.block_count();
  params.replication.assign(design.v, 0);
  for (const auto& block : design.blocks)
    for (Vertex p : block) ++params.replication[p];
  params.b_matches = params.b_formula == Rational(static_cast<std::int64_t>(params.b_observed));
  params.r_matches = std::all_of(params.replication.begin(), params.replication.end(), [&](std::uint64_t r) {
    return params.r_formula == Rational(static_cast<std::int64_t>(r));
  });
  return params;
}

Rational lambda_ij(const Design& design, std::uint32_t i, std::uint32_t j) {
  if (i + j > design.t) throw std::invalid_argument("lambda_ij requires i + j <= t");
  if (i > design.k) return Rational(0);
  const std::int64_t num = checked_binomial(design.v - i - j, design.k - i);
  const std::int64_t den = checked_binomial(design.v - design.t, design.k - design.t);
  return Rational(static_cast<std::int64_t>(design.lambda)) * Rational(num, den);
}

std::uint64_t count_blocks(const Design& design, std::span<const Vertex> include,
                           std::span<const Vertex> exclude) {
  std::uint64_t count = 0;
  for (const auto& block : design.blocks) {
    const auto contains = [&](Vertex p) { return std::binary_search(block.begin(), block.end(), p); };
    if (std::all_of(include.begin(), include.end(), contains) &&
        std::none_of(exclude.begin(), exclude.end(), contains))
      ++count;
  }
  return count;
}

Design projective_plane(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("projective_plane requires q >= 2");
  const GfField field = GfField::of_order(q);

  // Normalized vectors: the first nonzero coordinate is the element one.
  std::vector<std::array<std::uint32_t, 3>> reps;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y)
      for (std::uint32_t z = 0; z < q; ++z) {
        const std::uint32_t lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) reps.push_back({x, y, z});
      }

  std::vector<VertexSet> blocks;
  blocks.reserve(reps.size());
  for (const auto& line : reps) {
    VertexSet block;
    for (std::uint32_t p = 0; p < reps.size(); ++p) {
      const auto& pt = reps[p];
      std::uint32_t dot = 0;
      for (int c = 0; c < 3; ++c) dot = field.add(dot, field.mul(line[c], pt[c]));
      if (dot == 0) block.push_back(p);
    }
    blocks.push_back(std::move(block));
  }
  return Design(2, static_cast<std::uint32_t>(reps.size()), q + 1, 1, std::move(blocks));
}

Design inversive_plane(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("inversive_plane requires q >= 2");
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const GfField field(pk->first, 2 * pk->second);
  const std::uint32_t qq = field.order();
  const std::uint32_t infinity = qq;

  // GF(q) inside GF(q^2) is the fixed field of z -> z^q.
  VertexSet base;
  for (std::uint32_t z = 0; z < qq; ++z)
    if (field.pow(z, q) == z) base.push_back(z);
  base.push_back(infinity);

  std::set<VertexSet> images;
  VertexSet image(base.size());
  for (std::uint32_t a = 0; a < qq; ++a)
    for (std::uint32_t b = 0; b < qq; ++b)
      for (std::uint32_t c = 0; c < qq; ++c)
        for (std::uint32_t d = 0; d < qq; ++d) {
          if (field.sub(field.mul(a, d), field.mul(b, c)) == 0) continue;
          for (std::size_t i = 0; i < base.size(); ++i) {
            const std::uint32_t z = base[i];
            if (z == infinity) {
              image[i] = c == 0 ? infinity : field.mul(a, field.inv(c));
            } else {
              const std::uint32_t den = field.add(field.mul(c, z), d);
              image[i] = den == 0 ? infinity : field.mul(field.add(field.mul(a, z), b), field.inv(den));
            }
          }
          VertexSet sorted = image;
          std::sort(sorted.begin(), sorted.end());
          images.insert(std::move(sorted));
        }
  return Design(3, qq + 1, q + 1, 1, std::vector<VertexSet>(images.begin(), images.end()));
}

Design fano() {
  return Design(2, 7, 3, 1,
                {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}, {1, 3, 5}});
}

}  // namespace echg
