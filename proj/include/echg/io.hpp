#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "echg/designs.hpp"
#include "echg/hypergraph.hpp"

namespace echg {

/// Malformed input file. `line()` is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Hypergraph text format:
//   h m
//   v_1 ... v_h        one edge per line, 0-based
// Lines starting with '#' are comments; blank lines are ignored.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

/// Writes edges in canonical order. Each entry of `comments` becomes a
/// leading "# ..." line.
void write_hypergraph(std::ostream& out, const Hypergraph& hg,
                      const std::vector<std::string>& comments = {});

// Design text format:
//   t v k lambda
//   p_1 ... p_k        one block per line, 0-based
// Structure (block size, range, distinct points) is checked on read; whether
// the blocks actually form a t-design is left to validate_design.
Design read_design(std::istream& in);
Design read_design_file(const std::string& path);
void write_design(std::ostream& out, const Design& design,
                  const std::vector<std::string>& comments = {});

// MOLS text format:
//   q l
//   followed by l squares, each q rows of q symbols in [0, q).
// Reading checks the Latin property of each square and pairwise orthogonality.
MolsSet read_mols(std::istream& in);
MolsSet read_mols_file(const std::string& path);
void write_mols(std::ostream& out, const MolsSet& mols, const std::vector<std::string>& comments = {});

}  // namespace echg
