#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncis/cyclic.hpp"

namespace ncis {

/// Incremental exact Gaussian elimination over Q with cyclic words as
/// coordinates, pivoting on the lowest-order coordinate first.
class RowReducer {
 public:
  /// Inserts a vector; returns true iff it was independent (rank grew).
  bool insert(const CyclicElement& v);

  /// If target is in the span, the coefficients over the *inserted* vectors
  /// (independent and dependent alike), in insertion order.
  std::optional<std::vector<Rational>> coordinates(const CyclicElement& target) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

 private:
  struct Row {
    CyclicElement vec;             // leading coefficient normalized to 1
    std::vector<Rational> combo;   // expression over inserted vectors
  };
  // rows sorted by strictly increasing leading coordinate
  std::vector<Row> rows_;
  std::size_t inserted_ = 0;
};

struct SpanResult {
  bool member = false;
  std::vector<Rational> coordinates;  // one per basis vector when member
};

SpanResult span_membership(const CyclicElement& target,
                           const std::vector<CyclicElement>& basis);

std::size_t rank(const std::vector<CyclicElement>& vectors);

struct HcBasisVector {
  std::string label;  // monomial in h, c, c^-1, e.g. "h^2*c"
  CyclicElement element;
};

/// pi of all monomials in {h, c, c^-1} whose expanded word length stays within
/// max_degree, deduplicated by linear independence over Q.
std::vector<HcBasisVector> enumerate_hc_basis_labeled(int max_degree);
std::vector<CyclicElement> enumerate_hc_basis(int max_degree);

}  // namespace ncis
