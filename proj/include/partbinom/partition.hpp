#pragma once

#include "partbinom/numbers.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace partbinom {

/* Integer partition: weakly decreasing sequence of positive parts.
 * Immutable value type. */
class Partition {
 public:
  Partition() = default;  // the empty partition
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  long weight() const;             // |lambda|
  long length() const;             // l(lambda), number of parts
  long multiplicity(int i) const;  // m_i(lambda)

  /* part size -> multiplicity, only nonzero entries, ascending part size. */
  std::map<int, long> multiplicities() const;

  std::string str() const;  // "(3,1,1)"; "()" for the empty partition

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/* z_lambda = prod_i i^(m_i) m_i!, the order of the centralizer of a
 * permutation of cycle type lambda. */
Integer zeta(const Partition& p);

/* New partition with one part of size i inserted (i >= 1). */
Partition add_part(const Partition& p, int i);

/* Diagram cells as (row, column) pairs, 1-based, row-major:
 * row i has cells (i,1)..(i,lambda_i). */
std::vector<std::pair<int, int>> cells(const Partition& p);

/* All partitions of n in canonical order: reverse-lexicographic on part
 * sequences, i.e. (n) first, (1^n) last.  n = 0 yields just the empty
 * partition. */
std::vector<Partition> partitions_of(long n);

/* Partitions of n with exactly p parts, in the same relative order as
 * partitions_of(n). */
std::vector<Partition> partitions_of_length(long n, long p);

}  // namespace partbinom
