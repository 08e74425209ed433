#include "partbinom/partition.hpp"

#include "partbinom/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace partbinom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::length() const { return static_cast<long>(parts_.size()); }

long Partition::multiplicity(int i) const {
  return std::count(parts_.begin(), parts_.end(), i);
}

std::map<int, long> Partition::multiplicities() const {
  std::map<int, long> m;
  for (int part : parts_) ++m[part];
  return m;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

Integer zeta(const Partition& p) {
  Integer z = 1;
  for (const auto& [part, mult] : p.multiplicities()) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(mult));
    z *= pw * factorial(mult);
  }
  return z;
}

Partition add_part(const Partition& p, int i) {
  if (i < 1) throw std::invalid_argument("add_part: part must be positive");
  std::vector<int> parts = p.parts();
  parts.insert(std::upper_bound(parts.begin(), parts.end(), i,
                                std::greater<int>()),
               i);
  return Partition(std::move(parts));
}

std::vector<std::pair<int, int>> cells(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(p.weight()));
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 1; j <= parts[i]; ++j)
      out.emplace_back(static_cast<int>(i) + 1, j);
  return out;
}

namespace {

void gen_all(long remaining, int max_part, std::vector<int>& cur,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  int top = static_cast<int>(std::min<long>(max_part, remaining));
  for (int part = top; part >= 1; --part) {
    cur.push_back(part);
    gen_all(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void gen_len(long remaining, int max_part, long parts_left,
             std::vector<int>& cur, std::vector<Partition>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  if (remaining < parts_left || remaining > parts_left * max_part) return;
  int top = static_cast<int>(std::min<long>(max_part, remaining - parts_left + 1));
  for (int part = top; part >= 1; --part) {
    cur.push_back(part);
    gen_len(remaining - part, part, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long n) {
  if (n < 0) throw std::domain_error("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_all(n, static_cast<int>(n), cur, out);
  return out;
}

std::vector<Partition> partitions_of_length(long n, long p) {
  if (n < 0) throw std::domain_error("partitions_of_length: negative weight");
  if (p < 0) throw std::domain_error("partitions_of_length: negative length");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_len(n, static_cast<int>(n), p, cur, out);
  return out;
}

}  // namespace partbinom
