#include "partbinom/tables.hpp"

#include "partbinom/identities.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace partbinom {

namespace {

/* Right-align each column to its widest cell; single-space separator. */
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ' ';
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string stirling_table(long max) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"n\\k"};
  for (long k = 1; k <= max; ++k) head.push_back(std::to_string(k));
  rows.push_back(std::move(head));
  for (long n = 1; n <= max; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (long k = 1; k <= n; ++k) row.push_back(to_string(stirling_signed(n, k)));
    rows.push_back(std::move(row));
  }
  return aligned(rows);
}

std::string genbinom_table(long max) {
  std::ostringstream out;
  for (long n = 1; n <= max; ++n) {
    out << "|lambda| = " << n << "  (columns r = 1.." << n << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (const Partition& la : partitions_of(n)) {
      std::vector<std::string> row{la.str()};
      for (long r = 1; r <= n; ++r) row.push_back(to_string(gen_binom(la, r)));
      rows.push_back(std::move(row));
    }
    out << aligned(rows);
    if (n < max) out << '\n';
  }
  return out.str();
}

std::string pjk_table(long max) {
  std::ostringstream out;
  for (long j = 0; j <= max; ++j)
    for (long k = 0; k <= j; ++k)
      out << "P[" << j << "," << k << "] = " << conj_P(j, k).str() << '\n';
  return out.str();
}

}  // namespace

std::string render_table(const std::string& kind, long max) {
  if (max < 1) throw std::invalid_argument("render_table: max must be >= 1");
  if (kind == "stirling") return stirling_table(max);
  if (kind == "genbinom") return genbinom_table(max);
  if (kind == "pjk") return pjk_table(max);
  throw std::invalid_argument("render_table: unknown kind: " + kind);
}

}  // namespace partbinom
