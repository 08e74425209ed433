#include "partbinom/combinat.hpp"
#include "partbinom/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

using namespace partbinom;

namespace {

/* p(n) by the pentagonal-number recurrence, independent of the generator. */
std::vector<long> partition_counts(long max_n) {
  std::vector<long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (long n = 1; n <= max_n; ++n) {
    long acc = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      const long g2 = k * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= n) acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(lens);
}

}  // namespace

TEST_CASE("construction validates; accessors agree with definitions") {
  const Partition mu({3, 1, 1});
  CHECK(mu.weight() == 5);
  CHECK(mu.length() == 3);
  CHECK(mu.multiplicity(1) == 2);
  CHECK(mu.multiplicity(3) == 1);
  CHECK(mu.multiplicity(2) == 0);
  CHECK(mu.multiplicities() == std::map<int, long>{{1, 2}, {3, 1}});
  CHECK(mu.str() == "(3,1,1)");

  CHECK(Partition().weight() == 0);
  CHECK(Partition().length() == 0);
  CHECK(Partition().str() == "()");

  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("enumeration counts match the pentagonal recurrence") {
  const auto p = partition_counts(20);
  CHECK(p[8] == 22);
  for (long n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(partitions_of(n).size() ==
          static_cast<std::size_t>(p[static_cast<std::size_t>(n)]));
  }
}

TEST_CASE("enumeration is reverse-lexicographic and duplicate-free") {
  std::vector<std::string> got;
  for (const auto& mu : partitions_of(3)) got.push_back(mu.str());
  CHECK(got == std::vector<std::string>{"(3)", "(2,1)", "(1,1,1)"});

  got.clear();
  for (const auto& mu : partitions_of(4)) got.push_back(mu.str());
  CHECK(got == std::vector<std::string>{"(4)", "(3,1)", "(2,2)", "(2,1,1)",
                                        "(1,1,1,1)"});

  for (long n = 0; n <= 12; ++n) {
    const auto all = partitions_of(n);
    for (const auto& mu : all) CHECK(mu.weight() == n);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      CAPTURE(n);
      CAPTURE(all[i].str());
      CHECK(std::lexicographical_compare(all[i + 1].parts().begin(),
                                         all[i + 1].parts().end(),
                                         all[i].parts().begin(),
                                         all[i].parts().end()));
    }
  }
}

TEST_CASE("zeta equals the centralizer order in the symmetric group") {
  const Integer z1 = zeta(Partition({1, 1, 1, 1}));
  CHECK(z1 == 24);
  const Integer z2 = zeta(Partition({4}));
  CHECK(z2 == 4);
  const Integer z3 = zeta(Partition({2, 1}));
  CHECK(z3 == 2);
  const Integer z4 = zeta(Partition({3, 1, 1}));
  CHECK(z4 == 6);
  const Integer z5 = zeta(Partition());
  CHECK(z5 == 1);

  for (int n = 1; n <= 8; ++n) {
    std::map<Partition, long> census;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ++census[cycle_type(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));

    const Integer nfact = factorial(n);
    const auto all = partitions_of(n);
    CHECK(census.size() == all.size());
    for (const auto& mu : all) {
      CAPTURE(mu.str());
      const Integer class_size_scaled = zeta(mu) * census.at(mu);
      CHECK(class_size_scaled == nfact);
    }
  }
}

TEST_CASE("conjugacy class sizes n!/zeta sum to n!") {
  for (long n = 0; n <= 20; ++n) {
    const Rational nfact(factorial(n));
    Rational acc(0);
    for (const auto& mu : partitions_of(n)) acc += nfact / Rational(zeta(mu));
    CAPTURE(n);
    CHECK(acc == nfact);
  }
}

TEST_CASE("add_part inserts in sorted position") {
  CHECK(add_part(Partition({3, 1}), 2).str() == "(3,2,1)");
  CHECK(add_part(Partition({3, 1}), 5).str() == "(5,3,1)");
  CHECK(add_part(Partition({3, 1}), 3).str() == "(3,3,1)");
  CHECK(add_part(Partition(), 2).str() == "(2)");
  CHECK(add_part(Partition({1, 1}), 1).str() == "(1,1,1)");
  CHECK_THROWS_AS(add_part(Partition({2}), 0), std::invalid_argument);

  for (long n = 0; n <= 10; ++n)
    for (const auto& lam : partitions_of(n))
      for (int i = 1; i <= 10; ++i) {
        const Partition bigger = add_part(lam, i);
        CAPTURE(lam.str());
        CAPTURE(i);
        CHECK(bigger.weight() == n + i);
        CHECK(bigger.length() == lam.length() + 1);
        CHECK(bigger.multiplicity(i) == lam.multiplicity(i) + 1);
        const Integer grown = zeta(bigger);
        const Integer scaled = i * bigger.multiplicity(i) * zeta(lam);
        CHECK(grown == scaled);
      }
}

TEST_CASE("cells lists the diagram row-major, 1-based") {
  using Cell = std::pair<int, int>;
  CHECK(cells(Partition()) == std::vector<Cell>{});
  CHECK(cells(Partition({2, 1})) == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
  for (long n = 0; n <= 10; ++n)
    for (const auto& mu : partitions_of(n))
      CHECK(cells(mu).size() == static_cast<std::size_t>(mu.weight()));
}

TEST_CASE("length-restricted enumeration equals filtering") {
  for (long n = 0; n <= 12; ++n) {
    const auto all = partitions_of(n);
    for (long p = 0; p <= n + 1; ++p) {
      std::vector<Partition> filtered;
      for (const auto& mu : all)
        if (mu.length() == p) filtered.push_back(mu);
      CAPTURE(n);
      CAPTURE(p);
      CHECK(partitions_of_length(n, p) == filtered);
    }
  }
}
