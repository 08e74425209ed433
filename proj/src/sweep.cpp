#include "partbinom/sweep.hpp"

#include "partbinom/identities.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace partbinom {

namespace {

long get(const Params& ps, std::string_view name) {
  for (const auto& [k, v] : ps)
    if (k == name) return v;
  throw std::logic_error("missing sweep parameter");
}

std::string render(const Integer& v) { return to_string(v); }
std::string render(const Rational& v) { return to_string(v); }
std::string render(const UniPoly& p) { return p.str(); }
std::string render(const MultiPoly& p) { return p.str(); }
std::string render(const TruncatedSeries& s) { return s.str(); }

template <class T>
SideStrings sides(const std::pair<T, T>& pr) {
  return {render(pr.first), render(pr.second), pr.first == pr.second};
}

Integer parts_product(const Partition& mu) {
  Integer prod = 1;
  for (int part : mu.parts()) prod *= part;
  return prod;
}

std::vector<IdentityInfo> build_registry() {
  std::vector<IdentityInfo> reg;

  auto grid_nrs = [](const SweepConfig& c) {
    std::vector<Params> g;
    for (long n = 1; n <= c.n_max; ++n)
      for (long r = 1; r <= c.r_cap(); ++r)
        for (long s = 1; s <= c.s_cap(); ++s)
          g.push_back({{"n", n}, {"r", r}, {"s", s}});
    return g;
  };
  auto grid_ns = [](const SweepConfig& c) {
    std::vector<Params> g;
    for (long n = 1; n <= c.n_max; ++n)
      for (long s = 1; s <= c.s_cap(); ++s)
        g.push_back({{"n", n}, {"s", s}});
    return g;
  };
  auto grid_n = [](const SweepConfig& c) {
    std::vector<Params> g;
    for (long n = 1; n <= c.n_max; ++n) g.push_back({{"n", n}});
    return g;
  };
  auto grid_nr = [](const SweepConfig& c) {
    std::vector<Params> g;
    for (long n = 1; n <= c.n_max; ++n)
      for (long r = 1; r <= c.r_cap(); ++r)
        g.push_back({{"n", n}, {"r", r}});
    return g;
  };
  /* p > r tuples are precondition violations, skipped rather than failed. */
  auto grid_nrsp = [](const SweepConfig& c) {
    std::vector<Params> g;
    for (long n = 1; n <= c.n_max; ++n)
      for (long r = 1; r <= c.r_cap(); ++r)
        for (long s = 1; s <= c.s_cap(); ++s)
          for (long p = 1; p <= r; ++p)
            g.push_back({{"n", n}, {"r", r}, {"s", s}, {"p", p}});
    return g;
  };
  auto grid_nrp = [](const SweepConfig& c) {
    std::vector<Params> g;
    for (long n = 1; n <= c.n_max; ++n)
      for (long r = 1; r <= c.r_cap(); ++r)
        for (long p = 1; p <= r; ++p)
          g.push_back({{"n", n}, {"r", r}, {"p", p}});
    return g;
  };
  auto grid_partitions = [](const SweepConfig& c, long n_lo, bool with_r) {
    std::vector<Params> g;
    for (long n = n_lo; n <= c.n_max; ++n) {
      const long count = static_cast<long>(partitions_of(n).size());
      for (long idx = 0; idx < count; ++idx) {
        if (with_r)
          for (long r = 1; r <= n; ++r)
            g.push_back({{"n", n}, {"idx", idx}, {"r", r}});
        else
          g.push_back({{"n", n}, {"idx", idx}});
      }
    }
    return g;
  };

  reg.push_back(
      {"thm1", "n, r, s",
       "alternating sum over |mu|=n of <mu,r>/z_mu X^(l-1) sum (mu_i)_s equals "
       "(s-1)! C(n+s-1,n-r) [C(X,r) - C(X-s,r)]",
       false, grid_nrs,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm1_sides(get(ps, "n"), get(ps, "r"), get(ps, "s")));
       }});
  reg.push_back(
      {"thm1_alt", "n, r, s",
       "unsigned form: sum <mu,r>/z_mu X^(l-1) sum (mu_i)_s equals "
       "(s-1)! C(n+s-1,n-r) [C(X+r+s-1,r) - C(X+r-1,r)]",
       false, grid_nrs,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm1_alt_sides(get(ps, "n"), get(ps, "r"), get(ps, "s")));
       }});
  reg.push_back(
      {"thm2", "n, r, s, p (p <= r)",
       "fixed-length refinement: r! sum_{l(mu)=p} <mu,r>/z_mu sum (mu_i)_s/s! "
       "equals C(n+s-1,n-r) sum_j C(j,p-1) |s(r,j)| s^(j-p)",
       false, grid_nrsp,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm2_sides(get(ps, "n"), get(ps, "r"), get(ps, "s"),
                                 get(ps, "p")));
       }});
  reg.push_back(
      {"thm3", "n, r, s",
       "(r-1)! sum_{l(mu)=r} [sum m_i (i)_s]/prod m_i! equals s! C(n+s-1,n-r)",
       false, grid_nrs,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm3_sides(get(ps, "n"), get(ps, "r"), get(ps, "s")));
       }});
  reg.push_back(
      {"thm4", "n, s",
       "r = n case: sum (-1)^(n-l) X^(l-1)/z_mu sum (mu_i)_s equals "
       "(s-1)! [C(X,n) - C(X-s,n)]",
       false, grid_ns,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm4_sides(get(ps, "n"), get(ps, "s")));
       }});
  reg.push_back(
      {"thm4_alt", "n, s",
       "unsigned form: sum X^(l-1)/z_mu sum (mu_i)_s equals "
       "(s-1)! [C(X+n+s-1,n) - C(X+n-1,n)]",
       false, grid_ns,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm4_alt_sides(get(ps, "n"), get(ps, "s")));
       }});
  reg.push_back(
      {"thm5", "n",
       "over {X,z}: sum X^(l-1)/z_mu sum m_i z^(i-1) equals "
       "sum_i h_{n-i}(1^X) z^(i-1)/i",
       false, grid_n,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm5_sides(get(ps, "n")));
       }});
  reg.push_back(
      {"thm7", "n, r",
       "over {X,z}: alternating <mu,r> sum with z-marks equals the double sum "
       "in C(X,r-j), C(i,j) and composition coefficients",
       false, grid_nr,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm7_sides(get(ps, "n"), get(ps, "r")));
       }});
  reg.push_back(
      {"thm8", "n, r, p (p <= r)",
       "X^(p-1) coefficient of thm7 over {z}: fixed-length z-marked sum equals "
       "the double sum with |s(r-j,p-1)| weights",
       false, grid_nrp,
       [](const Params& ps, const SweepConfig&) {
         return sides(thm8_sides(get(ps, "n"), get(ps, "r"), get(ps, "p")));
       }});
  reg.push_back(
      {"thm9", "ymax, qmax",
       "trivariate series: ((1-y)/(1-y(1+q)))^x equals "
       "sum C(i-1,j-1) |s(j,k)|/j! x^k y^i q^j under the caps",
       false,
       [](const SweepConfig& c) {
         return std::vector<Params>{
             {{"ymax", c.n_max}, {"qmax", c.r_cap()}}};
       },
       [](const Params& ps, const SweepConfig&) {
         return sides(std::pair(theorem9_lhs(get(ps, "ymax"), get(ps, "qmax")),
                                theorem9_rhs(get(ps, "ymax"), get(ps, "qmax"))));
       }});
  reg.push_back(
      {"eq1", "a, b, n (a, b range over [-n_max, n_max], n over [0, n_max])",
       "Chu-Vandermonde on integers: C(a+b,n) = sum_i C(a,n-i) C(b,i)",
       false,
       [](const SweepConfig& c) {
         std::vector<Params> g;
         for (long a = -c.n_max; a <= c.n_max; ++a)
           for (long b = -c.n_max; b <= c.n_max; ++b)
             for (long n = 0; n <= c.n_max; ++n)
               g.push_back({{"a", a}, {"b", b}, {"n", n}});
         return g;
       },
       [](const Params& ps, const SweepConfig&) {
         return sides(eq1_sides(Integer(get(ps, "a")), Integer(get(ps, "b")),
                                get(ps, "n")));
       }});
  reg.push_back(
      {"eq2", "n, r",
       "sum (-1)^(r-l) <mu,r>/z_mu X^l equals C(n-1,r-1) C(X,r)",
       false, grid_nr,
       [](const Params& ps, const SweepConfig&) {
         return sides(eq2_sides(get(ps, "n"), get(ps, "r")));
       }});
  reg.push_back(
      {"eq3", "n, r, p (p <= r)",
       "r! sum_{l(mu)=p} <mu,r>/z_mu equals C(n-1,r-1) |s(r,p)|",
       false,
       [](const SweepConfig& c) {
         std::vector<Params> g;
         for (long n = 1; n <= c.n_max; ++n)
           for (long r = 1; r <= c.r_cap(); ++r)
             for (long p = 1; p <= r; ++p)
               g.push_back({{"n", n}, {"r", r}, {"p", p}});
         return g;
       },
       [](const Params& ps, const SweepConfig&) {
         return sides(eq3_sides(get(ps, "n"), get(ps, "r"), get(ps, "p")));
       }});
  reg.push_back(
      {"eq4", "n (from 0)",
       "convolution over {X,Y}: C(X+Y+n-1,n) = sum_i h_{n-i}(1^X) h_i(1^Y)",
       false,
       [](const SweepConfig& c) {
         std::vector<Params> g;
         for (long n = 0; n <= c.n_max; ++n) g.push_back({{"n", n}});
         return g;
       },
       [](const Params& ps, const SweepConfig&) {
         return sides(eq4_sides(get(ps, "n")));
       }});
  reg.push_back(
      {"eq5", "i, k (i from 0, k from 1)",
       "h_i(1^X) at X = k equals C(i+k-1,i)",
       false,
       [](const SweepConfig& c) {
         std::vector<Params> g;
         for (long i = 0; i <= c.n_max; ++i)
           for (long k = 1; k <= c.n_max; ++k)
             g.push_back({{"i", i}, {"k", k}});
         return g;
       },
       [](const Params& ps, const SweepConfig&) {
         return sides(eq5_sides(get(ps, "i"), get(ps, "k")));
       }});
  reg.push_back(
      {"lemma", "a, b, c, d (a <= n_max, b <= s_max, 0 <= c <= d <= a)",
       "C(a+b-1,d-c) C(b+c-1,c-1) equals "
       "sum_{i=c}^{d} C(i-1,c-1) C(a-i-1,a-d-1) C(b+i-1,i-1)",
       false,
       [](const SweepConfig& c) {
         std::vector<Params> g;
         for (long a = 0; a <= c.n_max; ++a)
           for (long b = 1; b <= c.s_cap(); ++b)
             for (long cc = 0; cc <= a; ++cc)
               for (long d = cc; d <= a; ++d)
                 g.push_back({{"a", a}, {"b", b}, {"c", cc}, {"d", d}});
         return g;
       },
       [](const Params& ps, const SweepConfig&) {
         return sides(lemma_sides(get(ps, "a"), get(ps, "b"), get(ps, "c"),
                                  get(ps, "d")));
       }});
  reg.push_back(
      {"genbinom", "n, idx, r (idx indexes partitions of n in canonical order)",
       "<lambda,r> from the generating product equals the exhaustive "
       "subset-enumeration oracle (skips n above --oracle-cap)",
       false,
       [grid_partitions](const SweepConfig& c) {
         SweepConfig capped = c;
         capped.n_max = std::min(c.n_max, c.oracle_cap);
         return grid_partitions(capped, 1, true);
       },
       [](const Params& ps, const SweepConfig& c) {
         const Partition mu = partitions_of(
             get(ps, "n"))[static_cast<std::size_t>(get(ps, "idx"))];
         return sides(std::pair(gen_binom(mu, get(ps, "r")),
                                gen_binom_oracle(mu, get(ps, "r"),
                                                 c.oracle_cap)));
       }});
  reg.push_back(
      {"genbinom_length", "n, idx",
       "<mu, l(mu)> equals the product of the parts of mu",
       false,
       [grid_partitions](const SweepConfig& c) {
         return grid_partitions(c, 1, false);
       },
       [](const Params& ps, const SweepConfig&) {
         const Partition mu = partitions_of(
             get(ps, "n"))[static_cast<std::size_t>(get(ps, "idx"))];
         return sides(std::pair(gen_binom(mu, mu.length()),
                                parts_product(mu)));
       }});
  reg.push_back(
      {"genbinom_length1", "n, idx",
       "<mu, l(mu)+1> equals (|mu| - l(mu))/2 times the product of the parts",
       false,
       [grid_partitions](const SweepConfig& c) {
         return grid_partitions(c, 1, false);
       },
       [](const Params& ps, const SweepConfig&) {
         const Partition mu = partitions_of(
             get(ps, "n"))[static_cast<std::size_t>(get(ps, "idx"))];
         return sides(std::pair(
             Rational(gen_binom(mu, mu.length() + 1)),
             make_rational((mu.weight() - mu.length()) * parts_product(mu),
                           Integer(2))));
       }});
  reg.push_back(
      {"recurrence", "n, idx, i, r (i <= s_max; lambda from partitions of n)",
       "part-union recurrence: <lambda + part i, r> equals "
       "sum_{j=1}^{i} C(i,j) <lambda, r-j>",
       false,
       [](const SweepConfig& c) {
         std::vector<Params> g;
         for (long n = 0; n <= c.n_max; ++n) {
           const long count = static_cast<long>(partitions_of(n).size());
           for (long idx = 0; idx < count; ++idx)
             for (long i = 1; i <= c.s_cap(); ++i)
               for (long r = 1; r <= n + i; ++r)
                 g.push_back({{"n", n}, {"idx", idx}, {"i", i}, {"r", r}});
         }
         return g;
       },
       [](const Params& ps, const SweepConfig&) {
         const Partition la = partitions_of(
             get(ps, "n"))[static_cast<std::size_t>(get(ps, "idx"))];
         const long i = get(ps, "i");
         const long r = get(ps, "r");
         Integer rhs = 0;
         for (long j = 1; j <= i; ++j)
           rhs += binomial(Integer(i), j) * gen_binom(la, r - j);
         return sides(std::pair(gen_binom(add_part(la, static_cast<int>(i)), r),
                                std::move(rhs)));
       }});
  reg.push_back(
      {"conj1", "n, umax",
       "series in u with X_0, X_1, ...: alternating product expansion over "
       "|mu|=n equals sum_j u^j sum_k C(X_0-j,n-k) P_jk",
       false,
       [](const SweepConfig& c) {
         std::vector<Params> g;
         for (long n = 1; n <= c.n_max; ++n)
           g.push_back({{"n", n}, {"umax", c.umax}});
         return g;
       },
       [](const Params& ps, const SweepConfig&) {
         return sides(conj1_sides(get(ps, "n"), get(ps, "umax")));
       }});
  reg.push_back(
      {"conj2", "n, r, umax",
       "series in u: alternating <mu,r>-weighted product expansion equals "
       "sum_j u^j C(n+j-1,n-r) sum_k C(X_0-j,r-k) P_jk",
       false,
       [](const SweepConfig& c) {
         std::vector<Params> g;
         for (long n = 1; n <= c.n_max; ++n)
           for (long r = 1; r <= c.r_cap(); ++r)
             g.push_back({{"n", n}, {"r", r}, {"umax", c.umax}});
         return g;
       },
       [](const Params& ps, const SweepConfig&) {
         return sides(conj2_sides(get(ps, "n"), get(ps, "r"),
                                  get(ps, "umax")));
       }});
  /* Intentionally failing single instance so the exit-code contract can be
   * exercised end to end; hidden from `list`. */
  reg.push_back(
      {"selftest_fail", "(none)", "always-unequal self-test stub", true,
       [](const SweepConfig&) { return std::vector<Params>{{}}; },
       [](const Params&, const SweepConfig&) {
         return SideStrings{"0", "1", false};
       }});
  return reg;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> reg = build_registry();
  return reg;
}

const IdentityInfo* find_identity(const std::string& id) {
  for (const auto& info : identity_registry())
    if (info.id == id) return &info;
  return nullptr;
}

std::vector<IdentityReport> run_sweep(const SweepConfig& cfg) {
  const IdentityInfo* info = find_identity(cfg.identity_id);
  if (!info)
    throw std::invalid_argument("unknown identity: " + cfg.identity_id);
  if (cfg.n_max < 1 || cfg.umax < 1 || cfg.oracle_cap < 1 || cfg.jobs < 1)
    throw std::invalid_argument("run_sweep: caps must be >= 1");
  const std::vector<Params> grid = info->grid(cfg);
  std::vector<IdentityReport> out(grid.size());
  auto work = [&](std::size_t idx) {
    const auto t0 = std::chrono::steady_clock::now();
    SideStrings sr = info->run(grid[idx], cfg);
    const auto t1 = std::chrono::steady_clock::now();
    out[idx] = IdentityReport{
        cfg.identity_id, grid[idx], std::move(sr.lhs), std::move(sr.rhs),
        sr.equal,
        std::chrono::duration<double, std::milli>(t1 - t0).count()};
  };
  if (cfg.jobs <= 1 || grid.size() <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    const std::size_t nthreads = static_cast<std::size_t>(
        std::min<long>(cfg.jobs, static_cast<long>(grid.size())));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < grid.size();
             i = next.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }
  return out;
}

namespace {

nlohmann::ordered_json config_json(const SweepConfig& cfg) {
  /* Effective values only; jobs and output location do not affect report
   * content, so they are left out to keep files byte-identical across
   * equivalent runs. */
  return nlohmann::ordered_json{{"n_max", cfg.n_max},
                                {"r_max", cfg.r_cap()},
                                {"s_max", cfg.s_cap()},
                                {"umax", cfg.umax},
                                {"oracle_cap", cfg.oracle_cap}};
}

}  // namespace

std::string render_json(const SweepConfig& cfg,
                        const std::vector<IdentityReport>& reports,
                        bool with_timings) {
  nlohmann::ordered_json root;
  root["identity"] = cfg.identity_id;
  root["config"] = config_json(cfg);
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& rep : reports) {
    nlohmann::ordered_json params;
    for (const auto& [k, v] : rep.params) params[k] = v;
    nlohmann::ordered_json row{{"params", std::move(params)},
                               {"lhs", rep.lhs},
                               {"rhs", rep.rhs},
                               {"equal", rep.equal}};
    if (with_timings) row["elapsed_ms"] = rep.elapsed_ms;
    results.push_back(std::move(row));
    if (rep.equal) ++passed;
  }
  root["results"] = std::move(results);
  root["summary"] =
      nlohmann::ordered_json{{"total", reports.size()},
                             {"passed", passed},
                             {"failed", reports.size() - passed}};
  return root.dump(2) + "\n";
}

std::string render_tsv(const SweepConfig& cfg,
                       const std::vector<IdentityReport>& reports,
                       bool with_timings) {
  std::ostringstream out;
  out << "identity\tparams\tlhs\trhs\tequal";
  if (with_timings) out << "\telapsed_ms";
  out << '\n';
  for (const auto& rep : reports) {
    out << cfg.identity_id << '\t';
    for (std::size_t i = 0; i < rep.params.size(); ++i) {
      if (i > 0) out << ',';
      out << rep.params[i].first << '=' << rep.params[i].second;
    }
    out << '\t' << rep.lhs << '\t' << rep.rhs << '\t'
        << (rep.equal ? "true" : "false");
    if (with_timings) out << '\t' << rep.elapsed_ms;
    out << '\n';
  }
  return out.str();
}

}  // namespace partbinom
