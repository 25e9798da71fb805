#include "idemgen/census.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "idemgen/classify.hpp"
#include "idemgen/closure.hpp"
#include "idemgen/complement.hpp"
#include "idemgen/constructors.hpp"
#include "idemgen/errors.hpp"
#include "idemgen/semiring_file.hpp"

namespace idemgen {

  namespace {

    using table = FiniteSemiring::table_type;

    // Runs fn(i) for i in [0, count) on up to `workers` threads.
    template <typename Fn>
    void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
      workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
      if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
          fn(i);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < count; i = next++) {
            fn(i);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    std::vector<std::string> index_labels(std::size_t n) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
      }
      return labels;
    }

    bool associative(table const& t, std::size_t n) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    table permuted(table const& t, std::size_t n, std::vector<element_type> const& perm) {
      table out(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          out[perm[a] * n + perm[b]] = perm[t[a * n + b]];
        }
      }
      return out;
    }

    constexpr int undefined = -1;

    // Backtracking over multiplication tables with identity 1 and absorbing 0
    // for a fixed additive table.
    class MultiplicationSearch {
     public:
      MultiplicationSearch(table add, std::size_t n) : _add(std::move(add)), _n(n), _mul(n * n, undefined) {
        for (std::size_t a = 0; a < n; ++a) {
          _mul[a]         = 0;
          _mul[a * n]     = 0;
          _mul[n + a]     = static_cast<int>(a);
          _mul[a * n + 1] = static_cast<int>(a);
        }
        _mul[1] = 0;
        _mul[n] = 0;
        for (std::size_t a = 2; a < n; ++a) {
          for (std::size_t b = 2; b < n; ++b) {
            _cells.push_back(a * n + b);
          }
        }
      }

      template <typename Emit>
      void run(Emit&& emit) {
        if (consistent()) {
          fill(0, emit);
        }
      }

     private:
      int m(int a, int b) const {
        return (a < 0 || b < 0) ? undefined : _mul[a * _n + b];
      }
      int p(int a, int b) const {
        return (a < 0 || b < 0) ? undefined : static_cast<int>(_add[a * _n + b]);
      }

      // Every associativity and two-sided distributivity instance whose
      // entries are all defined holds.
      bool consistent() const {
        auto const n = static_cast<int>(_n);
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            int const ab = m(a, b);
            for (int c = 0; c < n; ++c) {
              int const bc = m(b, c);
              int       l  = m(ab, c);
              int       r  = m(a, bc);
              if (l != undefined && r != undefined && l != r) {
                return false;
              }
              l = m(a, p(b, c));
              r = p(ab, m(a, c));
              if (l != undefined && r != undefined && l != r) {
                return false;
              }
              l = m(p(a, b), c);
              r = p(m(a, c), bc);
              if (l != undefined && r != undefined && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Emit>
      void fill(std::size_t k, Emit& emit) {
        if (k == _cells.size()) {
          table mul(_mul.begin(), _mul.end());
          emit(mul);
          return;
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _mul[_cells[k]] = static_cast<int>(v);
          if (consistent()) {
            fill(k + 1, emit);
          }
        }
        _mul[_cells[k]] = undefined;
      }

      table              _add;
      std::size_t        _n;
      std::vector<int>   _mul;
      std::vector<std::size_t> _cells;
    };

  }  // namespace

  std::vector<table> additive_monoids(std::size_t n) {
    if (n == 0) {
      throw DomainError("order must be positive");
    }
    if (n == 1) {
      return {table{0}};
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        cells.emplace_back(i, j);
      }
    }
    std::size_t total = 1;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      total *= n;
    }

    std::vector<element_type> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);

    std::vector<table> reps;
    table              t(n * n);
    for (std::size_t code = 0; code < total; ++code) {
      for (std::size_t a = 0; a < n; ++a) {
        t[a]     = static_cast<element_type>(a);
        t[a * n] = static_cast<element_type>(a);
      }
      std::size_t c = code;
      for (auto [i, j] : cells) {
        auto const v = static_cast<element_type>(c % n);
        c /= n;
        t[i * n + j] = v;
        t[j * n + i] = v;
      }
      if (!associative(t, n)) {
        continue;
      }
      // Least relabeling fixing 0 as the class representative.
      table                     best;
      std::vector<element_type> perm(n);
      auto                      order = rest;
      do {
        perm[0] = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
          perm[k + 1] = order[k];
        }
        auto candidate = permuted(t, n, perm);
        if (best.empty() || candidate < best) {
          best = std::move(candidate);
        }
      } while (std::next_permutation(order.begin(), order.end()));
      if (best == t) {
        reps.push_back(t);
      }
    }
    return reps;
  }

  std::vector<FiniteSemiring> enumerate_semirings(std::size_t order,
                                                  std::size_t max_order,
                                                  unsigned    workers) {
    if (order == 0 || order > max_order) {
      throw DomainError(fmt::format("census order must be between 1 and {}", max_order));
    }
    if (order == 1) {
      return {canonical_representative(trivial_semiring())};
    }
    auto const monoids = additive_monoids(order);
    std::vector<std::map<CanonicalKey, FiniteSemiring>> found(monoids.size());

    parallel_for(monoids.size(), workers, [&](std::size_t i) {
      for (std::size_t u = 1; u < order; ++u) {
        std::vector<element_type> swap(order);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[1], swap[u]);
        MultiplicationSearch search(permuted(monoids[i], order, swap), order);
        search.run([&](table const& mul) {
          FiniteSemiring s(index_labels(order), permuted(monoids[i], order, swap), mul, 0, 1);
          auto           key = canonical_form(s);
          if (!found[i].contains(key)) {
            found[i].emplace(std::move(key), canonical_representative(s));
          }
        });
      }
    });

    std::map<CanonicalKey, FiniteSemiring> all;
    for (auto& part : found) {
      all.merge(part);
    }
    std::vector<FiniteSemiring> out;
    for (auto& [key, s] : all) {
      out.push_back(std::move(s));
    }
    return out;
  }

  SemiringFlags semiring_flags(FiniteSemiring const& s) {
    auto const cls = element_classes(s);
    auto       all_have = [&](bool orthogonal) {
      for (auto e : cls.idempotents.members()) {
        if (!(orthogonal ? orthogonal_complement(s, e) : nilorthogonal_complement(s, e))) {
          return false;
        }
      }
      return true;
    };
    return {cls.is_boolean(),
            cls.is_commutative(),
            generation_certificate(s, GenerationMode::multiplicative, GeneratorClass::idempotents)
                .generated,
            generation_certificate(s, GenerationMode::multiplicative, GeneratorClass::nilidempotents)
                .generated,
            generation_certificate(s, GenerationMode::additive, GeneratorClass::idempotents)
                .generated,
            all_have(true),
            all_have(false),
            cls.nil_in_center(),
            cls.nil_in_invertible_center()};
  }

  ScanReport scan(ScanOptions const& options) {
    ScanReport report;
    report.orders = options.orders;
    for (auto id : options.theorems) {
      report.tallies[id] = {};
    }
    for (auto order : options.orders) {
      auto catalog = enumerate_semirings(order, options.max_order, options.workers);
      if (order == 1 && !options.include_trivial) {
        catalog.clear();
      }
      report.count_per_order[order] = catalog.size();

      std::vector<std::vector<TheoremReport>> checked(catalog.size());
      std::vector<std::optional<SemiringFlags>> flags(catalog.size());
      parallel_for(catalog.size(), options.workers, [&](std::size_t i) {
        flags[i] = semiring_flags(catalog[i]);
        for (auto id : options.theorems) {
          checked[i].push_back(check_theorem(catalog[i], id));
        }
      });

      for (std::size_t i = 0; i < catalog.size(); ++i) {
        ScanEntry entry{catalog[i], *flags[i], {}};
        for (auto const& r : checked[i]) {
          entry.verdicts[r.theorem] = r.verdict;
          if (r.verdict == Verdict::violation) {
            report.violations.push_back({r, serialize_semiring(catalog[i])});
            report.aborted = true;
          } else if (r.verdict == Verdict::confirmed) {
            ++report.tallies[r.theorem].confirmed;
          } else {
            ++report.tallies[r.theorem].vacuous;
          }
        }
        report.entries.push_back(std::move(entry));
        if (report.aborted) {
          return report;
        }
      }
    }
    return report;
  }

}  // namespace idemgen
