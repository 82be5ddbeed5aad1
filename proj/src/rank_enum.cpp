#include "satsemi/rank_enum.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

#include "satsemi/extremal.hpp"
#include "satsemi/sat_generators.hpp"

namespace satsemi {

  namespace {

    // Extend the factor chain one step; `product` is the current d value
    // and `sum` the running total. Each of the `left` remaining terms is at
    // least twice the previous one.
    void extend_sequence(Element                   frobenius,
                         std::size_t               left,
                         Element                   product,
                         Element                   sum,
                         std::vector<Element>&     reversed,
                         std::vector<SatSequence>& out) {
      if (left == 0) {
        out.push_back(SatSequence{{reversed.rbegin(), reversed.rend()}});
        return;
      }
      for (Element a = 2;; ++a) {
        Element next = product * a;
        // lower bound on the final sum with the remaining factors all 2
        Element bound = sum + next * ((Element{1} << left) - 1);
        if (bound >= frobenius) {
          break;
        }
        reversed.push_back(next);
        extend_sequence(frobenius, left - 1, next, sum + next, reversed, out);
        reversed.pop_back();
      }
    }

    void solve(std::span<Element const>           coeffs,
               std::size_t                        i,
               Element                            rest,
               std::vector<Element>&              x,
               std::vector<std::vector<Element>>& out) {
      if (i + 1 == coeffs.size()) {
        if (rest % coeffs[i] == 0) {
          x[i] = rest / coeffs[i];
          out.push_back(x);
        }
        return;
      }
      for (Element v = 0; v * coeffs[i] <= rest; ++v) {
        x[i] = v;
        solve(coeffs, i + 1, rest - v * coeffs[i], x, out);
      }
    }

    void check_witness(Element frobenius, RankWitness const& w) {
      auto const& ds = w.seq.ds;
      if (!is_sat_sequence(frobenius, ds)) {
        throw Error(ErrorCode::NotASatSequence, "witness sequence is not a Sat(F)-sequence");
      }
      if (w.ts.size() != ds.size()) {
        throw Error(ErrorCode::PreconditionViolated, "coefficient count differs from length");
      }
      Element sum = 0;
      for (std::size_t i = 0; i < ds.size(); ++i) {
        if (w.ts[i] <= 0) {
          throw Error(ErrorCode::PreconditionViolated, "coefficients must be positive");
        }
        sum += w.ts[i] * ds[i];
        if (i > 0 && std::gcd(ds[i - 1] / ds[i], w.ts[i]) != 1) {
          throw Error(ErrorCode::PreconditionViolated,
                      "coefficient " + std::to_string(i + 1) + " breaks the coprimality condition");
        }
      }
      if (sum >= frobenius) {
        throw Error(ErrorCode::PreconditionViolated, "sum of t_i d_i must stay below F");
      }
    }

  }  // namespace

  bool is_sat_sequence(Element frobenius, std::span<Element const> ds) {
    if (ds.empty() || frobenius < 1) {
      return false;
    }
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds[i] <= 0) {
        return false;
      }
      if (i > 0 && (ds[i] >= ds[i - 1] || ds[i - 1] % ds[i] != 0)) {
        return false;
      }
    }
    return frobenius % ds.back() != 0;
  }

  std::vector<SatSequence> list_sequences(Element frobenius, std::size_t p) {
    if (p == 0) {
      throw Error(ErrorCode::PreconditionViolated, "sequence length must be positive");
    }
    std::vector<SatSequence> result;
    if (p >= 62) {
      return result;
    }
    std::vector<Element> reversed;
    for (Element a1 = 2; a1 * ((Element{1} << p) - 1) < frobenius; ++a1) {
      if (frobenius % a1 == 0) {
        continue;
      }
      reversed.assign({a1});
      extend_sequence(frobenius, p - 1, a1, a1, reversed, result);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  bool feasible_rank(Element frobenius, std::size_t p) {
    if (p >= 62) {
      return false;
    }
    return smallest_non_divisor(frobenius) * ((Element{1} << p) - 1) < frobenius;
  }

  std::vector<std::vector<Element>> diophantine_solutions(std::span<Element const> coeffs,
                                                          Element                  k) {
    for (auto c : coeffs) {
      if (c <= 0) {
        throw Error(ErrorCode::PreconditionViolated, "coefficients must be positive");
      }
    }
    std::vector<std::vector<Element>> result;
    if (k < 0) {
      return result;
    }
    if (coeffs.empty()) {
      if (k == 0) {
        result.emplace_back();
      }
      return result;
    }
    std::vector<Element> x(coeffs.size(), 0);
    solve(coeffs, 0, k, x, result);
    return result;
  }

  std::vector<std::vector<Element>> coefficient_tuples(Element frobenius, SatSequence const& seq) {
    if (!is_sat_sequence(frobenius, seq.ds)) {
      throw Error(ErrorCode::NotASatSequence, "not a Sat(F)-sequence");
    }
    auto const& ds    = seq.ds;
    auto const  dp    = ds.back();
    Element     alpha = frobenius - 1 - std::accumulate(ds.begin(), ds.end(), Element{0});
    std::vector<std::vector<Element>> result;
    if (alpha < 0) {
      return result;
    }
    std::vector<Element> reduced;
    for (auto d : ds) {
      reduced.push_back(d / dp);
    }
    for (Element k = 0; k <= alpha / dp; ++k) {
      for (auto& x : diophantine_solutions(reduced, k)) {
        for (auto& v : x) {
          ++v;
        }
        bool coprime = true;
        for (std::size_t i = 1; i < ds.size() && coprime; ++i) {
          coprime = std::gcd(ds[i - 1] / ds[i], x[i]) == 1;
        }
        if (coprime) {
          result.push_back(std::move(x));
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Element> witness_generators(Element frobenius, RankWitness const& w) {
    check_witness(frobenius, w);
    std::vector<Element> gens{w.seq.ds.front()};
    Element              sum = w.ts.front() * w.seq.ds.front();
    for (std::size_t i = 1; i < w.ts.size(); ++i) {
      sum += w.ts[i] * w.seq.ds[i];
      gens.push_back(sum);
    }
    return gens;
  }

  NumericalSemigroup witness_to_semigroup(Element frobenius, RankWitness const& w) {
    return closure(frobenius, witness_generators(frobenius, w));
  }

  std::vector<RankWitness> canonical_witnesses(Element frobenius, std::size_t p) {
    std::vector<RankWitness> result;
    if (p == 0 || !feasible_rank(frobenius, p)) {
      return result;
    }
    for (auto const& seq : list_sequences(frobenius, p)) {
      for (auto& ts : coefficient_tuples(frobenius, seq)) {
        if (ts.front() == 1) {
          result.push_back(RankWitness{seq, std::move(ts)});
        }
      }
    }
    return result;
  }

  std::vector<NumericalSemigroup> enumerate_rank(Element frobenius, std::size_t p, unsigned jobs) {
    if (frobenius < 1) {
      throw Error(ErrorCode::OutOfRange, "the Frobenius number must be positive");
    }
    if (p == 0) {
      return {NumericalSemigroup::ordinary(frobenius)};
    }
    std::vector<NumericalSemigroup> result;
    if (!feasible_rank(frobenius, p)) {
      return result;
    }
    auto const seqs    = list_sequences(frobenius, p);
    auto const workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, seqs.size()));
    std::vector<std::vector<NumericalSemigroup>> parts(workers);
    auto work = [&](std::size_t w) {
      for (std::size_t i = w; i < seqs.size(); i += workers) {
        for (auto& ts : coefficient_tuples(frobenius, seqs[i])) {
          if (ts.front() == 1) {
            parts[w].push_back(witness_to_semigroup(frobenius, RankWitness{seqs[i], std::move(ts)}));
          }
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back(work, w);
      }
      for (auto& t : threads) {
        t.join();
      }
    }
    for (auto& part : parts) {
      std::move(part.begin(), part.end(), std::back_inserter(result));
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

}  // namespace satsemi
