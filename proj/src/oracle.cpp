#include "satsemi/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "satsemi/extremal.hpp"
#include "satsemi/rank_enum.hpp"
#include "satsemi/sat_generators.hpp"
#include "satsemi/sat_tree.hpp"

namespace satsemi::oracle {

  namespace {

    bool member(Element frobenius, Mask members, Element x) {
      if (x < 0) {
        return false;
      }
      if (x > frobenius + 1) {
        return true;
      }
      return (members >> x) & 1U;
    }

    // gcd of all members y <= a (0 contributes nothing)
    Element d_mask(Element frobenius, Mask members, Element a) {
      Element d = 0;
      for (Element y = 1; y <= a; ++y) {
        if (member(frobenius, members, y)) {
          d = std::gcd(d, y);
        }
      }
      return d;
    }

    bool closed(Element frobenius, Mask members) {
      for (Element a = 1; a < frobenius; ++a) {
        if (!member(frobenius, members, a)) {
          continue;
        }
        for (Element b = a; a + b <= frobenius + 1; ++b) {
          if (member(frobenius, members, b) && !member(frobenius, members, a + b)) {
            return false;
          }
        }
      }
      return true;
    }

    std::vector<Element> small_of(Element frobenius, Mask members) {
      std::vector<Element> result;
      for (Element x = 1; x < frobenius; ++x) {
        if (member(frobenius, members, x)) {
          result.push_back(x);
        }
      }
      return result;
    }

    std::size_t genus_of(Element frobenius, Mask members) {
      std::size_t g = 0;
      for (Element x = 1; x <= frobenius; ++x) {
        g += member(frobenius, members, x) ? 0 : 1;
      }
      return g;
    }

    // positive members x < F at which d jumps
    std::vector<Element> jumps_of(Element frobenius, Mask members) {
      std::vector<Element> result;
      Element              d = 0;
      for (auto x : small_of(frobenius, members)) {
        if (std::gcd(d, x) != d) {
          result.push_back(x);
        }
        d = std::gcd(d, x);
      }
      return result;
    }

    Mask to_mask(NumericalSemigroup const& s) {
      Mask m = 0;
      for (Element x = 0; x <= s.frobenius() + 1; ++x) {
        if (s.contains(x)) {
          m |= Mask{1} << x;
        }
      }
      return m;
    }

    NumericalSemigroup from_mask(Element frobenius, Mask members) {
      return NumericalSemigroup::from_small_elements(frobenius, small_of(frobenius, members));
    }

    std::string show(std::vector<Element> const& v) {
      std::ostringstream out;
      out << '{';
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? "," : "") << v[i];
      }
      out << '}';
      return out.str();
    }

    std::string show(Element frobenius, Mask members) {
      return show(small_of(frobenius, members));
    }

    std::vector<Mask> masks_of(std::vector<NumericalSemigroup> const& list) {
      std::vector<Mask> result;
      for (auto const& s : list) {
        result.push_back(to_mask(s));
      }
      return result;
    }

    void compare_sets(std::string const&       what,
                      Element                  frobenius,
                      std::vector<Mask>        expected,
                      std::vector<Mask>        actual,
                      std::vector<std::string>& out) {
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      if (std::adjacent_find(actual.begin(), actual.end()) != actual.end()) {
        out.push_back(what + ": duplicate output");
      }
      std::vector<Mask> missing, extra;
      std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                          std::back_inserter(missing));
      std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                          std::back_inserter(extra));
      for (auto m : missing) {
        out.push_back(what + ": missing " + show(frobenius, m));
      }
      for (auto m : extra) {
        out.push_back(what + ": unexpected " + show(frobenius, m));
      }
    }

  }  // namespace

  bool mask_is_saturated(Element frobenius, Mask members) {
    Element const bound = 2 * frobenius + 3;
    // s + d_S(s) in S for every positive member s
    bool definition = true;
    for (Element s = 1; s <= bound && definition; ++s) {
      if (member(frobenius, members, s)) {
        definition = member(frobenius, members, s + d_mask(frobenius, members, s));
      }
    }
    // a + d_A(a) in A for every a in A, 0 included
    bool step = true;
    for (Element a = 0; a <= bound && step; ++a) {
      if (member(frobenius, members, a)) {
        step = member(frobenius, members, a + d_mask(frobenius, members, a));
      }
    }
    // a + k d_A(a) in A for every a in A and k >= 0
    bool progression = true;
    for (Element a = 0; a <= bound && progression; ++a) {
      if (!member(frobenius, members, a)) {
        continue;
      }
      auto d = d_mask(frobenius, members, a);
      for (Element k = 0; d > 0 && a + k * d <= frobenius + 2; ++k) {
        if (!member(frobenius, members, a + k * d)) {
          progression = false;
          break;
        }
      }
    }
    if (definition != step || step != progression) {
      throw std::logic_error("saturation conditions disagree on " + show(frobenius, members));
    }
    return definition;
  }

  std::vector<Mask> brute_force_semigroups(Element frobenius, unsigned jobs) {
    if (frobenius > max_frobenius) {
      throw Error(ErrorCode::TooLarge,
                  "brute force is limited to F <= " + std::to_string(max_frobenius));
    }
    if (frobenius < 1) {
      throw Error(ErrorCode::OutOfRange, "the Frobenius number must be positive");
    }
    Mask const  fixed   = Mask{1} | (Mask{1} << (frobenius + 1));
    Mask const  count   = Mask{1} << (frobenius - 1);
    auto const  workers = std::max(1U, jobs);
    std::vector<std::vector<Mask>> parts(workers);
    auto work = [&](unsigned w) {
      Mask const first = count * w / workers;
      Mask const last  = count * (w + 1) / workers;
      for (Mask subset = first; subset < last; ++subset) {
        Mask members = fixed | (subset << 1);
        if (closed(frobenius, members)) {
          parts[w].push_back(members);
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back(work, w);
      }
      for (auto& t : threads) {
        t.join();
      }
    }
    std::vector<Mask> result;
    for (auto& part : parts) {
      result.insert(result.end(), part.begin(), part.end());
    }
    return result;
  }

  std::vector<NumericalSemigroup> brute_force_sat(Element frobenius, unsigned jobs) {
    std::vector<NumericalSemigroup> result;
    for (auto members : brute_force_semigroups(frobenius, jobs)) {
      if (mask_is_saturated(frobenius, members)) {
        result.push_back(from_mask(frobenius, members));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  Report check_all(Element frobenius, unsigned jobs) {
    auto const start = std::chrono::steady_clock::now();
    Report     report;
    report.frobenius = frobenius;
    auto& bad        = report.discrepancies;

    std::vector<Mask> sat;
    for (auto members : brute_force_semigroups(frobenius, jobs)) {
      if (mask_is_saturated(frobenius, members)) {
        sat.push_back(members);
      }
    }
    report.brute_count = sat.size();
    Element const F    = frobenius;

    // full enumeration
    compare_sets("enumerate_sat", F, sat, masks_of(enumerate_sat(F, jobs)), bad);
    ++report.checks;

    // genus slices
    for (Element g = 0; g <= F + 1; ++g) {
      std::vector<Mask> expected;
      for (auto m : sat) {
        if (static_cast<Element>(genus_of(F, m)) == g) {
          expected.push_back(m);
        }
      }
      compare_sets("enumerate_sat_genus(g=" + std::to_string(g) + ")", F, expected,
                   masks_of(enumerate_sat_genus(F, g, jobs)), bad);
      ++report.checks;
    }

    // inclusion-maximal members
    std::vector<Mask> maximal;
    for (auto m : sat) {
      bool is_max = std::none_of(sat.begin(), sat.end(), [m](Mask other) {
        return other != m && (other & m) == m;
      });
      if (is_max) {
        maximal.push_back(m);
      }
    }
    compare_sets("maximal_elements", F, maximal, masks_of(maximal_elements(F)), bad);
    ++report.checks;

    // minimum genus
    std::size_t least = F + 1;
    for (auto m : sat) {
      least = std::min(least, genus_of(F, m));
    }
    if (static_cast<Element>(least) != min_genus(F)) {
      bad.push_back("min_genus: expected " + std::to_string(least) + ", got "
                    + std::to_string(min_genus(F)));
    }
    ++report.checks;

    // minimal systems and the closure round trip
    for (auto m : sat) {
      auto const s        = from_mask(F, m);
      auto const expected = jumps_of(F, m);
      auto const system   = minimal_system(F, s).elements;
      if (system != expected) {
        bad.push_back("minimal_system of " + show(F, m) + ": expected " + show(expected)
                      + ", got " + show(system));
      }
      if (to_mask(closure(F, expected)) != m) {
        bad.push_back("closure(minimal_system) differs from " + show(F, m));
      }
      report.checks += 2;
    }

    // closure of every X with |X| <= 2 against the intersection of all
    // members of Sat(F) containing X
    auto check_closure = [&](std::vector<Element> const& xs) {
      Mask need = 0;
      for (auto x : xs) {
        need |= Mask{1} << x;
      }
      Mask meet  = ~Mask{0};
      bool found = false;
      for (auto m : sat) {
        if ((m & need) == need) {
          meet &= m;
          found = true;
        }
      }
      ++report.checks;
      if (found != is_sat_set(F, xs)) {
        bad.push_back("is_sat_set" + show(xs) + " disagrees with brute force");
        return;
      }
      if (found && to_mask(closure(F, xs)) != meet) {
        bad.push_back("closure" + show(xs) + ": expected " + show(F, meet));
      }
    };
    check_closure({});
    for (Element a = 1; a < F; ++a) {
      check_closure({a});
      for (Element b = a + 1; b < F; ++b) {
        check_closure({a, b});
      }
    }

    // rank partition and feasibility
    for (std::size_t p = 0; p <= static_cast<std::size_t>(F); ++p) {
      std::vector<Mask> expected;
      for (auto m : sat) {
        if (jumps_of(F, m).size() == p) {
          expected.push_back(m);
        }
      }
      compare_sets("enumerate_rank(p=" + std::to_string(p) + ")", F, expected,
                   masks_of(enumerate_rank(F, p, jobs)), bad);
      if (p > 0 && feasible_rank(F, p) == expected.empty()) {
        bad.push_back("feasible_rank(p=" + std::to_string(p) + ") disagrees with brute force");
      }
      report.checks += 2;
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

  std::string to_text(Report const& report) {
    std::ostringstream out;
    out << "F=" << report.frobenius << " sat=" << report.brute_count
        << " checks=" << report.checks << " discrepancies=" << report.discrepancies.size()
        << (report.ok() ? " ok" : " FAILED") << '\n';
    for (auto const& line : report.discrepancies) {
      out << "  " << line << '\n';
    }
    return out.str();
  }

  std::string to_json(std::vector<Report> const& reports) {
    auto list = nlohmann::json::array();
    for (auto const& r : reports) {
      list.push_back({{"frobenius", r.frobenius},
                      {"sat_count", r.brute_count},
                      {"checks", r.checks},
                      {"ok", r.ok()},
                      {"discrepancies", r.discrepancies}});
    }
    return list.dump();
  }

}  // namespace satsemi::oracle
