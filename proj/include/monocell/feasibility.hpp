#pragma once

// Exact linear feasibility over the rationals via equality pivoting followed
// by Fourier-Motzkin elimination, with witness extraction. Strict and
// non-strict inequalities are tracked separately so open-cell conditions
// (barycentric coordinates > 0, strict coordinate comparisons) are decided
// exactly. Problem sizes are small: at most a dozen variables.

#include "monocell/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace monocell {

enum class Rel { LE, LT, EQ };

struct LinConstraint {
  Vec coeffs;  // length nvars
  Rel rel = Rel::LE;
  Rat rhs;  // coeffs . x  (rel)  rhs
};

struct FeasResult {
  bool feasible = false;
  Vec witness;  // valid iff feasible
};

namespace detail {

struct Substitution {
  size_t var;
  Vec coeffs;  // x_var = offset + coeffs . x
  Rat offset;
};

// Bounds for one variable given values already chosen for the others.
inline Rat pick_in_interval(const std::optional<Rat>& lo, bool lo_strict,
                            const std::optional<Rat>& hi, bool hi_strict) {
  if (lo && hi) {
    if (*lo == *hi) return *lo;  // only reachable when both are non-strict
    return (*lo + *hi) / 2;
  }
  if (lo) return lo_strict ? *lo + 1 : *lo;
  if (hi) return hi_strict ? *hi - 1 : *hi;
  return Rat(0);
}

}  // namespace detail

inline FeasResult solve_feasibility(std::vector<LinConstraint> cons,
                                    size_t nvars) {
  using detail::Substitution;
  std::vector<Substitution> subs;

  auto is_zero_row = [](const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
  };

  // Pivot out equalities.
  for (bool progress = true; progress;) {
    progress = false;
    for (size_t i = 0; i < cons.size(); ++i) {
      if (cons[i].rel != Rel::EQ) continue;
      if (is_zero_row(cons[i].coeffs)) {
        if (cons[i].rhs != 0) return {false, {}};
        cons.erase(cons.begin() + i);
        progress = true;
        break;
      }
      size_t v = 0;
      while (cons[i].coeffs[v] == 0) ++v;
      Rat pivot = cons[i].coeffs[v];
      Substitution s;
      s.var = v;
      s.offset = cons[i].rhs / pivot;
      s.coeffs.assign(nvars, Rat(0));
      for (size_t c = 0; c < nvars; ++c)
        if (c != v) s.coeffs[c] = -cons[i].coeffs[c] / pivot;
      cons.erase(cons.begin() + i);
      for (auto& other : cons) {
        Rat k = other.coeffs[v];
        if (k == 0) continue;
        other.coeffs[v] = 0;
        for (size_t c = 0; c < nvars; ++c) other.coeffs[c] += k * s.coeffs[c];
        other.rhs -= k * s.offset;
      }
      subs.push_back(std::move(s));
      progress = true;
      break;
    }
  }

  // Deduplicate proportional constraints, keeping the tightest version.
  auto compact = [&](std::vector<LinConstraint>& cs) {
    std::map<Vec, std::pair<Rat, bool>> best;  // normalized coeffs -> (rhs, strict)
    std::vector<LinConstraint> kept;
    for (auto& c : cs) {
      if (is_zero_row(c.coeffs)) {
        bool ok = c.rel == Rel::LT ? (Rat(0) < c.rhs) : (Rat(0) <= c.rhs);
        if (!ok) {
          kept.clear();
          kept.push_back(LinConstraint{Vec(nvars, Rat(0)), Rel::LT, Rat(0)});
          cs = kept;
          return false;
        }
        continue;
      }
      size_t lead = 0;
      while (c.coeffs[lead] == 0) ++lead;
      Rat scale = rat_abs(c.coeffs[lead]);
      // Divide by the positive magnitude only, so that opposite-facing
      // constraints stay distinct keys.
      Vec key(nvars);
      for (size_t i = 0; i < nvars; ++i) key[i] = c.coeffs[i] / scale;
      Rat nrhs = c.rhs / scale;
      bool strict = c.rel == Rel::LT;
      auto it = best.find(key);
      if (it == best.end()) {
        best.emplace(std::move(key), std::make_pair(nrhs, strict));
      } else {
        auto& [rhs0, strict0] = it->second;
        if (nrhs < rhs0 || (nrhs == rhs0 && strict && !strict0)) {
          rhs0 = nrhs;
          strict0 = strict;
        }
      }
    }
    for (auto& [key, v] : best)
      kept.push_back(LinConstraint{key, v.second ? Rel::LT : Rel::LE, v.first});
    cs = std::move(kept);
    return true;
  };

  if (!compact(cons)) return {false, {}};

  // Fourier-Motzkin: eliminate remaining variables one at a time, recording
  // the constraint set involving each variable for back-substitution.
  std::vector<bool> substituted(nvars, false);
  for (const auto& s : subs) substituted[s.var] = true;

  struct Stage {
    size_t var;
    std::vector<LinConstraint> involving;  // constraints mentioning var
  };
  std::vector<Stage> stages;

  for (size_t vi = nvars; vi-- > 0;) {
    if (substituted[vi]) continue;
    Stage stage;
    stage.var = vi;
    std::vector<LinConstraint> rest;
    std::vector<const LinConstraint*> lower, upper;
    for (auto& c : cons) {
      if (c.coeffs[vi] == 0) {
        rest.push_back(c);
      } else {
        stage.involving.push_back(c);
      }
    }
    for (auto& c : stage.involving) {
      (c.coeffs[vi] > 0 ? upper : lower).push_back(&c);
    }
    for (auto* lo : lower) {
      for (auto* up : upper) {
        // lo: a x_vi + ... <= b with a<0 ; up: a' x_vi + ... <= b' with a'>0.
        Rat al = -lo->coeffs[vi], au = up->coeffs[vi];
        LinConstraint combined;
        combined.coeffs.assign(nvars, Rat(0));
        for (size_t c = 0; c < nvars; ++c)
          combined.coeffs[c] = lo->coeffs[c] * au + up->coeffs[c] * al;
        combined.rhs = lo->rhs * au + up->rhs * al;
        combined.rel =
            (lo->rel == Rel::LT || up->rel == Rel::LT) ? Rel::LT : Rel::LE;
        rest.push_back(std::move(combined));
      }
    }
    cons = std::move(rest);
    if (!compact(cons)) return {false, {}};
    stages.push_back(std::move(stage));
  }

  for (const auto& c : cons) {
    bool ok = c.rel == Rel::LT ? (Rat(0) < c.rhs) : (Rat(0) <= c.rhs);
    if (!ok) return {false, {}};
  }

  // Back-substitute: assign eliminated variables in reverse order.
  Vec x(nvars, Rat(0));
  for (size_t si = stages.size(); si-- > 0;) {
    const auto& stage = stages[si];
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : stage.involving) {
      Rat a = c.coeffs[stage.var];
      Rat others(0);
      for (size_t v = 0; v < nvars; ++v)
        if (v != stage.var) others += c.coeffs[v] * x[v];
      Rat bound = (c.rhs - others) / a;
      bool strict = c.rel == Rel::LT;
      if (a > 0) {
        if (!hi || bound < *hi || (bound == *hi && strict)) {
          hi = bound;
          hi_strict = strict;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && strict)) {
          lo = bound;
          lo_strict = strict;
        }
      }
    }
    x[stage.var] = detail::pick_in_interval(lo, lo_strict, hi, hi_strict);
  }
  for (size_t si = subs.size(); si-- > 0;) {
    const auto& s = subs[si];
    x[s.var] = s.offset + dot(s.coeffs, x);
  }
  return {true, std::move(x)};
}

}  // namespace monocell
