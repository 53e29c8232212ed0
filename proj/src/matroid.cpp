#include "monocell/matroid.hpp"

#include <algorithm>
#include <functional>

namespace monocell::matroid {

using plcore::InputError;

std::vector<std::vector<int>> subsets_colex(int m, int n) {
  std::vector<std::vector<int>> out;
  if (n < 0 || n > m) return out;
  if (n == 0) return {{}};
  // Recurse on the largest element, ascending: that is colex order.
  std::function<void(int, int, std::vector<int>&)> gen =
      [&](int maxel, int need, std::vector<int>& acc) {
        if (need == 0) {
          std::vector<int> s(acc.rbegin(), acc.rend());
          out.push_back(std::move(s));
          return;
        }
        for (int e = need - 1; e <= maxel; ++e) {
          acc.push_back(e);
          gen(e - 1, need - 1, acc);
          acc.pop_back();
        }
      };
  std::vector<int> acc;
  gen(m - 1, n, acc);
  return out;
}

std::vector<std::string> default_labels(const GraphComplex& f) {
  std::vector<std::string> labels(f.complex.ambient_dim);
  for (size_t i = 0; i < f.domain_axes.size(); ++i)
    labels[f.domain_axes[i]] = "x_" + std::to_string(i + 1);
  for (size_t i = 0; i < f.codomain_axes.size(); ++i)
    labels[f.codomain_axes[i]] = "y_" + std::to_string(i + 1);
  return labels;
}

Matroid basis_system(const GraphComplex& f,
                     const std::vector<std::string>& labels_in) {
  auto labels = labels_in.empty() ? default_labels(f) : labels_in;
  Matroid m;
  m.ground = labels;
  m.rank = f.n();
  for (const auto& t : subsets_colex(f.complex.ambient_dim, f.n())) {
    if (plcore::injective_on(f.complex, t).injective) {
      std::vector<std::string> basis;
      for (int a : t) basis.push_back(labels[a]);
      std::sort(basis.begin(), basis.end());
      m.bases.insert(std::move(basis));
    }
  }
  return m;
}

ExchangeCheck check_matroid_axioms(const Matroid& m) {
  ExchangeCheck out;
  for (const auto& h : m.bases) {
    if (static_cast<int>(h.size()) != m.rank) {
      out.ok = false;
      out.h_set = h;
      return out;
    }
    for (const auto& g : m.bases) {
      for (const auto& el : h) {
        if (std::binary_search(g.begin(), g.end(), el)) continue;
        bool exchanged = false;
        for (const auto& cand : g) {
          if (std::binary_search(h.begin(), h.end(), cand)) continue;
          std::vector<std::string> swapped;
          for (const auto& e : h)
            if (e != el) swapped.push_back(e);
          swapped.push_back(cand);
          std::sort(swapped.begin(), swapped.end());
          if (m.bases.count(swapped)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          out.ok = false;
          out.h_set = h;
          out.g_set = g;
          out.h_elem = el;
          return out;
        }
      }
    }
  }
  return out;
}

Matroid minor(const Matroid& m, const std::vector<std::string>& contract,
              const std::vector<std::string>& restrict_to) {
  std::vector<std::string> c = contract;
  std::sort(c.begin(), c.end());
  bool independent = c.empty();
  for (const auto& b : m.bases)
    if (std::includes(b.begin(), b.end(), c.begin(), c.end())) {
      independent = true;
      break;
    }
  if (!independent)
    throw InputError("cannot contract a dependent set");
  std::vector<std::string> r = restrict_to;
  std::sort(r.begin(), r.end());

  // Independent sets of the contraction inside the restriction.
  std::set<std::vector<std::string>> indep;
  size_t best = 0;
  for (const auto& b : m.bases) {
    if (!std::includes(b.begin(), b.end(), c.begin(), c.end())) continue;
    std::vector<std::string> rest;
    for (const auto& e : b)
      if (!std::binary_search(c.begin(), c.end(), e) &&
          std::binary_search(r.begin(), r.end(), e))
        rest.push_back(e);
    // All subsets of rest are independent in the minor.
    const size_t nr = rest.size();
    for (unsigned mask = 0; mask < (1u << nr); ++mask) {
      std::vector<std::string> s;
      for (size_t i = 0; i < nr; ++i)
        if (mask & (1u << i)) s.push_back(rest[i]);
      best = std::max(best, s.size());
      indep.insert(std::move(s));
    }
  }
  Matroid out;
  for (const auto& e : m.ground)
    if (std::binary_search(r.begin(), r.end(), e) &&
        !std::binary_search(c.begin(), c.end(), e))
      out.ground.push_back(e);
  out.rank = static_cast<int>(best);
  for (const auto& s : indep)
    if (s.size() == best) out.bases.insert(s);
  return out;
}

TangentMatroid tangent_matroid(const GraphComplex& f,
                               const std::vector<std::string>& labels_in) {
  auto labels = labels_in.empty() ? default_labels(f) : labels_in;
  const int n = f.n();
  const int amb = f.complex.ambient_dim;
  TangentMatroid out;
  out.matroid.ground = labels;
  out.matroid.rank = n;
  std::vector<std::set<std::vector<std::string>>> families;
  for (const auto& s : f.complex.top_simplices) {
    // Row per domain axis: unit vector in the domain block, the gradient of
    // each codomain component elsewhere.
    Mat rows(n, Vec(amb, Rat(0)));
    for (int j = 0; j < n; ++j) rows[j][f.domain_axes[j]] = 1;
    for (size_t i = 0; i < f.codomain_axes.size(); ++i) {
      auto g = plcore::simplex_gradient(f, s, f.codomain_axes[i]);
      if (!g) throw InputError("top simplex projects degenerately to domain");
      for (int j = 0; j < n; ++j) rows[j][f.codomain_axes[i]] = (*g)[j];
    }
    std::set<std::vector<std::string>> fam;
    for (const auto& t : subsets_colex(amb, n)) {
      Mat sub(n, Vec(n));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) sub[r][c] = rows[r][t[c]];
      if (mat_rank(sub) == n) {
        std::vector<std::string> basis;
        for (int a : t) basis.push_back(labels[a]);
        std::sort(basis.begin(), basis.end());
        fam.insert(std::move(basis));
      }
    }
    families.push_back(std::move(fam));
  }
  std::set<std::vector<std::string>> unionf;
  for (const auto& fam : families) unionf.insert(fam.begin(), fam.end());
  bool has_max = false;
  for (const auto& fam : families)
    if (fam == unionf) {
      has_max = true;
      break;
    }
  out.matroid.bases = unionf;
  out.incomparable = !families.empty() && !has_max;
  return out;
}

bool independence_check(const GraphComplex& f, const std::vector<int>& axes) {
  return plcore::image_dimension(f.complex, axes) ==
         static_cast<int>(axes.size());
}

}  // namespace monocell::matroid
