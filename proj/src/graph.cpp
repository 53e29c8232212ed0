#include "monocell/graph.hpp"

#include <algorithm>

namespace monocell::plcore {

std::optional<std::string> validate(const GraphComplex& f) {
  std::vector<int> all = f.domain_axes;
  all.insert(all.end(), f.codomain_axes.begin(), f.codomain_axes.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < f.complex.ambient_dim; ++i)
    if (i >= static_cast<int>(all.size()) || all[i] != i)
      return "domain/codomain axes do not partition the ambient axes";
  if (static_cast<int>(all.size()) != f.complex.ambient_dim)
    return "domain/codomain axes do not partition the ambient axes";
  if (auto err = validate(f.complex)) return err;
  if (!f.complex.empty()) {
    if (!f.complex.pure() || f.complex.dim() != f.n())
      return "graph complex must be pure of the domain dimension";
    auto inj = injective_on(f.complex, f.domain_axes);
    if (!inj.injective)
      return "projection to the domain axes is not injective";
  }
  return std::nullopt;
}

GraphComplex project_injective(const GraphComplex& f,
                               const std::vector<int>& t) {
  auto inj = injective_on(f.complex, t);
  if (!inj.injective) {
    std::string msg = "projection is not injective; witness p=(";
    for (size_t i = 0; i < inj.p.size(); ++i)
      msg += (i ? "," : "") + rat_to_string(inj.p[i]);
    msg += ") q=(";
    for (size_t i = 0; i < inj.q.size(); ++i)
      msg += (i ? "," : "") + rat_to_string(inj.q[i]);
    msg += ")";
    throw InputError(msg);
  }
  GraphComplex out;
  out.complex = f.complex;
  out.domain_axes = t;
  std::sort(out.domain_axes.begin(), out.domain_axes.end());
  for (int a = 0; a < f.complex.ambient_dim; ++a)
    if (!std::binary_search(out.domain_axes.begin(), out.domain_axes.end(), a))
      out.codomain_axes.push_back(a);
  return out;
}

Complex domain_complex(const GraphComplex& f) {
  return project(f.complex, f.domain_axes);
}

std::optional<Vec> simplex_gradient(const GraphComplex& f,
                                    const std::vector<int>& simplex,
                                    int codomain_axis) {
  const size_t n = f.domain_axes.size();
  if (simplex.size() != n + 1) return std::nullopt;
  Mat a(n, Vec(n));
  Vec b(n);
  const auto& verts = f.complex.vertices;
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c)
      a[r][c] = verts[simplex[r + 1]][f.domain_axes[c]] -
                verts[simplex[0]][f.domain_axes[c]];
    b[r] = verts[simplex[r + 1]][codomain_axis] -
           verts[simplex[0]][codomain_axis];
  }
  return solve_linear(std::move(a), std::move(b));
}

std::string axis_label(const GraphComplex& f, int axis) {
  for (size_t i = 0; i < f.domain_axes.size(); ++i)
    if (f.domain_axes[i] == axis) return "x_" + std::to_string(i + 1);
  for (size_t i = 0; i < f.codomain_axes.size(); ++i)
    if (f.codomain_axes[i] == axis) return "y_" + std::to_string(i + 1);
  return "axis_" + std::to_string(axis + 1);
}

}  // namespace monocell::plcore
