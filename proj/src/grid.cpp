#include "monocell/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace monocell::plcore {

Complex kuhn_grid(const std::vector<std::vector<Rat>>& axis_values) {
  const size_t d = axis_values.size();
  if (d == 0) throw InputError("grid needs at least one axis");
  for (const auto& vals : axis_values) {
    if (vals.size() < 2) throw InputError("grid axis needs at least 2 values");
    if (!std::is_sorted(vals.begin(), vals.end()) ||
        std::adjacent_find(vals.begin(), vals.end()) != vals.end())
      throw InputError("grid axis values must be strictly increasing");
  }
  std::map<std::vector<int>, int> vertex_id;
  std::vector<Point> vertices;
  auto intern = [&](const std::vector<int>& idx) {
    auto it = vertex_id.find(idx);
    if (it != vertex_id.end()) return it->second;
    Point p(d);
    for (size_t a = 0; a < d; ++a) p[a] = axis_values[a][idx[a]];
    int id = static_cast<int>(vertices.size());
    vertices.push_back(std::move(p));
    vertex_id.emplace(idx, id);
    return id;
  };
  std::vector<std::vector<int>> tops;
  std::vector<int> cell(d, 0);
  std::vector<size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (bool more = true; more;) {
    std::vector<size_t> p = perm;
    do {
      std::vector<int> simplex;
      std::vector<int> idx = cell;
      simplex.push_back(intern(idx));
      for (size_t s = 0; s < d; ++s) {
        ++idx[p[s]];
        simplex.push_back(intern(idx));
      }
      tops.push_back(std::move(simplex));
    } while (std::next_permutation(p.begin(), p.end()));
    more = false;
    for (size_t a = 0; a < d; ++a) {
      if (++cell[a] + 1 < static_cast<int>(axis_values[a].size())) {
        more = true;
        break;
      }
      cell[a] = 0;
    }
  }
  return make_complex(static_cast<int>(d), std::move(vertices),
                      std::move(tops));
}

}  // namespace monocell::plcore
