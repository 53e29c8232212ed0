#include "monocell/topo.hpp"

#include "monocell/mono.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace monocell::topo {

using plcore::ConeAtom;
using plcore::ConeDescriptor;
using plcore::InputError;
using plcore::RelOp;
using plcore::UnsupportedError;

namespace {

size_t face_cap() {
  if (const char* s = std::getenv("MONOCELL_FACE_CAP")) {
    long v = std::atol(s);
    if (v > 0) return static_cast<size_t>(v);
  }
  return 20000;
}

// Rank over Q of a set of sparse columns, by elimination against pivots.
int sparse_rank(std::vector<std::map<int, Rat>> cols) {
  std::map<int, std::map<int, Rat>> pivots;  // leading row -> column
  int rank = 0;
  for (auto& col : cols) {
    while (!col.empty()) {
      int lead = col.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      Rat factor = col.begin()->second / it->second.begin()->second;
      for (const auto& [row, val] : it->second) {
        Rat& c = col[row];
        c -= factor * val;
        if (c == 0) col.erase(row);
      }
    }
    if (!col.empty()) {
      pivots.emplace(col.begin()->first, std::move(col));
      ++rank;
    }
  }
  return rank;
}

bool ball_profile(const std::vector<int>& ranks) {
  if (ranks.empty() || ranks[0] != 1) return false;
  for (size_t i = 1; i < ranks.size(); ++i)
    if (ranks[i] != 0) return false;
  return true;
}

bool sphere_profile(const std::vector<int>& ranks, int dim) {
  if (static_cast<int>(ranks.size()) != dim + 1) return false;
  for (int i = 0; i <= dim; ++i) {
    int want = (i == 0 || i == dim) ? 1 : 0;
    if (i == 0 && i == dim) want = 2;  // zero-sphere: two points
    if (ranks[i] != want) return false;
  }
  return true;
}

}  // namespace

int euler_characteristic(const Complex& k) {
  int chi = 0;
  for (const auto& f : plcore::all_faces(k))
    chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

std::vector<int> homology_ranks(const Complex& k) {
  if (k.empty()) return {};
  auto faces = plcore::all_faces(k);
  if (faces.size() > face_cap())
    throw UnsupportedError("face lattice exceeds the homology cap (" +
                           std::to_string(faces.size()) + " faces)");
  const int dim = k.dim();
  std::vector<std::map<std::vector<int>, int>> id(dim + 1);
  for (const auto& f : faces) {
    auto& level = id[f.size() - 1];
    int next = static_cast<int>(level.size());
    level.emplace(f, next);
  }
  // rank of the boundary map from d-faces to (d-1)-faces
  std::vector<int> brank(dim + 2, 0);
  for (int d = 1; d <= dim; ++d) {
    std::vector<std::map<int, Rat>> cols(id[d].size());
    for (const auto& [f, c] : id[d]) {
      for (size_t i = 0; i < f.size(); ++i) {
        std::vector<int> sub;
        for (size_t j = 0; j < f.size(); ++j)
          if (j != i) sub.push_back(f[j]);
        cols[c][id[d - 1].at(sub)] = (i % 2 == 0) ? Rat(1) : Rat(-1);
      }
    }
    brank[d] = sparse_rank(std::move(cols));
  }
  std::vector<int> ranks(dim + 1);
  for (int d = 0; d <= dim; ++d)
    ranks[d] = static_cast<int>(id[d].size()) - brank[d] - brank[d + 1];
  return ranks;
}

EvidenceReport regular_cell_evidence(const GraphComplex& f) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  EvidenceReport r;
  const Complex& k = f.complex;
  if (k.empty()) return r;
  const int n = k.dim();
  r.connected = plcore::open_components(k).count == 1;
  r.chi_closure = euler_characteristic(k);
  r.homology_closure = homology_ranks(k);
  Complex fr = plcore::frontier(k);
  r.chi_frontier = euler_characteristic(fr);
  r.homology_frontier = homology_ranks(fr);
  bool closure_ok =
      r.connected && r.chi_closure == 1 && ball_profile(r.homology_closure);
  bool frontier_ok = n == 0 ? fr.empty()
                            : sphere_profile(r.homology_frontier, n - 1);
  r.pass = closure_ok && frontier_ok;
  return r;
}

bool glue_check(const GraphComplex& f, int axis, const Rat& c) {
  if (auto err = plcore::validate(f)) throw InputError(*err);
  const Complex& k = f.complex;
  if (axis < 0 || axis >= k.ambient_dim) throw InputError("axis out of range");
  ConeDescriptor eq, lt, gt;
  eq.atoms = {ConeAtom{axis, RelOp::EQ, c}};
  lt.atoms = {ConeAtom{axis, RelOp::LT, c}};
  gt.atoms = {ConeAtom{axis, RelOp::GT, c}};

  // The open slice F_0 must be connected (possibly empty).
  if (plcore::open_components_in_cone(k, eq).count > 1) return false;

  Complex c0 = mono::detail::open_slice_closure(k, eq);
  Complex plus = plcore::intersect_cone(
      mono::detail::open_slice_closure(k, gt), eq);
  Complex minus = plcore::intersect_cone(
      mono::detail::open_slice_closure(k, lt), eq);

  auto in_both = [&](const plcore::Point& p) {
    return plcore::contains_point(plus, p) && plcore::contains_point(minus, p);
  };
  // cl(F_0) subset of cl(F_+) n cl(F_-)
  for (const auto& face : plcore::all_faces(c0))
    if (!in_both(plcore::barycenter(c0, face))) return false;
  // cl(F_+) n cl(F_-) subset of cl(F_0), probed from both triangulations
  for (const Complex* side : {&plus, &minus})
    for (const auto& face : plcore::all_faces(*side)) {
      plcore::Point b = plcore::barycenter(*side, face);
      if (in_both(b) && !plcore::contains_point(c0, b)) return false;
    }
  return true;
}

}  // namespace monocell::topo
