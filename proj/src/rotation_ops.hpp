#pragma once

// Rotation-system surgery shared by the triangulation generator and the
// random sampler. Internal to the library.

#include <algorithm>
#include <vector>

#include "penta/embedding.hpp"

namespace penta::detail {

inline int position(const std::vector<int>& r, int u) {
  return static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
}

inline int succ(const RotationSystem& rot, int v, int u) {
  const auto& r = rot[v];
  return r[(static_cast<std::size_t>(position(r, u)) + 1) % r.size()];
}

inline void insert_after(std::vector<int>& r, int after, int x) {
  r.insert(r.begin() + position(r, after) + 1, x);
}

inline void remove_edge(RotationSystem& rot, int a, int b) {
  std::erase(rot[a], b);
  std::erase(rot[b], a);
}

inline std::vector<int> face_from(const RotationSystem& rot, int u, int v) {
  std::vector<int> boundary;
  const int su = u;
  const int sv = v;
  do {
    boundary.push_back(u);
    const int w = succ(rot, v, u);
    u = v;
    v = w;
  } while (u != su || v != sv);
  return boundary;
}

// New vertex adjacent to every vertex of a face whose boundary is a simple cycle.
inline void insert_in_face(RotationSystem& rot, const std::vector<int>& boundary) {
  const int x = static_cast<int>(rot.size());
  const std::size_t d = boundary.size();
  for (std::size_t i = 0; i < d; ++i) insert_after(rot[boundary[i]], boundary[(i + d - 1) % d], x);
  rot.emplace_back(boundary.rbegin(), boundary.rend());
}

inline RotationSystem tetrahedron() { return {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}; }

/// Calls emit(child) for every E3, E4 and E5 expansion of a triangulation.
template <typename Emit>
void expand(const RotationSystem& rot, Emit&& emit) {
  const int n = static_cast<int>(rot.size());
  // E3: one new vertex in each face. Faces are visited once via their smallest dart.
  for (int a = 0; a < n; ++a) {
    for (int b : rot[a]) {
      const int c = succ(rot, b, a);
      if (a < b && a < c) {
        RotationSystem child = rot;
        insert_in_face(child, {a, b, c});
        emit(std::move(child));
      }
    }
  }
  // E4: delete edge ab and put a degree-4 vertex into the quadrilateral.
  for (int a = 0; a < n; ++a) {
    for (int b : rot[a]) {
      if (a > b) continue;
      const int c = succ(rot, b, a);
      RotationSystem child = rot;
      remove_edge(child, a, b);
      insert_in_face(child, face_from(child, b, c));
      emit(std::move(child));
    }
  }
  // E5: delete the two middle spokes of four consecutive neighbors of x and
  // put a degree-5 vertex into the pentagon.
  for (int x = 0; x < n; ++x) {
    const auto& r = rot[x];
    const std::size_t d = r.size();
    if (d < 4) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const int p1 = r[i];
      const int p2 = r[(i + 1) % d];
      const int p3 = r[(i + 2) % d];
      RotationSystem child = rot;
      remove_edge(child, x, p2);
      remove_edge(child, x, p3);
      insert_in_face(child, face_from(child, p1, x));
      emit(std::move(child));
    }
  }
}

}  // namespace penta::detail
