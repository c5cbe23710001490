#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace f1rep {

// A finite quiver: vertices 0..num_vertices-1 and a list of arrows
// (source, target). Loops and parallel arrows are allowed.
struct Quiver {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> arrows;

  Quiver() = default;
  Quiver(int n, std::vector<std::pair<int, int>> arcs);

  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int source(int a) const { return arrows[a].first; }
  int target(int a) const { return arrows[a].second; }

  bool operator==(const Quiver&) const = default;
};

using DimVector = std::vector<int>;

enum class ShapeTag { Tree, Cycle, ProperPseudotree, Other };

struct QuiverShape {
  ShapeTag tag;
  int cycle_rank;
};

const char* shape_tag_name(ShapeTag t);

// A subquiver given by vertex and arrow index sets of a parent quiver.
struct Subquiver {
  std::vector<int> vertices;
  std::vector<int> arrows;
};

// Two fundamental cycles C_alpha, C_beta (each containing a non-tree arrow
// the other avoids) and a connecting path avoiding both special arrows.
struct FundamentalCyclePair {
  Subquiver cycle_a;
  int alpha;  // arrow in cycle_a but not cycle_b
  Subquiver cycle_b;
  int beta;  // arrow in cycle_b but not cycle_a
  Subquiver path;
};

Quiver loop_quiver(int n);

// Cycle quiver on |orientation| vertices; entry j says whether the arrow
// between j and j+1 (mod length) points from j to j+1.
Quiver cycle_quiver(const std::vector<bool>& orientation);

// Equioriented path 0 -> 1 -> ... -> n-1.
Quiver path_quiver(int n);

// Kronecker 2-quiver: two parallel arrows 0 -> 1.
Quiver kronecker_quiver();

// Equioriented cycle of length `ell` plus a pendant vertex `ell` with an
// arrow into vertex 0.
Quiver pendant_cycle_quiver(int ell);

bool is_connected(const Quiver& q);

// dim_{Z_2} H_1 of the underlying multigraph: |arrows| - |vertices| + #components.
int cycle_rank(const Quiver& q);

// Classification of a connected quiver by the shape of its underlying graph.
QuiverShape classify(const Quiver& q);

// For connected q with cycle_rank >= 2, a deterministic fundamental cycle
// pair (BFS spanning tree from vertex 0); nullopt otherwise.
std::optional<FundamentalCyclePair> fundamental_cycle_pair(const Quiver& q);

std::string to_dot(const Quiver& q);

}  // namespace f1rep
