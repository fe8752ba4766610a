#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherecomb/numeric.hpp"

namespace sc {

// sorted, strictly increasing vertex labels; empty vector is the empty face
using Face = std::vector<int>;

std::string face_str(const Face& f);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the void complex

  // dominated facets dropped, facets sorted lexicographically
  static SimplicialComplex from_facets(std::vector<std::vector<int>> facet_lists);

  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  // one past the largest label in use (0 if no vertices)
  int vertex_count() const { return vertex_count_; }
  // max facet dimension; -1 for {∅}, -2 for the void complex
  int dim() const { return dim_; }
  // d with dim = d - 1
  int d() const { return dim_ + 1; }
  bool pure() const;

  bool contains(const Face& f) const;
  std::vector<int> vertices() const;
  // all faces of the given dimension, sorted
  std::vector<Face> faces(int dim) const;
  // every face including ∅, sorted by (size, lex)
  std::vector<Face> all_faces() const;
  std::vector<Face> edges() const { return faces(1); }

  bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

 private:
  std::vector<Face> facets_;
  int vertex_count_ = 0;
  int dim_ = -2;
};

// f_{-1} is always 1 for a nonvoid complex and is not stored
struct FVector {
  int d = 0;
  std::vector<Int> f;  // f_0 .. f_{d-1}
  static constexpr int f_minus_one = 1;
};

FVector f_vector(const SimplicialComplex& K);

SimplicialComplex link(const SimplicialComplex& K, const Face& F);

struct EdgeLinkCheck {
  Face edge;
  bool ok;
};
struct LinkConditionReport {
  std::vector<EdgeLinkCheck> edges;
  bool all_ok = true;
  std::vector<Face> violations() const;
};
LinkConditionReport check_link_condition(const SimplicialComplex& K);
bool link_condition_at(const SimplicialComplex& K, const Face& e);

struct ContractionResult {
  SimplicialComplex complex;
  int contracted_vertex = -1;
  long removed_second_copies = 0;
};
ContractionResult contract_edge(const SimplicialComplex& K, const Face& e);

SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& K, const Face& e);

SimplicialComplex tchebyshev_subdivision(const SimplicialComplex& K,
                                         const std::optional<std::vector<Face>>& edge_order = std::nullopt);

SimplicialComplex cross_polytope_boundary(int d);
SimplicialComplex simplex_boundary(int d);
SimplicialComplex cycle(int n);

// "cross:4", "simplexboundary:3", "cycle:6"
SimplicialComplex generate(const std::string& spec);

// one facet per line, '#' comments; or JSON {"facets": [[...]]}
SimplicialComplex parse_facets(const std::string& text);
SimplicialComplex load_facets(const std::string& path);
std::string facets_text(const SimplicialComplex& K);

}  // namespace sc
