#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "netlap/gmatrix.hpp"
#include "netlap/report.hpp"
#include "netlap/signed_graph.hpp"

namespace netlap {

/// Per-edge choice of the endpoint whose incidence entry keeps its sign;
/// the other endpoint's entry is negated.
class Orientation {
 public:
  enum class Source : std::uint8_t { Smaller, Larger };

  Orientation() = default;
  explicit Orientation(std::vector<Source> sources) : sources_(std::move(sources)) {}

  /// Every source is the smaller endpoint.
  static Orientation canonical(std::size_t edge_count);
  /// One character per edge: `<` smaller endpoint is the source, `>` larger.
  static Orientation parse(std::string_view text);
  static Orientation random(std::size_t edge_count, std::mt19937_64& rng);

  std::size_t size() const { return sources_.size(); }
  Source source(std::size_t edge) const { return sources_.at(edge); }
  int source_vertex(const Edge& e, std::size_t edge) const {
    return source(edge) == Source::Smaller ? e.u : e.v;
  }
  int target_vertex(const Edge& e, std::size_t edge) const {
    return source(edge) == Source::Smaller ? e.v : e.u;
  }

  std::string str() const;
  bool operator==(const Orientation&) const = default;

 private:
  std::vector<Source> sources_;
};

GMatrix adjacency_matrix(const SignedGraph& g);
GMatrix degree_matrix(const SignedGraph& g);
/// Diagonal of positive degree minus negative degree.
GMatrix net_degree_matrix(const SignedGraph& g);
/// Vertex-by-edge; each column holds 1,1 for a positive edge and i,i for a negative one.
GMatrix net_incidence_matrix(const SignedGraph& g);
/// Net incidence with the target endpoint's entry negated. Throws if o.size() != m.
GMatrix oriented_net_incidence_matrix(const SignedGraph& g, const Orientation& o);

GMatrix laplacian(const SignedGraph& g);               // D - A
GMatrix signless_laplacian(const SignedGraph& g);      // D + A
GMatrix net_laplacian(const SignedGraph& g);           // D± - A
GMatrix signless_net_laplacian(const SignedGraph& g);  // D± + A

struct MatrixBundle {
  GMatrix adjacency;
  GMatrix degree;
  GMatrix net_degree;
  GMatrix laplacian;
  GMatrix signless_laplacian;
  GMatrix net_laplacian;
  GMatrix signless_net_laplacian;
  GMatrix net_incidence;
  GMatrix oriented_net_incidence;
};

MatrixBundle build_bundle(const SignedGraph& g, const Orientation& o);

/// Q± = M±(M±)ᵀ, L± = N±(N±)ᵀ, Q_|G| = M±(M±)*, L_|G| = N±(N±)*.
Report verify_factorizations(const MatrixBundle& b);

/// A quadratic form evaluated twice: as xᵀMx and as a signed sum over edges.
struct QuadraticForm {
  mpq_class matrix_value;
  mpq_class edge_sum;

  bool agree() const { return matrix_value == edge_sum; }
  const mpq_class& value() const { return matrix_value; }
};

/// xᵀL±x against Σ_{E+}(x_u - x_v)² - Σ_{E-}(x_u - x_v)².
QuadraticForm quadratic_form_L(const SignedGraph& g, const RationalVector& x);
/// xᵀQ±x against Σ_{E+}(x_u + x_v)² - Σ_{E-}(x_u + x_v)².
QuadraticForm quadratic_form_Q(const SignedGraph& g, const RationalVector& x);

/// For each kernel-basis vector of L± (resp. Q±), the positive-edge and
/// negative-edge squared sums coincide.
Report kernel_balance_check(const SignedGraph& g);

/// L_{-G} = Q_G, Q_{-G} = L_G, L±_{-G} = -L±_G, Q±_{-G} = -Q±_G.
Report verify_negation_relations(const SignedGraph& g);

/// rank(M±) = rank(M_|G|), rank(N±) = rank(N_|G|), rank(M±) = rank(Q_|G|),
/// rank(M±) >= rank(Q±), rank(N±) >= rank(L±).
Report verify_rank_relations(const SignedGraph& g, const Orientation& o);

/// Directed DOT rendering. Arrow direction is decoded from the columns of N±:
/// the endpoint whose entry is larger along the real or imaginary axis is the tail.
std::string emit_oriented_dot(const SignedGraph& g, const Orientation& o);

}  // namespace netlap
