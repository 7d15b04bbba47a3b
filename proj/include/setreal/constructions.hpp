#pragma once

#include <string>
#include <utility>
#include <vector>

#include "setreal/poly.hpp"
#include "setreal/rep.hpp"

namespace sr {

/// Dimension 1 on the support, identity maps inside it, zero elsewhere.
/// Throws RepError if the result violates a relation of the shape.
LinRep indicator(const Field& F, const Shape& S, const std::vector<std::string>& support);
LinRep indicator(const Field& F, const Shape& S, const std::vector<bool>& support);

struct VandermondeExpansion {
  unsigned n = 1;
  Elem zeta = 1;
  Matrix Z;
  LinRep expanded;   // each entry x replaced by diag(1, x, ..., x^(n-1))
  Hom base_change;   // block-diagonal Z at every object
  LinRep permuted;   // conjugate(expanded, base_change)
};

/// Basis index of R_hat(v) is j*n + i for basis vector j of R(v) and power i.
/// Requires n | q-1, every nonzero entry an n-th root of unity, and at most one
/// nonzero entry per column.
VandermondeExpansion vandermonde_expand(const LinRep& R, unsigned n);

/// Rows/columns i, n+i, 2n+i, ... of the expansion: the summand R_i.
LinRep vandermonde_block(const VandermondeExpansion& X, unsigned i);

/// Quiver with every arrow out of d reversed (names and order kept).
Shape reflect_shape(const Shape& Q, std::size_t d);
/// New value at d: cokernel of R(d) -> sum of R(target) over arrows out of d.
LinRep reflect_source(const LinRep& R, std::size_t d);
/// Pointed-set version: cokernel (one arrow out of d) or pushout (two arrows).
/// Classes are numbered by their smallest element, elements of the first
/// target before those of the second.
SetRep reflect_source(const SetRep& S, std::size_t d);

/// Colimit of R: the quotient of the direct sum by x - R(a)x. Returns the
/// insertion matrix of every object (dim C x d_v).
std::vector<Matrix> colimit_insertions(const LinRep& R);

enum class TerminalAttach { Sinks, All };
/// Left Kan extension along adding a terminal object `t`. Sinks: one arrow from
/// each sink, with relations making all routes into t agree. All: one arrow
/// from every object with relations a then (w->t) = (v->t).
LinRep kan_add_terminal(const LinRep& R, TerminalAttach mode = TerminalAttach::Sinks, const std::string& t = "t");

/// Left Kan extension inserting a new object c between `below` and `above`.
/// Each below object must have exactly one arrow to each above object; those
/// arrows are dropped (they factor through c). New arrows are named
/// "<v>_<c>" and "<c>_<u>".
LinRep kan_extend_object(const LinRep& R, const std::string& c, const std::vector<std::string>& below,
                         const std::vector<std::string>& above);

/// Band on the cycle with the given orientation (or the one-loop quiver when
/// `orient` is empty): identities everywhere except the last arrow, which carries
/// the companion matrix of f^m.
LinRep band_rep(const Field& F, const Poly& f, unsigned m, const std::vector<bool>& orient = {});
/// Criterion for bands over a finite field: f != X and m a power of char F.
bool band_is_realizable(const Field& F, const Poly& f, unsigned m);

/// String on the cycle: walk start, start+1, ... of m steps (m >= 1), elements
/// of each object numbered by position along the walk.
SetRep string_rep(const std::vector<bool>& orient, std::size_t start, std::size_t m);

enum class D4Kind { Preprojective, Preinjective };
/// Families of pointed-set representations on shapes::d4tilde_two_two(), variant 1..5.
SetRep d4tilde_family(D4Kind kind, int variant, std::size_t n);
/// Dimension vector of the family member, order in1, in2, c, out1, out2.
DimVector d4tilde_family_dims(D4Kind kind, int variant, std::size_t n);

/// The shape read as a poset (x <= y iff a path x -> y exists). Throws ShapeError
/// on directed cycles or parallel arrows.
bool shape_is_indicator_only(const Shape& S);
/// Cover relation of the poset given by a shape.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Shape& S);

}  // namespace sr
