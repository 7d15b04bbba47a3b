#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setreal/poly.hpp"
#include "setreal/realize.hpp"
#include "setreal/rep.hpp"

namespace sr {

struct EndAlgebra {
  std::vector<Hom> basis;
  std::size_t dim() const { return basis.size(); }
};

EndAlgebra end_algebra(const LinRep& R);

/// Minimal polynomial of an endomorphism, viewed as one block-diagonal operator.
Poly minimal_polynomial(const Field& F, const Hom& theta);

struct DecompOptions {
  std::uint64_t seed = 0;
  std::size_t random_trials = 32;
  std::uint64_t exhaustive_limit = 1u << 16;
  std::size_t cap = 512;  // total dimension
};

/// One isomorphism class of indecomposable summands. inclusions[i] and
/// projections[i] embed copy i of `rep` into the input and back.
struct Factor {
  LinRep rep;
  std::size_t multiplicity = 0;
  std::vector<Hom> inclusions, projections;
  Tri local = Tri::Inconclusive;  // End(rep) certified local
};

struct Decomposition {
  std::vector<Factor> factors;
  /// True when every factor is certified indecomposable and classes were
  /// separated without inconclusive isomorphism tests.
  bool certified = true;
  std::size_t count() const;
  LinRep reassemble(const LinRep& zero_template) const;
};

/// Throws CapExceeded when the total dimension exceeds opt.cap.
Decomposition decompose(const LinRep& R, const DecompOptions& opt = {});

/// False for the zero representation. Inconclusive when no idempotent was found by
/// sampling and End is too large to enumerate.
Tri is_indecomposable(const LinRep& R, const DecompOptions& opt = {});

/// is_isomorphic, falling back to matching the indecomposable summands of both
/// sides when the direct search is inconclusive.
Tri isomorphic_by_summands(const LinRep& R, const LinRep& S, const DecompOptions& opt = {});

/// Underlying graph is a simply laced Dynkin diagram (A, D, E), possibly disconnected.
bool is_dynkin(const Shape& S);
/// sum d_v^2 - sum over arrows d_src d_dst
long tits_form(const Shape& S, const DimVector& d);
bool is_positive_root(const Shape& S, const DimVector& d);
/// All positive roots of a connected Dynkin shape, sorted by (height, vector).
std::vector<DimVector> positive_roots(const Shape& S);

/// Indecomposable with dimension vector d over F, taken from the C^- orbit of a
/// projective (reflections at sources). A nonzero seed applies a random change
/// of basis. Throws RepError if the shape is not Dynkin or d is not a positive root.
LinRep root_indecomposable(const Field& F, const Shape& S, const DimVector& d, std::uint64_t seed = 0);

}  // namespace sr
