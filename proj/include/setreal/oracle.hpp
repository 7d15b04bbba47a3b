#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setreal/decomp.hpp"
#include "setreal/rep.hpp"

namespace sr {

/// True iff every indecomposable factor of R occurs in M at least as often.
/// Throws CapExceeded when either side is above the decomposition cap.
bool summand_of(const LinRep& R, const LinRep& M, const DecompOptions& opt = {});

struct SearchBudget {
  std::vector<std::size_t> max_fiber;  // B_v; empty means q^{d_v} - 1
  std::uint64_t max_candidates = UINT64_MAX;
  std::uint64_t skip = 0;  // resume after this many candidates
  std::uint64_t seed = 0;
};

/// Budget B_v = q^{d_v} - 1, enough for a definitive answer.
SearchBudget complete_budget(const LinRep& R);

/// Canonical stream of pointed-set representations with n_v <= B_v. Size
/// vectors by total size, then lexicographically; sizes with n_v < d_v are
/// skipped since free* of them cannot contain R. Within a size vector, the
/// tables of arrow 0 vary slowest, each table read as a base-(n_t + 1) number
/// with its first entry most significant. Candidates violating a relation are
/// not emitted.
class SetRepEnumerator {
 public:
  SetRepEnumerator(const Shape& S, std::vector<std::size_t> max_fiber, std::vector<std::size_t> min_fiber);
  std::optional<SetRep> next();
  std::uint64_t emitted() const { return emitted_; }

 private:
  bool advance_sizes();
  bool advance_tables();
  void reset_tables();

  Shape shape_;
  std::vector<std::size_t> lo_, hi_, sizes_;
  std::vector<std::vector<std::uint32_t>> tables_;
  std::size_t total_ = 0;
  bool started_ = false, done_ = false;
  std::uint64_t emitted_ = 0;
};

enum class OracleOutcome {
  Realizable,       // witness found
  DefinitiveFalse,  // complete budget searched
  FalseAtBudget,    // searched everything below an incomplete budget
  BudgetExhausted,  // stopped at max_candidates
};
const char* oracle_outcome_name(OracleOutcome o);

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::BudgetExhausted;
  std::optional<SetRep> witness;
  std::uint64_t candidates = 0;  // including skipped ones
  bool complete_budget = false;
};

OracleResult brute_force_realizable(const LinRep& R, const SearchBudget& budget = {});

}  // namespace sr
