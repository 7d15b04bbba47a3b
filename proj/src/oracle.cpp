#include "setreal/oracle.hpp"

#include <numeric>

namespace sr {

namespace {

struct FactorList {
  std::vector<LinRep> reps;
  std::vector<std::size_t> mult;
};

FactorList factor_list(const LinRep& R, const DecompOptions& opt) {
  FactorList out;
  for (auto& f : decompose(R, opt).factors) {
    out.reps.push_back(std::move(f.rep));
    out.mult.push_back(f.multiplicity);
  }
  return out;
}

bool contains(const FactorList& small, const FactorList& big, std::uint64_t seed) {
  IsoOptions iso;
  iso.seed = seed;
  for (std::size_t i = 0; i < small.reps.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < big.reps.size() && !found; ++j)
      found = big.mult[j] >= small.mult[i] && big.reps[j].dims == small.reps[i].dims &&
              is_isomorphic(small.reps[i], big.reps[j], iso) == Tri::True;
    if (!found) return false;
  }
  return true;
}

std::size_t capped_pow(std::size_t q, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > (std::size_t{1} << 40) / q) throw CapExceeded("complete budget overflows");
    r *= q;
  }
  return r;
}

}  // namespace

bool summand_of(const LinRep& R, const LinRep& M, const DecompOptions& opt) {
  if (R.field != M.field || R.shape != M.shape) throw ShapeError("summand_of: shape or field mismatch");
  for (std::size_t v = 0; v < R.dims.size(); ++v)
    if (R.dims[v] > M.dims[v]) return false;
  return contains(factor_list(R, opt), factor_list(M, opt), opt.seed);
}

SearchBudget complete_budget(const LinRep& R) {
  SearchBudget b;
  for (auto d : R.dims) b.max_fiber.push_back(capped_pow(R.field.q(), d) - 1);
  return b;
}

SetRepEnumerator::SetRepEnumerator(const Shape& S, std::vector<std::size_t> max_fiber,
                                   std::vector<std::size_t> min_fiber)
    : shape_(S), lo_(std::move(min_fiber)), hi_(std::move(max_fiber)) {
  if (lo_.size() != S.num_objects() || hi_.size() != S.num_objects())
    throw ShapeError("enumerator: bound length differs from object count");
  for (std::size_t v = 0; v < lo_.size(); ++v)
    if (lo_[v] > hi_[v]) done_ = true;
  sizes_ = lo_;
  total_ = std::accumulate(lo_.begin(), lo_.end(), std::size_t{0});
}

// Next size vector with the same total, lexicographically; else the first one
// of the next total.
bool SetRepEnumerator::advance_sizes() {
  const std::size_t n = sizes_.size();
  const std::size_t max_total = std::accumulate(hi_.begin(), hi_.end(), std::size_t{0});
  auto fill_from = [&](std::size_t start, std::size_t budget) {
    // smallest tail (positions start..n-1) summing to budget, within bounds
    for (std::size_t v = start; v < n; ++v) sizes_[v] = lo_[v];
    std::size_t need = budget;
    for (std::size_t v = start; v < n; ++v) need -= lo_[v];
    for (std::size_t v = n; v-- > start && need > 0;) {
      const std::size_t add = std::min(need, hi_[v] - lo_[v]);
      sizes_[v] += add;
      need -= add;
    }
    return need == 0;
  };
  auto tail_range = [&](std::size_t start, std::size_t& mn, std::size_t& mx) {
    mn = mx = 0;
    for (std::size_t v = start; v < n; ++v) {
      mn += lo_[v];
      mx += hi_[v];
    }
  };
  for (std::size_t i = n; i-- > 0;) {
    // try to bump position i and refill the tail minimally
    std::size_t prefix = 0;
    for (std::size_t v = 0; v < i; ++v) prefix += sizes_[v];
    for (std::size_t val = sizes_[i] + 1; val <= hi_[i]; ++val) {
      if (prefix + val > total_) break;
      std::size_t mn, mx;
      tail_range(i + 1, mn, mx);
      const std::size_t rest = total_ - prefix - val;
      if (rest < mn || rest > mx) continue;
      sizes_[i] = val;
      fill_from(i + 1, rest);
      return true;
    }
  }
  while (++total_ <= max_total)
    if (fill_from(0, total_)) return true;
  return false;
}

void SetRepEnumerator::reset_tables() {
  tables_.assign(shape_.num_arrows(), {});
  for (std::size_t a = 0; a < shape_.num_arrows(); ++a) tables_[a].assign(sizes_[shape_.src(a)], 0);
}

bool SetRepEnumerator::advance_tables() {
  for (std::size_t a = tables_.size(); a-- > 0;) {
    const std::uint32_t top = static_cast<std::uint32_t>(sizes_[shape_.dst(a)]);
    auto& t = tables_[a];
    for (std::size_t j = t.size(); j-- > 0;) {
      if (t[j] < top) {
        ++t[j];
        return true;
      }
      t[j] = 0;
    }
  }
  return false;
}

std::optional<SetRep> SetRepEnumerator::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
      reset_tables();
    } else if (!advance_tables()) {
      if (!advance_sizes()) {
        done_ = true;
        break;
      }
      reset_tables();
    }
    SetRep S(shape_, sizes_, tables_);
    if (!shape_.relations().empty() && validate(S)) continue;
    ++emitted_;
    return S;
  }
  return std::nullopt;
}

const char* oracle_outcome_name(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::Realizable: return "realizable";
    case OracleOutcome::DefinitiveFalse: return "definitive-false";
    case OracleOutcome::FalseAtBudget: return "false-at-budget";
    case OracleOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

OracleResult brute_force_realizable(const LinRep& R, const SearchBudget& budget) {
  if (auto err = validate(R)) throw RepError(*err);
  const SearchBudget full = complete_budget(R);
  std::vector<std::size_t> hi = budget.max_fiber.empty() ? full.max_fiber : budget.max_fiber;
  if (hi.size() != R.dims.size()) throw RepError("budget length differs from object count");
  OracleResult res;
  res.complete_budget = true;
  for (std::size_t v = 0; v < hi.size(); ++v) res.complete_budget &= hi[v] >= full.max_fiber[v];

  DecompOptions opt;
  opt.seed = budget.seed;
  const FactorList target = factor_list(R, opt);
  SetRepEnumerator it(R.shape, hi, R.dims);
  while (auto S = it.next()) {
    res.candidates = it.emitted();
    if (res.candidates <= budget.skip) continue;
    if (res.candidates - budget.skip > budget.max_candidates) {
      res.candidates -= 1;
      res.outcome = OracleOutcome::BudgetExhausted;
      return res;
    }
    const LinRep M = linearize(*S, R.field);
    if (contains(target, factor_list(M, opt), budget.seed)) {
      res.outcome = OracleOutcome::Realizable;
      res.witness = std::move(*S);
      return res;
    }
  }
  res.candidates = it.emitted();
  res.outcome = res.complete_budget ? OracleOutcome::DefinitiveFalse : OracleOutcome::FalseAtBudget;
  return res;
}

}  // namespace sr
