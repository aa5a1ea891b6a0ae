#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "conemetric/rational.hpp"

namespace conemetric {

struct HypothesisViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeLimitExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Finite list of nonzero rationals summing to zero. Canonical storage is
// positives ascending followed by negatives ascending in absolute value,
// matching the 0 < a_1 <= ... <= a_p normalization of the reduction lemmas.
class ResidueVector {
 public:
  explicit ResidueVector(std::vector<Rational> components) {
    if (components.empty()) throw std::invalid_argument("residue vector must be nonempty");
    Rational sum(0);
    for (const auto& c : components) {
      if (c.is_zero()) throw std::invalid_argument("residue vector has a zero component");
      sum += c;
    }
    if (!sum.is_zero())
      throw std::invalid_argument("residue vector components do not sum to zero");
    for (const auto& c : components) (c.is_positive() ? positives_ : negatives_).push_back(c.abs());
    std::sort(positives_.begin(), positives_.end());
    std::sort(negatives_.begin(), negatives_.end());
  }

  const std::vector<Rational>& positives() const { return positives_; }
  // Stored as absolute values; the actual components are their negations.
  const std::vector<Rational>& negative_magnitudes() const { return negatives_; }

  std::size_t size() const { return positives_.size() + negatives_.size(); }

  std::vector<Rational> components() const {
    std::vector<Rational> out = positives_;
    for (const auto& b : negatives_) out.push_back(-b);
    return out;
  }

  bool all_integer() const {
    for (const auto& a : positives_)
      if (!a.is_integer()) return false;
    for (const auto& b : negatives_)
      if (!b.is_integer()) return false;
    return true;
  }

  ResidueVector negated() const {
    std::vector<Rational> comps;
    comps.reserve(size());
    for (const auto& a : positives_) comps.push_back(-a);
    for (const auto& b : negatives_) comps.push_back(b);
    return ResidueVector(std::move(comps));
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& c : components()) {
      if (!first) s += ", ";
      s += c.str();
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const ResidueVector& x, const ResidueVector& y) {
    return x.positives_ == y.positives_ && x.negatives_ == y.negatives_;
  }

 private:
  std::vector<Rational> positives_;
  std::vector<Rational> negatives_;
};

// Integer rescaling with coprime entries; scale is the positive rational c
// with c * r equal to this vector.
struct PrimitiveVector {
  std::vector<std::int64_t> positives;
  std::vector<std::int64_t> negative_magnitudes;
  Rational scale;
};

inline PrimitiveVector primitive_form(const ResidueVector& r) {
  std::int64_t den_lcm = 1;
  for (const auto& a : r.positives()) den_lcm = lcm_checked(den_lcm, a.denominator());
  for (const auto& b : r.negative_magnitudes()) den_lcm = lcm_checked(den_lcm, b.denominator());

  const auto scaled = [den_lcm](const Rational& q) {
    return q.numerator() * (den_lcm / q.denominator());
  };
  std::int64_t g = 0;
  for (const auto& a : r.positives()) g = gcd_i64(g, scaled(a));
  for (const auto& b : r.negative_magnitudes()) g = gcd_i64(g, scaled(b));

  PrimitiveVector p;
  for (const auto& a : r.positives()) p.positives.push_back(scaled(a) / g);
  for (const auto& b : r.negative_magnitudes()) p.negative_magnitudes.push_back(scaled(b) / g);
  p.scale = Rational(den_lcm, g);
  return p;
}

// deg(r) = sum of the positive components of the primitive form. Rational
// input always yields a finite degree; the +infinity branch exists only for
// irrational divisors, which never reach this code.
inline std::int64_t degree(const ResidueVector& r) {
  std::int64_t d = 0;
  for (std::int64_t a : primitive_form(r).positives) d += a;
  return d;
}

// One merge: subtract the j-th negative magnitude from the i-th positive and
// drop the negative. Equal entries cancel outright and both disappear.
struct ReductionStep {
  std::size_t positive_index = 0;
  std::size_t negative_index = 0;
  ResidueVector result;
};

// Applies the merge; empty results are rejected (the {1,-1} degenerate case).
inline ResidueVector merge_components(const ResidueVector& r, std::size_t i, std::size_t j) {
  if (i >= r.positives().size() || j >= r.negative_magnitudes().size())
    throw std::out_of_range("merge index out of range");
  std::vector<Rational> comps;
  const Rational merged = r.positives()[i] - r.negative_magnitudes()[j];
  for (std::size_t k = 0; k < r.positives().size(); ++k) {
    if (k == i) continue;
    comps.push_back(r.positives()[k]);
  }
  for (std::size_t k = 0; k < r.negative_magnitudes().size(); ++k) {
    if (k == j) continue;
    comps.push_back(-r.negative_magnitudes()[k]);
  }
  if (!merged.is_zero()) comps.push_back(merged);
  if (comps.empty()) throw std::invalid_argument("merge would leave an empty residue vector");
  return ResidueVector(std::move(comps));
}

namespace detail {

inline void require_integer_sorted(const ResidueVector& r, const char* who) {
  if (!r.all_integer())
    throw HypothesisViolated(std::string(who) + ": components must be integers (apply primitive_form first)");
}

// First (j, i) pair, in lexicographic (j, i) order over negatives/positives
// both ascending, whose strict merge clears the requested degree bound.
inline ReductionStep first_step_with_bound(const ResidueVector& r, std::int64_t bound,
                                           const char* who) {
  for (std::size_t j = 0; j < r.negative_magnitudes().size(); ++j) {
    for (std::size_t i = 0; i < r.positives().size(); ++i) {
      if (!(r.positives()[i] > r.negative_magnitudes()[j])) continue;
      ResidueVector merged = merge_components(r, i, j);
      if (degree(merged) > bound) return ReductionStep{i, j, std::move(merged)};
    }
  }
  // The lemmas guarantee existence under their hypotheses; reaching this line
  // means the preconditions were checked wrongly somewhere upstream.
  throw std::logic_error(std::string(who) + ": no valid reduction despite satisfied hypotheses for " + r.str());
}

}  // namespace detail

// Reduction lemma for a single saddle order budget: for an integer vector
// with p <= q, p+q = m+2 and deg > m (and a_1 <= b_1 when p = q), some merge
// keeps deg > m-1. The p >= q case is handled by mirroring (negate and swap).
inline ReductionStep reduce_lemma_a1(const ResidueVector& r) {
  detail::require_integer_sorted(r, "reduce_lemma_a1");
  const std::int64_t p = static_cast<std::int64_t>(r.positives().size());
  const std::int64_t q = static_cast<std::int64_t>(r.negative_magnitudes().size());
  if (p < 1 || q < 1) throw HypothesisViolated("reduce_lemma_a1: needs p >= 1 and q >= 1");
  if (p > q) throw HypothesisViolated("reduce_lemma_a1: needs p <= q (mirror the vector first)");
  const std::int64_t m = p + q - 2;
  if (degree(r) <= m)
    throw HypothesisViolated("reduce_lemma_a1: needs deg(r) > m, got deg " +
                             std::to_string(degree(r)) + " with m " + std::to_string(m));
  if (p == q && r.positives().front() > r.negative_magnitudes().front())
    throw HypothesisViolated("reduce_lemma_a1: p = q case needs a_1 <= b_1 (mirror the vector first)");
  return detail::first_step_with_bound(r, m - 1, "reduce_lemma_a1");
}

// Reduction lemma indexed by the saddle order list: with deg > alpha_1 - 1 and
// deg > (m+2)/2, a merge keeps deg > max{alpha_1 - 2, alpha_2 - 1, ...}.
inline ReductionStep reduce_lemma_a2(const ResidueVector& r,
                                     const std::vector<std::int64_t>& alphas_desc) {
  detail::require_integer_sorted(r, "reduce_lemma_a2");
  const std::int64_t p = static_cast<std::int64_t>(r.positives().size());
  const std::int64_t q = static_cast<std::int64_t>(r.negative_magnitudes().size());
  if (p < 1 || q < 1 || p > q)
    throw HypothesisViolated("reduce_lemma_a2: needs 1 <= p <= q (mirror the vector first)");
  const std::int64_t m = p + q - 2;
  if (alphas_desc.size() < 2) throw HypothesisViolated("reduce_lemma_a2: needs I >= 2");
  std::int64_t order_sum = 0;
  for (std::size_t k = 0; k < alphas_desc.size(); ++k) {
    if (alphas_desc[k] < 2) throw HypothesisViolated("reduce_lemma_a2: saddle orders must be >= 2");
    if (k + 1 < alphas_desc.size() && alphas_desc[k] < alphas_desc[k + 1])
      throw HypothesisViolated("reduce_lemma_a2: saddle orders must be sorted descending");
    order_sum += alphas_desc[k] - 1;
  }
  if (order_sum != m)
    throw HypothesisViolated("reduce_lemma_a2: sum(alpha_i - 1) must equal m");
  const std::int64_t deg = degree(r);
  if (deg <= alphas_desc.front() - 1)
    throw HypothesisViolated("reduce_lemma_a2: needs deg(r) > alpha_1 - 1");
  if (2 * deg <= m + 2) throw HypothesisViolated("reduce_lemma_a2: needs deg(r) > (m+2)/2");

  std::int64_t bound = alphas_desc.front() - 2;
  for (std::size_t k = 1; k < alphas_desc.size(); ++k) bound = std::max(bound, alphas_desc[k] - 1);
  return detail::first_step_with_bound(r, bound, "reduce_lemma_a2");
}

// Test oracle: every (i, j) merge, including exact cancellations, whose result
// is a valid residue vector with degree above the given exclusive bound.
inline std::vector<ReductionStep> brute_force_reduction_search(const ResidueVector& r,
                                                               std::int64_t degree_bound,
                                                               std::size_t size_limit = 12) {
  detail::require_integer_sorted(r, "brute_force_reduction_search");
  if (r.size() > size_limit)
    throw SizeLimitExceeded("brute_force_reduction_search: vector of size " +
                            std::to_string(r.size()) + " exceeds limit " +
                            std::to_string(size_limit));
  std::vector<ReductionStep> steps;
  for (std::size_t j = 0; j < r.negative_magnitudes().size(); ++j) {
    for (std::size_t i = 0; i < r.positives().size(); ++i) {
      try {
        ResidueVector merged = merge_components(r, i, j);
        if (degree(merged) > degree_bound) steps.push_back(ReductionStep{i, j, std::move(merged)});
      } catch (const std::invalid_argument&) {
        // merge emptied the vector; not a usable step
      }
    }
  }
  return steps;
}

inline std::vector<ReductionStep> brute_force_reduction_search_m(const ResidueVector& r,
                                                                 std::int64_t m,
                                                                 std::size_t size_limit = 12) {
  return brute_force_reduction_search(r, m - 1, size_limit);
}

inline std::vector<ReductionStep> brute_force_reduction_search_alphas(
    const ResidueVector& r, const std::vector<std::int64_t>& alphas_desc,
    std::size_t size_limit = 12) {
  std::int64_t bound = alphas_desc.front() - 2;
  for (std::size_t k = 1; k < alphas_desc.size(); ++k) bound = std::max(bound, alphas_desc[k] - 1);
  return brute_force_reduction_search(r, bound, size_limit);
}

}  // namespace conemetric
