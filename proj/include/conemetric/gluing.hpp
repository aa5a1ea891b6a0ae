#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conemetric/angles.hpp"
#include "conemetric/existence.hpp"
#include "conemetric/rational.hpp"
#include "conemetric/residue_vector.hpp"

namespace conemetric {

struct PlanFailure : std::logic_error {
  using std::logic_error::logic_error;
};

namespace multiset {

// sorted-vector multisets
inline bool erase_one(std::vector<Rational>& v, const Rational& x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

inline void insert_sorted(std::vector<Rational>& v, const Rational& x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

inline bool erase_one(std::vector<std::int64_t>& v, std::int64_t x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

inline void insert_sorted(std::vector<std::int64_t>& v, std::int64_t x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

}  // namespace multiset

// Surface carried at every plan node: genus, saddle orders, and the full pole
// lists of Phi-minima and Phi-maxima. Smooth poles appear as angle-1 entries;
// the visible cone-angle divisor is everything except those.
struct SurfaceState {
  int genus = 0;
  std::vector<std::int64_t> saddles;  // sorted ascending
  std::vector<Rational> mins;         // sorted ascending, includes 1-entries
  std::vector<Rational> maxs;

  void normalize() {
    std::sort(saddles.begin(), saddles.end());
    std::sort(mins.begin(), mins.end());
    std::sort(maxs.begin(), maxs.end());
  }

  Rational min_sum() const {
    Rational s(0);
    for (const auto& v : mins) s += v;
    return s;
  }
  Rational max_sum() const {
    Rational s(0);
    for (const auto& v : maxs) s += v;
    return s;
  }

  std::int64_t saddle_order_sum() const {
    std::int64_t s = 0;
    for (auto a : saddles) s += a - 1;
    return s;
  }

  // residue theorem + sphere/genus Riemann-Roch bookkeeping
  bool consistent() const {
    if (min_sum() != max_sum()) return false;
    return saddle_order_sum() ==
           static_cast<std::int64_t>(mins.size() + maxs.size()) - 2 + 2 * genus;
  }

  Rational mass() const {
    Rational total(2 - 2 * genus);
    for (auto a : saddles) total += Rational(a - 1);
    for (const auto& v : mins) total += v - Rational(1);
    for (const auto& v : maxs) total += v - Rational(1);
    return total;
  }

  // Angle multiset of the represented divisor (smooth poles dropped).
  std::vector<Rational> visible_angles() const {
    std::vector<Rational> out;
    for (auto a : saddles) out.push_back(Rational(a));
    for (const auto& v : mins)
      if (v != Rational(1)) out.push_back(v);
    for (const auto& v : maxs)
      if (v != Rational(1)) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "g=" << genus << " saddles{";
    for (std::size_t i = 0; i < saddles.size(); ++i) os << (i ? "," : "") << saddles[i];
    os << "} min{";
    for (std::size_t i = 0; i < mins.size(); ++i) os << (i ? "," : "") << mins[i].str();
    os << "} max{";
    for (std::size_t i = 0; i < maxs.size(); ++i) os << (i ? "," : "") << maxs[i].str();
    os << "}";
    return os.str();
  }

  friend bool operator==(const SurfaceState& a, const SurfaceState& b) {
    return a.genus == b.genus && a.saddles == b.saddles && a.mins == b.mins && a.maxs == b.maxs;
  }
};

// A point taking part in a merge: a saddle of the given order, a pole from
// the min/max list, or a smooth regular point on the cut line (angle 1, not
// tracked in the state).
struct MergePoint {
  enum class Kind { SaddlePoint, MinPole, MaxPole, SmoothInterior } kind = Kind::SmoothInterior;
  Rational angle = Rational(1);

  static MergePoint saddle(std::int64_t order) {
    return MergePoint{Kind::SaddlePoint, Rational(order)};
  }
  static MergePoint min_pole(const Rational& a) { return MergePoint{Kind::MinPole, a}; }
  static MergePoint max_pole(const Rational& a) { return MergePoint{Kind::MaxPole, a}; }
  static MergePoint smooth() { return MergePoint{}; }

  std::string str() const {
    switch (kind) {
      case Kind::SaddlePoint: return "saddle(" + angle.str() + ")";
      case Kind::MinPole: return "min(" + angle.str() + ")";
      case Kind::MaxPole: return "max(" + angle.str() + ")";
      case Kind::SmoothInterior: return "smooth";
    }
    return "?";
  }
};

enum class Role { Saddle, Min, Max };

inline const char* role_name(Role r) {
  switch (r) {
    case Role::Saddle: return "saddle";
    case Role::Min: return "min";
    case Role::Max: return "max";
  }
  return "?";
}

// Identification of one point of side A with one point of side B. For a
// through-merge the cut line passes through the A-side point and both banks
// pick up a smooth point of side B, so the angle grows by 2.
struct Merge {
  MergePoint a_side;
  MergePoint b_side;
  Role result_role = Role::Saddle;
  Rational result_angle = Rational(2);
  bool through = false;
};

enum class SlitTag { ShorterThanPi, FullMeridian };

inline const char* slit_name(SlitTag t) {
  return t == SlitTag::ShorterThanPi ? "lambda<pi" : "lambda=pi";
}

struct PlanNode {
  enum class Kind { Leaf, Glue, HandleGlue } kind = Kind::Leaf;
  SurfaceState state;

  // Leaf
  Rational pole_a = Rational(1);
  Rational pole_b = Rational(1);

  // Glue: base + patch joined along one slit (two arcs B/B').
  // HandleGlue: base cut along two slits and re-glued, patch empty.
  std::unique_ptr<PlanNode> base;
  std::unique_ptr<PlanNode> patch;
  std::vector<Merge> merges;
  SlitTag slit = SlitTag::ShorterThanPi;

  // Every emitted plan keeps all saddle points on one gradient geodesic
  // between an extremal pair; recorded as metadata, asserted by construction.
  bool saddles_on_common_geodesic = true;

  static std::unique_ptr<PlanNode> leaf(const Rational& c) {
    auto n = std::make_unique<PlanNode>();
    n->kind = Kind::Leaf;
    n->pole_a = c;
    n->pole_b = c;
    n->state = SurfaceState{0, {}, {c}, {c}};
    return n;
  }

  std::size_t leaf_count() const {
    if (kind == Kind::Leaf) return 1;
    std::size_t n = base ? base->leaf_count() : 0;
    if (patch) n += patch->leaf_count();
    return n;
  }

  std::size_t handle_count() const {
    std::size_t n = kind == Kind::HandleGlue ? 1 : 0;
    if (base) n += base->handle_count();
    if (patch) n += patch->handle_count();
    return n;
  }

  Rational leaf_mass_sum() const {
    if (kind == Kind::Leaf) return state.mass();
    Rational s = base ? base->leaf_mass_sum() : Rational(0);
    if (patch) s += patch->leaf_mass_sum();
    return s;
  }
};

struct GluingTree {
  std::unique_ptr<PlanNode> root;
  SingularityDivisor target;
  Certificate certificate;
};

// ---------------------------------------------------------------------------
// Plan verification
// ---------------------------------------------------------------------------

enum class PlanFault {
  EmptyTree,
  UnequalFootballLeaf,
  BadLeafState,
  WrongMergeCount,
  BadMergeReference,
  RoleRuleViolated,
  AngleSumMismatch,
  StateMismatch,
  GenusMismatch,
  InconsistentState,
  RootMismatch,
  MassMismatch,
};

inline const char* plan_fault_name(PlanFault f) {
  switch (f) {
    case PlanFault::EmptyTree: return "EmptyTree";
    case PlanFault::UnequalFootballLeaf: return "UnequalFootballLeaf";
    case PlanFault::BadLeafState: return "BadLeafState";
    case PlanFault::WrongMergeCount: return "WrongMergeCount";
    case PlanFault::BadMergeReference: return "BadMergeReference";
    case PlanFault::RoleRuleViolated: return "RoleRuleViolated";
    case PlanFault::AngleSumMismatch: return "AngleSumMismatch";
    case PlanFault::StateMismatch: return "StateMismatch";
    case PlanFault::GenusMismatch: return "GenusMismatch";
    case PlanFault::InconsistentState: return "InconsistentState";
    case PlanFault::RootMismatch: return "RootMismatch";
    case PlanFault::MassMismatch: return "MassMismatch";
  }
  return "?";
}

struct PlanViolation {
  PlanFault fault;
  std::string path;
  std::string detail;
};

struct VerificationReport {
  std::vector<PlanViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string first() const {
    if (violations.empty()) return "pass";
    return std::string(plan_fault_name(violations.front().fault)) + " at " +
           violations.front().path + ": " + violations.front().detail;
  }
};

namespace detail_plan {

// Removes the referenced point from a working copy of the state; smooth
// interior points consume nothing.
inline bool take_point(SurfaceState& s, const MergePoint& p) {
  switch (p.kind) {
    case MergePoint::Kind::SmoothInterior:
      return p.angle == Rational(1);
    case MergePoint::Kind::SaddlePoint:
      return p.angle.is_integer() && multiset::erase_one(s.saddles, p.angle.as_integer());
    case MergePoint::Kind::MinPole:
      return multiset::erase_one(s.mins, p.angle);
    case MergePoint::Kind::MaxPole:
      return multiset::erase_one(s.maxs, p.angle);
  }
  return false;
}

inline bool saddle_like(const MergePoint& p) {
  return p.kind == MergePoint::Kind::SaddlePoint || p.kind == MergePoint::Kind::SmoothInterior;
}

// Applies one merge onto the combined working state. Returns a fault message
// or empty on success.
inline std::string apply_merge(SurfaceState& a_state, SurfaceState* b_state, const Merge& m) {
  SurfaceState& b_ref = b_state ? *b_state : a_state;
  if (!take_point(a_state, m.a_side)) return "side A point " + m.a_side.str() + " not present";
  if (m.through) {
    if (m.b_side.kind != MergePoint::Kind::SmoothInterior)
      return "through-merge requires smooth B side";
    if (!saddle_like(m.a_side)) return "through-merge requires a saddle-like A side";
    if (m.result_role != Role::Saddle) return "through-merge must produce a saddle";
    if (m.result_angle != m.a_side.angle + Rational(2))
      return "through-merge angle must grow by exactly 2";
  } else {
    if (!take_point(b_ref, m.b_side)) return "side B point " + m.b_side.str() + " not present";
    if (m.result_angle != m.a_side.angle + m.b_side.angle)
      return "result angle " + m.result_angle.str() + " is not the sum of the merged angles";
    switch (m.result_role) {
      case Role::Saddle:
        if (!saddle_like(m.a_side) || !saddle_like(m.b_side))
          return "saddle result needs saddle-or-smooth points on both sides";
        break;
      case Role::Min:
        if (m.a_side.kind != MergePoint::Kind::MinPole || m.b_side.kind != MergePoint::Kind::MinPole)
          return "min result needs min poles on both sides";
        break;
      case Role::Max:
        if (m.a_side.kind != MergePoint::Kind::MaxPole || m.b_side.kind != MergePoint::Kind::MaxPole)
          return "max result needs max poles on both sides";
        break;
    }
  }
  switch (m.result_role) {
    case Role::Saddle: {
      if (!m.result_angle.is_integer() || m.result_angle.numerator() < 2)
        return "saddle result angle must be an integer >= 2";
      multiset::insert_sorted(a_state.saddles, m.result_angle.as_integer());
      break;
    }
    case Role::Min:
      multiset::insert_sorted(a_state.mins, m.result_angle);
      break;
    case Role::Max:
      multiset::insert_sorted(a_state.maxs, m.result_angle);
      break;
  }
  return {};
}

inline void verify_node(const PlanNode& node, const std::string& path, VerificationReport& rep);

inline void verify_children(const PlanNode& node, const std::string& path,
                            VerificationReport& rep) {
  if (node.base) verify_node(*node.base, path + ".base", rep);
  if (node.patch) verify_node(*node.patch, path + ".patch", rep);
}

inline void verify_node(const PlanNode& node, const std::string& path, VerificationReport& rep) {
  switch (node.kind) {
    case PlanNode::Kind::Leaf: {
      if (node.pole_a != node.pole_b) {
        rep.violations.push_back({PlanFault::UnequalFootballLeaf, path,
                                  "football pair (" + node.pole_a.str() + ", " +
                                      node.pole_b.str() + ")"});
        return;
      }
      if (!node.pole_a.is_positive()) {
        rep.violations.push_back({PlanFault::BadLeafState, path, "non-positive football angle"});
        return;
      }
      const SurfaceState expect{0, {}, {node.pole_a}, {node.pole_b}};
      if (!(node.state == expect))
        rep.violations.push_back({PlanFault::BadLeafState, path, "leaf state is not a football"});
      return;
    }
    case PlanNode::Kind::Glue: {
      if (!node.base || !node.patch) {
        rep.violations.push_back({PlanFault::BadMergeReference, path, "glue node missing a child"});
        return;
      }
      verify_children(node, path, rep);
      const std::size_t expected = (node.merges.size() == 1 && node.merges[0].through) ? 1 : 2;
      if (node.merges.size() != expected) {
        rep.violations.push_back({PlanFault::WrongMergeCount, path,
                                  "glue needs two point merges (or one through-merge)"});
        return;
      }
      SurfaceState work = node.base->state;
      SurfaceState patch_work = node.patch->state;
      work.genus += patch_work.genus;
      for (const auto& m : node.merges) {
        const std::string err = apply_merge(work, &patch_work, m);
        if (!err.empty()) {
          rep.violations.push_back({PlanFault::BadMergeReference, path, err});
          return;
        }
      }
      // unmerged patch points carry over
      for (auto a : patch_work.saddles) multiset::insert_sorted(work.saddles, a);
      for (const auto& v : patch_work.mins) multiset::insert_sorted(work.mins, v);
      for (const auto& v : patch_work.maxs) multiset::insert_sorted(work.maxs, v);
      if (!(work == node.state)) {
        rep.violations.push_back({PlanFault::StateMismatch, path,
                                  "declared " + node.state.str() + " but merges give " +
                                      work.str()});
        return;
      }
      break;
    }
    case PlanNode::Kind::HandleGlue: {
      if (!node.base || node.patch) {
        rep.violations.push_back(
            {PlanFault::BadMergeReference, path, "handle glue needs exactly one child"});
        return;
      }
      verify_children(node, path, rep);
      if (node.merges.size() != 2) {
        rep.violations.push_back({PlanFault::WrongMergeCount, path,
                                  "handle glue needs exactly two point merges"});
        return;
      }
      SurfaceState work = node.base->state;
      work.genus += 1;
      for (const auto& m : node.merges) {
        const std::string err = apply_merge(work, nullptr, m);
        if (!err.empty()) {
          rep.violations.push_back({PlanFault::BadMergeReference, path, err});
          return;
        }
      }
      if (work.genus != node.state.genus) {
        rep.violations.push_back(
            {PlanFault::GenusMismatch, path, "handle glue must raise genus by exactly 1"});
        return;
      }
      if (!(work == node.state)) {
        rep.violations.push_back({PlanFault::StateMismatch, path,
                                  "declared " + node.state.str() + " but merges give " +
                                      work.str()});
        return;
      }
      break;
    }
  }
  if (!node.state.consistent())
    rep.violations.push_back({PlanFault::InconsistentState, path,
                              "state violates residue or divisor bookkeeping: " +
                                  node.state.str()});
}

}  // namespace detail_plan

inline VerificationReport verify_plan(const GluingTree& tree) {
  VerificationReport rep;
  if (!tree.root) {
    rep.violations.push_back({PlanFault::EmptyTree, "root", "no plan"});
    return rep;
  }
  detail_plan::verify_node(*tree.root, "root", rep);
  if (!rep.ok()) return rep;

  const SurfaceState& rs = tree.root->state;
  if (rs.genus != tree.target.genus)
    rep.violations.push_back({PlanFault::RootMismatch, "root", "genus differs from the divisor"});

  // visible angle multiset must reproduce the divisor
  std::vector<Rational> want;
  for (const auto& v : tree.target.saddles) want.push_back(v);
  for (const auto& v : tree.target.minima) want.push_back(v);
  for (const auto& v : tree.target.maxima) want.push_back(v);
  std::sort(want.begin(), want.end());
  if (rs.visible_angles() != want)
    rep.violations.push_back(
        {PlanFault::RootMismatch, "root", "angle multiset differs from the divisor"});

  // pole lists must reproduce the certificate residues
  std::vector<Rational> cert_mins = tree.certificate.residue_vector.positives();
  std::vector<Rational> cert_maxs = tree.certificate.residue_vector.negative_magnitudes();
  std::sort(cert_mins.begin(), cert_mins.end());
  std::sort(cert_maxs.begin(), cert_maxs.end());
  if (rs.mins != cert_mins || rs.maxs != cert_maxs)
    rep.violations.push_back(
        {PlanFault::RootMismatch, "root", "pole lists differ from the certificate residues"});

  if (tree.root->leaf_mass_sum() != rs.mass())
    rep.violations.push_back({PlanFault::MassMismatch, "root",
                              "sum of football masses does not equal the surface mass"});
  return rep;
}

// ---------------------------------------------------------------------------
// Plan construction
// ---------------------------------------------------------------------------

namespace detail_plan {

inline bool all_entries_equal(const SurfaceState& s) {
  if (s.mins.size() != s.maxs.size()) return false;
  if (s.mins.empty()) return false;
  const Rational& v = s.mins.front();
  for (const auto& x : s.mins)
    if (x != v) return false;
  for (const auto& x : s.maxs)
    if (x != v) return false;
  return true;
}

// Removes the largest saddle, returning a merge point for the glue that
// restores it: the decremented saddle if its order stays >= 2, else a smooth
// interior point.
inline MergePoint pop_largest_saddle(SurfaceState& s, std::int64_t& restored) {
  if (s.saddles.empty()) throw PlanFailure("no saddle available to decrement");
  restored = s.saddles.back();
  s.saddles.pop_back();
  if (restored - 1 >= 2) {
    multiset::insert_sorted(s.saddles, restored - 1);
    return MergePoint::saddle(restored - 1);
  }
  return MergePoint::smooth();
}

inline std::unique_ptr<PlanNode> plan_state(const SurfaceState& s);

// One lemma-guided reduction: consume one pole entirely, shrink a larger pole
// of the opposite kind by it, and lower the largest saddle order by one. The
// consumed angle names the football glued back on.
inline std::unique_ptr<PlanNode> plan_general_step(const SurfaceState& s) {
  // Orient so that the lemma's "positives" are the smaller list; with equal
  // sizes, so that the smallest positive does not exceed the smallest
  // negative (the mirrored form of the p = q case).
  bool mirror = s.mins.size() > s.maxs.size();
  if (s.mins.size() == s.maxs.size()) mirror = s.mins.front() > s.maxs.front();
  const std::vector<Rational>& donors = mirror ? s.maxs : s.mins;
  const std::vector<Rational>& consumed_side = mirror ? s.mins : s.maxs;

  std::vector<Rational> comps;
  for (const auto& v : donors) comps.push_back(v);
  for (const auto& v : consumed_side) comps.push_back(-v);
  ResidueVector oriented(std::move(comps));

  // run the reduction lemma on the primitive integer vector
  PrimitiveVector prim = primitive_form(oriented);
  std::vector<Rational> prim_comps;
  for (auto v : prim.positives) prim_comps.push_back(Rational(v));
  for (auto v : prim.negative_magnitudes) prim_comps.push_back(Rational(-v));
  ResidueVector prim_vec(std::move(prim_comps));

  std::vector<std::int64_t> alphas(s.saddles.rbegin(), s.saddles.rend());
  ReductionStep step = alphas.size() >= 2 ? reduce_lemma_a2(prim_vec, alphas)
                                          : reduce_lemma_a1(prim_vec);

  const Rational donor = donors[step.positive_index];
  const Rational consumed = consumed_side[step.negative_index];
  if (!(donor > consumed)) throw PlanFailure("reduction step does not shrink a larger pole");

  SurfaceState child = s;
  std::int64_t restored = 0;
  const MergePoint child_saddle = pop_largest_saddle(child, restored);
  auto& child_donor_list = mirror ? child.maxs : child.mins;
  auto& child_consumed_list = mirror ? child.mins : child.maxs;
  if (!multiset::erase_one(child_donor_list, donor) ||
      !multiset::erase_one(child_consumed_list, consumed))
    throw PlanFailure("reduction indices do not match the surface state");
  multiset::insert_sorted(child_donor_list, donor - consumed);

  auto node = std::make_unique<PlanNode>();
  node->kind = PlanNode::Kind::Glue;
  node->state = s;
  node->base = plan_state(child);
  node->patch = PlanNode::leaf(consumed);
  node->slit = SlitTag::ShorterThanPi;
  Merge saddle_merge{child_saddle, MergePoint::smooth(), Role::Saddle, Rational(restored), false};
  const Role pole_role = mirror ? Role::Max : Role::Min;
  const auto mk = mirror ? &MergePoint::max_pole : &MergePoint::min_pole;
  Merge pole_merge{mk(donor - consumed), mk(consumed), pole_role, donor, false};
  node->merges = {saddle_merge, pole_merge};
  return node;
}

// Chain step for states whose poles all carry one common angle: glue a
// football of that angle along a slit between two saddle points (as in the
// all-(2) chains), lowering two saddle orders, or one order by two when only
// a single saddle remains.
inline std::unique_ptr<PlanNode> plan_chain_step(const SurfaceState& s) {
  const Rational v = s.mins.front();
  SurfaceState child = s;
  if (!multiset::erase_one(child.mins, v) || !multiset::erase_one(child.maxs, v))
    throw PlanFailure("chain step needs the common angle on both sides");

  auto node = std::make_unique<PlanNode>();
  node->kind = PlanNode::Kind::Glue;
  node->state = s;
  node->patch = PlanNode::leaf(v);
  node->slit = SlitTag::ShorterThanPi;

  if (child.saddles.size() >= 2) {
    std::int64_t r1 = 0, r2 = 0;
    const MergePoint p1 = pop_largest_saddle(child, r1);
    const MergePoint p2 = pop_largest_saddle(child, r2);
    node->merges = {Merge{p1, MergePoint::smooth(), Role::Saddle, Rational(r1), false},
                    Merge{p2, MergePoint::smooth(), Role::Saddle, Rational(r2), false}};
  } else {
    // single saddle: the slit passes straight through it
    if (child.saddles.empty()) throw PlanFailure("chain step with no saddle left");
    const std::int64_t a = child.saddles.back();
    if (a < 3) throw PlanFailure("through-merge needs a saddle of order >= 3");
    child.saddles.pop_back();
    MergePoint target = MergePoint::smooth();
    if (a - 2 >= 2) {
      multiset::insert_sorted(child.saddles, a - 2);
      target = MergePoint::saddle(a - 2);
    }
    node->merges = {Merge{target, MergePoint::smooth(), Role::Saddle, Rational(a), true}};
  }
  node->base = plan_state(child);
  return node;
}

inline std::unique_ptr<PlanNode> plan_genus_state(const SurfaceState& s);

// Sphere recursion: footballs at the bottom, chain steps on equal-angle
// states, lemma-guided reductions otherwise.
inline std::unique_ptr<PlanNode> plan_state(const SurfaceState& s) {
  if (!s.consistent()) throw PlanFailure("inconsistent surface state: " + s.str());
  if (s.genus != 0) return plan_genus_state(s);
  if (s.saddles.empty()) {
    if (s.mins.size() != 1 || s.maxs.size() != 1 || s.mins[0] != s.maxs[0])
      throw PlanFailure("saddle-free state is not a football: " + s.str());
    return PlanNode::leaf(s.mins[0]);
  }
  if (all_entries_equal(s)) return plan_chain_step(s);
  return plan_general_step(s);
}

// Genus recursion: peel one handle at a time once the state is down to a
// single extremal pair, run chain steps on equal-angle states, and otherwise
// shrink poles pairwise as in the genus existence proof.
inline std::unique_ptr<PlanNode> plan_genus_state(const SurfaceState& s) {
  if (s.genus == 0) return plan_state(s);
  if (!s.consistent()) throw PlanFailure("inconsistent surface state: " + s.str());

  if (s.mins.size() == 1 && s.maxs.size() == 1) {
    // one extremal pair of equal angle c: split it over a handle football c/2
    const Rational c = s.mins.front();
    if (c != s.maxs.front()) throw PlanFailure("extremal pair out of balance: " + s.str());
    const Rational half = c / Rational(2);

    SurfaceState x = s;
    x.genus -= 1;
    std::int64_t restored_handle = 0;
    const MergePoint handle_saddle = pop_largest_saddle(x, restored_handle);
    multiset::erase_one(x.maxs, c);
    multiset::insert_sorted(x.maxs, half);
    multiset::insert_sorted(x.maxs, half);

    SurfaceState y = x;
    std::int64_t restored_glue = 0;
    const MergePoint glue_saddle = pop_largest_saddle(y, restored_glue);
    multiset::erase_one(y.mins, c);
    multiset::insert_sorted(y.mins, half);
    multiset::erase_one(y.maxs, half);

    auto glue = std::make_unique<PlanNode>();
    glue->kind = PlanNode::Kind::Glue;
    glue->state = x;
    glue->base = plan_genus_state(y);
    glue->patch = PlanNode::leaf(half);
    glue->slit = SlitTag::ShorterThanPi;
    glue->merges = {
        Merge{glue_saddle, MergePoint::smooth(), Role::Saddle, Rational(restored_glue), false},
        Merge{MergePoint::min_pole(half), MergePoint::min_pole(half), Role::Min, c, false}};

    auto handle = std::make_unique<PlanNode>();
    handle->kind = PlanNode::Kind::HandleGlue;
    handle->state = s;
    handle->base = std::move(glue);
    handle->slit = SlitTag::FullMeridian;
    handle->merges = {
        Merge{handle_saddle, MergePoint::smooth(), Role::Saddle, Rational(restored_handle), false},
        Merge{MergePoint::max_pole(half), MergePoint::max_pole(half), Role::Max, c, false}};
    return handle;
  }

  if (all_entries_equal(s)) return plan_chain_step(s);

  // shrink: consume the smallest pole of the larger list against the largest
  // pole of the other list, lowering the largest saddle
  const bool consume_mins = s.mins.size() >= s.maxs.size();
  const std::vector<Rational>& consumed_side = consume_mins ? s.mins : s.maxs;
  const std::vector<Rational>& donor_side = consume_mins ? s.maxs : s.mins;
  if (consumed_side.size() < 2) throw PlanFailure("cannot consume the last pole of a side");
  const Rational donor = donor_side.back();
  Rational consumed = consumed_side.front();
  bool found = false;
  for (const auto& x : consumed_side) {
    if (x < donor) {
      consumed = x;
      found = true;
      break;
    }
  }
  if (!found) throw PlanFailure("no pole smaller than the opposite maximum: " + s.str());

  SurfaceState child = s;
  std::int64_t restored = 0;
  const MergePoint child_saddle = pop_largest_saddle(child, restored);
  auto& child_consumed = consume_mins ? child.mins : child.maxs;
  auto& child_donor = consume_mins ? child.maxs : child.mins;
  multiset::erase_one(child_consumed, consumed);
  multiset::erase_one(child_donor, donor);
  multiset::insert_sorted(child_donor, donor - consumed);

  auto node = std::make_unique<PlanNode>();
  node->kind = PlanNode::Kind::Glue;
  node->state = s;
  node->base = plan_genus_state(child);
  node->patch = PlanNode::leaf(consumed);
  node->slit = SlitTag::ShorterThanPi;
  const Role pole_role = consume_mins ? Role::Max : Role::Min;
  const auto mk = consume_mins ? &MergePoint::max_pole : &MergePoint::min_pole;
  node->merges = {
      Merge{child_saddle, MergePoint::smooth(), Role::Saddle, Rational(restored), false},
      Merge{mk(donor - consumed), mk(consumed), pole_role, donor, false}};
  return node;
}

inline SurfaceState state_from_certificate(const SingularityDivisor& d, const Certificate& cert) {
  SurfaceState s;
  s.genus = d.genus;
  s.saddles = d.saddle_orders();
  std::sort(s.saddles.begin(), s.saddles.end());
  s.mins = cert.residue_vector.positives();
  s.maxs = cert.residue_vector.negative_magnitudes();
  if (cert.case_tag == CaseTag::Football || cert.case_tag == CaseTag::ThreeMixed ||
      cert.case_tag == CaseTag::ThreeIntegerOneSaddle ||
      cert.case_tag == CaseTag::ThreeIntegerTwoSaddles ||
      cert.case_tag == CaseTag::ThreeIntegerAllSaddles) {
    // Triple and football certificates fix the saddle set themselves; recover
    // it from the divisor angles not claimed by the residues.
    std::vector<Rational> angles = d.all_angles();
    for (const auto& v : s.mins)
      if (v != Rational(1)) multiset::erase_one(angles, v);
    for (const auto& v : s.maxs)
      if (v != Rational(1)) multiset::erase_one(angles, v);
    s.saddles.clear();
    for (const auto& v : angles) s.saddles.push_back(v.as_integer());
    std::sort(s.saddles.begin(), s.saddles.end());
  }
  if (!s.consistent()) throw PlanFailure("certificate does not define a consistent state");
  return s;
}

}  // namespace detail_plan

inline GluingTree plan_sphere(const SingularityDivisor& d, const Certificate& cert) {
  if (d.genus != 0) throw PlanFailure("plan_sphere: divisor has positive genus");
  GluingTree tree;
  tree.target = d;
  tree.certificate = cert;
  tree.root = detail_plan::plan_state(detail_plan::state_from_certificate(d, cert));
  return tree;
}

inline GluingTree plan_positive_genus(const SingularityDivisor& d, const Certificate& cert) {
  if (d.genus < 1) throw PlanFailure("plan_positive_genus: divisor has genus 0");
  GluingTree tree;
  tree.target = d;
  tree.certificate = cert;
  tree.root = detail_plan::plan_genus_state(detail_plan::state_from_certificate(d, cert));
  return tree;
}

inline GluingTree plan(const SingularityDivisor& d, const Certificate& cert) {
  return d.genus == 0 ? plan_sphere(d, cert) : plan_positive_genus(d, cert);
}

// All-integer triples admit several Morse layouts; emit one verified plan per
// feasible saddle labeling. Other divisors yield their single plan.
inline std::vector<GluingTree> enumerate_plans(const SingularityDivisor& d) {
  std::vector<GluingTree> out;
  const auto angles = d.all_angles();
  if (d.genus == 0 && angles.size() == 3 && angles[0].is_integer() && angles[1].is_integer() &&
      angles[2].is_integer()) {
    for (auto& [saddles, cert] : feasible_triple_specs(
             angles[0].as_integer(), angles[1].as_integer(), angles[2].as_integer())) {
      out.push_back(plan_sphere(d, cert));
    }
    return out;
  }
  Verdict v = decide(d);
  if (v.exists()) out.push_back(plan(d, *v.certificate));
  return out;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

namespace detail_plan {

inline void dot_node(const PlanNode& n, int& counter, std::ostringstream& os, int& my_id) {
  my_id = counter++;
  std::string label;
  switch (n.kind) {
    case PlanNode::Kind::Leaf:
      label = "football(" + n.pole_a.str() + ", " + n.pole_b.str() + ")";
      break;
    case PlanNode::Kind::Glue:
      label = std::string("glue [") + slit_name(n.slit) + "]";
      break;
    case PlanNode::Kind::HandleGlue:
      label = std::string("handle [") + slit_name(n.slit) + "]";
      break;
  }
  os << "  n" << my_id << " [label=\"" << label << "\\n" << n.state.str() << "\"];\n";
  if (n.base) {
    int cid = 0;
    dot_node(*n.base, counter, os, cid);
    os << "  n" << my_id << " -> n" << cid << ";\n";
  }
  if (n.patch) {
    int cid = 0;
    dot_node(*n.patch, counter, os, cid);
    os << "  n" << my_id << " -> n" << cid << ";\n";
  }
}

}  // namespace detail_plan

inline std::string to_dot(const GluingTree& tree) {
  std::ostringstream os;
  os << "digraph gluing {\n  node [shape=box, fontname=\"monospace\"];\n";
  if (tree.root) {
    int counter = 0;
    int id = 0;
    detail_plan::dot_node(*tree.root, counter, os, id);
  }
  os << "}\n";
  return os.str();
}

}  // namespace conemetric
