#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conemetric/rational.hpp"

namespace conemetric {

// Cone angles are stored in units of full turns: a stored value v means the
// geometric angle 2*pi*v.
using Angle = Rational;

// Divisor of cone angles on a closed orientable surface, with Morse-role
// labels. Saddle entries are the integer angles >= 2 carried by zeros of the
// character 1-form; minima/maxima are the angles at extremal points of Phi.
struct SingularityDivisor {
  int genus = 0;
  std::vector<Angle> saddles;
  std::vector<Angle> minima;
  std::vector<Angle> maxima;
  // Sentinel for genuinely irrational angle data. Such divisors are
  // representable but every decision procedure refuses them.
  bool irrational = false;

  std::size_t saddle_count() const { return saddles.size(); }
  std::size_t minima_count() const { return minima.size(); }
  std::size_t maxima_count() const { return maxima.size(); }
  std::size_t point_count() const { return saddles.size() + minima.size() + maxima.size(); }

  std::vector<Angle> all_angles() const {
    std::vector<Angle> out = saddles;
    out.insert(out.end(), minima.begin(), minima.end());
    out.insert(out.end(), maxima.begin(), maxima.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::int64_t> saddle_orders() const {
    std::vector<std::int64_t> out;
    out.reserve(saddles.size());
    for (const auto& a : saddles) out.push_back(a.as_integer());
    return out;
  }

  SingularityDivisor orientation_swapped() const {
    SingularityDivisor d = *this;
    std::swap(d.minima, d.maxima);
    return d;
  }

  friend bool operator==(const SingularityDivisor& a, const SingularityDivisor& b) {
    return a.genus == b.genus && a.saddles == b.saddles && a.minima == b.minima &&
           a.maxima == b.maxima && a.irrational == b.irrational;
  }
};

enum class ViolationCode {
  InvalidAngle,       // angle <= 0
  NonIntegerSaddle,   // saddle entry not an integer >= 2
  UnitExtremalAngle,  // minimum/maximum angle equal to 1
  NegativeGenus,
};

struct Violation {
  ViolationCode code;
  std::string message;
};

struct ValidationResult {
  std::optional<SingularityDivisor> divisor;
  std::vector<Violation> violations;

  bool ok() const { return divisor.has_value(); }
};

inline const char* violation_name(ViolationCode c) {
  switch (c) {
    case ViolationCode::InvalidAngle: return "InvalidAngle";
    case ViolationCode::NonIntegerSaddle: return "NonIntegerSaddle";
    case ViolationCode::UnitExtremalAngle: return "UnitExtremalAngle";
    case ViolationCode::NegativeGenus: return "NegativeGenus";
  }
  return "?";
}

// Normalizes raw angle data into a divisor or reports every violation found.
// Lists come back sorted ascending, so validate(validate(x)) == validate(x).
inline ValidationResult validate(int genus, std::vector<Rational> saddles,
                                 std::vector<Rational> minima, std::vector<Rational> maxima,
                                 bool irrational = false) {
  ValidationResult res;
  if (genus < 0)
    res.violations.push_back({ViolationCode::NegativeGenus,
                              "genus " + std::to_string(genus) + " is negative"});
  for (const auto& a : saddles) {
    if (!a.is_positive())
      res.violations.push_back({ViolationCode::InvalidAngle, "saddle angle " + a.str() + " is not positive"});
    else if (!a.is_integer() || a.numerator() < 2)
      res.violations.push_back({ViolationCode::NonIntegerSaddle,
                                "saddle angle " + a.str() + " is not an integer >= 2"});
  }
  const auto check_extremal = [&res](const Rational& a, const char* role) {
    if (!a.is_positive())
      res.violations.push_back({ViolationCode::InvalidAngle,
                                std::string(role) + " angle " + a.str() + " is not positive"});
    else if (a == Rational(1))
      res.violations.push_back({ViolationCode::UnitExtremalAngle,
                                std::string(role) + " angle 1 marks a smooth point and is not allowed"});
  };
  for (const auto& a : minima) check_extremal(a, "minimum");
  for (const auto& a : maxima) check_extremal(a, "maximum");
  if (!res.violations.empty()) return res;

  std::sort(saddles.begin(), saddles.end());
  std::sort(minima.begin(), minima.end());
  std::sort(maxima.begin(), maxima.end());
  res.divisor = SingularityDivisor{genus, std::move(saddles), std::move(minima),
                                   std::move(maxima), irrational};
  return res;
}

// chi(M) + deg D = (2 - 2g) + sum(angle - 1); positive curvature forces this
// to be positive for every divisor that actually carries a metric.
inline Rational gauss_bonnet_mass(const SingularityDivisor& d) {
  Rational total(2 - 2 * d.genus);
  for (const auto& a : d.saddles) total += a - Rational(1);
  for (const auto& a : d.minima) total += a - Rational(1);
  for (const auto& a : d.maxima) total += a - Rational(1);
  return total;
}

}  // namespace conemetric
