#pragma once

#include <string>

namespace fracpolya {

// Exponent alpha of (-Delta)^{alpha/2}, validated to lie in (0, 2].
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha);

  double value() const noexcept { return alpha_; }
  operator double() const noexcept { return alpha_; }

 private:
  double alpha_;
};

struct Dimension {
  int d;
  explicit Dimension(int dim);
};

enum class DomainKind { Interval, UnitDisk, Square };

// Interval (0, L), the unit disk, or the square (-1, 1)^2.
class DomainSpec {
 public:
  static DomainSpec interval(double length);
  static DomainSpec unit_disk();
  static DomainSpec square();

  DomainKind kind() const noexcept { return kind_; }
  int dimension() const noexcept;
  double volume() const noexcept;
  // Interval length; 0 for the 2-D domains.
  double length() const noexcept { return length_; }
  std::string name() const;

 private:
  DomainSpec(DomainKind kind, double length) : kind_(kind), length_(length) {}

  DomainKind kind_;
  double length_;
};

}  // namespace fracpolya
