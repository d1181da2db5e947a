#include "fracpolya/domain.hpp"

#include <cmath>
#include <numbers>

#include "fracpolya/errors.hpp"

namespace fracpolya {

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw DomainError("fractional order must lie in (0, 2], got " +
                      std::to_string(alpha));
  }
}

Dimension::Dimension(int dim) : d(dim) {
  if (dim < 1) throw DomainError("dimension must be >= 1");
}

DomainSpec DomainSpec::interval(double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("interval length must be positive and finite");
  }
  return DomainSpec(DomainKind::Interval, length);
}

DomainSpec DomainSpec::unit_disk() { return DomainSpec(DomainKind::UnitDisk, 0.0); }

DomainSpec DomainSpec::square() { return DomainSpec(DomainKind::Square, 0.0); }

int DomainSpec::dimension() const noexcept {
  return kind_ == DomainKind::Interval ? 1 : 2;
}

double DomainSpec::volume() const noexcept {
  switch (kind_) {
    case DomainKind::Interval:
      return length_;
    case DomainKind::UnitDisk:
      return std::numbers::pi;
    case DomainKind::Square:
      return 4.0;
  }
  return 0.0;
}

std::string DomainSpec::name() const {
  switch (kind_) {
    case DomainKind::Interval:
      return "interval";
    case DomainKind::UnitDisk:
      return "unit_disk";
    case DomainKind::Square:
      return "square";
  }
  return "unknown";
}

}  // namespace fracpolya
