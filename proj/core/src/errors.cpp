#include "ductflow/errors.hpp"

#include <sstream>

namespace ductflow {

namespace {

std::string stationary_message(double a_target, double a_min) {
    std::ostringstream os;
    os.precision(12);
    os << "no stationary wave: target cross-section " << a_target
       << " is below a_min = " << a_min;
    return os.str();
}

std::string cell_message(std::size_t index, double time, double rho, double p) {
    std::ostringstream os;
    os.precision(12);
    os << "nonphysical cell " << index << " at t = " << time << " (rho = " << rho
       << ", p = " << p << ")";
    return os.str();
}

}  // namespace

NoStationarySolution::NoStationarySolution(double a_target, double a_min)
    : std::runtime_error(stationary_message(a_target, a_min)),
      a_target_(a_target),
      a_min_(a_min) {}

NonPhysicalCell::NonPhysicalCell(std::size_t index, double time, double rho, double p)
    : std::runtime_error(cell_message(index, time, rho, p)),
      index_(index),
      time_(time),
      rho_(rho),
      p_(p) {}

}  // namespace ductflow
