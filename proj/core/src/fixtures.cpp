#include "qclus/fixtures.hpp"

namespace qclus {

SeedFile example_seed(const std::string& name) {
  SeedFile s;
  if (name == "g2") {
    s.mode = "quantum";
    s.n = s.m = 2;
    s.Btilde = {{0, 1}, {-1, 0}};
    s.Lambda = {{0, 1}, {-1, 0}};
    s.R = {3, 1};
    QCoeff one(1), h = QCoeff::sym_h();
    s.h = {{one, h, h, one}, {one, one}};
  } else if (name == "rank2") {
    s.mode = "classical";
    s.n = s.m = 2;
    s.Btilde = {{0, 1}, {-1, 0}};
    s.R = {2, 1};
    s.z = {{1LL, std::string("z"), 1LL}, {1LL, 1LL}};
  } else {
    throw std::invalid_argument("example_seed: unknown example \"" + name +
                                "\" (available: g2, rank2)");
  }
  s.validate();
  return s;
}

}  // namespace qclus
