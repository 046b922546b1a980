#include "ebnoise/fixtures.hpp"

namespace ebnoise::fixtures {

RealMat3 lambda_order3() { return Eigen::Vector3d(0.73, 0.5, 0.5).asDiagonal(); }

RealMat3 axis_swap() {
  RealMat3 o;
  o << 0, 1, 0,
       1, 0, 0,
       0, 0, 1;
  return o;
}

RealMat3 order2_example() { return axis_swap() * lambda_order3(); }

RealMat3 order2_mixture() {
  const RealMat3 t = order2_example();
  return 0.5 * (t + t.transpose());
}

RealMat3 lambda_eb3_pair() { return Eigen::Vector3d(0.91, 0.6, 0.55).asDiagonal(); }

RealMat3 order3_example() { return axis_swap() * lambda_eb3_pair(); }

RealMat3 order3_mixture() {
  const RealMat3 t = order3_example();
  return 0.5 * (t + t.transpose());
}

}  // namespace ebnoise::fixtures
