#pragma once

#include "ebnoise/numerics.hpp"

/// Published example matrices used by the verification table and the test suites.
namespace ebnoise::fixtures {

/// diag(0.73, 0.5, 0.5): order-3 polar form.
RealMat3 lambda_order3();
/// Swap of the first two Bloch axes (det -1).
RealMat3 axis_swap();
/// axis_swap() * lambda_order3(): order-2 channel whose polar form has order 3.
RealMat3 order2_example();
/// (T + T^T)/2 for T = order2_example().
RealMat3 order2_mixture();
/// diag(0.91, 0.6, 0.55).
RealMat3 lambda_eb3_pair();
/// axis_swap() * lambda_eb3_pair().
RealMat3 order3_example();
/// (T + T^T)/2 for T = order3_example().
RealMat3 order3_mixture();

}  // namespace ebnoise::fixtures
