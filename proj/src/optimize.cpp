#include "ebnoise/optimize.hpp"

#include <memory>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace ebnoise {

namespace {

double trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  return f(std::span<const double>(v->data, v->size));
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

SimplexResult minimize_simplex(const Objective& f, std::vector<double> x0,
                               const SimplexOptions& options) {
  if (x0.empty()) throw std::invalid_argument("simplex start point is empty");
  static const bool handler_off = (gsl_set_error_handler_off(), true);
  (void)handler_off;
  const std::size_t n = x0.size();
  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
  std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(n));
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.get(), i, x0[i]);
  gsl_vector_set_all(step.get(), options.initial_step);

  gsl_multimin_function fn;
  fn.n = n;
  fn.f = &trampoline;
  fn.params = const_cast<Objective*>(&f);

  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> state(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_fminimizer_set(state.get(), &fn, x.get(), step.get());

  SimplexResult out;
  for (out.iterations = 0; out.iterations < options.max_iterations; ++out.iterations) {
    if (gsl_multimin_fminimizer_iterate(state.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(state.get());
    if (gsl_multimin_test_size(size, options.size_tol) == GSL_SUCCESS) {
      out.converged = true;
      break;
    }
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(state.get());
  out.x.assign(best->data, best->data + n);
  out.value = gsl_multimin_fminimizer_minimum(state.get());
  return out;
}

}  // namespace ebnoise
