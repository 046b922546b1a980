#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebnoise/nc_result.hpp"
#include "ebnoise/noise_measures.hpp"
#include "ebnoise/qubit_channels.hpp"

namespace ebnoise {

enum class FilterKind { PauliS1, PauliS2, PauliS3, RotationPairR2R1, Euler, Orthogonal };

/// A filtering map interposed between channel uses, given by its orthogonal
/// Bloch action. Everything except det -1 orthogonal matrices is a unitary channel.
class FilterCandidate {
 public:
  /// S_j[rho] = sigma_j rho sigma_j, j = 1..3.
  static FilterCandidate pauli(int j);
  /// R2(pi/2) o R1(pi/2) with R_j the superoperator of exp(-i pi/4 sigma_j).
  static FilterCandidate r2r1();
  /// ZYZ Euler rotation Rz(alpha) Ry(beta) Rz(theta).
  static FilterCandidate euler(double alpha, double beta, double theta);
  /// Orthogonal Bloch action, det +-1.
  static FilterCandidate orthogonal(const RealMat3& o);

  FilterKind kind() const { return kind_; }
  const RealMat3& bloch() const { return bloch_; }
  /// Euler angles for the euler kind, row-major entries for orthogonal, empty otherwise.
  const std::vector<double>& params() const { return params_; }
  /// det = +1, i.e. a genuine unitary channel.
  bool is_proper() const;
  Channel channel() const;
  std::string kind_name() const;

 private:
  FilterCandidate(FilterKind kind, RealMat3 bloch, std::vector<double> params)
      : kind_(kind), bloch_(std::move(bloch)), params_(std::move(params)) {}
  FilterKind kind_;
  RealMat3 bloch_;
  std::vector<double> params_;
};

std::optional<FilterKind> filter_kind_from_name(const std::string& name);

struct AmendReport {
  NcResult base_nc;
  NcResult filtered_nc;
  FilterCandidate filter;
  /// filtered_nc is strictly greater than base_nc.
  bool amendable;
};

/// c in EB^2 while c o f o c is not entanglement breaking.
bool is_amendable2(const Channel& c, const FilterCandidate& f);

/// n_c of f o c: the first m at which (f o c)^m is entanglement breaking.
NcResult amend_order(const Channel& c, const FilterCandidate& f, int cap = kDefaultCap);

/// Named filters (S1, S2, S3, R2R1; plus the inverse polar rotation for unital
/// input) followed by a seeded Euler-angle grid of about `budget` points and a
/// simplex refinement around the best grid point. Deterministic for a seed.
AmendReport search_filter(const Channel& c, int cap, int budget, unsigned seed);

struct GadAmendability {
  bool amendable = false;
  std::optional<FilterCandidate> filter;
};

/// Whether some unitary U makes Psi_{p,gamma} o U an order-2 channel while
/// n_c(Psi) > 2, so that the filter U^dagger raises its order back to n_c(Psi).
/// Tries the named filters, then an Euler grid of `euler_budget` points.
GadAmendability gad_amendability(double p, double gamma, int cap = kDefaultCap, int euler_budget = 0);

}  // namespace ebnoise
