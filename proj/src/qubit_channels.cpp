#include "ebnoise/qubit_channels.hpp"

#include <cmath>
#include <string>

#include "ebnoise/errors.hpp"

namespace ebnoise {

namespace {

constexpr double kChannelTol = 1e-10;
constexpr double kKrausKeep = 1e-12;
const cplx I{0.0, 1.0};

}  // namespace

Mat2c pauli(int j) {
  Mat2c s;
  switch (j) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("pauli index must be 0..3");
  }
  return s;
}

BlochVector::BlochVector(const Vec3& v) : v_(v) {
  if (!v.allFinite() || v.norm() > 1.0 + 1e-12) {
    throw InvariantError("Bloch vector outside the unit ball");
  }
}

Mat2c density_from_bloch(const Vec3& v) {
  return 0.5 * (pauli(0) + v(0) * pauli(1) + v(1) * pauli(2) + v(2) * pauli(3));
}

Vec3 bloch_from_density(const Mat2c& rho) {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v(i) = (pauli(i + 1) * rho).trace().real();
  return v;
}

void require_density_matrix(const Mat2c& rho, double tol) {
  if (!rho.allFinite()) throw InvariantError("density matrix has non-finite entries");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw InvariantError("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > tol) throw InvariantError("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Mat2c> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -tol) throw InvariantError("density matrix is not positive semidefinite");
}

UnitalChannel::UnitalChannel(const RealMat3& t) : t_(t) {
  if (!t.allFinite()) throw InvariantError("unital channel matrix has non-finite entries");
  const double s = singular_values(t)(0);
  if (s * s > 1.0 + kChannelTol) {
    throw InvariantError("unital channel violates T^T T <= 1 (largest singular value " +
                         std::to_string(s) + ")");
  }
}

bool UnitalChannel::completely_positive(double tol) const {
  const Vec3 d = canonical_decompose(t_).d;
  return std::abs(d(0) + d(1)) <= std::abs(1.0 + d(2)) + tol &&
         std::abs(d(0) - d(1)) <= std::abs(1.0 - d(2)) + tol;
}

GadParams::GadParams(double p_, double gamma_) : p(p_), gamma(gamma_) {
  if (!(p >= 0.0 && p <= 1.0) || !(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvariantError("GAD parameters must satisfy 0 <= p, gamma <= 1");
  }
}

KrausChannel::KrausChannel(std::vector<Mat2c> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw InvariantError("Kraus channel needs at least one operator");
  for (const auto& e : ops_) {
    if (!e.allFinite()) throw InvariantError("Kraus operator has non-finite entries");
  }
  if (completeness_defect() > kChannelTol) {
    throw InvariantError("Kraus operators violate completeness (defect " +
                         std::to_string(completeness_defect()) + ")");
  }
}

double KrausChannel::completeness_defect() const {
  Mat2c sum = Mat2c::Zero();
  for (const auto& e : ops_) sum += e.adjoint() * e;
  return (sum - Mat2c::Identity()).cwiseAbs().maxCoeff();
}

BlochVector apply_unital(const UnitalChannel& c, const BlochVector& v) {
  const Vec3 out = c.t() * v.v();
  // contraction guarantees |Tv| <= |v|; clip rounding
  const double n = out.norm();
  return BlochVector(n > 1.0 ? Vec3(out / n) : out);
}

UnitalChannel compose_unital(const UnitalChannel& c1, const UnitalChannel& c2) {
  return UnitalChannel(c1.t() * c2.t());
}

KrausChannel gad_kraus(const GadParams& g) {
  const double sg = std::sqrt(g.gamma);
  const double sh = std::sqrt(1.0 - g.gamma);
  const double sp = std::sqrt(g.p);
  const double sq = std::sqrt(1.0 - g.p);
  Mat2c e1, e2, e3, e4;
  e1 << sg, 0, 0, sg * sq;
  e2 << 0, sg * sp, 0, 0;
  e3 << sh * sq, 0, 0, sh;
  e4 << 0, 0, sh * sp, 0;
  return KrausChannel({e1, e2, e3, e4});
}

Mat2c apply_kraus(const KrausChannel& c, const Mat2c& rho) {
  require_density_matrix(rho);
  Mat2c out = Mat2c::Zero();
  for (const auto& e : c.ops()) out += e * rho * e.adjoint();
  return out;
}

Mat2c apply(const Channel& c, const Mat2c& rho) {
  if (const auto* u = std::get_if<UnitalChannel>(&c)) {
    require_density_matrix(rho);
    return density_from_bloch(u->t() * bloch_from_density(rho));
  }
  return apply_kraus(to_kraus(c), rho);
}

namespace {

HermitianMat4 choi_of_kraus(const std::vector<Mat2c>& ops) {
  HermitianMat4 g = HermitianMat4::Zero();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& e : ops) {
    Eigen::Vector4cd v;
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 2; ++j) v(2 * a + j) = e(a, j) * inv_sqrt2;
    g += v * v.adjoint();
  }
  return g;
}

HermitianMat4 choi_of_unital(const RealMat3& t) {
  // Gamma = 1/4 sum_ij M_ij sigma_i (x) sigma_j^T with M = 1 (+) T
  HermitianMat4 g = HermitianMat4::Identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (t(i, j) == 0.0) continue;
      const Mat2c a = pauli(i + 1);
      const Mat2c b = pauli(j + 1).transpose();
      HermitianMat4 k;
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) k.block<2, 2>(2 * r, 2 * s) = a(r, s) * b;
      g += t(i, j) * k;
    }
  return 0.25 * g;
}

}  // namespace

HermitianMat4 choi(const Channel& c) {
  if (const auto* u = std::get_if<UnitalChannel>(&c)) return choi_of_unital(u->t());
  if (const auto* g = std::get_if<GadParams>(&c)) return choi_of_kraus(gad_kraus(*g).ops());
  return choi_of_kraus(std::get<KrausChannel>(c).ops());
}

KrausChannel kraus_from_choi(const HermitianMat4& g) {
  const HermitianMat4 sym = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<HermitianMat4> es(sym);
  if (es.eigenvalues()(0) < -kChannelTol) {
    throw InvariantError("Choi matrix is not positive semidefinite; map is not completely positive");
  }
  std::vector<Mat2c> ops;
  for (int k = 3; k >= 0; --k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda <= kKrausKeep) continue;
    const double scale = std::sqrt(2.0 * lambda);
    Mat2c e;
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 2; ++j) e(a, j) = scale * es.eigenvectors()(2 * a + j, k);
    ops.push_back(e);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel prune_kraus(const KrausChannel& c) {
  if (c.ops().size() <= 4) return c;
  return kraus_from_choi(choi_of_kraus(c.ops()));
}

KrausChannel to_kraus(const Channel& c) {
  if (const auto* k = std::get_if<KrausChannel>(&c)) return *k;
  if (const auto* g = std::get_if<GadParams>(&c)) return gad_kraus(*g);
  const auto& u = std::get<UnitalChannel>(c);
  if (!u.completely_positive()) {
    throw InvariantError("unital matrix is not completely positive; no Kraus form exists");
  }
  return kraus_from_choi(choi_of_unital(u.t()));
}

Channel compose(const Channel& outer, const Channel& inner) {
  const auto* uo = std::get_if<UnitalChannel>(&outer);
  const auto* ui = std::get_if<UnitalChannel>(&inner);
  if (uo && ui) return compose_unital(*uo, *ui);
  const KrausChannel a = to_kraus(outer);
  const KrausChannel b = to_kraus(inner);
  std::vector<Mat2c> ops;
  ops.reserve(a.ops().size() * b.ops().size());
  for (const auto& x : a.ops())
    for (const auto& y : b.ops()) ops.push_back(x * y);
  return prune_kraus(KrausChannel(std::move(ops)));
}

Channel channel_power(const Channel& c, int n) {
  if (n < 1) throw InvariantError("channel power requires n >= 1");
  if (const auto* u = std::get_if<UnitalChannel>(&c)) {
    RealMat3 t = RealMat3::Identity();
    for (int i = 0; i < n; ++i) t = t * u->t();
    return UnitalChannel(t);
  }
  Channel acc = Channel(to_kraus(c));
  for (int i = 1; i < n; ++i) acc = compose(c, acc);
  return acc;
}

std::array<double, 4> pauli_decompose(const Vec3& lambda) {
  Eigen::Matrix4d m;
  m << 1, 1, 1, 1,
       1, 1, -1, -1,
       1, -1, 1, -1,
       1, -1, -1, 1;
  const Eigen::Vector4d l(1.0, lambda(0), lambda(1), lambda(2));
  const Eigen::Vector4d p = 0.25 * m * l;  // M^-1 = M / 4
  return {p(0), p(1), p(2), p(3)};
}

KrausChannel unitary_channel(const Mat2c& u) {
  if ((u.adjoint() * u - Mat2c::Identity()).cwiseAbs().maxCoeff() > kChannelTol) {
    throw InvariantError("matrix is not unitary");
  }
  return KrausChannel({u});
}

RealMat3 rotation_from_unitary(const Mat2c& u) {
  RealMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = 0.5 * (pauli(i + 1) * u * pauli(j + 1) * u.adjoint()).trace().real();
  return r;
}

Mat2c unitary_from_rotation(const RealMat3& r) {
  if ((r * r.transpose() - RealMat3::Identity()).cwiseAbs().maxCoeff() > 1e-9 ||
      r.determinant() < 0.0) {
    throw InvariantError("matrix is not a proper rotation");
  }
  const Eigen::AngleAxisd aa(r);
  const double half = 0.5 * aa.angle();
  const Vec3& n = aa.axis();
  return std::cos(half) * pauli(0) -
         I * std::sin(half) * (n(0) * pauli(1) + n(1) * pauli(2) + n(2) * pauli(3));
}

UnitalChannel rotation_channel(const RealMat3& r) {
  unitary_from_rotation(r);  // validates
  return UnitalChannel(r);
}

}  // namespace ebnoise
