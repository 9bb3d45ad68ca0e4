#include "cascade/linalg.hpp"

#include "cascade/errors.hpp"

#include <array>
#include <cmath>

namespace cascade {

namespace {

constexpr std::array<double, 4> kB3 = {120., 60., 12., 1.};
constexpr std::array<double, 6> kB5 = {30240., 15120., 3360., 420., 30., 1.};
constexpr std::array<double, 8> kB7 = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
constexpr std::array<double, 10> kB9 = {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                                        2162160., 110880., 3960., 90., 1.};
constexpr std::array<double, 14> kB13 = {64764752532480000., 32382376266240000., 7771770303897600.,
                                         1187353796428800., 129060195264000., 10559470521600.,
                                         670442572800., 33522128640., 1323241920., 40840800.,
                                         960960., 16380., 182., 1.};

// Thresholds on the 1-norm below which the degree-m approximant is accurate
// to unit roundoff without scaling.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <std::size_t N>
void pade_low(const Eigen::MatrixXd& A, const std::array<double, N>& b, Eigen::MatrixXd& U,
              Eigen::MatrixXd& V) {
  const auto n = A.rows();
  const Eigen::MatrixXd A2 = A * A;
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd Uo = b[1] * P;
  V = b[0] * P;
  for (std::size_t k = 2; k < N; k += 2) {
    P = P * A2;
    V += b[k] * P;
    Uo += b[k + 1] * P;
  }
  U = A * Uo;
}

}  // namespace

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& M) {
  const auto n = M.rows();
  if (n == 0) return M;
  const double norm = M.cwiseAbs().colwise().sum().maxCoeff();
  if (!std::isfinite(norm)) return Eigen::MatrixXd::Constant(n, n, std::nan(""));

  Eigen::MatrixXd U, V;
  int squarings = 0;
  if (norm <= kTheta3) {
    pade_low(M, kB3, U, V);
  } else if (norm <= kTheta5) {
    pade_low(M, kB5, U, V);
  } else if (norm <= kTheta7) {
    pade_low(M, kB7, U, V);
  } else if (norm <= kTheta9) {
    pade_low(M, kB9, U, V);
  } else {
    if (norm > kTheta13) squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    const Eigen::MatrixXd A = M / std::ldexp(1.0, squarings);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd A2 = A * A, A4 = A2 * A2, A6 = A4 * A2;
    const auto& b = kB13;
    U = A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
    V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  }
  Eigen::MatrixXd E = (V - U).partialPivLu().solve(V + U);
  for (int k = 0; k < squarings; ++k) E = E * E;
  return E;
}

SolveResult refined_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs, double max_condition) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const double rc = lu.rcond();
  if (!(rc > 1.0 / max_condition))
    throw SingularGenerator("matrix is numerically singular (rcond " + std::to_string(rc) + ")");
  Eigen::VectorXd x = lu.solve(rhs);
  const Eigen::VectorXd r = rhs - A * x;
  x += lu.solve(r);
  return {x, rc};
}

}  // namespace cascade
