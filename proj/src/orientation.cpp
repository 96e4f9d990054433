#include "cassonlin/orientation.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "cassonlin/errors.hpp"

namespace cassonlin {

Frame::Frame(Eigen::MatrixXd columns) : cols_(std::move(columns)) {
  if (cols_.rows() == 0 || cols_.cols() == 0) throw std::invalid_argument("empty frame");
}

Frame::Frame(const std::vector<TangentVector4>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("empty frame");
  cols_.resize(12, static_cast<Eigen::Index>(vectors.size()));
  for (size_t i = 0; i < vectors.size(); ++i)
    cols_.col(static_cast<Eigen::Index>(i)) = vectors[i].flatten();
}

Frame::Frame(const std::vector<PureQuaternion>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("empty frame");
  cols_.resize(3, static_cast<Eigen::Index>(vectors.size()));
  for (size_t i = 0; i < vectors.size(); ++i)
    cols_.col(static_cast<Eigen::Index>(i)) = vectors[i].vec();
}

PureQuaternion df(const Quadruple& base, const TangentVector4& v) {
  const Quaternion a = base[0].as_quat();
  const Quaternion b = base[1].as_quat();
  const Quaternion c = base[2].as_quat();
  const Quaternion d = base[3].as_quat();
  const Quaternion v1 = v.part(0).as_quat();
  const Quaternion v2 = v.part(1).as_quat();
  const Quaternion v3 = v.part(2).as_quat();
  const Quaternion v4 = v.part(3).as_quat();

  const Quaternion pinv = (c * d).inverse();
  const Quaternion lead = (v1 * b + a * v2) * pinv;
  const Quaternion trail = ((a * b) * pinv) * ((v3 * d + c * v4) * pinv);
  return (lead - trail).imag();
}

std::pair<TangentVector4, TangentVector4> pillowcase_frame(const TorusLift& t) {
  if (t.is_corner()) throw SingularPoint("pillowcase frame undefined at a corner");
  const auto tangent = [](double th) {
    // d/dtheta of e^{k theta} i
    return PureQuaternion(-std::sin(th), std::cos(th), 0.0);
  };
  const PureQuaternion zero;
  const double t1 = t.theta1();
  const double t2 = t.theta2();
  const TangentVector4 u1(zero, tangent(t1), -tangent(t2 - t1), zero);
  const TangentVector4 u2(zero, zero, tangent(t2 - t1), tangent(t2));
  return {u1, u2};
}

std::array<TangentVector4, 3> orbit_frame(const Quadruple& base) {
  const std::array<PureQuaternion, 3> gens = {PureQuaternion::unit_i(), PureQuaternion::unit_j(),
                                              PureQuaternion::unit_k()};
  std::array<TangentVector4, 3> out;
  for (int g = 0; g < 3; ++g) {
    std::array<PureQuaternion, 4> parts;
    for (int s = 0; s < 4; ++s)
      parts[static_cast<size_t>(s)] =
          half_commutator(gens[static_cast<size_t>(g)], base[static_cast<size_t>(s)].as_quat());
    out[static_cast<size_t>(g)] = TangentVector4(parts[0], parts[1], parts[2], parts[3]);
  }
  Eigen::Matrix<double, 12, 3> m;
  for (int g = 0; g < 3; ++g) m.col(g) = out[static_cast<size_t>(g)].flatten();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  if (svd.singularValues()(2) < kFrameDetTol)
    throw ReduciblePoint("conjugation orbit is not three-dimensional");
  return out;
}

Frame product_orientation_basis(const Quadruple& base) {
  std::vector<TangentVector4> cols;
  cols.reserve(8);
  for (int s = 0; s < 4; ++s) {
    const Eigen::Vector3d p = base[static_cast<size_t>(s)].axis();
    int m = 0;
    for (int t = 1; t < 3; ++t)
      if (std::abs(p(t)) > std::abs(p(m))) m = t;
    Eigen::Vector3d axis = Eigen::Vector3d::Zero();
    axis((m + 1) % 3) = 1.0;
    Eigen::Vector3d e1 = axis - axis.dot(p) * p;
    e1.normalize();
    const Eigen::Vector3d e2 = p.cross(e1);
    std::array<PureQuaternion, 4> first{}, second{};
    first[static_cast<size_t>(s)] = PureQuaternion(e1);
    second[static_cast<size_t>(s)] = PureQuaternion(e2);
    cols.emplace_back(first[0], first[1], first[2], first[3]);
    cols.emplace_back(second[0], second[1], second[2], second[3]);
  }
  return Frame(cols);
}

namespace {

Eigen::Matrix3d df_image(const Quadruple& base, const std::array<TangentVector4, 3>& triple) {
  Eigen::Matrix3d m;
  for (int t = 0; t < 3; ++t) m.col(t) = df(base, triple[static_cast<size_t>(t)]).vec();
  return m;
}

bool near_reference_quadruple(const Quadruple& base) {
  const Quadruple ref = {TracelessElement::i(), TracelessElement::j(), TracelessElement::i(),
                         TracelessElement::j()};
  for (int s = 0; s < 4; ++s)
    if ((base[static_cast<size_t>(s)].axis() - ref[static_cast<size_t>(s)].axis()).norm() > 1e-9)
      return false;
  return true;
}

}  // namespace

std::array<TangentVector4, 3> complement_frame(const Quadruple& base) {
  const PureQuaternion zero;
  if (near_reference_quadruple(base)) {
    // Pinned triple at the reference quadruple (i, j, i, j); its df-image
    // (-j, i, k) is positively oriented.
    return {TangentVector4(PureQuaternion::unit_k(), zero, zero, zero),
            TangentVector4(zero, PureQuaternion::unit_k(), zero, zero),
            TangentVector4(PureQuaternion::unit_j(), zero, zero, zero)};
  }

  const Frame beta = product_orientation_basis(base);
  std::vector<TangentVector4> cand;
  cand.reserve(8);
  Eigen::Matrix<double, 3, 8> img;
  for (int c = 0; c < 8; ++c) {
    cand.push_back(TangentVector4::from_flat(beta.cols().col(c)));
    img.col(c) = df(base, cand.back()).vec();
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(img);
  const Eigen::MatrixXd r = qr.matrixR();
  if (r.rows() < 3 || std::abs(r(2, 2)) < kFrameDetTol)
    throw DegenerateComplement("df-images of the candidate directions do not span");
  const auto& perm = qr.colsPermutation().indices();
  std::array<TangentVector4, 3> out = {cand[static_cast<size_t>(perm(0))],
                                       cand[static_cast<size_t>(perm(1))],
                                       cand[static_cast<size_t>(perm(2))]};
  const double det = df_image(base, out).determinant();
  if (std::abs(det) < kFrameDetTol)
    throw DegenerateComplement("selected complement has singular df-image");
  if (det < 0) std::swap(out[1], out[2]);
  return out;
}

Eigen::MatrixXd frame_coordinates(const Frame& test, const Frame& reference) {
  if (test.dimension() != reference.dimension())
    throw std::invalid_argument("frame dimensions differ");
  const Eigen::MatrixXd& ref = reference.cols();
  const Eigen::MatrixXd& tst = test.cols();
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(ref);
  const Eigen::MatrixXd coords = qr.solve(tst);
  const double scale = std::max(1.0, tst.norm());
  if ((ref * coords - tst).norm() > kProjectionTol * scale)
    throw DegenerateFrame("frame does not lie in the span of the reference");
  return coords;
}

int orientation_sign(const Frame& test, const Frame& reference) {
  if (test.size() != reference.size())
    throw std::invalid_argument("orientation sign needs frames of equal size");
  const Eigen::MatrixXd coords = frame_coordinates(test, reference);
  const double det = coords.determinant();
  if (std::abs(det) < kFrameDetTol)
    throw DegenerateFrame("orientation change of basis is singular");
  return det > 0 ? 1 : -1;
}

long long integer_determinant(Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = m.rows();
  long long sign = 1;
  long long prev = 1;
  for (Eigen::Index p = 0; p + 1 < n; ++p) {
    if (m(p, p) == 0) {
      Eigen::Index r = p + 1;
      while (r < n && m(r, p) == 0) ++r;
      if (r == n) return 0;
      m.row(p).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index r = p + 1; r < n; ++r)
      for (Eigen::Index c = p + 1; c < n; ++c)
        m(r, c) = (m(r, c) * m(p, p) - m(r, p) * m(p, c)) / prev;
    prev = m(p, p);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

int product_orientation_sign_at(const TorusLift& t) {
  const Quadruple base = param_g(t);
  const auto torus = pillowcase_frame(t);
  const auto orbit = orbit_frame(base);
  const auto comp = complement_frame(base);
  const std::vector<TangentVector4> s = {comp[0], comp[1], comp[2], torus.first,
                                         torus.second, orbit[0], orbit[1], orbit[2]};
  return orientation_sign(Frame(s), product_orientation_basis(base));
}

}  // namespace

bool pillowcase_orientation_swapped(const TorusLift& t) {
  return product_orientation_sign_at(t) < 0;
}

std::pair<TangentVector4, TangentVector4> oriented_pillowcase_basis(const TorusLift& t) {
  auto frame = pillowcase_frame(t);
  if (pillowcase_orientation_swapped(t)) return {frame.second, frame.first};
  return frame;
}

}  // namespace cassonlin
