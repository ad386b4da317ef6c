#include "mavals/convex/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "mavals/error.hpp"
#include "mavals/hessian/fd_hessian.hpp"

namespace mav {

double Polytope::support(const Eigen::VectorXd& xi) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices) best = std::max(best, v.dot(xi));
  return best;
}

Polytope Polytope::cube(int n) {
  Polytope p;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = (mask >> i) & 1;
    p.vertices.push_back(v);
  }
  return p;
}

Polytope Polytope::centered_cube(int n) {
  Polytope p = cube(n);
  for (auto& v : p.vertices) v = 2.0 * v.array() - 1.0;
  return p;
}

double ProfileBody::support(const Eigen::VectorXd& xi) const {
  const double r = xi.norm();
  if (r == 0.0) return 0.0;
  const double perp = std::sqrt(std::max(0.0, r * r - xi(0) * xi(0)));
  return r * g(std::atan2(perp, xi(0)));
}

ConvexBody::ConvexBody(Polytope p) : base_(std::move(p)) {
  const auto& poly = std::get<Polytope>(base_);
  if (poly.vertices.empty()) throw Error("polytope without vertices");
  dim_ = poly.dim();
  for (const auto& v : poly.vertices)
    if (v.size() != dim_) throw DimensionError("polytope vertices of mixed dimension");
  shift_ = Eigen::VectorXd::Zero(dim_);
}

ConvexBody::ConvexBody(ProfileBody p) : base_(std::move(p)) {
  dim_ = std::get<ProfileBody>(base_).dim;
  if (dim_ < 1) throw DimensionError("profile body dimension must be positive");
  shift_ = Eigen::VectorXd::Zero(dim_);
}

ConvexBody ConvexBody::ball(int dim, double radius) {
  if (radius <= 0) throw Error("ball radius must be positive");
  return ConvexBody(ProfileBody{dim, [radius](double) { return radius; }, "ball"});
}

double ConvexBody::support(const Eigen::VectorXd& xi) const {
  if (xi.size() != dim_) throw DimensionError("support: direction has wrong dimension");
  double h = std::visit(
      [&](const auto& b) { return sign_ > 0 ? b.support(xi) : b.support((-xi).eval()); }, base_);
  h *= scale_;
  h += shift_.dot(xi);
  if (ball_ != 0.0) h += ball_ * xi.norm();
  return h;
}

ConvexBody ConvexBody::scaled(double lambda) const {
  if (!(lambda > 0)) throw Error("scaling factor must be positive");
  ConvexBody out = *this;
  if (auto* p = std::get_if<Polytope>(&out.base_)) {
    for (auto& v : p->vertices) v *= lambda;
  } else {
    out.scale_ *= lambda;
  }
  out.shift_ *= lambda;
  out.ball_ *= lambda;
  return out;
}

ConvexBody ConvexBody::negated() const {
  ConvexBody out = *this;
  if (auto* p = std::get_if<Polytope>(&out.base_)) {
    for (auto& v : p->vertices) v = -v;
  } else {
    out.sign_ = -out.sign_;
  }
  out.shift_ = -out.shift_;
  return out;
}

ConvexBody ConvexBody::translated(const Eigen::VectorXd& x0) const {
  if (x0.size() != dim_) throw DimensionError("translate: vector has wrong dimension");
  ConvexBody out = *this;
  if (auto* p = std::get_if<Polytope>(&out.base_)) {
    for (auto& v : p->vertices) v += x0;
  } else {
    out.shift_ += x0;
  }
  return out;
}

ConvexBody ConvexBody::plus_ball(double eps) const {
  if (eps < 0) throw Error("ball radius must be non-negative");
  ConvexBody out = *this;
  out.ball_ += eps;
  return out;
}

const Polytope* ConvexBody::polytope() const {
  if (ball_ != 0.0) return nullptr;
  return std::get_if<Polytope>(&base_);
}

bool ConvexBody::is_smooth_off_origin() const { return std::holds_alternative<ProfileBody>(base_); }

std::string ConvexBody::describe() const {
  std::ostringstream os;
  if (const auto* p = std::get_if<Polytope>(&base_))
    os << "polytope(" << p->vertices.size() << " vertices, dim " << dim_ << ")";
  else
    os << std::get<ProfileBody>(base_).name << "(dim " << dim_ << ")";
  if (ball_ != 0.0) os << "+ball(" << ball_ << ")";
  return os.str();
}

Points sphere_directions(int dim, int count) {
  Points out;
  out.reserve(count);
  for (int i = 0; i < dim && static_cast<int>(out.size()) < count; ++i)
    for (double s : {1.0, -1.0}) {
      if (static_cast<int>(out.size()) >= count) break;
      Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
      e(i) = s;
      out.push_back(e);
    }
  std::mt19937_64 rng(0x5eedULL + dim);
  std::normal_distribution<double> normal;
  while (static_cast<int>(out.size()) < count) {
    Eigen::VectorXd u(dim);
    for (int i = 0; i < dim; ++i) u(i) = normal(rng);
    if (u.norm() < 1e-12) continue;
    out.push_back(u / u.norm());
  }
  return out;
}

double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, int sphere_samples) {
  if (a.dim() != b.dim()) throw DimensionError("hausdorff_distance: dimension mismatch");
  double d = 0;
  for (const auto& u : sphere_directions(a.dim(), sphere_samples))
    d = std::max(d, std::abs(a.support(u) - b.support(u)));
  return d;
}

ConvexityCertificate certify_convexity(const ConvexBody& k, int samples, double tol) {
  ScalarField h{k.dim(), [&k](const Eigen::VectorXd& x) { return k.support(x); }};
  ConvexityCertificate cert;
  cert.samples = samples;
  cert.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& u : sphere_directions(k.dim(), samples)) {
    const Eigen::MatrixXd hess = fd_hessian_matrix(h, u);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess, Eigen::EigenvaluesOnly);
    cert.min_eigenvalue = std::min(cert.min_eigenvalue, es.eigenvalues()(0));
  }
  cert.passed = cert.min_eigenvalue >= -tol;
  return cert;
}

ConvexBody make_two_ball_body(int n) {
  if (n < 2) throw DimensionError("two-ball body needs n >= 2");
  constexpr double plateau = 0.2;
  auto g = [](double theta) {
    double s = (theta - plateau) / (std::numbers::pi - 2 * plateau);
    s = std::clamp(s, 0.0, 1.0);
    return 1.0 + s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
  };
  ConvexBody body(ProfileBody{n, g, "two_ball"});
  const auto cert = certify_convexity(body);
  if (!cert.passed)
    throw ConvexityError("two-ball profile failed convexity certificate (min eigenvalue " +
                         std::to_string(cert.min_eigenvalue) + ")");
  return body;
}

}  // namespace mav
