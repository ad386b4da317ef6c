#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace mav {

using Points = std::vector<Eigen::VectorXd>;

/// Convex hull of finitely many points.
struct Polytope {
  Points vertices;

  int dim() const { return vertices.empty() ? 0 : static_cast<int>(vertices.front().size()); }
  double support(const Eigen::VectorXd& xi) const;

  /// [0,1]^n.
  static Polytope cube(int n);
  /// [-1,1]^n.
  static Polytope centered_cube(int n);
};

/// h(xi) = |xi| * g(theta), theta the angle between xi and e_1.
struct ProfileBody {
  int dim = 0;
  std::function<double(double)> g;
  std::string name;

  double support(const Eigen::VectorXd& xi) const;
};

/// A polytope or profile body, up to scaling, central reflection, translation
/// and Minkowski addition of a centered ball:
///   h(xi) = scale * h_base(sign * xi) + <shift, xi> + ball * |xi|.
/// Operations on polytopes (without the ball term) are applied to the vertices.
class ConvexBody {
 public:
  ConvexBody(Polytope p);
  ConvexBody(ProfileBody p);

  static ConvexBody ball(int dim, double radius = 1.0);

  int dim() const { return dim_; }
  double support(const Eigen::VectorXd& xi) const;

  /// Throws Error if lambda <= 0.
  ConvexBody scaled(double lambda) const;
  ConvexBody negated() const;
  ConvexBody translated(const Eigen::VectorXd& x0) const;
  /// K + eps * Ball.
  ConvexBody plus_ball(double eps) const;

  /// The vertex description, if this body is (still) a polytope.
  const Polytope* polytope() const;
  bool is_smooth_off_origin() const;
  std::string describe() const;

 private:
  std::variant<Polytope, ProfileBody> base_;
  int dim_ = 0;
  double scale_ = 1.0;
  double sign_ = 1.0;
  Eigen::VectorXd shift_;
  double ball_ = 0.0;
};

inline double support_function(const ConvexBody& k, const Eigen::VectorXd& xi) { return k.support(xi); }

/// Unit directions used for sphere sampling: +-e_i first, then a fixed
/// pseudo-random sequence. The first m directions do not depend on the total
/// count, so sampled suprema are monotone in m.
Points sphere_directions(int dim, int count);

/// max over sphere_directions(dim, samples) of |h_A(u) - h_B(u)|.
double hausdorff_distance(const ConvexBody& a, const ConvexBody& b, int sphere_samples);

struct ConvexityCertificate {
  double min_eigenvalue = 0;
  int samples = 0;
  bool passed = false;
};

/// Smallest eigenvalue of the finite-difference Hessian of h on a sphere sample.
/// Passes if it is >= -tol.
ConvexityCertificate certify_convexity(const ConvexBody& k, int samples = 400, double tol = 1e-6);

/// Smoothed intersection of two balls of radii 1 and 2: h = |xi| on the cone
/// of half-angle 0.2 around v0 = e_1 and h = 2|xi| on the cone around -v0,
/// with a quintic smoothstep in the angle between. Hess h(v0) = diag(0,1,..,1),
/// Hess h(-v0) = 2 diag(0,1,..,1). Throws ConvexityError if the certificate fails.
ConvexBody make_two_ball_body(int n);

}  // namespace mav
