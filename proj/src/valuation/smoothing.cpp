#include "mavals/valuation/smoothing.hpp"

#include <cmath>
#include <numbers>

#include "mavals/error.hpp"
#include "mavals/parallel.hpp"
#include "mavals/valuation/hull.hpp"

namespace mav {

std::vector<double> gaussian_kernel(int order, double h, double sigma) {
  if (!(sigma > 0) || !(h > 0)) throw Error("gaussian_kernel: sigma and h must be positive");
  const int r = static_cast<int>(std::ceil(4.0 * sigma / h));
  std::vector<double> g0(2 * r + 1), out(2 * r + 1);
  double s0 = 0;
  for (int k = -r; k <= r; ++k) {
    const double x = k * h;
    g0[k + r] = std::exp(-x * x / (2 * sigma * sigma));
    s0 += g0[k + r];
  }
  for (auto& v : g0) v /= s0;
  if (order == 0) return g0;

  if (order == 1) {
    double m = 0;
    for (int k = -r; k <= r; ++k) {
      out[k + r] = k * g0[k + r];
      m += out[k + r] * k * h;
    }
    for (auto& v : out) v /= m;
    return out;
  }
  if (order == 2) {
    double s = 0;
    for (int k = -r; k <= r; ++k) {
      const double x = k * h;
      out[k + r] = (x * x / (sigma * sigma) - 1.0) * g0[k + r];
      s += out[k + r];
    }
    double m = 0;
    for (int k = -r; k <= r; ++k) {
      out[k + r] -= s * g0[k + r];
      m += out[k + r] * 0.5 * (k * h) * (k * h);
    }
    for (auto& v : out) v /= m;
    return out;
  }
  throw Error("gaussian_kernel: order must be 0, 1 or 2");
}

namespace {

// Valid-mode correlation along one axis of a row-major array.
std::vector<double> correlate_axis(const std::vector<double>& in, std::vector<long>& shape, int axis,
                                   const std::vector<double>& ker) {
  const long r = static_cast<long>(ker.size() / 2);
  long outer = 1, inner = 1;
  for (int a = 0; a < axis; ++a) outer *= shape[a];
  for (size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
  const long n_in = shape[axis], n_out = n_in - 2 * r;
  std::vector<double> out(static_cast<size_t>(outer * n_out * inner), 0.0);
  for (long o = 0; o < outer; ++o)
    for (long j = 0; j < n_out; ++j) {
      double* dst = &out[(o * n_out + j) * inner];
      for (long k = 0; k <= 2 * r; ++k) {
        const double w = ker[k];
        const double* src = &in[(o * n_in + j + k) * inner];
        for (long i = 0; i < inner; ++i) dst[i] += w * src[i];
      }
    }
  shape[axis] = n_out;
  return out;
}

}  // namespace

SmoothedHessianField::SmoothedHessianField(const Function& f, const Eigen::VectorXd& lo, const Eigen::VectorXd& h,
                                           const std::vector<long>& k0, const std::vector<long>& k1, double sigma,
                                           int threads)
    : dim_(f.dim) {
  const int d = dim_;
  if (lo.size() != d || h.size() != d || static_cast<int>(k0.size()) != d || static_cast<int>(k1.size()) != d)
    throw DimensionError("SmoothedHessianField: lattice has wrong dimension");

  std::vector<std::vector<double>> k_order(3 * d);
  std::vector<long> pad(d), shape(d);
  count_ = 1;
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) {
    for (int o = 0; o < 3; ++o) k_order[3 * a + o] = gaussian_kernel(o, h(a), sigma);
    pad[a] = static_cast<long>(k_order[3 * a].size() / 2);
    shape[a] = k1[a] - k0[a] + 1 + 2 * pad[a];
    count_ *= static_cast<std::size_t>(k1[a] - k0[a] + 1);
    total *= static_cast<std::size_t>(shape[a]);
  }

  std::vector<double> samples(total);
  parallel_for(total, threads, [&](std::size_t b, std::size_t e) {
    Eigen::VectorXd x(d);
    for (std::size_t flat = b; flat < e; ++flat) {
      std::size_t rem = flat;
      for (int a = d - 1; a >= 0; --a) {
        const long k = static_cast<long>(rem % shape[a]) + k0[a] - pad[a];
        rem /= shape[a];
        x(a) = lo(a) + (k + 0.5) * h(a);
      }
      samples[flat] = f.value(x);
    }
  });

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) pairs.emplace_back(i, j);
  comps_.resize(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t p = b; p < e; ++p) {
      const auto [i, j] = pairs[p];
      std::vector<long> sh = shape;
      std::vector<double> cur = samples;
      for (int a = 0; a < d; ++a) {
        int order = 0;
        if (i == j && a == i) order = 2;
        else if (i != j && (a == i || a == j)) order = 1;
        cur = correlate_axis(cur, sh, a, k_order[3 * a + order]);
      }
      comps_[p] = std::move(cur);
    }
  });
}

Eigen::MatrixXd SmoothedHessianField::at(std::size_t flat) const {
  Eigen::MatrixXd m(dim_, dim_);
  std::size_t p = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j, ++p) m(i, j) = m(j, i) = comps_[p][flat];
  return m;
}

Eigen::Matrix2d polygon_smoothed_hessian(const Points& ccw, const Eigen::Vector2d& y, double sigma) {
  Eigen::Matrix2d hess = Eigen::Matrix2d::Zero();
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  const size_t m = ccw.size();
  if (m < 2) return hess;
  for (size_t k = 0; k < m; ++k) {
    const Eigen::Vector2d e = ccw[(k + 1) % m] - ccw[k];
    const double len = e.norm();
    if (len == 0.0) continue;
    const Eigen::Vector2d tau = e / len;
    const Eigen::Vector2d nu(tau(1), -tau(0));
    const double t = tau.dot(y), s = nu.dot(y);
    const double ridge = norm * std::exp(-t * t / (2 * sigma * sigma));
    const double half = 0.5 * std::erfc(-s / (sigma * std::sqrt(2.0)));
    hess += len * ridge * half * tau * tau.transpose();
  }
  return hess;
}

Function embedded_polygon(const Points& polygon, const Eigen::MatrixXd& frame) {
  if (frame.rows() != 2) throw DimensionError("embedded_polygon: frame must have two rows");
  Points ccw = convex_hull_2d(polygon);
  Function out;
  out.dim = static_cast<int>(frame.cols());
  out.regularity = Regularity::Nonsmooth;
  out.value = [ccw, frame](const Eigen::VectorXd& x) {
    const Eigen::Vector2d y = frame * x;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : ccw) best = std::max(best, v.dot(y));
    return best;
  };
  out.smoothed_hessian = [ccw, frame](const Eigen::VectorXd& x, double sigma) -> Eigen::MatrixXd {
    const Eigen::Vector2d y = frame * x;
    return frame.transpose() * polygon_smoothed_hessian(ccw, y, sigma) * frame;
  };
  out.label = "polygon[" + std::to_string(ccw.size()) + "]";
  return out;
}

}  // namespace mav
