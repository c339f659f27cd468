#include "wvn/power_law.hpp"

#include <cmath>
#include <stdexcept>

namespace wvn {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::domain_error("fit_line: need at least two matching points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::domain_error("fit_line: abscissae are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    rss += r * r;
  }
  f.residual_rms = std::sqrt(rss / n);
  return f;
}

PowerLawFit fit_log_log(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::domain_error("fit_log_log: need at least three points");
  std::vector<double> lx, ly;
  lx.reserve(x.size());
  ly.reserve(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw std::domain_error("fit_log_log: points must be strictly positive");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }

  const LineFit full = fit_line(lx, ly);
  PowerLawFit out;
  out.exponent = full.slope;
  out.log_prefactor = full.intercept;
  out.residual_rms = full.residual_rms;
  out.points_used = static_cast<int>(x.size());

  if (x.size() >= 5) {
    // Drop the two largest x (the grid is sorted either way; find them).
    std::vector<double> rx, ry;
    double top1 = -1e300, top2 = -1e300;
    for (const double v : lx) {
      if (v > top1) {
        top2 = top1;
        top1 = v;
      } else if (v > top2) {
        top2 = v;
      }
    }
    for (std::size_t i = 0; i < lx.size(); ++i) {
      if (lx[i] == top1 || lx[i] == top2) continue;
      rx.push_back(lx[i]);
      ry.push_back(ly[i]);
    }
    if (rx.size() >= 3) {
      const LineFit reduced = fit_line(rx, ry);
      if (reduced.residual_rms * 2.0 <= full.residual_rms) {
        out.exponent = reduced.slope;
        out.log_prefactor = reduced.intercept;
        out.residual_rms = reduced.residual_rms;
        out.points_used = static_cast<int>(rx.size());
        out.dropped_head = true;
      }
    }
  }
  return out;
}

double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) return 0.0;
  const double n = static_cast<double>(a.size());
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
  }
  const double ma = sa / n, mb = sb / n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
    sab += (a[i] - ma) * (b[i] - mb);
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

} // namespace wvn
