#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace wvn {

/// Tagged family of summable real sequences indexed from n = 1.
/// Concrete instances for tests and the CLI; the math only assumes l^1.
class QSequence {
  public:
    enum class Kind { zero, geometric, power, list };

    QSequence() : kind_(Kind::zero) {}

    static QSequence zero() { return QSequence(); }

    /// q_n = scale * ratio^n, |ratio| < 1.
    static QSequence geometric(double ratio, double scale = 1.0) {
      if (!(std::abs(ratio) < 1.0))
        throw std::domain_error("QSequence: geometric ratio must satisfy |ratio| < 1");
      QSequence q;
      q.kind_ = Kind::geometric;
      q.a_ = ratio;
      q.b_ = scale;
      return q;
    }

    /// q_n = scale * n^{-exponent}, exponent > 1 so the tail is summable.
    static QSequence power(double exponent, double scale = 1.0) {
      if (!(exponent > 1.0))
        throw std::domain_error("QSequence: power exponent must be > 1 for a summable tail");
      QSequence q;
      q.kind_ = Kind::power;
      q.a_ = exponent;
      q.b_ = scale;
      return q;
    }

    /// Explicit finite list (q_1..q_m), padded with zeros beyond.
    static QSequence list(std::vector<double> values) {
      QSequence q;
      q.kind_ = Kind::list;
      q.values_ = std::move(values);
      return q;
    }

    double operator()(std::int64_t n) const {
      switch (kind_) {
        case Kind::zero:
          return 0.0;
        case Kind::geometric:
          return b_ * std::pow(a_, static_cast<double>(n));
        case Kind::power:
          return b_ * std::pow(static_cast<double>(n), -a_);
        case Kind::list:
          return (n >= 1 && static_cast<std::size_t>(n) <= values_.size())
                     ? values_[static_cast<std::size_t>(n - 1)]
                     : 0.0;
      }
      return 0.0;
    }

    bool is_zero() const { return kind_ == Kind::zero; }
    Kind kind() const { return kind_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }
    const std::vector<double>& values() const { return values_; }

    /// Family string: "zero", "geometric:r[:s]", "power:p[:s]", "list:v1,v2,...".
    static QSequence parse(const std::string& spec);
    std::string to_string() const;

  private:
    Kind kind_;
    double a_ = 0.0;
    double b_ = 1.0;
    std::vector<double> values_;
};

} // namespace wvn
