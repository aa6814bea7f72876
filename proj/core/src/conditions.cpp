#include "bdg/conditions.hpp"

#include <numeric>

namespace bdg {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den <= 0) raise(Errc::invalid_params, "threshold denominator must be positive");
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

const char* condition_name(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::ak_star: return "ak-star";
    case ConditionKind::ak: return "ak";
    case ConditionKind::strict_half_sum: return "strict-half";
    case ConditionKind::dirac_bipartite: return "dirac";
  }
  return "unknown";
}

namespace {

struct Degrees {
  std::vector<int> x_out, x_in, y_out, y_in;
};

Degrees all_degrees(const BipartiteDigraph& d) {
  Degrees deg;
  deg.x_out.assign(d.a(), 0);
  deg.x_in.assign(d.a(), 0);
  deg.y_out.assign(d.b(), 0);
  deg.y_in.assign(d.b(), 0);
  for (int i = 0; i < d.a(); ++i) {
    for (int j = 0; j < d.b(); ++j) {
      if (d.xy(i, j)) {
        ++deg.x_out[i];
        ++deg.y_in[j];
      }
      if (d.yx(j, i)) {
        ++deg.y_out[j];
        ++deg.x_in[i];
      }
    }
  }
  return deg;
}

// Both-orientation opposite-class scan: X->Y pairs first, then Y->X, each
// lexicographic.  `below` receives (u, v, sum) for non-adjacent pairs whose
// doubled sum is below `twice_bound`.
void scan_cross_pairs(const BipartiteDigraph& d, const Degrees& deg, long long twice_bound,
                      std::vector<Violation>& out) {
  for (int i = 0; i < d.a(); ++i)
    for (int j = 0; j < d.b(); ++j)
      if (!d.xy(i, j) && 2LL * (deg.x_out[i] + deg.y_in[j]) < twice_bound)
        out.push_back({vx(i), vy(j), deg.x_out[i] + deg.y_in[j]});
  for (int j = 0; j < d.b(); ++j)
    for (int i = 0; i < d.a(); ++i)
      if (!d.yx(j, i) && 2LL * (deg.y_out[j] + deg.x_in[i]) < twice_bound)
        out.push_back({vy(j), vx(i), deg.y_out[j] + deg.x_in[i]});
}

}  // namespace

ConditionReport check(const BipartiteDigraph& d, ConditionSpec spec) {
  ConditionReport report;
  const Degrees deg = all_degrees(d);

  switch (spec.kind) {
    case ConditionKind::ak_star: {
      if (!d.balanced())
        raise(Errc::unbalanced_input, "pair condition needs equal class sizes");
      report.threshold = Rational(d.a() + spec.k, 1);
      scan_cross_pairs(d, deg, 2LL * (d.a() + spec.k), report.violations);
      break;
    }
    case ConditionKind::ak: {
      if (d.a() > d.b())
        raise(Errc::unbalanced_input, "condition expects |X| <= |Y|");
      report.threshold = Rational(d.a() + spec.k, 1);
      const long long twice_bound = 2LL * (d.a() + spec.k);
      scan_cross_pairs(d, deg, twice_bound, report.violations);
      for (int i = 0; i < d.a(); ++i)
        for (int i2 = 0; i2 < d.a(); ++i2)
          if (i != i2 && 2LL * (deg.x_out[i] + deg.x_in[i2]) < twice_bound)
            report.violations.push_back({vx(i), vx(i2), deg.x_out[i] + deg.x_in[i2]});
      for (int j = 0; j < d.b(); ++j)
        for (int j2 = 0; j2 < d.b(); ++j2)
          if (j != j2 && 2LL * (deg.y_out[j] + deg.y_in[j2]) < twice_bound)
            report.violations.push_back({vy(j), vy(j2), deg.y_out[j] + deg.y_in[j2]});
      break;
    }
    case ConditionKind::strict_half_sum: {
      if (d.a() > d.b())
        raise(Errc::unbalanced_input, "condition expects |X| <= |Y|");
      report.threshold = Rational(d.a() + d.b() + 2, 2);
      // sum > (a+b+2)/2 required, so a violation is 2*sum <= a+b+2.
      scan_cross_pairs(d, deg, d.a() + d.b() + 2 + 1, report.violations);
      break;
    }
    case ConditionKind::dirac_bipartite: {
      if (d.a() > d.b())
        raise(Errc::unbalanced_input, "condition expects |X| <= |Y|");
      report.threshold = Rational(d.a() + 2, 2);
      const long long twice_bound = d.a() + 2;
      for (int i = 0; i < d.a(); ++i)
        if (2LL * deg.x_out[i] < twice_bound)
          report.violations.push_back({vx(i), vx(i), deg.x_out[i]});
      for (int j = 0; j < d.b(); ++j)
        if (2LL * deg.y_out[j] < twice_bound)
          report.violations.push_back({vy(j), vy(j), deg.y_out[j]});
      for (int i = 0; i < d.a(); ++i)
        if (2LL * deg.x_in[i] < twice_bound)
          report.violations.push_back({vx(i), vx(i), deg.x_in[i]});
      for (int j = 0; j < d.b(); ++j)
        if (2LL * deg.y_in[j] < twice_bound)
          report.violations.push_back({vy(j), vy(j), deg.y_in[j]});
      break;
    }
  }

  report.holds = report.violations.empty();
  return report;
}

}  // namespace bdg
