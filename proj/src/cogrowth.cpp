#include "gencase/cogrowth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace gencase {

namespace {

void check_exact_range(const CosetGraph& g, int N, const char* who) {
  if (N < 0) throw InvalidInputError(std::string(who) + ": N >= 0");
  if (N > g.max_exact_count_length())
    throw RadiusError(std::string(who) + ": counting to N=" + std::to_string(N) +
                      " needs horizon > N/2, graph has " +
                      std::to_string(g.horizon));
}

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<double> count_unreduced(const CosetGraph& g, int N) {
  check_exact_range(g, N, "count_unreduced");
  const int d = g.degree();
  std::vector<double> cur(g.num_states, 0.0), nxt(g.num_states, 0.0);
  cur[g.base] = 1.0;
  std::vector<double> out;
  out.reserve(N + 1);
  out.push_back(1.0);
  for (int n = 1; n <= N; ++n) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (std::int32_t v = 0; v < g.num_states; ++v) {
      if (cur[v] == 0.0) continue;
      double m = cur[v] / d;
      const std::int32_t* row = &g.table[static_cast<std::size_t>(v) * d];
      for (int s = 0; s < d; ++s)
        if (row[s] >= 0) nxt[row[s]] += m;
      // undefined slots drop mass that cannot return in time anyway
    }
    cur.swap(nxt);
    out.push_back(cur[g.base]);
  }
  return out;
}

std::vector<double> count_reduced(const CosetGraph& g, int N) {
  check_exact_range(g, N, "count_reduced");
  const int d = g.degree();
  const std::int32_t limit =
      g.kind == GraphKind::Collar ? g.core_states : g.num_states;
  // state: (vertex, last-letter slot), normalized by (d-1) per step; the
  // first step has d choices, hence a_hat_n <= d/(d-1)
  std::vector<double> cur(static_cast<std::size_t>(limit) * d, 0.0);
  std::vector<double> nxt(cur.size(), 0.0);
  std::vector<double> out;
  out.reserve(N + 1);
  out.push_back(1.0);
  if (N == 0) return out;

  auto at_base_sum = [&](const std::vector<double>& vec) {
    double acc = 0.0;
    for (int s = 0; s < d; ++s)
      acc += vec[static_cast<std::size_t>(g.base) * d + s];
    return acc;
  };

  for (int s = 0; s < d; ++s) {
    std::int32_t t = g.table[static_cast<std::size_t>(g.base) * d + s];
    if (t >= 0 && t < limit)
      cur[static_cast<std::size_t>(t) * d + s] += 1.0 / (d - 1);
  }
  out.push_back(at_base_sum(cur));

  for (int n = 2; n <= N; ++n) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (std::int32_t v = 0; v < limit; ++v) {
      const std::int32_t* row = &g.table[static_cast<std::size_t>(v) * d];
      for (int last = 0; last < d; ++last) {
        double m = cur[static_cast<std::size_t>(v) * d + last];
        if (m == 0.0) continue;
        m /= (d - 1);
        int forbidden = letter_slot(-slot_letter(last));
        for (int s = 0; s < d; ++s) {
          if (s == forbidden) continue;
          std::int32_t t = row[s];
          if (t >= 0 && t < limit) nxt[static_cast<std::size_t>(t) * d + s] += m;
        }
      }
    }
    cur.swap(nxt);
    out.push_back(at_base_sum(cur));
  }
  return out;
}

std::vector<BigInt> count_closed_exact(const CosetGraph& g, int N) {
  check_exact_range(g, N, "count_closed_exact");
  const int d = g.degree();
  std::vector<BigInt> cur(g.num_states), nxt(g.num_states);
  cur[g.base] = 1;
  std::vector<BigInt> out{BigInt(1)};
  for (int n = 1; n <= N; ++n) {
    for (auto& x : nxt) x = 0;
    for (std::int32_t v = 0; v < g.num_states; ++v) {
      if (cur[v] == 0) continue;
      const std::int32_t* row = &g.table[static_cast<std::size_t>(v) * d];
      for (int s = 0; s < d; ++s)
        if (row[s] >= 0) nxt[row[s]] += cur[v];
    }
    cur.swap(nxt);
    out.push_back(cur[g.base]);
  }
  return out;
}

std::vector<BigInt> count_closed_reduced_exact(const CosetGraph& g, int N) {
  check_exact_range(g, N, "count_closed_reduced_exact");
  const int d = g.degree();
  const std::int32_t limit =
      g.kind == GraphKind::Collar ? g.core_states : g.num_states;
  std::vector<BigInt> cur(static_cast<std::size_t>(limit) * d);
  std::vector<BigInt> nxt(cur.size());
  std::vector<BigInt> out{BigInt(1)};
  if (N == 0) return out;

  auto at_base_sum = [&](const std::vector<BigInt>& vec) {
    BigInt acc = 0;
    for (int s = 0; s < d; ++s)
      acc += vec[static_cast<std::size_t>(g.base) * d + s];
    return acc;
  };

  for (int s = 0; s < d; ++s) {
    std::int32_t t = g.table[static_cast<std::size_t>(g.base) * d + s];
    if (t >= 0 && t < limit) cur[static_cast<std::size_t>(t) * d + s] += 1;
  }
  out.push_back(at_base_sum(cur));
  for (int n = 2; n <= N; ++n) {
    for (auto& x : nxt) x = 0;
    for (std::int32_t v = 0; v < limit; ++v) {
      const std::int32_t* row = &g.table[static_cast<std::size_t>(v) * d];
      for (int last = 0; last < d; ++last) {
        const BigInt& m = cur[static_cast<std::size_t>(v) * d + last];
        if (m == 0) continue;
        int forbidden = letter_slot(-slot_letter(last));
        for (int s = 0; s < d; ++s) {
          if (s == forbidden) continue;
          std::int32_t t = row[s];
          if (t >= 0 && t < limit) nxt[static_cast<std::size_t>(t) * d + s] += m;
        }
      }
    }
    cur.swap(nxt);
    out.push_back(at_base_sum(cur));
  }
  return out;
}

double nu_from_alpha(double alpha, int d) {
  if (d < 3) throw InvalidInputError("nu_from_alpha: d >= 3");
  if (alpha < 0 || alpha > d - 1)
    throw InvalidInputError("nu_from_alpha: alpha must lie in [0, d-1]");
  double sq = std::sqrt(static_cast<double>(d - 1));
  if (alpha > sq) return (sq / d) * (alpha / sq + sq / alpha);
  return 2.0 * sq / d;
}

static double estimate_rate(std::span<const double> hat, double scale,
                            int window) {
  // max over the last `window` usable indices of hat[n]^(1/n), times scale
  double best = 0.0;
  int used = 0;
  for (int n = static_cast<int>(hat.size()) - 1; n >= 1 && used < window; --n) {
    if (hat[n] <= 0.0) continue;
    best = std::max(best, std::pow(hat[n], 1.0 / n));
    ++used;
  }
  if (used == 0) return 0.0;
  return scale * best;
}

double estimate_alpha(std::span<const double> a_hat, int d, int window) {
  return estimate_rate(a_hat, d - 1, window);
}

double estimate_beta(std::span<const double> b_hat, int d, int window) {
  return estimate_rate(b_hat, d, window);
}

DecayFit decay_fit(std::span<const double> c, int lo, int hi,
                   std::span<const double> stderrs, const DecayFitOptions& opts) {
  if (lo < 0 || hi >= static_cast<int>(c.size()) || lo > hi)
    throw InvalidInputError("decay_fit: bad range");
  std::vector<int> ns;
  std::vector<double> vals, rels;
  for (int n = lo; n <= hi; ++n) {
    double v = c[n];
    double se = (n < static_cast<int>(stderrs.size())) ? stderrs[n] : 0.0;
    if (v <= 0.0) continue;
    if (se > 0.0 && v < opts.significance * se) continue;  // not significantly nonzero
    ns.push_back(n);
    vals.push_back(v);
    rels.push_back(se > 0.0 ? se / v : 0.0);
  }
  DecayFit fit;
  fit.points = static_cast<int>(ns.size());
  if (fit.points < opts.min_points)
    throw InvalidInputError("decay_fit: only " + std::to_string(fit.points) +
                            " usable points, need " +
                            std::to_string(opts.min_points));

  // weighted least squares on (n, log c); weight ~ 1/Var(log c)
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> ys(vals.size()), ws(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    ys[i] = std::log(vals[i]);
    double r = std::max(rels[i], 0.01);
    ws[i] = 1.0 / (r * r);
    sw += ws[i];
    sx += ws[i] * ns[i];
    sy += ws[i] * ys[i];
    sxx += ws[i] * ns[i] * ns[i];
    sxy += ws[i] * ns[i] * ys[i];
  }
  double det = sw * sxx - sx * sx;
  double slope = (sw * sxy - sx * sy) / det;
  double icept = (sxx * sy - sx * sxy) / det;
  double ybar = sy / sw;
  double ssr = 0, sst = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double e = ys[i] - (icept + slope * ns[i]);
    ssr += ws[i] * e * e;
    double t = ys[i] - ybar;
    sst += ws[i] * t * t;
  }
  fit.sigma = std::exp(slope);
  fit.r2 = sst > 0 ? 1.0 - ssr / sst : 1.0;

  // per-step ratios across gaps of at least ratio_span, tail half
  std::vector<double> ratios;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    std::size_t j = i;
    while (j < ns.size() && ns[j] < ns[i] + opts.ratio_span) ++j;
    if (j < ns.size())
      ratios.push_back(std::pow(vals[j] / vals[i], 1.0 / (ns[j] - ns[i])));
  }
  fit.max_tail_ratio = 1.0;
  if (!ratios.empty()) {
    fit.max_tail_ratio = 0.0;
    for (std::size_t i = ratios.size() / 2; i < ratios.size(); ++i)
      fit.max_tail_ratio = std::max(fit.max_tail_ratio, ratios[i]);
  }

  // decay evidence: tail max well below head max
  std::size_t q = std::max<std::size_t>(1, vals.size() / 4);
  double head = 0, tail = 0;
  for (std::size_t i = 0; i < q; ++i) head = std::max(head, vals[i]);
  for (std::size_t i = vals.size() - q; i < vals.size(); ++i)
    tail = std::max(tail, vals[i]);
  fit.decay_factor = head > 0 ? tail / head : 1.0;

  if (slope < 0 && fit.r2 >= opts.r2_min && fit.max_tail_ratio <= opts.ratio_cutoff)
    fit.kind = DecayFit::Kind::Exponential;
  else if (fit.decay_factor < opts.decay_cutoff)
    fit.kind = DecayFit::Kind::Subexponential;
  else
    fit.kind = DecayFit::Kind::None;
  return fit;
}

Amenability classify(const CogrowthSeries& s, double tol_amen,
                     const std::optional<DecayFit>& fit) {
  bool expo = fit && fit->kind == DecayFit::Kind::Exponential;
  if (expo && fit->sigma <= 1.0 - tol_amen) return Amenability::Nonamenable;
  if (!expo) {
    bool beta_full = s.beta_hat >= s.d * (1.0 - tol_amen);
    bool bounded_below = fit && fit->kind == DecayFit::Kind::None;
    if (beta_full || bounded_below) return Amenability::Amenable;
  }
  return Amenability::Undetermined;
}

CumulativeCheck cumulative_check(std::span<const double> c_hat, double base) {
  if (base <= 1.0) throw InvalidInputError("cumulative_check: base > 1");
  CumulativeCheck out;
  double f = 0.0;
  std::size_t n = c_hat.size();
  std::size_t tail_from = n - std::max<std::size_t>(1, n / 4);
  std::size_t head_to = std::max<std::size_t>(1, n / 4);
  for (std::size_t i = 0; i < n; ++i) {
    f = f / base + c_hat[i];
    if (i < head_to) out.head_max = std::max(out.head_max, f);
    if (i >= tail_from) out.tail_max = std::max(out.tail_max, f);
  }
  out.pass = out.tail_max < 1.0 && out.tail_max <= 0.5 * out.head_max;
  return out;
}

CogrowthSeries compute_series(const CosetGraph& g, int N, int window,
                              double tol_amen) {
  CogrowthSeries s;
  s.d = g.degree();
  s.bipartite = g.bipartite;
  s.a_hat = count_reduced(g, N);
  s.b_hat = count_unreduced(g, N);
  s.r_hat.resize(N + 1);
  s.z_hat.resize(N + 1);
  double r = 0.0, z = 0.0;
  for (int n = 0; n <= N; ++n) {
    r = r / (s.d - 1) + s.a_hat[n];
    z = z / s.d + s.b_hat[n];
    s.r_hat[n] = r;
    s.z_hat[n] = z;
  }
  s.alpha_hat = estimate_alpha(s.a_hat, s.d, window);
  s.beta_hat = estimate_beta(s.b_hat, s.d, window);
  s.nu_hat = nu_from_alpha(std::min(s.alpha_hat, static_cast<double>(s.d - 1)),
                           s.d);
  (void)tol_amen;
  return s;
}

std::optional<DecayFit> series_decay_fit(const CogrowthSeries& s) {
  int N = static_cast<int>(s.b_hat.size()) - 1;
  int lo = std::max(10, N / 4);
  if (N - lo < 8) return std::nullopt;
  try {
    return decay_fit(s.b_hat, lo, N);
  } catch (const InvalidInputError&) {
    return std::nullopt;
  }
}

void write_series_csv(const CogrowthSeries& s, std::ostream& out) {
  out << "n,a_hat,b_hat,r_hat,z_hat\n";
  for (std::size_t n = 0; n < s.a_hat.size(); ++n)
    out << n << ',' << fmt_double(s.a_hat[n]) << ',' << fmt_double(s.b_hat[n])
        << ',' << fmt_double(s.r_hat[n]) << ',' << fmt_double(s.z_hat[n])
        << "\n";
}

}  // namespace gencase
