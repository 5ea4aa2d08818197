#include "hamsearch/probability.hpp"

#include <cmath>

#include "hamsearch/graph.hpp"

namespace hamsearch {

std::string rational_to_string(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

double rational_to_double(const Rational& r) { return static_cast<double>(r); }

Int binomial_coeff(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

Int power_sum(int k, long n) {
    if (n < 0) throw InputError("power_sum: n must be nonnegative");
    Int m = n;
    switch (k) {
        case 1: return m * (m + 1) / 2;
        case 2: return m * (m + 1) * (2 * m + 1) / 6;
        case 3: {
            Int t = m * (m + 1) / 2;
            return t * t;
        }
        case 4: return m * (m + 1) * (2 * m + 1) * (3 * m * m + 3 * m - 1) / 30;
        case 5: return m * m * (m + 1) * (m + 1) * (2 * m * m + 2 * m - 1) / 12;
        default: throw InputError("power_sum: k must be in 1..5");
    }
}

Rational p_admissible_3cycle(long n) {
    if (n < 4) throw InputError("p_admissible_3cycle: n must be >= 4");
    return Rational(Int(n - 3), Int(2 * (n - 2)));
}

Rational p_proper_intersection(long n) {
    if (n < 4) throw InputError("p_proper_intersection: n must be >= 4");
    return Rational(Int(n - 3), Int(3 * (n - 2)));
}

namespace {

// sum over the region i < j <= k < l of the number of (r, s) pairs making
// both follow-up chords cross: (n-k-1)(n-l-1). Left factor of the outer sum
// counts choices of i below each j.
Int both_cross_region_a(long n) {
    const Int m = n - 2;
    if (m < 4) return 0;
    const long V = static_cast<long>(m) - 2;
    const Int M = m - 1;
    Int t1 = power_sum(1, V), t2 = power_sum(2, V), t3 = power_sum(3, V),
        t4 = power_sum(4, V), t5 = power_sum(5, V);
    Int first = M * (3 * t4 + 2 * t3 - 3 * t2 - 2 * t1);
    Int second = 3 * t5 + 2 * t4 - 3 * t3 - 2 * t2;
    return (first - second) / 24;
}

// sum over the region i <= k < j <= l of (k-1)(l-1): the number of (r, s)
// pairs making neither follow-up chord cross.
Int neither_cross_region_b(long n) {
    const Int m = n - 2;
    if (m < 2) return 0;
    const long W = static_cast<long>(m) - 1;
    Int t1w = power_sum(1, W), t2w = power_sum(2, W), t3w = power_sum(3, W),
        t4w = power_sum(4, W), t5w = power_sum(5, W);
    Int t1m = m * (m + 1) / 2;
    Int first = t1m * (2 * t3w + 3 * t2w + t1w) / 6;
    Int second = (2 * t5w + 5 * t4w + 4 * t3w + t2w) / 12;
    return first - second;
}

}  // namespace

CountsT16 counts_theorem_1_6(long n) {
    if (n < 4) throw InputError("counts_theorem_1_6: n must be >= 4");
    const long m = n - 2;
    CountsT16 counts;
    Int pair_count = binomial_coeff(m, 2);
    counts.total = pair_count * pair_count * Int(m) * Int(m);
    Int region_a = (binomial_coeff(m, 4) + binomial_coeff(m, 3)) * Int(m) * Int(m);
    counts.count_cases_1_2 = region_a - both_cross_region_a(n);
    counts.count_case_4 = neither_cross_region_b(n);
    return counts;
}

Rational p_at_least_two(long n) {
    if (n < 8) throw InputError("p_at_least_two: n must be >= 8");
    CountsT16 c = counts_theorem_1_6(n);
    return 1 - Rational(c.count_cases_1_2 + c.count_case_4, c.total);
}

double hoeffding_tail(double a, double p, double alpha, TailSide side) {
    (void)side;  // the bound is symmetric
    if (!(a >= 1)) throw InputError("hoeffding_tail: a must be >= 1");
    if (!(p > 0 && p < 1)) throw InputError("hoeffding_tail: p must be in (0,1)");
    if (!(alpha > 0 && alpha < 1)) throw InputError("hoeffding_tail: alpha must be in (0,1)");
    return std::exp(-alpha * alpha * a * p / 2.0);
}

Rational occupancy_all_occupied(long r, long n) {
    if (n < 1) throw InputError("occupancy_all_occupied: n must be >= 1");
    if (r < 0) throw InputError("occupancy_all_occupied: r must be >= 0");
    Int numerator = 0;
    for (long v = 0; v <= n; ++v) {
        Int cells = n - v;
        Int term = binomial_coeff(n, v) * boost::multiprecision::pow(cells, static_cast<unsigned>(r));
        if (v % 2 == 0)
            numerator += term;
        else
            numerator -= term;
    }
    return Rational(numerator, boost::multiprecision::pow(Int(n), static_cast<unsigned>(r)));
}

Rational hypergeometric_pmf(long N, long K, long r, long x) {
    if (N < 0 || K < 0 || K > N || r < 0 || r > N)
        throw InputError("hypergeometric_pmf: invalid parameters");
    Int num = binomial_coeff(K, x) * binomial_coeff(N - K, r - x);
    return Rational(num, binomial_coeff(N, r));
}

Rational binomial_pmf(long a, const Rational& p, long x) {
    if (a < 0 || x < 0 || x > a) return Rational(0);
    Rational q = 1 - p;
    Rational result(binomial_coeff(a, x));
    for (long i = 0; i < x; ++i) result *= p;
    for (long i = 0; i < a - x; ++i) result *= q;
    return result;
}

Rational binomial_cdf_upto(long a, const Rational& p, long c) {
    Rational total(0);
    for (long x = 0; x <= c && x <= a; ++x) total += binomial_pmf(a, p, x);
    return total;
}

TvBound poisson_occupancy_tv_bound(long r, long n, long m) {
    if (n < 1 || r < 1 || m < 0) throw InputError("poisson_occupancy_tv_bound: invalid parameters");
    const double logr = std::log(static_cast<double>(r));
    double loglogr = 0.0;
    if (m > 0) {
        if (logr <= 0) throw InputError("bound inapplicable: log log r undefined");
        loglogr = std::log(logr);
    }
    const double gate = logr + m * loglogr + 4.0 * m;
    if (!(static_cast<double>(r) > gate)) throw InputError("bound inapplicable: r too small");

    // pi = P(Bin(r, 1/n) <= m), exact.
    Rational pi_exact(0);
    Int n_pow_r = boost::multiprecision::pow(Int(n), static_cast<unsigned>(r));
    for (long j = 0; j <= m && j <= r; ++j) {
        Int term = binomial_coeff(r, j) * boost::multiprecision::pow(Int(n - 1), static_cast<unsigned>(r - j));
        pi_exact += Rational(term, n_pow_r);
    }
    const double pi = rational_to_double(pi_exact);
    const double lambda = n * pi;

    const double ratio = (logr + m * loglogr + 5.0 * m) / (r - logr - m * loglogr - 4.0 * m);
    const double inner = ratio * lambda + 4.0 / static_cast<double>(r);
    const double bound = (1.0 - std::exp(-lambda)) * (pi + (r / lambda) * inner * inner);

    TvBound out;
    out.bound = bound;
    out.pi = pi;
    out.lambda_star = lambda;
    out.pi_exact = pi_exact;
    return out;
}

double mc_admissible_3cycle(long n, long trials, std::uint64_t seed) {
    if (n < 4) throw InputError("mc_admissible_3cycle: n must be >= 4");
    if (trials < 1) throw InputError("mc_admissible_3cycle: trials must be >= 1");
    Rng rng(seed);
    long successes = 0;
    for (long t = 0; t < trials; ++t) {
        // First chord (1, x): n-2 permitted endpoints.
        long x = rng.range(3, n);
        // Second chord out of x-1: endpoint y, anything but the loop and the
        // circle arc (x-1, x).
        long y = rng.range(1, n - 2);
        if (y >= x - 1) y += 2;  // skip x-1 and x
        if (y >= x + 1) ++successes;
    }
    return static_cast<double>(successes) / static_cast<double>(trials);
}

double mc_proper_intersection(long n, long trials, std::uint64_t seed) {
    if (n < 4) throw InputError("mc_proper_intersection: n must be >= 4");
    if (trials < 1) throw InputError("mc_proper_intersection: trials must be >= 1");
    Rng rng(seed);
    long successes = 0;
    for (long t = 0; t < trials; ++t) {
        // Chord (1, j) with a second chord (r, s), r < j; (j, r) uniform over
        // ordered pairs from {2..n}.
        long a = rng.range(2, n);
        long b = rng.range(2, n - 1);
        if (b >= a) ++b;
        long j = std::max(a, b), r = std::min(a, b);
        long s = rng.range(1, n - 2);
        if (s >= r) s += 2;  // skip r and r+1
        if (s >= j + 1) ++successes;
    }
    return static_cast<double>(successes) / static_cast<double>(trials);
}

double mc_two_admissible(long n, long trials, std::uint64_t seed) {
    if (n < 8) throw InputError("mc_two_admissible: n must be >= 8");
    if (trials < 1) throw InputError("mc_two_admissible: trials must be >= 1");
    Rng rng(seed);
    long successes = 0;
    for (long t = 0; t < trials; ++t) {
        // Two edge endpoints at the predecessor of the pseudo-arc vertex
        // (i < j) and two at the vertex itself (k < l), from {2..n-1}.
        long i = rng.range(2, n - 1), j = rng.range(2, n - 2);
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        long k = rng.range(2, n - 1), l = rng.range(2, n - 2);
        if (l >= k) ++l;
        if (k > l) std::swap(k, l);
        long r = rng.range(1, n - 2);
        if (r >= k - 1) r += 2;  // skip k-1 and k
        long s = rng.range(1, n - 2);
        if (s >= l - 1) s += 2;  // skip l-1 and l
        int hits = 0;
        if (r >= k + 1 && r <= n - 1) ++hits;  // (n,k) crossed by (k-1,r)
        if (s >= l + 1 && s <= n - 1) ++hits;  // (n,l) crossed by (l-1,s)
        if (k < i) ++hits;                     // (n,k) crosses (i,1)
        if (k < j) ++hits;                     // (n,k) crosses (j,1)
        if (l < i) ++hits;                     // (n,l) crosses (i,1)
        if (l < j) ++hits;                     // (n,l) crosses (j,1)
        if (hits >= 2) ++successes;
    }
    return static_cast<double>(successes) / static_cast<double>(trials);
}

}  // namespace hamsearch
