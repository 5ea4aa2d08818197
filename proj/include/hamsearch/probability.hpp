#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "hamsearch/graph.hpp"
#include "hamsearch/rng.hpp"

namespace hamsearch {

// Exact arithmetic for all combinatorial counts; floating point is reserved
// for analytic bounds and Monte Carlo estimates.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);
double rational_to_double(const Rational& r);
Int binomial_coeff(long n, long k);

// Closed-form power sums: sum_{j=1..n} j^k for k in 1..5.
Int power_sum(int k, long n);

// Probability that a random pseudo-3-cycle is admissible: (n-3)/(2(n-2)).
Rational p_admissible_3cycle(long n);

// Probability that two random chords properly intersect: (n-3)/(3(n-2)).
Rational p_proper_intersection(long n);

// Exact counts behind the at-least-two-admissible-permutations bound for a
// tour with a single pseudo-arc vertex. The sample space: two edges at the
// pseudo-arc vertex (endpoints k < l drawn from the n-2 permitted vertices),
// two edges into its predecessor on the circle (endpoints i < j), and one
// follow-up edge endpoint each (r, s). total counts all configurations;
// count_cases_1_2 the configurations with i < j <= k < l where the two
// follow-up chords do not both cross; count_case_4 those with
// i <= k < j <= l and neither follow-up chord crossing.
struct CountsT16 {
    Int total;
    Int count_cases_1_2;
    Int count_case_4;
};

CountsT16 counts_theorem_1_6(long n);         // n >= 4
Rational p_at_least_two(long n);              // n >= 8

// exp(-alpha^2 * a * p / 2); the same bound holds for both binomial tails.
enum class TailSide { Lower, Upper };
double hoeffding_tail(double a, double p, double alpha, TailSide side);

// Probability that r balls thrown uniformly at n cells occupy every cell:
// sum_v (-1)^v C(n,v) (1 - v/n)^r, evaluated exactly.
Rational occupancy_all_occupied(long r, long n);

// Exact pmf evaluators (hypergeometric population N with K marked, sample r;
// binomial with a trials and success probability p).
Rational hypergeometric_pmf(long N, long K, long r, long x);
Rational binomial_pmf(long a, const Rational& p, long x);
Rational binomial_cdf_upto(long a, const Rational& p, long c);

// Total-variation bound between the number of cells holding at most m balls
// and a Poisson law with the matching mean. pi and lambda_star are reported
// alongside the bound. Requires r > log r + m log log r + 4m.
struct TvBound {
    double bound;
    double pi;
    double lambda_star;
    Rational pi_exact;
};
TvBound poisson_occupancy_tv_bound(long r, long n, long m);

// Monte Carlo estimators mirroring the counting constructions above; all are
// deterministic per (n, trials, seed).
double mc_admissible_3cycle(long n, long trials, std::uint64_t seed);
double mc_proper_intersection(long n, long trials, std::uint64_t seed);
double mc_two_admissible(long n, long trials, std::uint64_t seed);

}  // namespace hamsearch
