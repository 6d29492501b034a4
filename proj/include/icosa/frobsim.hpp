#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "icosa/icosagroup.hpp"

namespace icosa {

// Ordered list of primes <= X (X >= 2).
std::vector<std::uint32_t> sieve_primes(std::uint64_t X);

// SplitMix64-style finalizer; the counter-based generator hashes (seed, p, t)
// with no global state, so draws are independent of iteration order.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t p, std::uint64_t t);

// Synthetic eigenvalue stream: for each prime p <= X a class index drawn from
// the class measure (size/120), with a_p = chi(class) in A and b_p = tau(a_p).
// Prime powers follow the power-trace recurrence a_{p^j} = t_j(a_p).
class EigenvalueStream {
  public:
    std::uint64_t X = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> primes;
    std::vector<std::uint8_t> cls;  // class index per prime, aligned with primes

    std::size_t count() const { return primes.size(); }
    int class_index(std::size_t i) const { return cls[i]; }
    GoldenInt a_p(std::size_t i) const { return group_table().cls(cls[i]).chi; }
    GoldenInt a_pj(std::size_t i, long j) const { return tk_at(j, a_p(i)); }
};

// Deterministic for fixed (X, seed); identical for every thread count
// (0 = hardware concurrency).
EigenvalueStream sample_stream(std::uint64_t X, std::uint64_t seed, unsigned threads = 0);

// #{p <= X : a_p = alpha} / pi(X); throws NotInA.
double empirical_density(const EigenvalueStream& stream, const GoldenInt& alpha);

struct PartialSumResult {
    double sum = 0;    // sum over prime powers n = p^j <= X of log(p) f(a_n, b_n)
    double ratio = 0;  // sum / X
};

// Compensated (Kahan) summation over prime powers in ascending n order; the
// degree of f must be at most 8 (DegreeTooHigh otherwise).
PartialSumResult partial_sum(const EigenvalueStream& stream, const BiPoly& f);

struct SimReport {
    std::uint64_t x = 0;
    std::uint64_t seed = 0;
    long pi_x = 0;
    std::array<long, 9> counts{};      // per a_set() index
    std::array<double, 9> densities{};  // counts / pi_x
    struct Row {
        std::string label;
        double ratio = 0;
        double target = 0;
    };
    std::vector<Row> partial_sums;
    double runtime_ms = 0;
};

// The five canonical test polynomials (labels are parseable expressions):
// the constant 1, the temperedness detector H, and the selectors f_0, f_1,
// f_phi. Expected ratios: 1, 0, 1, 1, 1.
std::vector<std::pair<std::string, BiPoly>> default_targets();

SimReport run_report(std::uint64_t X, std::uint64_t seed,
                     const std::vector<std::pair<std::string, BiPoly>>& targets,
                     unsigned threads = 0);

}  // namespace icosa
