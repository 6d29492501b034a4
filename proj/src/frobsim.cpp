#include "icosa/frobsim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "icosa/rescalc.hpp"

namespace icosa {

std::vector<std::uint32_t> sieve_primes(std::uint64_t X) {
    std::vector<std::uint32_t> out;
    if (X < 2) return out;
    std::vector<bool> composite(X + 1, false);
    for (std::uint64_t i = 2; i <= X; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= X; j += i) composite[j] = true;
    }
    return out;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t kGammaP = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kGammaT = 0xC2B2AE3D27D4EB4FULL;
// Largest multiple of 120 representable in 64 bits (2^64 mod 120 = 16).
constexpr std::uint64_t kAcceptBound = 0xFFFFFFFFFFFFFFF0ULL;

// 120 slots laid out by class size, so a uniform slot draw realizes the
// class measure size/120.
const std::array<std::uint8_t, 120>& slot_class() {
    static const std::array<std::uint8_t, 120> kSlots = [] {
        std::array<std::uint8_t, 120> s{};
        std::size_t at = 0;
        for (int c = 0; c < 9; ++c)
            for (long i = 0; i < group_table().cls(c).size; ++i) s[at++] = static_cast<std::uint8_t>(c);
        if (at != 120) throw Error("internal: class sizes do not fill 120 slots");
        return s;
    }();
    return kSlots;
}

std::uint8_t draw_class(std::uint64_t seed, std::uint64_t p) {
    for (std::uint64_t t = 0;; ++t) {
        std::uint64_t z = counter_hash(seed, p, t);
        if (z < kAcceptBound) return slot_class()[z % 120];
    }
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t p, std::uint64_t t) {
    std::uint64_t z = mix64(seed + kGammaP * p);
    return mix64(z ^ (kGammaT * t));
}

EigenvalueStream sample_stream(std::uint64_t X, std::uint64_t seed, unsigned threads) {
    EigenvalueStream st;
    st.X = X;
    st.seed = seed;
    st.primes = sieve_primes(X);
    st.cls.resize(st.primes.size());
    slot_class();  // force construction before sharding
    unsigned nt = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (nt == 0) nt = 1;
    nt = static_cast<unsigned>(std::min<std::size_t>(nt, std::max<std::size_t>(st.primes.size(), 1)));
    auto fill = [&st](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            st.cls[i] = draw_class(st.seed, st.primes[i]);
    };
    if (nt <= 1) {
        fill(0, st.primes.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t n = st.primes.size(), chunk = (n + nt - 1) / nt;
        for (unsigned w = 0; w < nt; ++w) {
            std::size_t lo = std::min(n, w * chunk), hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(fill, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return st;
}

double empirical_density(const EigenvalueStream& stream, const GoldenInt& alpha) {
    int target = a_index(alpha);
    if (target < 0) throw NotInA("density requested for " + alpha.str());
    if (stream.count() == 0) return 0.0;
    // Class chi values biject onto A; find the class carrying alpha.
    int cls_idx = -1;
    for (int c = 0; c < 9; ++c)
        if (group_table().cls(c).chi == alpha) cls_idx = c;
    long n = 0;
    for (std::uint8_t c : stream.cls)
        if (c == cls_idx) ++n;
    return static_cast<double>(n) / static_cast<double>(stream.count());
}

PartialSumResult partial_sum(const EigenvalueStream& stream, const BiPoly& f) {
    if (f.total_degree() > RFunctional::kMaxDegree)
        throw DegreeTooHigh("partial sums are defined for degree <= 8 only");
    if (stream.X < 2 || stream.count() == 0) return {0.0, 0.0};
    long jmax = 0;
    while (jmax < 62 && (1ULL << (jmax + 1)) <= stream.X) ++jmax;
    jmax = std::max(jmax, 1L);
    // Exact f(t_j(chi_c), tau(t_j(chi_c))) per class and power, then one
    // rounding to double.
    std::array<std::vector<double>, 9> val;
    for (int c = 0; c < 9; ++c) {
        val[c].assign(jmax + 1, 0.0);
        GoldenInt chi = group_table().cls(c).chi;
        for (long j = 1; j <= jmax; ++j) {
            GoldenInt a = tk_at(j, chi);
            val[c][j] = f.eval(GoldenRational{a}, GoldenRational{a.conj()}).to_double();
        }
    }
    std::vector<std::pair<std::uint64_t, double>> entries;
    entries.reserve(stream.count() + 300);
    for (std::size_t i = 0; i < stream.count(); ++i) {
        std::uint64_t p = stream.primes[i];
        double logp = std::log(static_cast<double>(p));
        std::uint64_t n = p;
        long j = 1;
        while (true) {
            entries.emplace_back(n, logp * val[stream.cls[i]][j]);
            if (n > stream.X / p) break;
            n *= p;
            ++j;
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    double sum = 0.0, comp = 0.0;
    for (const auto& [n, term] : entries) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return {sum, sum / static_cast<double>(stream.X)};
}

std::vector<std::pair<std::string, BiPoly>> default_targets() {
    BiPoly x = BiPoly::variable(Var::X), y = BiPoly::variable(Var::Y);
    BiPoly H = (x * y + BiPoly(1)) * x * x * (x * x - BiPoly(1)) * (x * x - BiPoly(4));
    std::vector<std::pair<std::string, BiPoly>> out;
    out.emplace_back("1", BiPoly(1));
    out.emplace_back("(x*y+1)*x^2*(x^2-1)*(x^2-4)", H);
    out.emplace_back("(x*y+1)*(x^2-1)*(x^2-4)", make_f_alpha(GoldenInt(0)));
    out.emplace_back("(x^2+y^2-3)*x*(x+1)*(x^2-4)", make_f_alpha(GoldenInt(1)));
    out.emplace_back("(x-y)*(1+x+y)*(x-phibar)", make_f_alpha(GoldenInt::phi()));
    return out;
}

SimReport run_report(std::uint64_t X, std::uint64_t seed,
                     const std::vector<std::pair<std::string, BiPoly>>& targets,
                     unsigned threads) {
    auto t0 = std::chrono::steady_clock::now();
    static const RFunctional kR;
    SimReport rep;
    rep.x = X;
    rep.seed = seed;
    EigenvalueStream st = sample_stream(X, seed, threads);
    rep.pi_x = static_cast<long>(st.count());
    std::array<long, 9> by_class{};
    for (std::uint8_t c : st.cls) ++by_class[c];
    for (int i = 0; i < 9; ++i) {
        const GoldenInt& alpha = a_set()[i];
        for (int c = 0; c < 9; ++c)
            if (group_table().cls(c).chi == alpha) rep.counts[i] = by_class[c];
        rep.densities[i] =
            rep.pi_x > 0 ? static_cast<double>(rep.counts[i]) / static_cast<double>(rep.pi_x) : 0.0;
    }
    for (const auto& [label, f] : targets) {
        PartialSumResult ps = partial_sum(st, f);
        rep.partial_sums.push_back({label, ps.ratio, kR.r_poly(f).to_double()});
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

}  // namespace icosa
