#include "modzeta/arith.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "cache.hpp"
#include "modzeta/constants.hpp"

namespace modzeta {

namespace {

int jacobi(long a, long n)
{
    // n odd and positive, 0 <= a < n.
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

Real to_real(const mpq_class& q)
{
    Real r;
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

}  // namespace

int kronecker(long d, long n)
{
    if (n < 0)
        throw DomainError("kronecker: n must be non-negative");
    if (n == 0)
        return (d == 1 || d == -1) ? 1 : 0;
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (d % 2 == 0)
            return 0;
        long r = ((d % 8) + 8) % 8;
        if (r == 3 || r == 5)
            result = -result;
    }
    if (n == 1)
        return result;
    long a = ((d % n) + n) % n;
    return result * jacobi(a, n);
}

mpq_class bernoulli(int n, int cap)
{
    if (n < 0)
        throw DomainError("bernoulli: negative index");
    if (n > cap)
        throw DomainError("bernoulli: index " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n == 1)
        return mpq_class(-1, 2);
    if (n % 2 == 1)
        return mpq_class(0);

    // Akiyama-Tanigawa, extended lazily and shared between threads.
    static std::mutex mutex;
    static std::vector<mpq_class> table;
    static std::vector<mpq_class> row;
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        row.emplace_back(1, m + 1);
        row.back().canonicalize();
        for (int j = m; j >= 1; --j) {
            row[j - 1] = j * (row[j - 1] - row[j]);
        }
        table.push_back(row[0]);
    }
    return table[n];
}

Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionCtx& ctx)
{
    PrecisionScope scope(ctx);
    if (!(s > 1))
        throw DomainError("hurwitz_zeta: s must exceed 1");
    if (!(a > 0) || a > Real(1))
        throw DomainError("hurwitz_zeta: a must lie in (0, 1]");

    const int wd = ctx.working_digits();
    const long n_direct = wd + 10;
    const bool integral = s.is_integer() && s < 1000;
    const long s_int = integral ? s.to_long() : 0;

    auto power = [&](const Real& base, const Real& e) {
        return integral ? pow(base, -s_int) : exp(-e * log(base));
    };

    Real sum;
    for (long k = 0; k < n_direct; ++k)
        sum += power(a + k, s);

    Real big_n = a + n_direct;
    Real n_pow = power(big_n, s);  // (N+a)^-s
    sum += big_n * n_pow / (s - 1);
    sum += ldexp(n_pow, -1);

    // Euler-Maclaurin correction terms B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}.
    const Real eps = pow10(-(wd + 2));
    Real inv_n2 = 1 / sqr(big_n);
    Real rising = s;                // (s)_{2j-1}
    Real npow = n_pow / big_n;      // (N+a)^{-s-1}
    mpz_class fact = 2;             // (2j)!
    Real prev_mag;
    for (int j = 1;; ++j) {
        mpq_class coeff = bernoulli(2 * j) / fact;
        Real term = to_real(coeff) * rising * npow;
        sum += term;
        Real mag = abs(term);
        if (mag < eps * abs(sum))
            break;
        if (j > 1 && mag > prev_mag)
            throw DivergenceError("hurwitz_zeta: Euler-Maclaurin terms stopped decreasing");
        if (2 * j + 2 > 512)
            throw DivergenceError("hurwitz_zeta: Bernoulli cap reached");
        prev_mag = mag;
        rising *= (s + (2 * j - 1)) * (s + 2 * j);
        npow *= inv_n2;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

Real dirichlet_l(long d, long s, const PrecisionCtx& ctx)
{
    if (s < 2)
        throw DomainError("dirichlet_l: s must be at least 2");
    static detail::ValueCache<std::tuple<long, long, mpfr_prec_t>> cache;
    auto key = std::make_tuple(d, s, ctx.bits());
    if (auto hit = cache.find(key))
        return *hit;

    PrecisionScope scope(ctx);
    Real value;
    if (d == 0) {
        value = Real(1);
    } else if (d == 1) {
        value = const_zeta(s, ctx);
    } else {
        long ad = d < 0 ? -d : d;
        long m = ((d % 4) + 4) % 4;
        long period = (m == 0 || m == 1) ? ad : 4 * ad;
        Real sum;
        for (long a = 1; a <= period; ++a) {
            int chi = kronecker(d, a);
            if (chi == 0)
                continue;
            Real h = hurwitz_zeta(Real(s), Real(a) / period, ctx);
            if (chi > 0)
                sum += h;
            else
                sum -= h;
        }
        value = sum * pow(Real(period), -s);
    }
    cache.store(key, value);
    return value;
}

}  // namespace modzeta
