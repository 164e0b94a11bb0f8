#include "dihedral/modring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace dihedral {

void Modulus::reject(Int n) { throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(n)); }

UnitZn::UnitZn(Modulus n, Int value) : n_(n), value_(n.reduce(value)) {
    if (gcd(value_, n.value()) != 1)
        throw std::invalid_argument(std::to_string(value_) + " is not a unit mod " +
                                    std::to_string(n.value()));
}

UnitZn UnitZn::inverse() const { return UnitZn(n_, inverse_mod(value_, n_.value())); }

ZnSubgroup::ZnSubgroup(Modulus n, Int generator) : n_(n), gen_(generator) {
    if (generator < 1 || n.value() % generator != 0)
        throw std::invalid_argument("subgroup generator " + std::to_string(generator) +
                                    " does not divide " + std::to_string(n.value()));
}

std::vector<Int> ZnSubgroup::elements() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (Int x = 0; x < n_.value(); x += gen_) out.push_back(x);
    return out;
}

void Factorization::validate() const {
    if (two_exponent < 0) throw std::invalid_argument("negative power of two");
    Int prev = 2;
    for (const auto& [p, r] : odd_primes) {
        if (r < 1) throw std::invalid_argument("prime " + std::to_string(p) + " has exponent < 1");
        if (p % 2 == 0) throw std::invalid_argument("even prime in odd part: " + std::to_string(p));
        if (p <= prev) throw std::invalid_argument("odd primes must be strictly increasing");
        for (Int d = 3; d * d <= p; d += 2)
            if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
        prev = p;
    }
}

Int Factorization::value() const {
    Int n = Int{1} << two_exponent;
    for (const auto& [p, r] : odd_primes)
        for (int i = 0; i < r; ++i) n *= p;
    return n;
}

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

Int mul_mod(Int a, Int b, Int n) noexcept {
    auto r = static_cast<Int>((static_cast<__int128>(a) * b) % n);
    return r < 0 ? r + n : r;
}

Int pow_mod(Int base, Int exp, Int n) noexcept {
    Int result = 1 % n;
    base %= n;
    if (base < 0) base += n;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return result;
}

Int inverse_mod(Int x, Int n) {
    Int old_r = ((x % n) + n) % n, r = n;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1 && n != 1)
        throw std::invalid_argument(std::to_string(x) + " has no inverse mod " + std::to_string(n));
    return ((old_s % n) + n) % n;
}

Int geometric_sum(Int a, Int k, Int n) noexcept {
    // Horner: ((a + 1) a + 1) a + ... + 1
    Int acc = 0;
    for (Int i = 0; i < k; ++i) acc = (mul_mod(acc, a, n) + 1) % n;
    return acc;
}

Int num_divisors(Int m) {
    Int count = 1;
    for (Int p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (m > 1) count *= 2;
    return count;
}

std::vector<Int> divisors(Int m) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        small.push_back(d);
        if (d != m / d) large.push_back(m / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int euler_phi(Int n) {
    Int result = n;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

Factorization factorize(Int n) {
    if (n < 1) throw std::invalid_argument("cannot factor " + std::to_string(n));
    Factorization f;
    while (n % 2 == 0) {
        n /= 2;
        ++f.two_exponent;
    }
    for (Int p = 3; p * p <= n; p += 2) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.odd_primes.push_back({p, e});
    }
    if (n > 1) f.odd_primes.push_back({n, 1});
    return f;
}

std::vector<UnitZn> units(Modulus n) {
    std::vector<UnitZn> out;
    if (n.value() == 1) {
        out.emplace_back(n, 0);
        return out;
    }
    for (Int a = 1; a < n.value(); ++a)
        if (gcd(a, n.value()) == 1) out.emplace_back(n, a);
    return out;
}

ZnSubgroup cyclic_subgroup(const ZnElem& c) {
    const Int n = c.modulus().value();
    return ZnSubgroup(c.modulus(), gcd(c.value(), n));
}

ZnSubgroup annihilator(const ZnElem& c) {
    const Int n = c.modulus().value();
    return ZnSubgroup(c.modulus(), n / gcd(c.value(), n));
}

std::vector<UnitZn> kth_roots_of_unity(Modulus n, Int k) {
    if (k < 1) throw std::invalid_argument("root order k must be >= 1");
    const Int one = 1 % n.value();
    std::vector<UnitZn> out;
    for (const auto& u : units(n))
        if (pow_mod(u.value(), k, n.value()) == one) out.push_back(u);
    return out;
}

namespace {

struct Congruence {
    Int residue;
    Int modulus;
};

// Local square roots of unity mod 2^m or p^r.
std::vector<Int> local_square_roots_two(int m) {
    if (m == 0) return {0};
    const Int q = Int{1} << m;
    if (m == 1) return {1};
    if (m == 2) return {1, 3};
    return {1, q / 2 - 1, q / 2 + 1, q - 1};
}

Int crt_combine(Congruence x, Congruence y) {
    // x.residue + x.modulus * t == y.residue (mod y.modulus)
    const Int t = mul_mod(((y.residue - x.residue) % y.modulus + y.modulus) % y.modulus,
                          inverse_mod(x.modulus % y.modulus, y.modulus), y.modulus);
    return x.residue + x.modulus * t;
}

}  // namespace

std::vector<UnitZn> square_roots_crt(const Factorization& f) {
    f.validate();
    const Modulus n(f.value());

    std::vector<Congruence> partial;
    const Int two_part = Int{1} << f.two_exponent;
    for (Int r : local_square_roots_two(f.two_exponent)) partial.push_back({r, two_part});

    for (const auto& [p, e] : f.odd_primes) {
        Int q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        std::vector<Congruence> next;
        for (const auto& c : partial)
            for (Int local : {Int{1}, q - 1}) next.push_back({crt_combine(c, {local, q}), c.modulus * q});
        partial = std::move(next);
    }

    std::vector<UnitZn> out;
    for (const auto& c : partial) out.emplace_back(n, c.residue);
    std::sort(out.begin(), out.end());
    return out;
}

Int count_square_roots(const Factorization& f) {
    f.validate();
    const auto k = static_cast<int>(f.odd_primes.size());
    if (f.two_exponent <= 1) return Int{1} << k;
    if (f.two_exponent == 2) return Int{1} << (k + 1);
    return Int{1} << (k + 2);
}

Int divisor_interval_count(Modulus n, Int lower_gen, Int upper_gen) {
    const ZnSubgroup lower(n, lower_gen), upper(n, upper_gen);
    if (!lower.is_subgroup_of(upper))
        throw std::invalid_argument("<" + std::to_string(lower_gen) + "> is not contained in <" +
                                    std::to_string(upper_gen) + ">");
    return num_divisors(lower_gen / upper_gen);
}

}  // namespace dihedral
