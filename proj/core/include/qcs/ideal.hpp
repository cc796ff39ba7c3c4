#pragma once

#include <compare>
#include <cstddef>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "qcs/field.hpp"

namespace qcs {

/// Nonzero integral ideal of O_K in Hermite normal form: the Z-lattice
/// spanned by {a, b + c*w} with c | a, c | b and 0 <= b < a.
class Ideal {
public:
    /// Lattice generated by {g, g*w : g in gens}. Throws if all gens are zero.
    static Ideal from_generators(std::span<const QuadInt> gens);
    static Ideal from_generators(std::initializer_list<QuadInt> gens);
    static Ideal principal(const QuadInt& g) { return from_generators({g}); }
    static Ideal unit(const Field& field);
    /// Validates the HNF invariants and the ideal property.
    static Ideal from_hnf(const Field& field, Integer a, Integer b, Integer c);

    const Field& field() const noexcept { return field_; }
    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const Integer& c() const noexcept { return c_; }

    Integer norm() const { return a_ * c_; }
    bool is_unit() const { return a_ == 1 && c_ == 1; }
    bool contains(const QuadInt& z) const;

    /// Canonical residue x' + y'w with 0 <= y' < c and 0 <= x' < a.
    QuadInt reduce(const QuadInt& z) const;

    /// The two Z-basis vectors {a, b + c*w}.
    std::vector<QuadInt> basis() const;

    Ideal operator*(const Ideal& o) const;
    Ideal operator+(const Ideal& o) const;
    Ideal pow(unsigned k) const;
    Ideal conjugate() const;

    /// J | I (equivalently I is contained in J).
    bool divides(const Ideal& other) const;

    friend bool operator==(const Ideal& l, const Ideal& r) {
        return l.field_ == r.field_ && l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
    }
    friend std::strong_ordering operator<=>(const Ideal& l, const Ideal& r);

private:
    Ideal(const Field& field, Integer a, Integer b, Integer c)
        : field_(field), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
    static Ideal from_lattice(const Field& field, std::span<const QuadInt> vectors);

    Field field_;
    Integer a_, b_, c_;
};

Ideal ideal_from_generators(std::span<const QuadInt> gens);
Ideal ideal_mul(const Ideal& i, const Ideal& j);
QuadInt reduce_mod(const QuadInt& z, const Ideal& i);

std::string to_string(const Ideal& i);

/// A prime ideal with its rational prime p, ramification index e and
/// residual degree f (so N(P) = p^f).
struct PrimeIdeal {
    Ideal hnf;
    Integer p;
    int e = 1;
    int f = 1;

    friend bool operator==(const PrimeIdeal& l, const PrimeIdeal& r) { return l.hnf == r.hnf; }
    friend std::strong_ordering operator<=>(const PrimeIdeal& l, const PrimeIdeal& r);
};

enum class SplitKind { ramified, split, inert };
std::string to_string(SplitKind k);

/// p*O_K = prod primes[i]^e. For split primes the two conjugate primes are
/// ordered by their HNF.
struct PrimeSplitting {
    SplitKind kind;
    Integer p;
    std::vector<PrimeIdeal> primes;
    /// Roots of the minimal polynomial of w modulo p.
    std::vector<Integer> roots;
};

PrimeSplitting factor_rational_prime(const Field& field, const Integer& p);

/// Prime ideal (p, w - r) for a root r of the minimal polynomial of w mod p,
/// or p*O_K when p is inert (r ignored). Throws if r is not a root.
PrimeIdeal prime_above(const Field& field, const Integer& p, const Integer& r);

struct IdealFactor {
    PrimeIdeal prime;
    unsigned exponent = 0;
};

struct ElementFactorization {
    QuadInt element;
    std::vector<IdealFactor> factors;

    /// Product of P^b over all factors.
    Ideal product() const;
};

/// Prime ideal factorization of alpha*O_K. Rejects zero and units.
ElementFactorization factor_element(const QuadInt& alpha);

/// Lazily extended table of P^0, P^1, ... ; thread-safe.
class PrimePowers {
public:
    explicit PrimePowers(PrimeIdeal prime);
    PrimePowers(const PrimePowers&) = delete;
    PrimePowers& operator=(const PrimePowers&) = delete;

    const PrimeIdeal& prime() const noexcept { return prime_; }
    Ideal power(unsigned k) const;

private:
    PrimeIdeal prime_;
    mutable std::mutex mutex_;
    mutable std::vector<Ideal> powers_;
};

/// Largest k with z in P^k. Throws for z = 0.
unsigned valuation(const QuadInt& z, const PrimeIdeal& prime);
unsigned valuation(const QuadInt& z, const PrimePowers& powers);

bool are_coprime(const QuadInt& alpha, const QuadInt& beta);

/// prod primes[j]^exponents[j].
Ideal ideal_product(std::span<const PrimeIdeal> primes, std::span<const unsigned> exponents);

}  // namespace qcs
