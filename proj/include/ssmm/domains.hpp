#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ssmm/common.hpp"

namespace ssmm {

using BigInt = boost::multiprecision::cpp_int;

enum class DomainKind { Boolean, NonNegInt, Int, BigInt, Ring };

inline const char* to_string(DomainKind k) {
    switch (k) {
        case DomainKind::Boolean: return "bool";
        case DomainKind::NonNegInt: return "nonneg";
        case DomainKind::Int: return "int";
        case DomainKind::BigInt: return "bigint";
        case DomainKind::Ring: return "ring";
    }
    return "?";
}

/// A scalar domain bundles the element type with the arithmetic the matrix
/// algorithms are allowed to use. Entries are opaque to the algorithms except
/// through these operations.
template <class D>
concept ScalarDomain = requires(const D d, const typename D::value_type& a,
                                const typename D::value_type& b) {
    typename D::value_type;
    { d.kind() } -> std::convertible_to<DomainKind>;
    { d.zero() } -> std::convertible_to<typename D::value_type>;
    { d.one() } -> std::convertible_to<typename D::value_type>;
    { d.add(a, b) } -> std::convertible_to<typename D::value_type>;
    { d.mul(a, b) } -> std::convertible_to<typename D::value_type>;
    { d.is_zero(a) } -> std::convertible_to<bool>;
    { d.eq(a, b) } -> std::convertible_to<bool>;
    { d.has_negation() } -> std::convertible_to<bool>;
};

/// Checked 64-bit carrier for the boolean, nonnegative and signed integer
/// kinds. Overflow aborts with an explicit error; silent wraparound would
/// corrupt oracle comparisons.
class Int64Domain {
public:
    using value_type = std::int64_t;

    constexpr Int64Domain() = default;
    constexpr explicit Int64Domain(DomainKind k) : kind_(k) {}

    static constexpr Int64Domain boolean() { return Int64Domain(DomainKind::Boolean); }
    static constexpr Int64Domain nonneg() { return Int64Domain(DomainKind::NonNegInt); }
    static constexpr Int64Domain integer() { return Int64Domain(DomainKind::Int); }

    constexpr DomainKind kind() const { return kind_; }
    constexpr value_type zero() const { return 0; }
    constexpr value_type one() const { return 1; }
    constexpr bool is_zero(value_type v) const { return v == 0; }
    constexpr bool eq(value_type a, value_type b) const { return a == b; }
    constexpr bool has_negation() const { return kind_ != DomainKind::Boolean; }

    value_type add(value_type a, value_type b) const {
        if (kind_ == DomainKind::Boolean) return a | b;
        value_type r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
        return r;
    }

    value_type sub(value_type a, value_type b) const {
        if (kind_ == DomainKind::Boolean) throw DomainError("boolean domain has no subtraction");
        value_type r;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
        return r;
    }

    value_type neg(value_type a) const { return sub(0, a); }

    value_type mul(value_type a, value_type b) const {
        if (kind_ == DomainKind::Boolean) return a & b;
        value_type r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
        return r;
    }

    void validate(value_type v) const {
        switch (kind_) {
            case DomainKind::Boolean:
                if (v != 0 && v != 1) throw DomainError("boolean entry must be 0 or 1");
                break;
            case DomainKind::NonNegInt:
                if (v < 0) throw DomainError("negative entry in nonnegative domain");
                break;
            default:
                break;
        }
    }

    friend bool operator==(const Int64Domain& a, const Int64Domain& b) {
        return a.kind_ == b.kind_;
    }

private:
    DomainKind kind_ = DomainKind::Int;
};

/// Unbounded integers. Used by the signed support recursion, whose entries
/// grow far beyond 64 bits.
class BigIntDomain {
public:
    using value_type = BigInt;

    DomainKind kind() const { return DomainKind::BigInt; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& v) const { return v.is_zero(); }
    bool eq(const value_type& a, const value_type& b) const { return a == b; }
    bool has_negation() const { return true; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    void validate(const value_type&) const {}

    friend bool operator==(const BigIntDomain&, const BigIntDomain&) { return true; }
};

/// Z/m with a runtime modulus. m = 2 is GF(2); composite m (e.g. Z/4) has
/// zero divisors, which the ring algorithms must tolerate.
class ZModDomain {
public:
    using value_type = std::int64_t;

    ZModDomain() : modulus_(2) {}
    explicit ZModDomain(std::int64_t m) : modulus_(m) {
        if (m < 2) throw DomainError("ring modulus must be at least 2");
    }

    DomainKind kind() const { return DomainKind::Ring; }
    std::int64_t modulus() const { return modulus_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1 % modulus_; }
    bool is_zero(value_type v) const { return v == 0; }
    bool eq(value_type a, value_type b) const { return a == b; }
    bool has_negation() const { return true; }
    value_type add(value_type a, value_type b) const { return (a + b) % modulus_; }
    value_type sub(value_type a, value_type b) const {
        return ((a - b) % modulus_ + modulus_) % modulus_;
    }
    value_type neg(value_type a) const { return sub(0, a); }
    value_type mul(value_type a, value_type b) const { return (a * b) % modulus_; }

    void validate(value_type v) const {
        if (v < 0 || v >= modulus_) throw DomainError("ring entry out of canonical range");
    }

    friend bool operator==(const ZModDomain& a, const ZModDomain& b) {
        return a.modulus_ == b.modulus_;
    }

private:
    std::int64_t modulus_;
};

static_assert(ScalarDomain<Int64Domain>);
static_assert(ScalarDomain<BigIntDomain>);
static_assert(ScalarDomain<ZModDomain>);

}  // namespace ssmm
