#pragma once

#include <compare>
#include <optional>
#include <string>

#include "ringgraph/errors.hpp"

namespace ringgraph {

// The four cardinals the counting arguments use, totally ordered
// Finite(n) < aleph0 < c < 2^c. Exponentiation follows the continuum
// hypothesis; combinations outside that vocabulary are refused rather than
// coerced.
class Cardinal {
public:
    enum class Kind { Finite, Aleph0, Continuum, TwoToC };

    static Cardinal finite(long long n) {
        if (n < 0)
            throw InputError("finite cardinal cannot be negative");
        return Cardinal(Kind::Finite, n);
    }
    static Cardinal aleph0() { return Cardinal(Kind::Aleph0, 0); }
    static Cardinal continuum() { return Cardinal(Kind::Continuum, 0); }
    static Cardinal two_to_c() { return Cardinal(Kind::TwoToC, 0); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return !is_finite(); }
    long long finite_value() const {
        if (!is_finite())
            throw InputError("cardinal is not finite");
        return n_;
    }

    friend bool operator==(const Cardinal&, const Cardinal&) = default;
    friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
        if (a.kind_ != b.kind_)
            return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        return a.n_ <=> b.n_;
    }

    std::string to_string() const {
        switch (kind_) {
        case Kind::Finite:
            return "finite(" + std::to_string(n_) + ")";
        case Kind::Aleph0:
            return "aleph0";
        case Kind::Continuum:
            return "c";
        case Kind::TwoToC:
            return "2^c";
        }
        return "?";
    }

private:
    Cardinal(Kind k, long long n) : kind_(k), n_(n) {}
    Kind kind_;
    long long n_;
};

// CH exponentiation rules: c^n = c for finite n >= 1, c^aleph0 = c,
// c^c = 2^c; finite^finite exact. Everything else is unsupported.
inline Cardinal cardinal_pow(const Cardinal& base, const Cardinal& exp) {
    if (base.kind() == Cardinal::Kind::Continuum) {
        switch (exp.kind()) {
        case Cardinal::Kind::Finite:
            if (exp.finite_value() >= 1)
                return Cardinal::continuum();
            break;
        case Cardinal::Kind::Aleph0:
            return Cardinal::continuum();
        case Cardinal::Kind::Continuum:
            return Cardinal::two_to_c();
        default:
            break;
        }
    } else if (base.is_finite() && exp.is_finite()) {
        long long out = 1;
        for (long long i = 0; i < exp.finite_value(); ++i) {
            if (base.finite_value() != 0 && out > (1LL << 62) / base.finite_value())
                throw ResourceError("finite power overflows");
            out *= base.finite_value();
        }
        return Cardinal::finite(out);
    }
    throw UnsupportedError("unsupported cardinal power " + base.to_string() + "^" + exp.to_string());
}

// |X \ Z| derived from |X| and |Z|. Removing a strictly smaller set from an
// infinite set leaves the full cardinality; removing an equal infinite set
// leaves anything, which is refused as ambiguous.
inline Cardinal complement_cardinal(const Cardinal& x, const Cardinal& zero_set) {
    if (zero_set > x)
        throw InputError("zero set cannot outnumber the space");
    if (x.is_finite())
        return Cardinal::finite(x.finite_value() - zero_set.finite_value());
    if (zero_set < x)
        return x;
    throw AmbiguityError("complement of an equal infinite subset is not determined");
}

// Whether c^|Z| = c^|X\Z|: the balance that lets per-class bijections paste
// into a full isomorphism between the two real-valued graphs. Cardinal pairs
// realized by no vertex (empty or full zero set) hold vacuously.
inline bool quotient_class_sizes_match(const Cardinal& x, const Cardinal& zero_set) {
    Cardinal rest = complement_cardinal(x, zero_set);
    auto vacuous = [](const Cardinal& c) { return c.is_finite() && c.finite_value() == 0; };
    if (vacuous(zero_set) || vacuous(rest))
        return true;
    return cardinal_pow(Cardinal::continuum(), zero_set) == cardinal_pow(Cardinal::continuum(), rest);
}

// The degree-cardinality obstruction for an uncountable discrete space: a
// vertex with singleton zero set has a neighbor class of size c in the
// zero-divisor graph, while any image of it in the comaximal graph has at
// least 2^c neighbors.
struct NonIsoCertificate {
    Cardinal zero_divisor_class_size = Cardinal::continuum();
    Cardinal comaximal_class_lower_bound = Cardinal::two_to_c();
};

// CH verdict: countable spaces give no certificate (the graphs are
// isomorphic); spaces of size >= c give the (c, 2^c) obstruction.
inline std::optional<NonIsoCertificate> noniso_certificate(const Cardinal& x) {
    if (x >= Cardinal::continuum())
        return NonIsoCertificate{};
    return std::nullopt;
}

} // namespace ringgraph
