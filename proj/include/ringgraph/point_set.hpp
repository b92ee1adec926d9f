#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ringgraph/errors.hpp"

namespace ringgraph {

// A finite discrete point space: points are 0..size()-1, every subset clopen.
struct FiniteSpace {
    int points = 0;

    explicit FiniteSpace(int n) : points(n) {
        if (n < 1)
            throw InputError("space needs at least one point");
    }
    int size() const { return points; }
};

// Subset of the points of a FiniteSpace, as a bitmask over a fixed universe.
class PointSet {
public:
    PointSet(int universe, std::initializer_list<int> pts) : PointSet(universe) {
        for (int p : pts)
            insert(p);
    }
    explicit PointSet(int universe) : universe_(universe) {
        if (universe < 0 || universe > kMaxUniverse)
            throw InputError("point-set universe out of range");
    }
    static PointSet none(int universe) { return PointSet(universe); }
    static PointSet all(int universe) {
        PointSet s(universe);
        s.bits_ = universe == 0 ? 0 : (std::uint32_t{1} << universe) - 1;
        return s;
    }

    int universe() const { return universe_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    bool contains(int p) const {
        check_point(p);
        return (bits_ >> p) & 1u;
    }
    void insert(int p) {
        check_point(p);
        bits_ |= std::uint32_t{1} << p;
    }

    PointSet complement() const {
        PointSet r(universe_);
        r.bits_ = all(universe_).bits_ & ~bits_;
        return r;
    }
    PointSet unite(const PointSet& o) const {
        check_universe(o);
        PointSet r(universe_);
        r.bits_ = bits_ | o.bits_;
        return r;
    }
    PointSet intersect(const PointSet& o) const {
        check_universe(o);
        PointSet r(universe_);
        r.bits_ = bits_ & o.bits_;
        return r;
    }
    bool subset_of(const PointSet& o) const {
        check_universe(o);
        return (bits_ & ~o.bits_) == 0;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int p = 0; p < universe_; ++p)
            if ((bits_ >> p) & 1u)
                out.push_back(p);
        return out;
    }

    // "{0,2}" — members ascending.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int p : members()) {
            if (!first)
                s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.universe_ == b.universe_ && a.bits_ == b.bits_;
    }

private:
    static constexpr int kMaxUniverse = 31;

    void check_point(int p) const {
        if (p < 0 || p >= universe_)
            throw InputError("point " + std::to_string(p) + " outside the space");
    }
    void check_universe(const PointSet& o) const {
        if (o.universe_ != universe_)
            throw InputError("point sets over different spaces");
    }

    std::uint32_t bits_ = 0;
    int universe_ = 0;
};

// Interior operator of the space. The toolkit models discrete spaces only, so
// this is the identity; rules quoting "int Z(f)" go through this hook rather
// than collapsing it at the call site. A non-discrete model would replace it.
inline PointSet interior(const FiniteSpace& space, const PointSet& s) {
    if (s.universe() != space.size())
        throw InputError("point set does not live in the given space");
    return s;
}

} // namespace ringgraph
