#ifndef PFLAB_EXTENDED_HPP
#define PFLAB_EXTENDED_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/pfaffian.hpp"
#include "pflab/scalar.hpp"

namespace pflab {

// Label of a Pfaffian-entry row: plain base indices 0..M, their starred
// mirrors, and the handful of symbolic labels used across the identities
// (d, d0, d1, d0*, c, c*, a, b).
struct Label {
    enum class Kind : std::uint8_t {
        Base, Star, D, D0, D1, D0Star, C, CStar, A, B
    };

    Kind kind = Kind::Base;
    std::int32_t index = 0;

    static Label base(std::int32_t i) { return {Kind::Base, i}; }
    static Label star(std::int32_t i) { return {Kind::Star, i}; }
    static Label d() { return {Kind::D, 0}; }
    static Label d0() { return {Kind::D0, 0}; }
    static Label d1() { return {Kind::D1, 0}; }
    static Label d0_star() { return {Kind::D0Star, 0}; }
    static Label c() { return {Kind::C, 0}; }
    static Label c_star() { return {Kind::CStar, 0}; }
    static Label a() { return {Kind::A, 0}; }
    static Label b() { return {Kind::B, 0}; }

    friend bool operator==(const Label& x, const Label& y) {
        return x.kind == y.kind && x.index == y.index;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Base: return std::to_string(index);
            case Kind::Star: return std::to_string(index) + "*";
            case Kind::D: return "d";
            case Kind::D0: return "d0";
            case Kind::D1: return "d1";
            case Kind::D0Star: return "d0*";
            case Kind::C: return "c";
            case Kind::CStar: return "c*";
            case Kind::A: return "a";
            case Kind::B: return "b";
        }
        return "?";
    }
};

struct LabelHash {
    std::size_t operator()(const Label& l) const {
        return std::hash<std::uint64_t>()((std::uint64_t(l.index) << 8) |
                                          std::uint64_t(l.kind));
    }
};

// Square skew-symmetric scalar array over an arbitrary finite label list.
// Pf(x,y) == -Pf(y,x) and Pf(x,x) == 0 hold structurally: set() writes both
// orientations. pf() evaluates the Pfaffian of an ordered label sublist by
// expansion, so the sign convention of the argument order is respected.
template <Field S>
class ExtendedSkewArray {
public:
    explicit ExtendedSkewArray(std::vector<Label> labels) : labels_(std::move(labels)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            auto [it, fresh] = pos_.emplace(labels_[i], i);
            if (!fresh) throw LabelError("duplicate label " + labels_[i].str());
        }
        e_.assign(labels_.size() * labels_.size(), S(0));
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<Label>& labels() const { return labels_; }

    bool has(const Label& x) const { return pos_.contains(x); }

    void set(const Label& x, const Label& y, const S& v) {
        const std::size_t i = position(x), j = position(y);
        if (i == j) throw LabelError("cannot set diagonal entry Pf(" + x.str() + "," + x.str() + ")");
        e_[i * size() + j] = v;
        e_[j * size() + i] = -v;
    }

    S at(const Label& x, const Label& y) const {
        const std::size_t i = position(x), j = position(y);
        return e_[i * size() + j];
    }

    // Pfaffian of the labels in the given order.
    S pf(std::span<const Label> ordered) const {
        std::vector<std::size_t> idx;
        idx.reserve(ordered.size());
        std::uint64_t seen_mask = 0;
        for (const Label& l : ordered) {
            std::size_t p = position(l);
            if (p < 64) {
                if (seen_mask & (1ull << p)) throw LabelError("repeated label " + l.str());
                seen_mask |= 1ull << p;
            }
            idx.push_back(p);
        }
        return pfaffian_by_expansion<S>(idx.size(), [&](std::size_t r, std::size_t c) {
            return e_[idx[r] * size() + idx[c]];
        });
    }

    S pf(std::initializer_list<Label> ordered) const {
        return pf(std::span<const Label>(ordered.begin(), ordered.size()));
    }

private:
    std::size_t position(const Label& l) const {
        auto it = pos_.find(l);
        if (it == pos_.end()) throw LabelError("unknown label " + l.str());
        return it->second;
    }

    std::vector<Label> labels_;
    std::unordered_map<Label, std::size_t, LabelHash> pos_;
    std::vector<S> e_;
};

// Label-list helpers used throughout the identity checkers.
inline std::vector<Label> base_range(int first, int last_exclusive) {
    std::vector<Label> out;
    for (int i = first; i < last_exclusive; ++i) out.push_back(Label::base(i));
    return out;
}

inline std::vector<Label> concat(std::vector<Label> a, const std::vector<Label>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace pflab

#endif
