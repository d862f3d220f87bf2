#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "permlab/matrix.hpp"
#include "permlab/space.hpp"

namespace permlab {

// Rank-2 tensor t = sum t[i][j] e_i (x) f_j over two named spaces.
template <class K>
struct Tensor2 {
    Space s1, s2;
    Matrix<K> d;

    Tensor2() = default;
    Tensor2(Space a, Space b) : s1(std::move(a)), s2(std::move(b)), d(s1.dim(), s2.dim()) {}
    Tensor2(Space a, Space b, Matrix<K> m) : s1(std::move(a)), s2(std::move(b)), d(std::move(m)) {
        if (d.rows() != s1.dim() || d.cols() != s2.dim())
            throw SpaceMismatch("tensor components do not match its spaces");
    }

    K& at(std::size_t i, std::size_t j) { return d.at(i, j); }
    const K& at(std::size_t i, std::size_t j) const { return d.at(i, j); }
    bool is_zero() const { return d.is_zero(); }

    bool symmetric() const { return s1 == s2 && d == d.transpose(); }

    friend Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
        require_same_space(a.s1, b.s1, "tensor sum");
        require_same_space(a.s2, b.s2, "tensor sum");
        return Tensor2(a.s1, a.s2, a.d + b.d);
    }
    friend Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
        require_same_space(a.s1, b.s1, "tensor difference");
        require_same_space(a.s2, b.s2, "tensor difference");
        return Tensor2(a.s1, a.s2, a.d - b.d);
    }
    Tensor2 operator-() const { return Tensor2(s1, s2, -d); }
    friend Tensor2 operator*(const K& c, const Tensor2& t) { return Tensor2(t.s1, t.s2, c * t.d); }
    friend bool operator==(const Tensor2& a, const Tensor2& b) {
        return a.s1 == b.s1 && a.s2 == b.s2 && a.d == b.d;
    }
};

// flip: (flip t)[i][j] = t[j][i]; requires both component spaces equal.
template <class K>
Tensor2<K> flip(const Tensor2<K>& t) {
    require_same_space(t.s1, t.s2, "flip");
    return Tensor2<K>(t.s1, t.s2, t.d.transpose());
}

template <class K>
Tensor2<K> leg_apply(const LinearMap<K>& f, const Tensor2<K>& t, int leg) {
    if (leg == 1) {
        require_same_space(f.domain, t.s1, "leg 1 apply");
        return Tensor2<K>(f.codomain, t.s2, f.m * t.d);
    }
    if (leg == 2) {
        require_same_space(f.domain, t.s2, "leg 2 apply");
        return Tensor2<K>(t.s1, f.codomain, t.d * f.m.transpose());
    }
    throw BadLegIndex("rank-2 tensor has legs 1 and 2, got " + std::to_string(leg));
}

// Rank-3 tensor over three named spaces.
template <class K>
struct Tensor3 {
    Space s1, s2, s3;
    std::vector<K> d;

    Tensor3() = default;
    Tensor3(Space a, Space b, Space c)
        : s1(std::move(a)), s2(std::move(b)), s3(std::move(c)),
          d(s1.dim() * s2.dim() * s3.dim(), K(0)) {}

    std::size_t d1() const { return s1.dim(); }
    std::size_t d2() const { return s2.dim(); }
    std::size_t d3() const { return s3.dim(); }

    K& at(std::size_t i, std::size_t j, std::size_t k) { return d[(i * d2() + j) * d3() + k]; }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const { return d[(i * d2() + j) * d3() + k]; }

    bool is_zero() const {
        for (const auto& x : d)
            if (!kzero(x)) return false;
        return true;
    }

    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
        require_same_space(a.s1, b.s1, "tensor sum");
        require_same_space(a.s2, b.s2, "tensor sum");
        require_same_space(a.s3, b.s3, "tensor sum");
        Tensor3 r = a;
        for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] += b.d[i];
        return r;
    }
    friend Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
        require_same_space(a.s1, b.s1, "tensor difference");
        require_same_space(a.s2, b.s2, "tensor difference");
        require_same_space(a.s3, b.s3, "tensor difference");
        Tensor3 r = a;
        for (std::size_t i = 0; i < r.d.size(); ++i) r.d[i] -= b.d[i];
        return r;
    }
    Tensor3 operator-() const {
        Tensor3 r = *this;
        for (auto& x : r.d) x = -x;
        return r;
    }
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        if (a.s1 != b.s1 || a.s2 != b.s2 || a.s3 != b.s3) return false;
        for (std::size_t i = 0; i < a.d.size(); ++i)
            if (!kzero(a.d[i] - b.d[i])) return false;
        return true;
    }
};

template <class K>
Tensor3<K> leg_apply(const LinearMap<K>& f, const Tensor3<K>& t, int leg) {
    if (leg < 1 || leg > 3) throw BadLegIndex("rank-3 tensor has legs 1..3, got " + std::to_string(leg));
    const Space& old_space = leg == 1 ? t.s1 : (leg == 2 ? t.s2 : t.s3);
    require_same_space(f.domain, old_space, "leg apply");
    Tensor3<K> r(leg == 1 ? f.codomain : t.s1, leg == 2 ? f.codomain : t.s2, leg == 3 ? f.codomain : t.s3);
    for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
            for (std::size_t k = 0; k < t.d3(); ++k) {
                const K& v = t.at(i, j, k);
                if (kzero(v)) continue;
                std::size_t n = f.codomain.dim();
                for (std::size_t a = 0; a < n; ++a) {
                    const K& fm = f.m.at(a, leg == 1 ? i : (leg == 2 ? j : k));
                    if (kzero(fm)) continue;
                    r.at(leg == 1 ? a : i, leg == 2 ? a : j, leg == 3 ? a : k) += fm * v;
                }
            }
    return r;
}

template <class K>
Tensor3<K> swap_legs(const Tensor3<K>& t, int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == b || a < 1 || b > 3) throw BadLegIndex("bad leg pair for swap");
    std::array<int, 3> perm{0, 1, 2};
    std::swap(perm[a - 1], perm[b - 1]);
    std::array<const Space*, 3> sp{&t.s1, &t.s2, &t.s3};
    Tensor3<K> r(*sp[perm[0]], *sp[perm[1]], *sp[perm[2]]);
    for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
            for (std::size_t k = 0; k < t.d3(); ++k) {
                std::array<std::size_t, 3> src{i, j, k};
                r.at(src[perm[0]], src[perm[1]], src[perm[2]]) = t.at(i, j, k);
            }
    return r;
}

// Placement of a rank-2 tensor into triple tensor space: the tensor's first
// component sits at `first`, the second at `second`. Slot 32 of r equals
// slot 23 of flip(r).
struct Slot {
    int first;
    int second;
};
inline constexpr Slot kSlot12{1, 2};
inline constexpr Slot kSlot13{1, 3};
inline constexpr Slot kSlot23{2, 3};
inline constexpr Slot kSlot32{3, 2};

template <class K>
struct Placement {
    const Tensor2<K>* t;
    Slot slot;
};

template <class K>
Placement<K> place_in_triple(const Tensor2<K>& r, Slot slot) {
    require_same_space(r.s1, r.s2, "placement into triple tensor space");
    if (slot.first == slot.second || slot.first < 1 || slot.first > 3 || slot.second < 1 || slot.second > 3)
        throw BadLegIndex("placement slots must be two distinct legs in 1..3");
    return Placement<K>{&r, slot};
}

}  // namespace permlab
