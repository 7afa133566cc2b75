#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

#include "mjets/symbolic/param.hpp"

namespace mjets {

/// Power product of parameters, stored as up to `capacity` packed
/// (id << 16 | exponent) words sorted by id; unused slots are zero.
///
/// The exponent of `pi` is a signed 16-bit value: pi is a unit of the ring,
/// and reparametrizations divide by it. All other exponents are
/// non-negative.
///
/// The comparison is lexicographic on dense exponent vectors indexed by
/// parameter id, which is a monomial order: multiplying both sides by the
/// same monomial never changes their relative order.
class Monomial {
public:
    static constexpr int capacity = 8;

    Monomial() = default;
    Monomial(Param p, int exp) {
        if (exp != 0) words_[0] = pack(p.id(), exp);
    }

    static std::uint16_t pi_id() {
        static const std::uint16_t id = Param::pi().id();
        return id;
    }

    [[nodiscard]] bool is_one() const { return words_[0] == 0; }
    [[nodiscard]] int size() const {
        int n = 0;
        while (n < capacity && words_[n] != 0) ++n;
        return n;
    }
    [[nodiscard]] std::uint16_t var(int i) const { return static_cast<std::uint16_t>(words_[i] >> 16); }
    [[nodiscard]] int exp(int i) const { return unpack_exp(words_[i]); }

    [[nodiscard]] int degree(Param p) const {
        for (int i = 0; i < capacity && words_[i] != 0; ++i) {
            if (var(i) == p.id()) return exp(i);
        }
        return 0;
    }
    /// Degree ignoring pi.
    [[nodiscard]] unsigned total_degree() const {
        unsigned d = 0;
        for (int i = 0; i < capacity && words_[i] != 0; ++i) {
            if (var(i) != pi_id()) d += static_cast<unsigned>(exp(i));
        }
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (b.is_one()) return a;
        if (a.is_one()) return b;
        Monomial r;
        int i = 0;
        int j = 0;
        int k = 0;
        while ((i < capacity && a.words_[i] != 0) || (j < capacity && b.words_[j] != 0)) {
            const bool has_a = i < capacity && a.words_[i] != 0;
            const bool has_b = j < capacity && b.words_[j] != 0;
            std::uint32_t w;
            if (has_a && has_b && a.var(i) == b.var(j)) {
                const int e = a.exp(i) + b.exp(j);
                const std::uint16_t v = a.var(i);
                ++i;
                ++j;
                if (e == 0) continue;  // pi^k * pi^-k
                w = pack(v, e);
            } else if (has_a && (!has_b || a.var(i) < b.var(j))) {
                w = a.words_[i++];
            } else {
                w = b.words_[j++];
            }
            if (k == capacity) throw std::length_error("monomial exceeds 8 distinct parameters");
            r.words_[k++] = w;
        }
        return r;
    }

    /// True when `d` divides this monomial. With `pi_is_unit`, powers of pi
    /// are ignored.
    [[nodiscard]] bool divisible_by(const Monomial& d, bool pi_is_unit = false) const {
        for (int j = 0; j < capacity && d.words_[j] != 0; ++j) {
            if (pi_is_unit && d.var(j) == pi_id()) continue;
            if (degree(Param::from_id(d.var(j))) < d.exp(j)) return false;
        }
        return true;
    }

    /// Quotient; the non-pi part of `d` must divide this monomial.
    [[nodiscard]] Monomial divide(const Monomial& d) const {
        Monomial r;
        int i = 0;
        int j = 0;
        int k = 0;
        while ((i < capacity && words_[i] != 0) || (j < capacity && d.words_[j] != 0)) {
            const bool has_a = i < capacity && words_[i] != 0;
            const bool has_b = j < capacity && d.words_[j] != 0;
            std::uint16_t v;
            int e;
            if (has_a && has_b && var(i) == d.var(j)) {
                v = var(i);
                e = exp(i++) - d.exp(j++);
            } else if (has_a && (!has_b || var(i) < d.var(j))) {
                v = var(i);
                e = exp(i++);
            } else {
                v = d.var(j);
                e = -d.exp(j++);
            }
            if (e != 0) r.words_[k++] = pack(v, e);
        }
        return r;
    }

    /// Removes parameter `p`, returning its former exponent.
    int extract(Param p) {
        for (int i = 0; i < capacity && words_[i] != 0; ++i) {
            if (var(i) == p.id()) {
                const int e = exp(i);
                for (int k = i; k + 1 < capacity; ++k) words_[k] = words_[k + 1];
                words_[capacity - 1] = 0;
                return e;
            }
        }
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }

    /// Lexicographic monomial order (see class comment).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < capacity; ++i) {
            const std::uint32_t wa = a.words_[i];
            const std::uint32_t wb = b.words_[i];
            if (wa == wb) {
                if (wa == 0) return false;
                continue;
            }
            const std::uint32_t va = wa == 0 ? 0x10000u : (wa >> 16);
            const std::uint32_t vb = wb == 0 ? 0x10000u : (wb >> 16);
            if (va == vb) return unpack_exp(wa) < unpack_exp(wb);
            // the side holding the smaller id has a nonzero entry where the
            // other has zero
            if (va < vb) return unpack_exp(wa) < 0;
            return unpack_exp(wb) > 0;
        }
        return false;
    }

    [[nodiscard]] std::size_t hash() const {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (int i = 0; i < capacity && words_[i] != 0; ++i) {
            h ^= words_[i];
            h *= 0xBF58476D1CE4E5B9ull;
            h ^= h >> 31;
        }
        return static_cast<std::size_t>(h);
    }

    template <typename H>
    friend H AbslHashValue(H h, const Monomial& m) {
        return H::combine(std::move(h), m.hash());
    }

private:
    static std::uint32_t pack(std::uint16_t id, int exp) {
        if (id == pi_id()) {
            if (exp < -32768 || exp > 32767) throw std::overflow_error("monomial exponent overflow");
        } else if (exp < 0 || exp > 0xFFFF) {
            throw std::overflow_error(exp < 0 ? "negative exponent of a non-unit parameter" : "monomial exponent overflow");
        }
        return (static_cast<std::uint32_t>(id) << 16) | (static_cast<std::uint32_t>(exp) & 0xFFFFu);
    }
    static int unpack_exp(std::uint32_t w) {
        const auto raw = static_cast<std::uint16_t>(w & 0xFFFFu);
        if (static_cast<std::uint16_t>(w >> 16) == pi_id()) return static_cast<std::int16_t>(raw);
        return raw;
    }
    std::array<std::uint32_t, capacity> words_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace mjets
