#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace udmis {

// Fixed-size bitset with a runtime length. Used for neighbor masks and
// candidate sets in the solver; bits beyond size() are always zero. Sets of
// up to 512 bits live inline, so copies in the search do not allocate.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_(n) {}

    static Bitset full(std::size_t n) {
        Bitset b(n);
        for (auto &w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return words_.size(); }
    std::span<const std::uint64_t> words() const { return {words_.begin(), words_.size()}; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    // Index of the first set bit, or size() when empty.
    std::size_t first() const { return next(0); }

    // Index of the first set bit at position >= from, or size() when none.
    std::size_t next(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return n_;
            w = words_[wi];
        }
    }

    bool intersects(const Bitset &o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::size_t intersection_count(const Bitset &o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    // True when every bit of *this is also set in o.
    bool subset_of(const Bitset &o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset &operator&=(const Bitset &o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset &operator|=(const Bitset &o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset &subtract(const Bitset &o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }
    friend bool operator==(const Bitset &a, const Bitset &b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            if (a.words_[i] != b.words_[i]) return false;
        return true;
    }

    template <class F>
    void for_each(F &&f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

  private:
    void trim() {
        if (n_ & 63) words_[words_.size() - 1] &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    // Word storage, inline up to kInline words.
    class Words {
      public:
        static constexpr std::size_t kInline = 8;

        Words() = default;
        explicit Words(std::size_t bits) : size_((bits + 63) / 64) {
            if (size_ > kInline) heap_.assign(size_, 0);
        }

        std::size_t size() const { return size_; }
        std::uint64_t *begin() { return size_ > kInline ? heap_.data() : inline_.data(); }
        const std::uint64_t *begin() const { return size_ > kInline ? heap_.data() : inline_.data(); }
        std::uint64_t *end() { return begin() + size_; }
        const std::uint64_t *end() const { return begin() + size_; }
        std::uint64_t &operator[](std::size_t i) { return begin()[i]; }
        std::uint64_t operator[](std::size_t i) const { return begin()[i]; }

      private:
        std::size_t size_ = 0;
        std::array<std::uint64_t, kInline> inline_{};
        std::vector<std::uint64_t> heap_;
    };

    std::size_t n_ = 0;
    Words words_;
};

}  // namespace udmis
