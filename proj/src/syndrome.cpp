#include "crcodes/syndrome.hpp"

#include "crcodes/errors.hpp"

namespace crc {

SyndromeSpace::SyndromeSpace(Field f, int R) : f_(std::move(f)), R_(R), D_(R * f_->r()), p_(f_->p()) {
    pw_.assign(D_ + 1, 1);
    for (int k = 1; k <= D_; ++k) {
        if (pw_[k - 1] > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p_))
            throw ResourceError("max_syndromes", "syndrome space too large to index");
        pw_[k] = pw_[k - 1] * p_;
    }
    N_ = pw_[D_];
}

std::uint64_t SyndromeSpace::add_general(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (int k = 0; k < D_ && (a | b); ++k) {
        std::uint64_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += ((da + db) % p_) * pw_[k];
    }
    return out;
}

std::uint64_t SyndromeSpace::neg(std::uint64_t a) const {
    if (p_ == 2) return a;
    std::uint64_t out = 0;
    for (int k = 0; k < D_; ++k) {
        std::uint64_t d = a % p_;
        a /= p_;
        out += ((p_ - d) % p_) * pw_[k];
    }
    return out;
}

int SyndromeSpace::digit(std::uint64_t s, int k) const { return static_cast<int>((s / pw_[k]) % p_); }

std::uint64_t SyndromeSpace::index_of(const Word& syn) const {
    std::uint64_t idx = 0, base = 1, q = f_->q();
    for (int j = 0; j < R_; ++j) {
        idx += syn[j] * base;
        base *= q;
    }
    return idx;
}

Word SyndromeSpace::syndrome_of(std::uint64_t idx) const {
    Word s(R_);
    std::uint64_t q = f_->q();
    for (int j = 0; j < R_; ++j) {
        s[j] = static_cast<Elem>(idx % q);
        idx /= q;
    }
    return s;
}

std::vector<std::uint64_t> column_syndromes(const Code& c, const SyndromeSpace& sp) {
    const Matrix& H = c.parity();
    const auto& f = *c.field();
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(c.n()) * (f.q() - 1));
    for (int i = 0; i < c.n(); ++i) {
        Word col = H.column(i);
        for (int g = 1; g < f.q(); ++g) {
            Word s(col.size());
            for (std::size_t j = 0; j < col.size(); ++j) s[j] = f.mul(static_cast<Elem>(g), col[j]);
            out.push_back(sp.index_of(s));
        }
    }
    return out;
}

}  // namespace crc
