#ifndef DPCOLOR_RATIONAL_HPP
#define DPCOLOR_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace dpcolor {

// Exact rational on int64. All edge-bound arithmetic stays within a few
// thousand in numerator/denominator, so no bignum is needed; operations
// reduce eagerly to keep values small.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rat(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const { return Rat(num_ * o.den_, den_ * o.num_); }
    Rat operator-() const { return Rat(-num_, den_); }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rat& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    bool is_integer() const { return den_ == 1; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    void reduce() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace dpcolor

#endif
