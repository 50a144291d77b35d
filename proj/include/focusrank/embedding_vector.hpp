#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace focusrank {

/// Fixed-length real vector for one text span. Entries are always finite and
/// the dimension is always positive; the all-zero vector is representable
/// (a span with no usable tokens) and is treated as an isolated node.
class EmbeddingVector {
public:
    explicit EmbeddingVector(std::vector<double> values);

    std::size_t dimension() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    double norm() const noexcept;
    bool is_zero() const noexcept;

    friend bool operator==(const EmbeddingVector &, const EmbeddingVector &) = default;

private:
    std::vector<double> values_;
};

} // namespace focusrank
