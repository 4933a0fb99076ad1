#pragma once

/// Commutative algebras over an exact field, given by structure constants.
/// Construction validates commutativity, associativity on all basis triples
/// and the unit axiom, and rejects bad tables with the offending triple.

#include <cstdint>
#include <string>
#include <vector>

#include "gradmat/common.hpp"
#include "gradmat/matrix.hpp"

namespace gradmat {

class CommutativeAlgebra {
public:
    CommutativeAlgebra() = default;

    /// constants[i][j] = coordinates of b_i * b_j.
    CommutativeAlgebra(Field base,
                       std::vector<std::vector<std::vector<Scalar>>> constants,
                       std::vector<Scalar> unit)
        : base_(std::move(base)), c_(std::move(constants)), unit_(std::move(unit)) {
        dim_ = static_cast<std::int64_t>(c_.size());
        if (dim_ < 1) throw invalid_algebra("empty structure-constant table");
        for (const auto& row : c_) {
            if (static_cast<std::int64_t>(row.size()) != dim_)
                throw invalid_algebra("ragged structure-constant table");
            for (const auto& v : row)
                if (static_cast<std::int64_t>(v.size()) != dim_)
                    throw invalid_algebra("structure-constant vector length mismatch");
        }
        if (static_cast<std::int64_t>(unit_.size()) != dim_)
            throw invalid_algebra("unit coordinate length mismatch");
        validate();
    }

    const Field& base() const { return base_; }
    std::int64_t dim() const { return dim_; }
    const std::vector<Scalar>& unit() const { return unit_; }
    const std::vector<std::vector<std::vector<Scalar>>>& constants() const { return c_; }

    std::vector<Scalar> zero_element() const {
        return std::vector<Scalar>(static_cast<std::size_t>(dim_), Scalar::zero(base_));
    }

    std::vector<Scalar> basis_element(std::int64_t i) const {
        auto v = zero_element();
        v[static_cast<std::size_t>(i)] = Scalar::one(base_);
        return v;
    }

    std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                                 const std::vector<Scalar>& b) const {
        auto out = zero_element();
        for (std::int64_t i = 0; i < dim_; ++i) {
            const Scalar& ai = a[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            for (std::int64_t j = 0; j < dim_; ++j) {
                const Scalar& bj = b[static_cast<std::size_t>(j)];
                if (bj.is_zero()) continue;
                const Scalar c = ai * bj;
                const auto& sc = c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (std::int64_t t = 0; t < dim_; ++t)
                    out[static_cast<std::size_t>(t)] =
                        out[static_cast<std::size_t>(t)] + c * sc[static_cast<std::size_t>(t)];
            }
        }
        return out;
    }

    /// Matrix of left multiplication by `a` (the regular representation).
    Matrix left_multiplication(const std::vector<Scalar>& a) const {
        Matrix m(base_, dim_, dim_);
        for (std::int64_t j = 0; j < dim_; ++j) {
            auto col = multiply(a, basis_element(j));
            for (std::int64_t i = 0; i < dim_; ++i)
                m.at(i, j) = col[static_cast<std::size_t>(i)];
        }
        return m;
    }

private:
    void validate() const {
        for (std::int64_t i = 0; i < dim_; ++i)
            for (std::int64_t j = 0; j < i; ++j)
                if (c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                    c_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                    throw invalid_algebra("not commutative at basis pair (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
        for (std::int64_t i = 0; i < dim_; ++i) {
            auto bi = basis_element(i);
            auto lu = multiply(unit_, bi);
            if (lu != bi)
                throw invalid_algebra("unit does not act as identity on basis element " +
                                      std::to_string(i));
        }
        for (std::int64_t i = 0; i < dim_; ++i)
            for (std::int64_t j = 0; j < dim_; ++j)
                for (std::int64_t t = 0; t < dim_; ++t) {
                    auto bi = basis_element(i), bj = basis_element(j), bt = basis_element(t);
                    if (multiply(multiply(bi, bj), bt) != multiply(bi, multiply(bj, bt)))
                        throw invalid_algebra("not associative at basis triple (" +
                                              std::to_string(i) + "," + std::to_string(j) + "," +
                                              std::to_string(t) + ")");
                }
    }

    Field base_;
    std::int64_t dim_ = 0;
    std::vector<std::vector<std::vector<Scalar>>> c_;
    std::vector<Scalar> unit_;
};

} // namespace gradmat
