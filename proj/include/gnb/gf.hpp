#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gnb {

using Elem = std::uint32_t;
using RowVector = std::vector<Elem>;

/// The prime field Z_q. Construction rejects composite moduli.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t q);

    std::uint32_t q() const { return q_; }

    Elem reduce(std::int64_t x) const {
        auto r = x % static_cast<std::int64_t>(q_);
        return static_cast<Elem>(r < 0 ? r + q_ : r);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % q_; }
    Elem sub(Elem a, Elem b) const { return (a + q_ - b) % q_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    // Extended Euclid; a must be nonzero.
    Elem inv(Elem a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t q_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over a prime field.
class MatrixGF {
public:
    MatrixGF(PrimeField field, std::size_t rows, std::size_t cols);
    MatrixGF(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static MatrixGF identity(PrimeField field, std::size_t n);
    static MatrixGF from_rows(PrimeField field, std::size_t cols, std::span<const RowVector> rows);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Elem v) { entries_[i * cols_ + j] = field_.reduce(v); }

    std::span<const Elem> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    RowVector row_vector(std::size_t i) const {
        auto r = row(i);
        return {r.begin(), r.end()};
    }
    const std::vector<Elem>& entries() const { return entries_; }

    MatrixGF transpose() const;

    friend bool operator==(const MatrixGF&, const MatrixGF&) = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> entries_;
};

/// Reduced row-echelon form of a matrix. `basis` holds the nonzero rows.
struct Echelon {
    std::vector<RowVector> basis;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination, pivoting on the first nonzero column and
// processing rows in index order. The result is the unique RREF.
Echelon reduce(const MatrixGF& m);

std::size_t rank(const MatrixGF& m);
std::size_t nullity(const MatrixGF& m);
std::vector<RowVector> row_space_basis(const MatrixGF& m);

/// True iff the candidates and the rows of m span the same space.
bool verify_spanning_set(const MatrixGF& m, std::span<const RowVector> candidates);

/// Coordinates of v with respect to an RREF basis; nullopt if v is not in the span.
std::optional<std::vector<Elem>> coordinates_in(const Echelon& e, std::span<const Elem> v,
                                               const PrimeField& f);

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b);
MatrixGF mat_add(const MatrixGF& a, const MatrixGF& b);
MatrixGF mat_scale(const MatrixGF& a, Elem c);

/// Contents of a basis file: an RREF basis plus per-row coordinates.
struct BasisFile {
    std::uint32_t q = 0;
    std::size_t cols = 0;
    std::vector<RowVector> basis;
    std::vector<std::vector<Elem>> coords;  // one per original row
};

BasisFile make_basis_file(const MatrixGF& m);
void write_basis_file(std::ostream& os, const BasisFile& b);
BasisFile read_basis_file(std::istream& is);

}  // namespace gnb
