#include "gnb/gf.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>
#include <utility>

#include "gnb/errors.hpp"

namespace gnb {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw InvalidInput("field modulus " + std::to_string(q) + " is not prime");
}

Elem PrimeField::inv(Elem a) const {
    if (a % q_ == 0) throw InvalidInput("inverse of zero");
    std::int64_t r0 = q_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        auto quot = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - quot * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - quot * t1};
    }
    return reduce(t0);
}

MatrixGF::MatrixGF(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

MatrixGF::MatrixGF(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw InvalidInput("matrix entry count does not match dimensions");
    for (auto e : entries_)
        if (e >= field_.q()) throw InvalidInput("matrix entry out of field range");
}

MatrixGF MatrixGF::identity(PrimeField field, std::size_t n) {
    MatrixGF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
    return m;
}

MatrixGF MatrixGF::from_rows(PrimeField field, std::size_t cols, std::span<const RowVector> rows) {
    std::vector<Elem> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw InvalidInput("row length does not match column count");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return MatrixGF(field, rows.size(), cols, std::move(entries));
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
    return t;
}

Echelon reduce(const MatrixGF& m) {
    const auto& f = m.field();
    std::vector<RowVector> work;
    work.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) work.push_back(m.row_vector(i));

    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < work.size(); ++c) {
        std::size_t p = r;
        while (p < work.size() && work[p][c] == 0) ++p;
        if (p == work.size()) continue;
        std::swap(work[r], work[p]);

        auto scale = f.inv(work[r][c]);
        for (auto& x : work[r]) x = f.mul(x, scale);

        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == r || work[i][c] == 0) continue;
            auto factor = work[i][c];
            for (std::size_t j = c; j < m.cols(); ++j)
                work[i][j] = f.sub(work[i][j], f.mul(factor, work[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    work.resize(r);
    out.basis = std::move(work);

    return out;
}

std::size_t rank(const MatrixGF& m) { return reduce(m).basis.size(); }

std::size_t nullity(const MatrixGF& m) { return m.cols() - rank(m); }

std::vector<RowVector> row_space_basis(const MatrixGF& m) { return reduce(m).basis; }

std::optional<std::vector<Elem>> coordinates_in(const Echelon& e, std::span<const Elem> v,
                                               const PrimeField& f) {
    // In RREF the coordinate on basis row k is v's entry at pivot k.
    std::vector<Elem> coords(e.basis.size());
    RowVector residual(v.begin(), v.end());
    for (std::size_t k = 0; k < e.basis.size(); ++k) {
        coords[k] = v[e.pivots[k]];
        for (std::size_t j = 0; j < residual.size(); ++j)
            residual[j] = f.sub(residual[j], f.mul(coords[k], e.basis[k][j]));
    }
    for (auto x : residual)
        if (x != 0) return std::nullopt;
    return coords;
}

bool verify_spanning_set(const MatrixGF& m, std::span<const RowVector> candidates) {
    for (const auto& c : candidates) {
        if (c.size() != m.cols()) throw InvalidInput("candidate length does not match column count");
        for (auto x : c)
            if (x >= m.field().q()) throw InvalidInput("candidate entry out of field range");
    }
    auto mine = reduce(m);
    auto theirs = reduce(MatrixGF::from_rows(m.field(), m.cols(), candidates));
    // Equal RREF means equal row spaces.
    return mine.basis == theirs.basis;
}

namespace {

void require_same_field(const MatrixGF& a, const MatrixGF& b) {
    if (!(a.field() == b.field())) throw InvalidInput("matrices are over different fields");
}

}  // namespace

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
    const auto& f = a.field();
    std::vector<Elem> out(a.rows() * b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            auto aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                auto& o = out[i * b.cols() + j];
                o = f.add(o, f.mul(aik, b.at(k, j)));
            }
        }
    return MatrixGF(f, a.rows(), b.cols(), std::move(out));
}

MatrixGF mat_add(const MatrixGF& a, const MatrixGF& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum dimension mismatch");
    std::vector<Elem> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().add(a.entries()[i], b.entries()[i]);
    return MatrixGF(a.field(), a.rows(), a.cols(), std::move(out));
}

MatrixGF mat_scale(const MatrixGF& a, Elem c) {
    c = a.field().reduce(c);
    std::vector<Elem> out(a.entries().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().mul(a.entries()[i], c);
    return MatrixGF(a.field(), a.rows(), a.cols(), std::move(out));
}

BasisFile make_basis_file(const MatrixGF& m) {
    auto e = reduce(m);
    BasisFile b;
    b.q = m.field().q();
    b.cols = m.cols();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto c = coordinates_in(e, m.row(i), m.field());
        if (!c) throw ConstructionFault("row not in its own row space");
        b.coords.push_back(std::move(*c));
    }
    b.basis = std::move(e.basis);
    return b;
}

namespace {

void write_row(std::ostream& os, std::span<const Elem> r) {
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (j) os << ' ';
        os << r[j];
    }
    os << '\n';
}

std::vector<Elem> read_row(std::istream& is, std::size_t len, std::uint32_t q) {
    std::string line;
    if (!std::getline(is, line)) throw InvalidInput("basis file truncated");
    std::istringstream ls(line);
    std::vector<Elem> r;
    Elem x;
    while (ls >> x) {
        if (x >= q) throw InvalidInput("basis file entry out of field range");
        r.push_back(x);
    }
    if (r.size() != len) throw InvalidInput("basis file row has wrong length");
    return r;
}

}  // namespace

void write_basis_file(std::ostream& os, const BasisFile& b) {
    os << "q " << b.q << '\n';
    os << "dim " << b.basis.size() << ' ' << b.cols << '\n';
    for (const auto& r : b.basis) write_row(os, r);
    os << "coords " << b.coords.size() << '\n';
    for (const auto& c : b.coords) write_row(os, c);
}

BasisFile read_basis_file(std::istream& is) {
    BasisFile b;
    std::string tag, line;
    std::size_t rows = 0, n_coords = 0;
    if (!(is >> tag >> b.q) || tag != "q") throw InvalidInput("basis file: expected 'q <modulus>'");
    if (!(is >> tag >> rows >> b.cols) || tag != "dim") throw InvalidInput("basis file: expected 'dim <rows> <cols>'");
    std::getline(is, line);
    PrimeField f(b.q);
    for (std::size_t i = 0; i < rows; ++i) b.basis.push_back(read_row(is, b.cols, f.q()));
    if (!(is >> tag >> n_coords) || tag != "coords") throw InvalidInput("basis file: expected 'coords <count>'");
    std::getline(is, line);
    for (std::size_t i = 0; i < n_coords; ++i) b.coords.push_back(read_row(is, rows, f.q()));
    return b;
}

}  // namespace gnb
