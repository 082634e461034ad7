#include <doctest.h>

#include <random>
#include <sstream>

#include "gnb/errors.hpp"
#include "gnb/gf.hpp"
#include "gnb/graph.hpp"
#include "gnb/named_graphs.hpp"
#include "oracles.hpp"

using namespace gnb;

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(PrimeField(4), InvalidInput);
    CHECK_THROWS_AS(PrimeField(1), InvalidInput);
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 101u}) {
        PrimeField f(q);
        for (Elem a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK_THROWS_AS(f.inv(0), InvalidInput);
    }
    PrimeField f3(3);
    CHECK(f3.reduce(-1) == 2);
    CHECK(f3.neg(1) == 2);
}

TEST_CASE("matrix construction validates entries") {
    PrimeField f(3);
    CHECK_THROWS_AS(MatrixGF(f, 2, 2, {0, 1, 2}), InvalidInput);
    CHECK_THROWS_AS(MatrixGF(f, 1, 2, {0, 3}), InvalidInput);
}

TEST_CASE("rank examples") {
    CHECK(rank(MatrixGF::identity(PrimeField(3), 100)) == 100);
    CHECK(nullity(MatrixGF::identity(PrimeField(3), 7)) == 0);
    CHECK(rank(MatrixGF(PrimeField(2), 4, 4)) == 0);
    CHECK(nullity(MatrixGF(PrimeField(2), 4, 4)) == 4);

    CHECK(rank(adjacency_shifted(higman_sims_graph(), 3, 1)) == 23);
    CHECK(nullity(adjacency_shifted(higman_sims_graph(), 3, 1)) == 77);
    CHECK(rank(adjacency_shifted(clebsch_graph(), 2, 1)) == 6);
    CHECK(rank(adjacency_shifted(hoffman_singleton_graph(), 5, 3)) == 21);
}

TEST_CASE("C5 circulant A+I over F2 has full rank (kernel oracle)") {
    auto m = adjacency_shifted(cycle_graph(5), 2, 1);
    CHECK(oracle::kernel_size(m) == 1);
    CHECK(rank(m) == 5);
}

TEST_CASE("row space basis is the reduced echelon form") {
    PrimeField f2(2), f3(3);
    auto id = row_space_basis(MatrixGF::identity(f2, 3));
    CHECK(id == std::vector<RowVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    std::vector<RowVector> single{{1, 2}};
    CHECK(row_space_basis(MatrixGF::from_rows(f3, 2, single)) == single);

    // (2 1) scales to (1 2) over F3
    std::vector<RowVector> scaled{{2, 1}};
    CHECK(row_space_basis(MatrixGF::from_rows(f3, 2, scaled)) == single);

    auto hs = row_space_basis(adjacency_shifted(higman_sims_graph(), 3, 1));
    CHECK(hs.size() == 23);
}

TEST_CASE("verify_spanning_set") {
    PrimeField f2(2);
    auto i2 = MatrixGF::identity(f2, 2);
    std::vector<RowVector> rows{{1, 0}, {0, 1}};
    CHECK(verify_spanning_set(i2, rows));
    std::vector<RowVector> small{{1, 1}};
    CHECK_FALSE(verify_spanning_set(i2, small));
    std::vector<RowVector> wrong_len{{1, 1, 0}};
    CHECK_THROWS_AS(verify_spanning_set(i2, wrong_len), InvalidInput);
    std::vector<RowVector> out_of_range{{2, 0}};
    CHECK_THROWS_AS(verify_spanning_set(i2, out_of_range), InvalidInput);
}

TEST_CASE("HS: rows over the points plus the all-ones vector span B = A+I over F3") {
    const auto& hs = higman_sims_graph();
    auto b = adjacency_shifted(hs, 3, 1);
    std::vector<RowVector> cand;
    for (Vertex x : hs.neighbor_list(0)) cand.push_back(b.row_vector(x));
    CHECK(cand.size() == 22);
    cand.push_back(RowVector(100, 1));
    CHECK(verify_spanning_set(b, cand));
    // Without j the 22 rows fall one short.
    cand.pop_back();
    CHECK_FALSE(verify_spanning_set(b, cand));
}

TEST_CASE("HS: B^2 = 2B over F3") {
    auto b = adjacency_shifted(higman_sims_graph(), 3, 1);
    CHECK(mat_mul(b, b) == mat_scale(b, 2));
}

TEST_CASE("matrix arithmetic") {
    std::mt19937_64 rng(7);
    auto m = oracle::random_matrix(rng, 5, 4, 4);
    CHECK(mat_mul(MatrixGF::identity(PrimeField(5), 4), m) == m);
    auto m2 = oracle::random_matrix(rng, 2, 3, 5);
    CHECK(mat_add(m2, m2) == MatrixGF(PrimeField(2), 3, 5));
    CHECK_THROWS_AS(mat_mul(m, m2), InvalidInput);
    CHECK_THROWS_AS(mat_add(m, oracle::random_matrix(rng, 5, 4, 3)), InvalidInput);
    CHECK_THROWS_AS(mat_add(m, oracle::random_matrix(rng, 7, 4, 4)), InvalidInput);
}

TEST_CASE("property: rank + nullity = cols, rank(M) = rank(M^T), basis spans, elimination deterministic") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 20);
    for (std::uint32_t q : {2u, 3u, 5u, 7u})
        for (int trial = 0; trial < 50; ++trial) {
            auto m = oracle::random_matrix(rng, q, dim(rng), dim(rng), trial % 2 ? 0.3 : 1.0);
            auto r = rank(m);
            CHECK(r + nullity(m) == m.cols());
            CHECK(r == rank(m.transpose()));
            auto basis = row_space_basis(m);
            CHECK(verify_spanning_set(m, basis));
            CHECK(reduce(m).basis == reduce(m).basis);
        }
}

TEST_CASE("property: rank agrees with the kernel-count oracle") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (std::uint32_t q : {2u, 3u, 5u})
        for (int trial = 0; trial < 30; ++trial) {
            auto cols = q == 5 ? std::min<std::size_t>(dim(rng), 5) : dim(rng);
            auto m = oracle::random_matrix(rng, q, dim(rng), cols, 0.5);
            CHECK(rank(m) == oracle::rank_by_kernel(m));
        }
}

TEST_CASE("basis file round trip and coordinates reconstruct rows") {
    auto m = adjacency_shifted(gewirtz_graph(), 3, 1);
    auto b = make_basis_file(m);
    CHECK(b.basis.size() == 20);
    std::ostringstream os;
    write_basis_file(os, b);
    auto text = os.str();
    CHECK(text.rfind("q 3\ndim 20 56\n", 0) == 0);
    CHECK(text.find("coords 56\n") != std::string::npos);

    std::istringstream is(text);
    auto back = read_basis_file(is);
    CHECK(back.basis == b.basis);
    CHECK(back.coords == b.coords);

    PrimeField f(3);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        RowVector rebuilt(m.cols(), 0);
        for (std::size_t k = 0; k < back.basis.size(); ++k)
            for (std::size_t j = 0; j < m.cols(); ++j)
                rebuilt[j] = f.add(rebuilt[j], f.mul(back.coords[i][k], back.basis[k][j]));
        CHECK(rebuilt == m.row_vector(i));
    }

    std::istringstream bad("q 4\ndim 0 0\ncoords 0\n");
    CHECK_THROWS_AS(read_basis_file(bad), InvalidInput);
    std::istringstream trunc("q 3\ndim 2 2\n1 0\n");
    CHECK_THROWS_AS(read_basis_file(trunc), InvalidInput);
}
