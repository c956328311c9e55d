// Compares the serial elimination and multiplication kernels against the
// OpenMP variants on random rational matrices: wall time plus a bit-for-bit
// agreement check. Fixed seed, so runs are reproducible.
#include <chrono>
#include <cstddef>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "qha/matrix.hpp"
#include "qha/rational.hpp"

using qha::exactla::Echelon;
using qha::exactla::Matrix;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = qha::exactla::frac(num(rng), den(rng));
    return m;
}

template <typename F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel benchmark"};
    std::size_t n = 96;
    std::size_t trials = 3;
    unsigned long seed = 7;
    app.add_option("--n", n, "matrix side length");
    app.add_option("--trials", trials, "repetitions per kernel");
    app.add_option("--seed", seed, "random seed");
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    Matrix a = random_matrix(rng, n, n);
    Matrix b = random_matrix(rng, n, n);

    Matrix prod_serial, prod_par;
    double t_mul_serial = 0, t_mul_par = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        t_mul_serial += seconds([&] { prod_serial = qha::exactla::mul_serial(a, b); });
        t_mul_par += seconds([&] { prod_par = qha::exactla::mul(a, b); });
    }
    const bool mul_agree = prod_serial == prod_par;

    Echelon ech_serial, ech_par;
    double t_rref_serial = 0, t_rref_par = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        t_rref_serial += seconds([&] { ech_serial = qha::exactla::rref_serial(a); });
        t_rref_par += seconds([&] { ech_par = qha::exactla::rref(a); });
    }
    const bool rref_agree =
        ech_serial.mat == ech_par.mat && ech_serial.pivots == ech_par.pivots;

    std::cout << "n=" << n << " trials=" << trials << "\n";
    std::cout << "mul   serial " << t_mul_serial / trials << "s  parallel " << t_mul_par / trials
              << "s  agree " << (mul_agree ? "yes" : "NO") << "\n";
    std::cout << "rref  serial " << t_rref_serial / trials << "s  parallel "
              << t_rref_par / trials << "s  agree " << (rref_agree ? "yes" : "NO") << "\n";
    return (mul_agree && rref_agree) ? 0 : 1;
}
