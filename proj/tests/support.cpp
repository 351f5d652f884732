#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <cstring>
#include <string>

namespace qaw::testing {

namespace {
std::uint64_t g_seed = 0;
}

std::uint64_t seed() { return g_seed; }

Rational eval_at(const Scalar& s, const Rational& t_value) {
    return s.numerator().eval_exact(t_value, 1) / s.denominator().eval_exact(t_value, 1);
}

Rational eval_at(const XPoly& f, const Rational& t_value, const Rational& x0) {
    Rational acc = 0;
    const auto& coeffs = f.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x0 + eval_at(*it, t_value);
    }
    return acc;
}

ExactLattice lattice_oracle(const XPoly& f, const Rational& t_value, const Rational& z0) {
    const auto x_of = [](const Rational& z) { return Rational((z + 1 / z) / 2); };
    const Rational t2 = t_value * t_value;
    const Rational xp = x_of(z0 * t2);
    const Rational xm = x_of(z0 / t2);
    const Rational fp = eval_at(f, t_value, xp);
    const Rational fm = eval_at(f, t_value, xm);
    return ExactLattice{(fp - fm) / (xp - xm), (fp + fm) / 2, x_of(z0)};
}

}  // namespace qaw::testing

int main(int argc, char** argv) {
    // Strip --seed=N / --seed N before gtest sees the arguments.
    std::vector<char*> args;
    for (int i = 0; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            qaw::testing::g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            qaw::testing::g_seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            args.push_back(argv[i]);
        }
    }
    int count = static_cast<int>(args.size());
    ::testing::InitGoogleTest(&count, args.data());
    return RUN_ALL_TESTS();
}
