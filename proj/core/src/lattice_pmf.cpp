#include "uniqmax/lattice_pmf.hpp"

#include "uniqmax/errors.hpp"

namespace uniqmax {

const char* to_string(Mode mode) {
    return mode == Mode::exact ? "exact" : "binary64";
}

LatticePmf LatticePmf::exact(int k, int n_games, std::vector<Integer> numerators, Integer denominator) {
    LatticePmf pmf;
    pmf.k_ = k;
    pmf.n_games_ = n_games;
    pmf.mode_ = Mode::exact;
    pmf.numerators_ = std::move(numerators);
    pmf.denominator_ = std::move(denominator);
    return pmf;
}

LatticePmf LatticePmf::binary64(int k, int n_games, std::vector<double> masses, double drift) {
    LatticePmf pmf;
    pmf.k_ = k;
    pmf.n_games_ = n_games;
    pmf.mode_ = Mode::binary64;
    pmf.masses_ = std::move(masses);
    pmf.drift_ = drift;
    return pmf;
}

std::size_t LatticePmf::size() const {
    return static_cast<std::size_t>(k_) * static_cast<std::size_t>(n_games_) + 1;
}

double LatticePmf::mass(long long y) const {
    if (y < 0 || y > max_y()) {
        return 0.0;
    }
    if (mode_ == Mode::binary64) {
        return masses_[static_cast<std::size_t>(y)];
    }
    return to_double(exact_mass(y));
}

Rational LatticePmf::exact_mass(long long y) const {
    if (mode_ != Mode::exact) {
        throw Error("exact_mass requested from a binary64 PMF");
    }
    if (y < 0 || y > max_y()) {
        return 0;
    }
    Rational r(numerators_[static_cast<std::size_t>(y)], denominator_);
    r.canonicalize();
    return r;
}

}  // namespace uniqmax
