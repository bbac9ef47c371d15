// Shared domain types and error taxonomy.
#ifndef XIV_TYPES_HPP
#define XIV_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace xiv {

using cplx = std::complex<double>;

// Thrown when an argument is outside an operation's domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when an argument hits a pole of the function.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when a series or quadrature cannot reach the requested tolerance
// within its node/term budget.
class tolerance_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(cplx z, const char* what) {
    if (!is_finite(z))
        throw domain_error(std::string(what) + ": non-finite argument");
}

// A point sigma + i tau strictly inside the critical strip 0 < sigma < 1.
struct StripPoint {
    double sigma;
    double tau;

    StripPoint(double s, double t) : sigma(s), tau(t) {
        if (!(s > 0.0 && s < 1.0) || !std::isfinite(t))
            throw domain_error("StripPoint: need 0 < sigma < 1 and finite tau");
    }
    explicit StripPoint(cplx rho) : StripPoint(rho.real(), rho.imag()) {}

    cplx as_complex() const { return {sigma, tau}; }
    // alpha + i beta = rho (1 - rho)
    double alpha() const { return sigma * (1.0 - sigma) + tau * tau; }
    double beta() const { return (1.0 - 2.0 * sigma) * tau; }
};

// Value of a truncated series together with a certified bound on the
// discarded tail.
struct SeriesEvaluation {
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
};

// Compensated (Kahan) accumulator; works for double and std::complex<double>.
template <typename T>
class KahanSum {
public:
    void add(T x) {
        T y = x - comp_;
        T t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }

private:
    T sum_{};
    T comp_{};
};

} // namespace xiv

#endif
