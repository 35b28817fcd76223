#include "takagi/takagi.hpp"

namespace takagi {

namespace {

template <class T>
T residual_impl(const T& x, std::size_t N, const EvalParams& p) {
    if (N < 1) throw std::invalid_argument("functional_equation_residual: N >= 1");
    auto [lhs, err1] = t_v(x, p);
    T partial = s_vn(x, T(p.v), N - 1);
    T y = x;
    for (std::size_t i = 0; i < N; ++i) y = detail::dup(y);
    auto [tail, err2] = t_v(y, p);
    T vn = detail::pow_n(T(p.v), N);
    T r = lhs - partial - vn * tail;
    return r < 0 ? T(-r) : r;
}

}  // namespace

double functional_equation_residual(double x, std::size_t N, const EvalParams& p) {
    return residual_impl(x, N, p);
}

Real functional_equation_residual(const Real& x, std::size_t N, const EvalParams& p) {
    return residual_impl(x, N, p);
}

}  // namespace takagi
