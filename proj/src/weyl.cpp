#include "cpdirac/weyl.hpp"

#include <sstream>

namespace cpdirac {

namespace {

std::string weight_repr(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

} // namespace

RootSystem root_system(Int d) {
    if (d < 1)
        throw ValidationError("root_system: d must be >= 1");
    RootSystem rs;
    rs.d = d;
    rs.positive_roots.reserve(static_cast<size_t>(d * (d + 1) / 2));
    for (Int j = 0; j < d; ++j)
        for (Int k = j + 1; k < d; ++k) {
            Weight w(static_cast<size_t>(d), 0);
            w[static_cast<size_t>(j)] = 1;
            w[static_cast<size_t>(k)] = -1;
            rs.positive_roots.push_back(std::move(w));
        }
    for (Int j = 0; j < d; ++j) {
        Weight w(static_cast<size_t>(d), 1);
        w[static_cast<size_t>(j)] = 2;
        rs.positive_roots.push_back(std::move(w));
    }
    rs.delta_plus.resize(static_cast<size_t>(d));
    for (Int k = 0; k < d; ++k)
        rs.delta_plus[static_cast<size_t>(k)] = d - k;
    return rs;
}

Rational inner(Int d, const Weight& u, const Weight& v) {
    if (static_cast<Int>(u.size()) != d || static_cast<Int>(v.size()) != d)
        throw ValidationError("inner: weight length mismatch");
    BigInt acc = 0;
    for (Int j = 0; j < d; ++j)
        for (Int k = 0; k < d; ++k) {
            const Int beta_scaled = (j == k ? d : -1); // (d+1) delta_jk - 1
            acc += BigInt(u[static_cast<size_t>(j)]) * v[static_cast<size_t>(k)] * beta_scaled;
        }
    return rational_reduce(2 * acc, d + 1);
}

BigInt weyl_dim(Int d, const Weight& lambda) {
    if (static_cast<Int>(lambda.size()) != d)
        throw ValidationError("weyl_dim: weight length mismatch");
    const RootSystem rs = root_system(d);
    Rational product = 1;
    for (const Weight& alpha : rs.positive_roots) {
        // <delta_plus, alpha> is 2(k-j) resp. 2(d-j+1), never zero.
        product *= 1 + inner(d, lambda, alpha) / inner(d, rs.delta_plus, alpha);
    }
    return require_positive_integer(product, "weyl_dim of inadmissible weight " + weight_repr(lambda));
}

} // namespace cpdirac
