#include "naive_oracle.hpp"

namespace oracle {

using pforge::LinMap;
using pforge::Scalar;
using pforge::StructureEnv;

namespace {

// Collects one violation per input tuple whose difference vector is nonzero.
struct Collector {
    std::vector<OracleViolation>& out;
    std::string cond_id;

    void take(std::vector<int> tuple, std::vector<Scalar> diff) {
        for (const Scalar& s : diff)
            if (!s.is_zero()) {
                out.push_back(OracleViolation{cond_id, std::move(tuple),
                                              std::move(diff)});
                return;
            }
    }
};

}  // namespace

std::vector<OracleViolation> check_pa(const StructureEnv& env,
                                      const std::string& space,
                                      const std::string& br,
                                      const std::string& mul) {
    const int n = env.dim(space);
    const LinMap& B = env.map_at(br);
    const LinMap& M = env.map_at(mul);
    auto b = [&](int k, int i, int j) { return B.at({k}, {i, j}); };
    auto m = [&](int k, int i, int j) { return M.at({k}, {i, j}); };
    const Scalar z = Scalar::zero(env.field);
    std::vector<OracleViolation> out;

    // [x,y] + [y,x] = 0
    {
        Collector c{out, "antisymmetry"};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Scalar> diff(n, z);
                for (int k = 0; k < n; ++k) diff[k] = b(k, i, j) + b(k, j, i);
                c.take({i, j}, diff);
            }
    }
    // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
    {
        Collector c{out, "jacobi"};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    std::vector<Scalar> diff(n, z);
                    for (int k = 0; k < n; ++k)
                        for (int t = 0; t < n; ++t)
                            diff[k] += b(t, i, j) * b(k, t, l) +
                                       b(t, j, l) * b(k, t, i) +
                                       b(t, l, i) * b(k, t, j);
                    c.take({i, j, l}, diff);
                }
    }
    // (xy)z = x(yz)
    {
        Collector c{out, "associativity"};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    std::vector<Scalar> diff(n, z);
                    for (int k = 0; k < n; ++k)
                        for (int t = 0; t < n; ++t)
                            diff[k] += m(t, i, j) * m(k, t, l) -
                                       m(t, j, l) * m(k, i, t);
                    c.take({i, j, l}, diff);
                }
    }
    // [x, yz] = [x,y]z + y[x,z]
    {
        Collector c{out, "leibniz"};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    std::vector<Scalar> diff(n, z);
                    for (int k = 0; k < n; ++k)
                        for (int t = 0; t < n; ++t)
                            diff[k] += m(t, j, l) * b(k, i, t) -
                                       b(t, i, j) * m(k, t, l) -
                                       b(t, i, l) * m(k, j, t);
                    c.take({i, j, l}, diff);
                }
    }
    return out;
}

std::vector<OracleViolation> check_pc(const StructureEnv& env,
                                      const std::string& space,
                                      const std::string& cobr,
                                      const std::string& cop) {
    const int n = env.dim(space);
    const LinMap& D = env.map_at(cobr);
    const LinMap& C = env.map_at(cop);
    auto d = [&](int p, int q, int i) { return D.at({p, q}, {i}); };
    auto c_ = [&](int p, int q, int i) { return C.at({p, q}, {i}); };
    const Scalar z = Scalar::zero(env.field);
    std::vector<OracleViolation> out;

    // δ + τδ = 0
    {
        Collector c{out, "co-antisymmetry"};
        for (int i = 0; i < n; ++i) {
            std::vector<Scalar> diff(n * n, z);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    diff[p * n + q] = d(p, q, i) + d(q, p, i);
            c.take({i}, diff);
        }
    }
    // cyclic sum of (δ⊗id)δ = 0
    {
        Collector c{out, "co-jacobi"};
        for (int i = 0; i < n; ++i) {
            std::vector<Scalar> diff(n * n * n, z);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r) {
                        Scalar acc = z;
                        for (int a = 0; a < n; ++a)
                            acc += d(a, r, i) * d(p, q, a) +
                                   d(a, p, i) * d(q, r, a) +
                                   d(a, q, i) * d(r, p, a);
                        diff[(p * n + q) * n + r] = acc;
                    }
            c.take({i}, diff);
        }
    }
    // (Δ⊗id)Δ = (id⊗Δ)Δ
    {
        Collector c{out, "coassociativity"};
        for (int i = 0; i < n; ++i) {
            std::vector<Scalar> diff(n * n * n, z);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r) {
                        Scalar acc = z;
                        for (int a = 0; a < n; ++a)
                            acc += c_(a, r, i) * c_(p, q, a) -
                                   c_(p, a, i) * c_(q, r, a);
                        diff[(p * n + q) * n + r] = acc;
                    }
            c.take({i}, diff);
        }
    }
    // (id⊗Δ)δ = (δ⊗id)Δ + (τ⊗id)(id⊗δ)Δ
    {
        Collector c{out, "co-leibniz"};
        for (int i = 0; i < n; ++i) {
            std::vector<Scalar> diff(n * n * n, z);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r) {
                        Scalar acc = z;
                        for (int a = 0; a < n; ++a)
                            acc += d(p, a, i) * c_(q, r, a) -
                                   c_(a, r, i) * d(p, q, a) -
                                   c_(q, a, i) * d(p, r, a);
                        diff[(p * n + q) * n + r] = acc;
                    }
            c.take({i}, diff);
        }
    }
    return out;
}

std::vector<OracleViolation> check_pb(const StructureEnv& env,
                                      const std::string& space,
                                      const std::string& br,
                                      const std::string& mul,
                                      const std::string& cobr,
                                      const std::string& cop) {
    const int n = env.dim(space);
    const LinMap& B = env.map_at(br);
    const LinMap& M = env.map_at(mul);
    const LinMap& D = env.map_at(cobr);
    const LinMap& C = env.map_at(cop);
    auto b = [&](int k, int i, int j) { return B.at({k}, {i, j}); };
    auto m = [&](int k, int i, int j) { return M.at({k}, {i, j}); };
    auto d = [&](int p, int q, int i) { return D.at({p, q}, {i}); };
    auto c_ = [&](int p, int q, int i) { return C.at({p, q}, {i}); };
    const Scalar z = Scalar::zero(env.field);
    std::vector<OracleViolation> out;

    // δ(xy) = x·y₍₁₎⊗y₍₂₎ + x₍₁₎·y⊗x₍₂₎ + y₁⊗[x,y₂] + x₂⊗[y,x₁]
    {
        Collector c{out, "LB01"};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Scalar> diff(n * n, z);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        Scalar acc = z;
                        for (int a = 0; a < n; ++a)
                            acc += m(a, i, j) * d(p, q, a) -
                                   d(a, q, j) * m(p, i, a) -
                                   d(a, q, i) * m(p, a, j) -
                                   c_(p, a, j) * b(q, i, a) -
                                   c_(a, p, i) * b(q, j, a);
                        diff[p * n + q] = acc;
                    }
                c.take({i, j}, diff);
            }
    }
    // Δ([x,y]) = [x,y₁]⊗y₂ + y₁⊗[x,y₂] + x₍₁₎·y⊗x₍₂₎ − x₍₁₎⊗y·x₍₂₎
    {
        Collector c{out, "LB02"};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Scalar> diff(n * n, z);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        Scalar acc = z;
                        for (int a = 0; a < n; ++a)
                            acc += b(a, i, j) * c_(p, q, a) -
                                   c_(a, q, j) * b(p, i, a) -
                                   c_(p, a, j) * b(q, i, a) -
                                   d(a, q, i) * m(p, a, j) +
                                   d(p, a, i) * m(q, j, a);
                        diff[p * n + q] = acc;
                    }
                c.take({i, j}, diff);
            }
    }
    return out;
}

}  // namespace oracle
