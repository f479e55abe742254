#include "wittsuper/weight.hpp"

namespace wittsuper {

namespace {
void enumerate_nonneg(int m, int cap, Root& cur, int pos, std::vector<Root>& out) {
    if (pos == m) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int i = 0; i < pos; ++i) used += std::max(cur[i], 0);
    for (int v = 0; v + used <= cap; ++v) {
        cur[pos] = v;
        enumerate_nonneg(m, cap, cur, pos + 1, out);
    }
    cur[pos] = 0;
}
}  // namespace

RootSystem root_set(int m, int cap) {
    if (m < 1 || cap < 1) fail(ErrorKind::BadInput, "root_set needs m >= 1, cap >= 1");
    RootSystem rs;
    rs.m = m;
    rs.cap = cap;
    // shape sum s_j eps_j
    Root cur(m, 0);
    std::vector<Root> nonneg;
    enumerate_nonneg(m, cap, cur, 0, nonneg);
    for (const Root& r : nonneg)
        if (!is_zero_root(r)) rs.delta.push_back(r);
    // shape -eps_i + sum_{j != i} s_j eps_j, coordinate sum <= cap
    for (int i = 1; i <= m; ++i) {
        std::vector<Root> rest;
        Root cur2(m, 0);
        enumerate_nonneg(m, cap + 1, cur2, 0, rest);  // sum of s_j <= cap + 1
        for (Root r : rest) {
            if (r[i - 1] != 0) continue;
            r[i - 1] = -1;
            rs.delta.push_back(r);
        }
    }
    std::sort(rs.delta.begin(), rs.delta.end());
    rs.delta.erase(std::unique(rs.delta.begin(), rs.delta.end()), rs.delta.end());
    for (int i = 1; i <= m; ++i) {
        rs.delta_prime.push_back(eps(i, m));
        rs.delta_prime.push_back(negate(eps(i, m)));
        for (int j = 1; j <= m; ++j)
            if (i != j) {
                Root r = add_roots(eps(i, m), negate(eps(j, m)));
                rs.delta_prime.push_back(r);
                rs.delta_dprime.push_back(r);
            }
    }
    std::sort(rs.delta_prime.begin(), rs.delta_prime.end());
    std::sort(rs.delta_dprime.begin(), rs.delta_dprime.end());
    return rs;
}

std::vector<SlBasisElement> sl_embedding(int m) {
    if (m < 1) fail(ErrorKind::BadInput, "sl_embedding needs m >= 1");
    Signature sig{m, 0};
    std::vector<SlBasisElement> out;
    auto mono = [&](const Root& a) {
        SuperMonomial x;
        x.alpha.assign(a.begin(), a.end());
        return x;
    };
    for (int i = 1; i <= m; ++i)
        out.push_back({"d" + std::to_string(i), Root(m, 0),
                       VectorField::basis(sig, mono(eps(i, m)), i)});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i == j) continue;
            out.push_back({"e" + std::to_string(i) + "-" + std::to_string(j),
                           add_roots(eps(i, m), negate(eps(j, m))),
                           VectorField::basis(sig, mono(eps(i, m)), j)});
        }
    for (int i = 1; i <= m; ++i) {
        VectorField e(sig);
        for (int j = 1; j <= m; ++j) {
            Root a = add_roots(eps(i, m), eps(j, m));
            e.add_term(mono(a), j, Rational(-1));
        }
        out.push_back({"e+" + std::to_string(i), eps(i, m), e});
    }
    for (int i = 1; i <= m; ++i)
        out.push_back({"e-" + std::to_string(i), negate(eps(i, m)),
                       VectorField::basis(sig, mono(Root(m, 0)), i)});
    return out;
}

}  // namespace wittsuper
