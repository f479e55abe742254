#include "wittsuper/glreps.hpp"

#include <algorithm>
#include <functional>

#include "wittsuper/linalg.hpp"

namespace wittsuper {

namespace {

int parity_of_unit(const Signature& gl, int i, int j) { return ((i > gl.m ? 1 : 0) + (j > gl.m ? 1 : 0)) & 1; }

}  // namespace

bool FinDimModule::check_brackets(std::string* firstfail) const {
    int N = gl.total();
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            for (int c = 1; c <= N; ++c)
                for (int d = 1; d <= N; ++d) {
                    int pab = parity_of_unit(gl, a, b), pcd = parity_of_unit(gl, c, d);
                    int comm = (pab && pcd) ? -1 : 1;  // (-1)^{|E_ab||E_cd|}
                    for (int col = 0; col < dim(); ++col) {
                        // lhs: action of [E_ab, E_cd] = d_bc E_ad - comm d_da E_cb
                        std::map<int, Rational> lhs;
                        if (b == c)
                            for (const auto& [r, e] : act_unit(a, d, col)) lhs[r] += e;
                        if (d == a)
                            for (const auto& [r, e] : act_unit(c, b, col)) lhs[r] -= e * comm;
                        // rhs: M_ab M_cd - comm M_cd M_ab on basis col
                        std::map<int, Rational> rhs;
                        for (const auto& [mid, e] : act_unit(c, d, col))
                            for (const auto& [r, f] : act_unit(a, b, mid)) rhs[r] += e * f;
                        for (const auto& [mid, e] : act_unit(a, b, col))
                            for (const auto& [r, f] : act_unit(c, d, mid)) rhs[r] -= e * f * comm;
                        for (auto it = lhs.begin(); it != lhs.end();) {
                            if (it->second == 0)
                                it = lhs.erase(it);
                            else
                                ++it;
                        }
                        for (auto it = rhs.begin(); it != rhs.end();) {
                            if (it->second == 0)
                                it = rhs.erase(it);
                            else
                                ++it;
                        }
                        if (lhs != rhs) {
                            if (firstfail)
                                *firstfail = "bracket mismatch at E(" + std::to_string(a) + "," + std::to_string(b) +
                                             "),E(" + std::to_string(c) + "," + std::to_string(d) + ") col " +
                                             std::to_string(col);
                            return false;
                        }
                    }
                }
    return true;
}

bool FinDimModule::check_weights(std::string* firstfail) const {
    int N = gl.total();
    for (int i = 1; i <= N; ++i)
        for (int col = 0; col < dim(); ++col) {
            std::map<int, Rational> v = act_unit(i, i, col);
            Rational expect = weights[static_cast<size_t>(col)][static_cast<size_t>(i - 1)];
            std::map<int, Rational> want;
            if (expect != 0) want[col] = expect;
            if (v != want) {
                if (firstfail) *firstfail = "diagonal action mismatch at i=" + std::to_string(i);
                return false;
            }
        }
    return true;
}

FinDimModule str_module(Signature gl, bool parity) {
    FinDimModule M;
    M.gl = gl;
    Weight w;
    for (int i = 1; i <= gl.total(); ++i) w.push_back(i <= gl.m ? Rational(1) : Rational(-1));
    M.weights.push_back(w);
    M.parities.push_back(parity ? 1 : 0);
    for (int i = 1; i <= gl.total(); ++i) M.add_entry(i, i, 0, 0, i <= gl.m ? Rational(1) : Rational(-1));
    return M;
}

FinDimModule gl0_character(Signature gl, const Weight& wt) {
    FinDimModule M;
    M.gl = gl;
    M.weights.push_back(wt);
    M.parities.push_back(0);
    for (int i = 1; i <= gl.total(); ++i)
        if (wt[static_cast<size_t>(i - 1)] != 0) M.add_entry(i, i, 0, 0, wt[static_cast<size_t>(i - 1)]);
    return M;
}

FinDimModule gl0_natural_even(Signature gl) {
    FinDimModule M;
    M.gl = gl;
    for (int b = 0; b < gl.m; ++b) {
        Weight w(static_cast<size_t>(gl.total()), Rational(0));
        w[static_cast<size_t>(b)] = 1;
        M.weights.push_back(w);
        M.parities.push_back(0);
    }
    for (int i = 1; i <= gl.m; ++i)
        for (int j = 1; j <= gl.m; ++j) M.add_entry(i, j, i - 1, j - 1, Rational(1));
    return M;
}

namespace {

struct KacGens {
    // gl^{-1} generators (r, c) = (m+j, i) ordered by (r, c)
    std::vector<std::pair<int, int>> gens;
    int pos(int r, int c) const {
        auto it = std::find(gens.begin(), gens.end(), std::make_pair(r, c));
        return it == gens.end() ? -1 : static_cast<int>(it - gens.begin());
    }
};

using KacState = std::pair<std::vector<int>, int>;  // (sorted gen positions, V index)
using KacVec = std::map<KacState, Rational>;

void kacvec_add(KacVec& v, const KacState& s, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = v.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

// wedge-prepend generator g: lambda_g ^ lambda_T
int wedge_sign(const std::vector<int>& T, int g, std::vector<int>& out) {
    auto it = std::lower_bound(T.begin(), T.end(), g);
    if (it != T.end() && *it == g) return 0;
    size_t before = static_cast<size_t>(it - T.begin());
    out = T;
    out.insert(out.begin() + static_cast<long>(before), g);
    return before % 2 == 0 ? 1 : -1;
}

struct KacBuilder {
    const FinDimModule& V;
    Signature gl;
    KacGens gens;

    // [E_ab, E_rc] restricted to gl^{-1} letters, even E_ab.
    std::vector<std::pair<std::pair<int, int>, int>> even_bracket(int a, int b, int r, int c) const {
        std::vector<std::pair<std::pair<int, int>, int>> out;
        if (b == r) out.push_back({{a, c}, 1});
        if (c == a) out.push_back({{r, b}, -1});
        return out;
    }

    KacVec act(int a, int b, const KacState& s) const {
        KacVec out;
        const auto& [T, vi] = s;
        bool a_odd_row = a > gl.m, b_odd_col = b > gl.m;
        if (a_odd_row && !b_odd_col) {
            // gl^{-1}: wedge from the left
            int g = gens.pos(a, b);
            std::vector<int> T2;
            int s2 = wedge_sign(T, g, T2);
            if (s2 != 0) kacvec_add(out, {T2, vi}, Rational(s2));
            return out;
        }
        if (a_odd_row == b_odd_col) {
            // gl^0: replace factors, then act on V
            for (size_t p = 0; p < T.size(); ++p) {
                auto [r, c] = gens.gens[static_cast<size_t>(T[p])];
                for (const auto& [unit, sgn] : even_bracket(a, b, r, c)) {
                    int g2 = gens.pos(unit.first, unit.second);
                    if (g2 < 0) continue;  // left gl^{-1}
                    std::vector<int> rest;
                    for (size_t q2 = 0; q2 < T.size(); ++q2)
                        if (q2 != p) rest.push_back(T[q2]);
                    // factor replaced in place at position p, then resorted
                    auto ins = std::lower_bound(rest.begin(), rest.end(), g2);
                    if (ins != rest.end() && *ins == g2) continue;  // repeated wedge factor
                    size_t qpos = static_cast<size_t>(ins - rest.begin());
                    std::vector<int> T2 = rest;
                    T2.insert(T2.begin() + static_cast<long>(qpos), g2);
                    int move = static_cast<int>(p) - static_cast<int>(qpos);
                    int s2 = (std::abs(move) % 2 == 0) ? 1 : -1;
                    kacvec_add(out, {T2, vi}, Rational(sgn * s2));
                }
            }
            for (const auto& [r, e] : V.act_unit(a, b, vi)) kacvec_add(out, {T, r}, e);
            return out;
        }
        // gl^1 (odd): x (g ^ R ox v) = -g (x (R ox v)) + [x,g](R ox v); x kills V.
        if (T.empty()) return out;
        int g = T.front();
        std::vector<int> R(T.begin() + 1, T.end());
        KacVec inner = act(a, b, {R, vi});
        for (const auto& [st, c] : inner) {
            std::vector<int> T2;
            int s2 = wedge_sign(st.first, g, T2);
            if (s2 != 0) kacvec_add(out, {T2, st.second}, -c * s2);
        }
        auto [r, c] = gens.gens[static_cast<size_t>(g)];
        // anticommutator [E_ab, E_rc]+ = d_br E_ac + d_ca E_rb (both in gl^0)
        std::vector<std::pair<std::pair<int, int>, int>> units;
        if (b == r) units.push_back({{a, c}, 1});
        if (c == a) units.push_back({{r, b}, 1});
        for (const auto& [unit, sgn] : units) {
            KacVec part = act(unit.first, unit.second, {R, vi});
            for (const auto& [st, cc] : part) kacvec_add(out, st, cc * sgn);
        }
        return out;
    }
};

}  // namespace

FinDimModule kac_module(const FinDimModule& V) {
    const Signature gl = V.gl;
    // V must be a gl^0 module extended by zero: no odd-unit action entries.
    for (const auto& [unit, mat] : V.action) {
        if (mat.empty()) continue;
        if (parity_of_unit(gl, unit.first, unit.second))
            fail(ErrorKind::GradationError, "input module acts by odd units");
    }
    for (int p : V.parities)
        if (p != 0) fail(ErrorKind::GradationError, "gl^0 input must sit in even parity");

    KacBuilder kb{V, gl, {}};
    for (int j = 1; j <= gl.n; ++j)
        for (int i = 1; i <= gl.m; ++i) kb.gens.gens.push_back({gl.m + j, i});
    int ng = static_cast<int>(kb.gens.gens.size());

    // basis: subsets (as sorted position lists) x V basis, subset-major
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < (1 << ng); ++mask) {
        std::vector<int> T;
        for (int g = 0; g < ng; ++g)
            if (mask & (1 << g)) T.push_back(g);
        subsets.push_back(T);
    }
    std::sort(subsets.begin(), subsets.end());
    std::map<KacState, int> index;
    FinDimModule K;
    K.gl = gl;
    for (const auto& T : subsets)
        for (int vi = 0; vi < V.dim(); ++vi) {
            index[{T, vi}] = K.dim();
            Weight w = V.weights[static_cast<size_t>(vi)];
            for (int g : T) {
                auto [r, c] = kb.gens.gens[static_cast<size_t>(g)];
                w[static_cast<size_t>(r - 1)] += 1;
                w[static_cast<size_t>(c - 1)] -= 1;
            }
            K.weights.push_back(w);
            K.parities.push_back((static_cast<int>(T.size()) + V.parities[static_cast<size_t>(vi)]) & 1);
            if (T.empty()) K.kac_top.push_back(index[{T, vi}]);
        }
    for (int a = 1; a <= gl.total(); ++a)
        for (int b = 1; b <= gl.total(); ++b)
            for (const auto& [state, col] : index) {
                KacVec img = kb.act(a, b, state);
                for (const auto& [st, c] : img) K.add_entry(a, b, index.at(st), col, c);
            }
    return K;
}

SimpleTopResult simple_top(const FinDimModule& K) {
    if (K.kac_top.empty()) fail(ErrorKind::NotAKacModule, "module carries no generating top copy");
    const int N = K.dim();
    SimpleTopResult res;

    // group basis indices by weight (and parity)
    std::map<std::pair<Weight, int>, std::vector<int>> spaces;
    for (int b = 0; b < N; ++b) spaces[{K.weights[static_cast<size_t>(b)], K.parities[static_cast<size_t>(b)]}].push_back(b);

    std::vector<std::vector<Rational>> candidates;
    for (const auto& [wt, members] : spaces) {
        if (members.size() > 3) res.sweep_exhaustive = false;
        for (size_t i = 0; i < members.size(); ++i) {
            std::vector<Rational> v(static_cast<size_t>(N), Rational(0));
            v[static_cast<size_t>(members[i])] = 1;
            candidates.push_back(v);
            for (size_t j = i + 1; j < members.size(); ++j) {
                std::vector<Rational> u = v;
                u[static_cast<size_t>(members[j])] = 1;
                candidates.push_back(u);
            }
        }
    }

    RowSpace radical(static_cast<size_t>(N));
    for (const auto& cand : candidates) {
        // generate U(gl) . cand by closing under all unit actions
        RowSpace span(static_cast<size_t>(N));
        span.insert(cand);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<Rational>> rows = span.rows();
            for (const auto& row : rows)
                for (int a = 1; a <= K.gl.total(); ++a)
                    for (int b = 1; b <= K.gl.total(); ++b) {
                        auto it = K.action.find({a, b});
                        if (it == K.action.end()) continue;
                        std::vector<Rational> img(static_cast<size_t>(N), Rational(0));
                        bool nonzero = false;
                        for (int col = 0; col < N; ++col) {
                            if (row[static_cast<size_t>(col)] == 0) continue;
                            auto jt = it->second.find(col);
                            if (jt == it->second.end()) continue;
                            for (const auto& [r, e] : jt->second) {
                                img[static_cast<size_t>(r)] += row[static_cast<size_t>(col)] * e;
                                nonzero = true;
                            }
                        }
                        if (nonzero && span.insert(img)) grew = true;
                    }
        }
        // keep the submodule only if it misses the generating copy entirely
        RowSpace joint(static_cast<size_t>(N));
        for (const auto& row : span.rows()) joint.insert(row);
        bool meets_top = false;
        for (int t : K.kac_top) {
            std::vector<Rational> unit(static_cast<size_t>(N), Rational(0));
            unit[static_cast<size_t>(t)] = 1;
            if (!joint.insert(unit)) {
                meets_top = true;
                break;
            }
        }
        if (!meets_top) {
            // also reject if the span hits a combination of top vectors
            RowSpace tops(static_cast<size_t>(N));
            for (int t : K.kac_top) {
                std::vector<Rational> unit(static_cast<size_t>(N), Rational(0));
                unit[static_cast<size_t>(t)] = 1;
                tops.insert(unit);
            }
            size_t expect = span.rank() + tops.rank();
            RowSpace both(static_cast<size_t>(N));
            for (const auto& row : span.rows()) both.insert(row);
            for (const auto& row : tops.rows()) both.insert(row);
            if (both.rank() == expect)
                for (const auto& row : span.rows()) radical.insert(row);
        }
    }

    res.radical_dim = static_cast<int>(radical.rank());
    // sanity: the radical itself must avoid the top copy
    {
        RowSpace both(static_cast<size_t>(N));
        for (const auto& row : radical.rows()) both.insert(row);
        for (int t : K.kac_top) {
            std::vector<Rational> unit(static_cast<size_t>(N), Rational(0));
            unit[static_cast<size_t>(t)] = 1;
            if (!both.insert(unit)) fail(ErrorKind::NotAKacModule, "radical sweep met the generating copy");
        }
    }

    // quotient by the radical: representatives are the non-pivot coordinates
    std::vector<bool> is_pivot(static_cast<size_t>(N), false);
    {
        // recover pivots from the reduced rows
        for (const auto& row : radical.rows())
            for (int c = 0; c < N; ++c)
                if (row[static_cast<size_t>(c)] != 0) {
                    is_pivot[static_cast<size_t>(c)] = true;
                    break;
                }
    }
    std::vector<int> reps;
    for (int c = 0; c < N; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) reps.push_back(c);
    std::map<int, int> rep_index;
    for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

    FinDimModule L;
    L.gl = K.gl;
    for (int c : reps) {
        L.weights.push_back(K.weights[static_cast<size_t>(c)]);
        L.parities.push_back(K.parities[static_cast<size_t>(c)]);
    }
    for (const auto& [unit, mat] : K.action) {
        (void)mat;
        for (size_t ci = 0; ci < reps.size(); ++ci) {
            std::map<int, Rational> img = K.act_unit(unit.first, unit.second, reps[ci]);
            std::vector<Rational> v(static_cast<size_t>(N), Rational(0));
            for (const auto& [r, e] : img) v[static_cast<size_t>(r)] = e;
            v = radical.reduced(std::move(v));
            for (int r = 0; r < N; ++r)
                if (v[static_cast<size_t>(r)] != 0)
                    L.add_entry(unit.first, unit.second, rep_index.at(r), static_cast<int>(ci),
                                v[static_cast<size_t>(r)]);
        }
    }
    // carry the generating copy through when it survives intact (radical = 0)
    if (res.radical_dim == 0) L.kac_top = K.kac_top;
    if (K.fund) L.fund = K.fund;
    res.module = std::move(L);
    return res;
}

bool fundamental_is_finite(const ModuleDescriptor& base) {
    return base.is_all_polynomial() || base.is_all_laurent_quotient();
}

FinDimModule realize_fundamental(const ModuleDescriptor& base, const Rational& level, Signature gl) {
    base.validate();
    if (base.sig.m != gl.n || base.sig.n != gl.m)
        fail(ErrorKind::BadInput, "fundamental base must live over K_{n,m}");
    if (!fundamental_is_finite(base))
        fail(ErrorKind::BadInput, "only A / A^sigma bases materialize; others stay symbolic");
    const int ne = base.sig.m;  // even coords of the base
    const int no = base.sig.n;  // odd coords of the base
    FinDimModule M;
    M.gl = gl;
    FundRealization fr{base, level, {}};

    std::vector<PState> states;
    for (int mask = 0; mask < (1 << no); ++mask) {
        OddSet O;
        for (int j = 1; j <= no; ++j)
            if (mask & (1 << (j - 1))) O.push_back(j);
        Rational target;
        if (base.is_all_polynomial())
            target = level - Rational(static_cast<int>(O.size()));
        else
            target = Rational(static_cast<int>(O.size())) - ne - level;
        if (!is_integer(target) || target < 0) continue;
        long sum = static_cast<long>(floor_int(target).convert_to<long>());
        // compositions of `sum` into ne nonnegative parts
        std::vector<int> k(static_cast<size_t>(ne), 0);
        std::function<void(int, long)> rec = [&](int pos, long left) {
            if (pos == ne) {
                if (left == 0) states.push_back(PState{k, O});
                return;
            }
            if (pos == ne - 1) {
                k[static_cast<size_t>(pos)] = static_cast<int>(left);
                rec(pos + 1, 0);
                k[static_cast<size_t>(pos)] = 0;
                return;
            }
            for (long v = 0; v <= left; ++v) {
                k[static_cast<size_t>(pos)] = static_cast<int>(v);
                rec(pos + 1, left - v);
            }
            k[static_cast<size_t>(pos)] = 0;
        };
        if (ne == 0) {
            if (sum == 0) states.push_back(PState{k, O});
        } else {
            rec(0, sum);
        }
    }
    std::sort(states.begin(), states.end());
    if (states.empty()) fail(ErrorKind::BadInput, "empty eigenspace at the requested level");

    std::map<PState, int> index;
    for (const PState& s : states) {
        index[s] = M.dim();
        // gl-Cartan weight: coordinate i <= m reads the odd occupancy, i > m
        // the even exponent.
        Weight w;
        for (int i = 1; i <= gl.m; ++i)
            w.push_back(std::binary_search(s.odd.begin(), s.odd.end(), i) ? Rational(1) : Rational(0));
        for (int i = 1; i <= gl.n; ++i) w.push_back(base.exponent(i - 1, s.k[static_cast<size_t>(i - 1)]));
        M.weights.push_back(w);
        M.parities.push_back(base.state_parity(s));
        fr.states.push_back(s);
    }

    // E_{ij} -> t'_i d'_j ; primed index i <= m is the odd variable xi_i,
    // i > m the even coordinate i-m.
    for (int i = 1; i <= gl.total(); ++i)
        for (int j = 1; j <= gl.total(); ++j)
            for (const auto& [s, col] : index) {
                PState cur = s;
                Rational c(1);
                if (j <= gl.m)
                    c *= apply_dxi(base, j, cur);
                else
                    c *= apply_d(base, j - gl.m - 1, cur);
                if (c == 0) continue;
                if (i <= gl.m)
                    c *= apply_xi(base, i, cur);
                else
                    c *= apply_t(base, i - gl.m - 1, cur);
                if (c == 0) continue;
                auto it = index.find(cur);
                if (it == index.end()) continue;  // left the eigenspace (cannot happen)
                M.add_entry(i, j, it->second, col, c);
            }
    M.fund = std::move(fr);
    return M;
}

}  // namespace wittsuper
