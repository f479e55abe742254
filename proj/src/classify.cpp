#include "wittsuper/classify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace wittsuper {

MTag normalize_mtag(const MTag& tag, Signature gl) {
    MTag out = tag;
    Signature base_sig{gl.n, gl.m};
    switch (tag.kind) {
        case MTagKind::Trivial:
            out.kind = MTagKind::Fundamental;
            out.base = ModuleDescriptor::A(base_sig);
            out.level = 0;
            break;
        case MTagKind::Str:
            out.kind = MTagKind::Fundamental;
            out.base = ModuleDescriptor::A_sigma_type(base_sig);
            out.level = Rational(gl.m - gl.n);
            break;
        case MTagKind::PiStr:
            out.kind = MTagKind::Fundamental;
            out.base = ModuleDescriptor::A_sigma_type(base_sig, true);
            out.level = Rational(gl.m - gl.n);
            break;
        default: break;
    }
    if (out.kind == MTagKind::Fundamental) {
        out.base.validate();
        if (out.base.sig.m != gl.n || out.base.sig.n != gl.m)
            fail(ErrorKind::UnknownTag, "fundamental base must live over K_{n,m}");
    }
    return out;
}

bool mtag_is_trivial(const MTag& t, Signature gl) {
    (void)gl;
    return t.kind == MTagKind::Fundamental && t.base.is_all_polynomial() && t.level == 0;
}

bool mtag_is_str_like(const MTag& t, Signature gl) {
    return t.kind == MTagKind::Fundamental && t.base.is_all_laurent_quotient() &&
           t.level == Rational(gl.m - gl.n);
}

SimplicityVerdict simplicity_classify(const ModuleDescriptor& P, const MTag& M_in) {
    P.validate();
    const Signature gl{P.sig.m, P.sig.n};
    if (M_in.kind != MTagKind::NonFundamental && M_in.kind != MTagKind::Fundamental &&
        M_in.kind != MTagKind::Trivial && M_in.kind != MTagKind::Str && M_in.kind != MTagKind::PiStr)
        fail(ErrorKind::UnknownTag, "unknown M tag");
    SimplicityVerdict v;
    if (M_in.kind == MTagKind::NonFundamental) {
        v.case_tag = "Simple";
        v.simple = true;
        v.rule = "non-fundamental";
        return v;
    }
    MTag M = normalize_mtag(M_in, gl);
    if (mtag_is_trivial(M, gl)) {
        if (P.is_all_polynomial()) {
            v.case_tag = "NotSimpleTrivialPair";
            v.simple = false;
            v.rule = "trivial M, P = A up to parity";
            v.detail = "unique simple submodule is the trivial module";
        } else {
            v.case_tag = "Simple";
            v.simple = true;
            v.rule = "trivial M, P differs from A";
        }
        return v;
    }
    if (mtag_is_str_like(M, gl)) {
        if (P.derivative_sum_full()) {
            v.case_tag = "Simple";
            v.simple = true;
            v.rule = "supertrace M, P = sum dP";
            return v;
        }
        v.case_tag = "UniqueSimpleSubmodule";
        v.simple = false;
        v.rule = "supertrace M, P != sum dP";
        v.adjacent_level = M.level - 1;
        Box box;
        for (int c = 0; c < P.sig.m; ++c) box.push_back({Rational(-3), Rational(3)});
        v.lambda_prime = locate_lambda_prime(P, M.base, M.level, box);
        v.detail = "unique simple submodule is the diff image from level " + rat_to_string(v.adjacent_level);
        return v;
    }
    // fundamental, neither trivial nor Str-like
    v.case_tag = "UniqueSimpleSubmodule";
    v.simple = false;
    v.rule = "fundamental M, nontrivial";
    v.adjacent_level = M.level - 1;
    Box box;
    for (int c = 0; c < P.sig.m; ++c) box.push_back({Rational(-3), Rational(3)});
    v.lambda_prime = locate_lambda_prime(P, M.base, M.level, box);
    v.detail = "unique simple submodule is the diff image from level " + rat_to_string(v.adjacent_level);
    return v;
}

ShadowPartition all_finite_shadow(int m) {
    ShadowPartition sh;
    sh.m = m;
    RootSystem rs = root_set(m, 1);
    sh.finite = rs.delta_prime;
    return sh;
}

bool hc_condition(const ModuleDescriptor& P1, const ShadowPartition& v1_shadow) {
    if (P1.sig.n != 0) fail(ErrorKind::BadInput, "hc condition takes the even part descriptor");
    SupportSet S = P1.support();
    Weight base = S.components.front().base;
    ShadowPartition shP = shadow(S, base);
    RootSystem rs = root_set(P1.sig.m, 1);
    std::set<Root> dd(rs.delta_dprime.begin(), rs.delta_dprime.end());
    std::set<Root> lhs, rhs;
    for (const Root& a : shP.infinite)
        if (dd.count(a)) lhs.insert(a);
    for (const Root& a : shP.minus)
        if (dd.count(a)) lhs.insert(a);
    for (const Root& a : v1_shadow.finite)
        if (dd.count(a)) rhs.insert(a);
    for (const Root& a : v1_shadow.minus)
        if (dd.count(a)) rhs.insert(a);
    return std::all_of(lhs.begin(), lhs.end(), [&](const Root& a) { return rhs.count(a) > 0; });
}

bool module_is_trivial(const FinDimModule& S) {
    if (S.dim() != 1) return false;
    for (const auto& [unit, mat] : S.action)
        if (!mat.empty()) return false;
    return true;
}

SimplicityVerdict f2_simplicity(const FinDimModule& S, const SimplicityVerdict& f_verdict) {
    SimplicityVerdict v;
    if (!module_is_trivial(S)) {
        v.case_tag = "Simple";
        v.simple = true;
        v.rule = "S nontrivial";
        return v;
    }
    v = f_verdict;
    v.rule = "S trivial, reduces to F(P,M): " + f_verdict.rule;
    return v;
}

MainVerdict main_theorem_classify(const ModuleDescriptor& P, const MTag& M_in) {
    P.validate();
    const Signature gl{P.sig.m, P.sig.n};
    MainVerdict out;
    if (M_in.kind == MTagKind::NonFundamental) {
        ShadowPartition msh = M_in.m_shadow ? *M_in.m_shadow : all_finite_shadow(P.sig.m);
        ModuleDescriptor even_part = P;
        even_part.sig = Signature{P.sig.m, 0};
        out.hc = hc_condition(even_part, msh);
        out.simplicity = simplicity_classify(P, M_in);
        out.case_id = 1;
        out.description = out.hc ? "simple tensor module F(P,M) with finite weight multiplicities"
                                 : "simple tensor module F(P,M); weight spaces are not finite-dimensional";
        return out;
    }
    MTag M = normalize_mtag(M_in, gl);
    out.simplicity = simplicity_classify(P, M);
    if (mtag_is_trivial(M, gl) && P.is_all_polynomial()) {
        out.case_id = 3;
        out.description = "trivial module, the unique simple submodule of F(A, A[0])";
        out.hc = true;
        return out;
    }
    if (out.simplicity.simple) {
        out.case_id = 1;
        ModuleDescriptor even_part = P;
        even_part.sig = Signature{P.sig.m, 0};
        out.hc = hc_condition(even_part, all_finite_shadow(P.sig.m));
        out.description = "simple tensor module F(P,M)";
        return out;
    }
    out.case_id = 2;
    out.hc = true;
    out.description = "diff image: the unique simple submodule is diff(F(P, P'[" +
                      rat_to_string(out.simplicity.adjacent_level) + "]))";
    return out;
}

std::vector<VectorField> w_basis_elements(Signature sig, int cap) {
    std::vector<VectorField> out;
    std::vector<SuperMonomial> monos;
    std::vector<int> alpha(static_cast<size_t>(sig.m), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == sig.m) {
            for (int mask = 0; mask < (1 << sig.n); ++mask) {
                OddSet odd;
                for (int j = 1; j <= sig.n; ++j)
                    if (mask & (1 << (j - 1))) odd.push_back(j);
                if (static_cast<int>(odd.size()) <= left) monos.push_back(SuperMonomial{alpha, odd});
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            alpha[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
        alpha[static_cast<size_t>(pos)] = 0;
    };
    rec(0, cap);
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    for (const SuperMonomial& x : monos)
        for (int dir = 1; dir <= sig.total(); ++dir) out.push_back(VectorField::basis(sig, x, dir));
    return out;
}

std::optional<Weight> locate_lambda_prime(const ModuleDescriptor& P, const ModuleDescriptor& base,
                                          const Rational& level, const Box& box) {
    const Signature gl{P.sig.m, P.sig.n};
    FinDimModule Msrc = realize_fundamental(base, level - 1, gl);
    FinDimModule Mdst = realize_fundamental(base, level, gl);
    WindowModule src(P, Msrc, std::nullopt, box);
    WindowModule dst(P, Mdst, std::nullopt, box);
    std::set<Weight> hits;
    for (const WinKey& k : src.basis()) {
        if (!apply_diff(src, dst, k).empty()) hits.insert(Msrc.weights[static_cast<size_t>(k.mi)]);
    }
    if (hits.empty()) return std::nullopt;
    return *hits.begin();
}

DiffEvidence diff_image_evidence(const ModuleDescriptor& P, const ModuleDescriptor& base, const Rational& level,
                                 const Box& box, int deg_cap) {
    const Signature gl{P.sig.m, P.sig.n};
    FinDimModule Msrc = realize_fundamental(base, level, gl);
    FinDimModule Mdst = realize_fundamental(base, level + 1, gl);
    WindowModule src(P, Msrc, std::nullopt, box);
    WindowModule dst(P, Mdst, std::nullopt, box);
    DiffEvidence ev;
    ev.window_dim = dst.dim();
    std::map<Weight, RowSpace> image = diff_image_spaces(src, dst);
    for (const auto& [w, sp] : image) ev.image_rank += static_cast<long>(sp.rank());
    ev.nonzero = ev.image_rank > 0;
    ev.proper = ev.nonzero && ev.image_rank < ev.window_dim;
    // invariance: pi(x) applied to image vectors stays in the image where the
    // target weight space was computed
    std::vector<VectorField> basis = w_basis_elements(gl, deg_cap);
    for (const auto& [w, sp] : image) {
        const auto& members = dst.spaces().at(w);
        for (const auto& row : sp.rows()) {
            WinVec v;
            for (size_t i = 0; i < row.size(); ++i)
                if (row[i] != 0) winvec_add(v, dst.basis()[static_cast<size_t>(members[i])], row[i]);
            for (const VectorField& x : basis) {
                WinVec img = dst.apply_field_op(x, v);
                if (img.empty()) continue;
                // group by weight
                std::map<Weight, WinVec> parts;
                for (const auto& [k, c] : img) parts[dst.h_weight(k)][k] = c;
                for (const auto& [w2, vec] : parts) {
                    auto it = image.find(w2);
                    if (it == image.end() || !dst.weight_in_box(w2)) {
                        ++ev.skipped_boundary;
                        continue;
                    }
                    bool inside = true;
                    for (const auto& [k, c] : vec)
                        if (!dst.index_of(k)) inside = false;
                    if (!inside) {
                        ++ev.skipped_boundary;
                        continue;
                    }
                    ++ev.invariance_checks;
                    if (!it->second.contains(coordinates_on_space(dst, w2, vec))) ev.invariant = false;
                }
            }
        }
    }
    return ev;
}

ReachEvidence reachability_evidence(const WindowModule& win, int deg_cap, int num_starts, unsigned seed) {
    ReachEvidence ev;
    ev.predicted_spaces = static_cast<int>(win.spaces().size());
    std::mt19937 rng(seed);
    std::vector<VectorField> basis = w_basis_elements(Signature{win.P().sig.m, win.P().sig.n}, deg_cap);
    for (int s = 0; s < num_starts; ++s) {
        ++ev.starts;
        std::uniform_int_distribution<int> pick(0, win.dim() - 1);
        WinVec frontier;
        winvec_add(frontier, win.basis()[static_cast<size_t>(pick(rng))], Rational(1));
        std::set<Weight> reached;
        for (const auto& [k, c] : frontier) reached.insert(win.h_weight(k));
        bool grew = true;
        int rounds = 0;
        while (grew && rounds < 64) {
            grew = false;
            ++rounds;
            WinVec next = frontier;
            for (const VectorField& x : basis) {
                WinVec img = win.apply_field_op(x, frontier);
                for (const auto& [k, c] : img) {
                    if (!win.index_of(k)) continue;  // window-limited
                    winvec_add(next, k, c);
                    if (reached.insert(win.h_weight(k)).second) grew = true;
                }
            }
            frontier = std::move(next);
            if (static_cast<int>(reached.size()) == ev.predicted_spaces) break;
        }
        if (static_cast<int>(reached.size()) != ev.predicted_spaces) ev.all_reached = false;
    }
    return ev;
}

bool derivative_sum_full_window(const ModuleDescriptor& P, int radius) {
    // enumerate window states: offsets with |exponent| <= radius
    Box box;
    for (int c = 0; c < P.sig.m; ++c) box.push_back({Rational(-radius), Rational(radius)});
    FinDimModule point;  // dim-1 dummy M with zero weights
    point.gl = Signature{P.sig.m, P.sig.n};
    point.weights.push_back(Weight(static_cast<size_t>(P.sig.m + P.sig.n), Rational(0)));
    point.parities.push_back(0);
    WindowModule win(P, point, std::nullopt, box);
    std::set<PState> inner;
    for (const WinKey& k : win.basis()) {
        Weight w = P.h_weight(k.p);
        bool ok = true;
        for (const Rational& c : w)
            if (c < Rational(-(radius - 1)) || c > Rational(radius - 1)) ok = false;
        if (ok) inner.insert(k.p);
    }
    std::set<PState> hit;
    for (const WinKey& k : win.basis()) {
        for (int i = 0; i < P.sig.m; ++i) {
            PState s = k.p;
            if (apply_d(P, i, s) != 0 && inner.count(s)) hit.insert(s);
        }
        for (int j = 1; j <= P.sig.n; ++j) {
            PState s = k.p;
            if (apply_dxi(P, j, s) != 0 && inner.count(s)) hit.insert(s);
        }
    }
    return std::all_of(inner.begin(), inner.end(), [&](const PState& s) { return hit.count(s) > 0; });
}

}  // namespace wittsuper
