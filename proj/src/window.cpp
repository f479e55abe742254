#include "wittsuper/window.hpp"

#include "wittsuper/linalg.hpp"

namespace wittsuper {

WindowModule::WindowModule(ModuleDescriptor P, FinDimModule M, std::optional<FinDimModule> S, Box box,
                           long budget)
    : P_(std::move(P)), M_(std::move(M)), S_(std::move(S)), box_(std::move(box)) {
    P_.validate();
    if (static_cast<int>(box_.size()) != P_.sig.m) fail(ErrorKind::BadInput, "box arity vs descriptor");
    const int m = P_.sig.m, n = P_.sig.n;
    const int sdim = S_ ? S_->dim() : 1;
    for (int mi = 0; mi < M_.dim(); ++mi) {
        const Weight& mw = M_.weights[static_cast<size_t>(mi)];
        // per-coordinate offset ranges
        std::vector<std::pair<Integer, Integer>> ranges;
        bool empty = false;
        for (int c = 0; c < m; ++c) {
            auto r = P_.offsets_in(c, box_[static_cast<size_t>(c)].first - mw[static_cast<size_t>(c)],
                                   box_[static_cast<size_t>(c)].second - mw[static_cast<size_t>(c)]);
            if (!r) {
                empty = true;
                break;
            }
            ranges.push_back(*r);
        }
        if (empty) continue;
        std::vector<Integer> k(static_cast<size_t>(m));
        for (int c = 0; c < m; ++c) k[static_cast<size_t>(c)] = ranges[static_cast<size_t>(c)].first;
        while (true) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                OddSet odd;
                for (int j = 1; j <= n; ++j)
                    if (mask & (1 << (j - 1))) odd.push_back(j);
                PState st;
                st.k.resize(static_cast<size_t>(m));
                for (int c = 0; c < m; ++c) st.k[static_cast<size_t>(c)] = static_cast<int>(k[static_cast<size_t>(c)]);
                st.odd = odd;
                for (int si = 0; si < sdim; ++si) {
                    WinKey key{st, mi, S_ ? si : -1};
                    basis_.push_back(key);
                    if (static_cast<long>(basis_.size()) > budget)
                        fail(ErrorKind::WindowTooLarge, "window exceeds the basis budget");
                }
            }
            int c = 0;
            while (c < m) {
                if (k[static_cast<size_t>(c)] < ranges[static_cast<size_t>(c)].second) {
                    ++k[static_cast<size_t>(c)];
                    break;
                }
                k[static_cast<size_t>(c)] = ranges[static_cast<size_t>(c)].first;
                ++c;
            }
            if (c == m || m == 0) break;
        }
    }
    std::sort(basis_.begin(), basis_.end());
    for (size_t i = 0; i < basis_.size(); ++i) {
        index_[basis_[i]] = static_cast<int>(i);
        spaces_[h_weight(basis_[i])].push_back(static_cast<int>(i));
    }
}

Weight WindowModule::h_weight(const WinKey& k) const {
    Weight w = P_.h_weight(k.p);
    const Weight& mw = M_.weights[static_cast<size_t>(k.mi)];
    for (int c = 0; c < P_.sig.m; ++c) w[static_cast<size_t>(c)] += mw[static_cast<size_t>(c)];
    return w;
}

int WindowModule::parity(const WinKey& k) const {
    int p = P_.state_parity(k.p) ^ M_.parities[static_cast<size_t>(k.mi)];
    if (S_ && k.si >= 0) p ^= S_->parities[static_cast<size_t>(k.si)];
    return p;
}

bool WindowModule::weight_in_box(const Weight& w) const {
    for (size_t c = 0; c < box_.size(); ++c)
        if (w[c] < box_[c].first || w[c] > box_[c].second) return false;
    return true;
}

WinVec WindowModule::apply(const KGlElement& op, const WinKey& k) const {
    WinVec out;
    const int pparity = P_.state_parity(k.p);
    for (const auto& [term, c] : op.terms()) {
        const auto& [w, u, x] = term;
        auto pres = apply_weyl_monomial(P_, w, k.p);
        if (!pres) continue;
        Rational coeff = c * pres->second;
        if (pparity && gl_word_parity(op.glsig(), u)) coeff = -coeff;
        std::map<int, Rational> mvec = M_.act_word(u, k.mi);
        if (mvec.empty()) continue;
        std::map<int, Rational> svec;
        if (!x.empty() && !S_) fail(ErrorKind::BadInput, "operator carries a k-part but the window has no S factor");
        if (S_ && !x.empty()) {
            svec = S_->act_word(x, k.si);
        } else if (k.si >= 0) {
            svec[k.si] = 1;
        } else {
            svec[-1] = 1;
        }
        for (const auto& [mi, cm] : mvec)
            for (const auto& [si, cs] : svec) winvec_add(out, WinKey{pres->first, mi, si}, coeff * cm * cs);
    }
    return out;
}

WinVec WindowModule::apply(const KGlElement& op, const WinVec& v) const {
    WinVec out;
    for (const auto& [k, c] : v) {
        WinVec part = apply(op, k);
        for (const auto& [k2, c2] : part) winvec_add(out, k2, c * c2);
    }
    return out;
}

WinVec WindowModule::apply_field_op(const VectorField& x, const WinKey& k) const {
    return apply(pi_w(x), k);
}
WinVec WindowModule::apply_field_op(const VectorField& x, const WinVec& v) const {
    return apply(pi_w(x), v);
}

WinVec WindowModule::apply_env(const EnvElement& e, const WinKey& k) const { return apply(pi_second(e), k); }
WinVec WindowModule::apply_env(const EnvElement& e, const WinVec& v) const { return apply(pi_second(e), v); }

WinVec apply_diff(const WindowModule& src, const WindowModule& dst, const WinKey& k) {
    if (!src.M().fund || !dst.M().fund) fail(ErrorKind::BadInput, "diff needs fundamental realizations");
    const FundRealization& fs = *src.M().fund;
    const FundRealization& fd = *dst.M().fund;
    if (!(fs.base == fd.base) || fs.level + 1 != fd.level)
        fail(ErrorKind::BadInput, "diff needs adjacent levels over the same base");
    std::map<PState, int> dst_index;
    for (size_t i = 0; i < fd.states.size(); ++i) dst_index[fd.states[i]] = static_cast<int>(i);

    const ModuleDescriptor& P = src.P();
    const int m = P.sig.m, n = P.sig.n;
    const int pparity = P.state_parity(k.p);
    WinVec out;
    // sum_i d_i ox xi'_i   (xi'_i odd: sign (-1)^{|p|})
    for (int i = 1; i <= m; ++i) {
        PState p2 = k.p;
        Rational c1 = apply_d(P, i - 1, p2);
        if (c1 == 0) continue;
        PState v2 = fs.states[static_cast<size_t>(k.mi)];
        Rational c2 = apply_xi(fs.base, i, v2);
        if (c2 == 0) continue;
        auto it = dst_index.find(v2);
        if (it == dst_index.end()) fail(ErrorKind::BadInput, "diff target state missing");
        Rational c = c1 * c2;
        if (pparity) c = -c;
        winvec_add(out, WinKey{p2, it->second, k.si}, c);
    }
    // - sum_l d_{m+l} ox t'_l   (t' even: no sign)
    for (int l = 1; l <= n; ++l) {
        PState p2 = k.p;
        Rational c1 = apply_dxi(P, l, p2);
        if (c1 == 0) continue;
        PState v2 = fs.states[static_cast<size_t>(k.mi)];
        Rational c2 = apply_t(fs.base, l - 1, v2);
        if (c2 == 0) continue;
        auto it = dst_index.find(v2);
        if (it == dst_index.end()) fail(ErrorKind::BadInput, "diff target state missing");
        winvec_add(out, WinKey{p2, it->second, k.si}, -c1 * c2);
    }
    return out;
}

WinVec apply_diff(const WindowModule& src, const WindowModule& dst, const WinVec& v) {
    WinVec out;
    for (const auto& [k, c] : v) {
        WinVec part = apply_diff(src, dst, k);
        for (const auto& [k2, c2] : part) winvec_add(out, k2, c * c2);
    }
    return out;
}

std::map<Weight, RowSpace> diff_image_spaces(const WindowModule& src, const WindowModule& dst) {
    std::map<Weight, RowSpace> out;
    for (const auto& [w, members] : dst.spaces()) out.emplace(w, RowSpace(members.size()));
    for (const WinKey& k : src.basis()) {
        WinVec img = apply_diff(src, dst, k);
        if (img.empty()) continue;
        Weight w = src.h_weight(k);
        auto it = out.find(w);
        if (it == out.end()) continue;
        it->second.insert(coordinates_on_space(dst, w, img));
    }
    return out;
}

std::vector<Rational> coordinates_on_space(const WindowModule& win, const Weight& w, const WinVec& v) {
    const auto& members = win.spaces().at(w);
    std::map<int, size_t> pos;
    for (size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
    std::vector<Rational> out(members.size(), Rational(0));
    for (const auto& [k, c] : v) {
        auto idx = win.index_of(k);
        if (!idx) fail(ErrorKind::BadInput, "vector leaves the window space");
        out[pos.at(*idx)] = c;
    }
    return out;
}

}  // namespace wittsuper
