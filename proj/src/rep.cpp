#include "gsp4/rep.hpp"

#include <algorithm>
#include <sstream>

#include "gsp4/errors.hpp"

namespace gsp4 {

namespace {

constexpr int kVars = 10;
constexpr int kBits = 6;
constexpr TensorIndex kMask = 63;

// variable v < 4 is x_{v+1}; v >= 4 is y_{ab} with (a, b) = kPairs[v - 4]
constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<std::array<int, 2>, 4> kDigitWeight{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
const char* const kVarNames[kVars] = {"x1", "x2", "x3", "x4", "y12", "y13", "y14", "y23", "y24", "y34"};

int expo(TensorIndex m, int v) { return static_cast<int>((m >> (kBits * v)) & kMask); }
TensorIndex unit(int v) { return TensorIndex(1) << (kBits * v); }

int pair_var(int a, int b) {
    for (int j = 0; j < 6; ++j)
        if (kPairs[static_cast<std::size_t>(j)][0] == a && kPairs[static_cast<std::size_t>(j)][1] == b) return 4 + j;
    throw InternalError("bad wedge pair");
}

WeightKey var_weight(int v) {
    if (v < 4) return kDigitWeight[static_cast<std::size_t>(v)];
    const auto& pr = kPairs[static_cast<std::size_t>(v - 4)];
    const auto& a = kDigitWeight[static_cast<std::size_t>(pr[0])];
    const auto& b = kDigitWeight[static_cast<std::size_t>(pr[1])];
    return {a[0] + b[0], a[1] + b[1]};
}

using LinImage = std::vector<std::pair<int, CycScalar>>;

// Image of each variable under the derivation induced by x.
std::array<LinImage, kVars> derivation_images(const LieMatrix& x) {
    std::array<LinImage, kVars> img;
    for (int d = 0; d < 4; ++d)
        for (int r = 0; r < 4; ++r)
            if (!x(r, d).is_zero()) img[static_cast<std::size_t>(d)].push_back({r, x(r, d)});
    for (int j = 0; j < 6; ++j) {
        const int a = kPairs[static_cast<std::size_t>(j)][0], b = kPairs[static_cast<std::size_t>(j)][1];
        std::map<int, CycScalar> acc;
        auto add = [&](int u, int v, const CycScalar& c) {
            if (u == v) return;
            if (u < v) acc[pair_var(u, v)] += c;
            else acc[pair_var(v, u)] -= c;
        };
        for (int r = 0; r < 4; ++r) {
            if (!x(r, a).is_zero()) add(r, b, x(r, a));
            if (!x(r, b).is_zero()) add(a, r, x(r, b));
        }
        for (auto& [v, c] : acc)
            if (!c.is_zero()) img[static_cast<std::size_t>(4 + j)].push_back({v, c});
    }
    return img;
}

template <class S>
S from_cyc(const CycScalar& c);
template <>
Rat from_cyc<Rat>(const CycScalar& c) {
    if (!c.is_rational()) throw InputError("rational tensor action needs a rational matrix");
    return c[0];
}
template <>
CycScalar from_cyc<CycScalar>(const CycScalar& c) { return c; }

template <class S>
std::map<TensorIndex, S> derive(const LieMatrix& x, const std::map<TensorIndex, S>& t) {
    const auto img = derivation_images(x);
    std::array<std::vector<std::pair<int, S>>, kVars> im;
    for (int v = 0; v < kVars; ++v)
        for (const auto& [u, c] : img[static_cast<std::size_t>(v)]) im[static_cast<std::size_t>(v)].push_back({u, from_cyc<S>(c)});
    std::map<TensorIndex, S> out;
    for (const auto& [m, c] : t) {
        for (int v = 0; v < kVars; ++v) {
            const int e = expo(m, v);
            if (e == 0) continue;
            const TensorIndex base = m - unit(v);
            const S ec = c * S(e);
            for (const auto& [u, cu] : im[static_cast<std::size_t>(v)]) out[base + unit(u)] += ec * cu;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

CycTensor mul(const CycTensor& a, const CycTensor& b) {
    CycTensor out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out[ma + mb] += ca * cb;
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

template <class S>
void axpy(std::map<TensorIndex, S>& y, const S& a, const std::map<TensorIndex, S>& x) {
    for (const auto& [m, c] : x) {
        auto it = y.find(m);
        if (it == y.end()) {
            y.emplace(m, a * c);
        } else {
            it->second += a * c;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

WeightKey operator+(const WeightKey& a, const std::array<int, 2>& b) { return {a[0] + b[0], a[1] + b[1]}; }

const SplitElement& split_element(const std::string& label) {
    for (const auto& e : split_basis())
        if (e.label == label) return e;
    throw InputError("unknown generator label " + label);
}

}  // namespace

// ------------------------------------------------------------------ tensors

RatTensor apply_generator(const LieMatrix& x, const RatTensor& t) { return derive<Rat>(x, t); }
CycTensor apply_generator(const LieMatrix& x, const CycTensor& t) { return derive<CycScalar>(x, t); }

CycTensor apply_group(const LieMatrix& g, const CycTensor& t) {
    std::array<CycTensor, kVars> img;
    for (int d = 0; d < 4; ++d)
        for (int r = 0; r < 4; ++r)
            if (!g(r, d).is_zero()) img[static_cast<std::size_t>(d)][unit(r)] += g(r, d);
    for (int j = 0; j < 6; ++j) {
        const int a = kPairs[static_cast<std::size_t>(j)][0], b = kPairs[static_cast<std::size_t>(j)][1];
        for (int r = 0; r < 4; ++r)
            for (int s = r + 1; s < 4; ++s) {
                CycScalar minor = g(r, a) * g(s, b) - g(s, a) * g(r, b);
                if (!minor.is_zero()) img[static_cast<std::size_t>(4 + j)][unit(pair_var(r, s))] += minor;
            }
    }
    std::array<std::vector<CycTensor>, kVars> powers;
    auto power = [&](int v, int e) -> const CycTensor& {
        auto& pw = powers[static_cast<std::size_t>(v)];
        if (pw.empty()) pw.push_back(CycTensor{{0, CycScalar(1)}});
        while (static_cast<int>(pw.size()) <= e) pw.push_back(mul(pw.back(), img[static_cast<std::size_t>(v)]));
        return pw[static_cast<std::size_t>(e)];
    };
    CycTensor out;
    for (const auto& [m, c] : t) {
        CycTensor term{{0, c}};
        for (int v = 0; v < kVars; ++v) {
            const int e = expo(m, v);
            if (e > 0) term = mul(term, power(v, e));
        }
        axpy(out, CycScalar(1), term);
    }
    return out;
}

RatTensor highest_weight_seed(int k, int kp) {
    if (!(k >= kp && kp >= 0)) throw InputError("seed needs k >= k' >= 0");
    if (k - kp > 63 || kp > 63) throw InputError("seed degree too large");
    const TensorIndex m = static_cast<TensorIndex>(k - kp) * unit(0) + static_cast<TensorIndex>(kp) * unit(pair_var(0, 1));
    return RatTensor{{m, Rat(1)}};
}

WeightKey tensor_weight(TensorIndex m) {
    WeightKey w{0, 0};
    for (int v = 0; v < kVars; ++v) {
        const int e = expo(m, v);
        const auto vw = var_weight(v);
        w[0] += e * vw[0];
        w[1] += e * vw[1];
    }
    return w;
}

std::string tensor_str(const CycTensor& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int v = 0; v < kVars; ++v) {
            const int e = expo(m, v);
            if (e == 1) os << "*" << kVarNames[v];
            else if (e > 1) os << "*" << kVarNames[v] << "^" << e;
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ module

ModVec ModuleOp::apply(const ModVec& v) const {
    ModVec out(v.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [i, c] : cols[j]) out[static_cast<std::size_t>(i)] += v[j] * CycScalar(c);
    }
    return out;
}

std::vector<Rat> ModuleOp::apply(const std::vector<Rat>& v) const {
    std::vector<Rat> out(v.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [i, c] : cols[j]) out[static_cast<std::size_t>(i)] += v[j] * c;
    }
    return out;
}

int RepModule::weight_multiplicity(int u, int up) const {
    auto it = spaces_.find({u, up});
    return it == spaces_.end() ? 0 : static_cast<int>(it->second.size());
}

const ModuleOp& RepModule::op(const std::string& label) const {
    auto it = ops_.find(label);
    if (it == ops_.end()) throw InputError("no module operator " + label);
    return it->second;
}

ModVec RepModule::act(const LieMatrix& x, const ModVec& v) const {
    const auto coords = split_coords(x);
    const auto& basis = split_basis();
    ModVec out(v.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (coords[b].is_zero()) continue;
        const ModVec w = op(basis[b].label).apply(v);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!w[i].is_zero()) out[i] += coords[b] * w[i];
    }
    return out;
}

ModVec RepModule::coords_of(const CycTensor& t, bool verify) const {
    ModVec out(basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        auto it = t.find(pivot_[j]);
        if (it != t.end()) out[j] = it->second;
    }
    if (verify) {
        CycTensor rest = t;
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            if (out[j].is_zero()) continue;
            for (const auto& [m, c] : basis_[j]) {
                auto it = rest.find(m);
                CycScalar d = out[j] * CycScalar(c);
                if (it == rest.end()) {
                    rest.emplace(m, -d);
                } else {
                    it->second -= d;
                    if (it->second.is_zero()) rest.erase(it);
                }
            }
        }
        if (!rest.empty()) throw InputError("tensor does not lie in the module");
    }
    return out;
}

ModVec RepModule::basis_vector(int idx) const {
    if (idx < 0 || idx >= dim()) throw InputError("basis index out of range");
    ModVec v(basis_.size());
    v[static_cast<std::size_t>(idx)] = CycScalar(1);
    return v;
}

namespace {

// Incremental reduced echelon form inside one weight space; returns whether c was new.
bool insert_vector(std::vector<RatTensor>& basis, std::vector<TensorIndex>& pivots, std::vector<int>& space,
                   RatTensor c) {
    for (int j : space) {
        auto it = c.find(pivots[static_cast<std::size_t>(j)]);
        if (it == c.end()) continue;
        Rat f = it->second;
        axpy(c, -f, basis[static_cast<std::size_t>(j)]);
    }
    if (c.empty()) return false;
    const TensorIndex p = c.begin()->first;
    const Rat inv = Rat(1) / c.begin()->second;
    for (auto& [m, v] : c) v *= inv;
    for (int j : space) {
        auto& b = basis[static_cast<std::size_t>(j)];
        auto it = b.find(p);
        if (it == b.end()) continue;
        Rat f = it->second;
        axpy(b, -f, c);
    }
    space.push_back(static_cast<int>(basis.size()));
    basis.push_back(std::move(c));
    pivots.push_back(p);
    return true;
}

}  // namespace

RepModule build_irrep(const Weight& lam, int bound, bool verify_closure) {
    if (!lam.dominant()) throw InputError("build_irrep needs a dominant weight, got " + lam.str());
    const int n = lam.k + lam.kp;
    if (n > bound) throw InputError("k + k' = " + std::to_string(n) + " exceeds the bound " + std::to_string(bound));
    if (n > 60) throw InputError("degree too large for the monomial encoding");

    RepModule m;
    m.lam_ = lam;
    m.n_ = n;
    m.seed_ = highest_weight_seed(lam.k, lam.kp);
    for (const char* lbl : {"E(1,-1)", "E(0,2)"})
        if (!apply_generator(split_element(lbl).matrix, m.seed_).empty())
            throw InternalError("seed vector is not annihilated by " + std::string(lbl));

    const WeightKey top{lam.k, lam.kp};
    auto add = [&](const WeightKey& w, RatTensor c) {
        auto& space = m.spaces_[w];
        const std::size_t before = m.basis_.size();
        const bool fresh = insert_vector(m.basis_, m.pivot_, space, std::move(c));
        if (fresh) m.weight_.push_back(w);
        (void)before;
        return fresh;
    };
    add(top, m.seed_);

    const SplitElement& f1 = split_element("F(1,-1)");
    const SplitElement& f2 = split_element("F(0,2)");
    std::vector<WeightKey> level{top};
    while (!level.empty()) {
        std::map<WeightKey, bool> next;
        for (const auto& w : level) {
            const std::vector<int> idx = m.spaces_.at(w);
            for (const SplitElement* f : {&f1, &f2}) {
                const WeightKey target = w + std::array<int, 2>{f->a, f->b};
                for (int j : idx) {
                    RatTensor y = apply_generator(f->matrix, m.basis_[static_cast<std::size_t>(j)]);
                    if (y.empty()) continue;
                    add(target, std::move(y));
                    next[target] = true;
                }
            }
        }
        level.clear();
        for (const auto& [w, _] : next) level.push_back(w);
    }
    for (auto it = m.spaces_.begin(); it != m.spaces_.end();) it = it->second.empty() ? m.spaces_.erase(it) : std::next(it);

    const int expected = weyl_dimension(lam.k, lam.kp);
    if (m.dim() != expected)
        throw InternalError("module " + lam.str() + " has dimension " + std::to_string(m.dim()) + ", Weyl formula gives " +
                            std::to_string(expected));

    for (const auto& e : split_basis()) {
        ModuleOp op;
        op.cols.resize(static_cast<std::size_t>(m.dim()));
        const bool check = verify_closure || e.label == "F(1,-1)" || e.label == "F(0,2)";
        for (int j = 0; j < m.dim(); ++j) {
            const WeightKey& w = m.weight_[static_cast<std::size_t>(j)];
            if (e.a == 0 && e.b == 0) {
                const int val = e.label == "H1" ? w[0] : w[1];
                if (val != 0) op.cols[static_cast<std::size_t>(j)].push_back({j, Rat(val)});
                continue;
            }
            RatTensor y = apply_generator(e.matrix, m.basis_[static_cast<std::size_t>(j)]);
            if (y.empty()) continue;
            auto sp = m.spaces_.find(w + std::array<int, 2>{e.a, e.b});
            if (sp == m.spaces_.end()) throw InternalError("generator " + e.label + " leaves the weight support");
            for (int i : sp->second) {
                auto it = y.find(m.pivot_[static_cast<std::size_t>(i)]);
                if (it != y.end()) op.cols[static_cast<std::size_t>(j)].push_back({i, it->second});
            }
            if (check) {
                for (const auto& [i, c] : op.cols[static_cast<std::size_t>(j)]) axpy(y, -c, m.basis_[static_cast<std::size_t>(i)]);
                if (!y.empty()) throw InternalError("span not closed under " + e.label);
            }
        }
        m.ops_.emplace(e.label, std::move(op));
    }
    return m;
}

std::optional<std::array<int, 2>> compact_weight_of(const RepModule& m, const ModVec& v) {
    std::array<int, 2> out{0, 0};
    const LieMatrix ts[2] = {T1(), T2()};
    for (int t = 0; t < 2; ++t) {
        const ModVec tv = m.act(ts[t], v);
        std::optional<CycScalar> ratio;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) {
                if (!tv[i].is_zero()) return std::nullopt;
                continue;
            }
            CycScalar r = tv[i] / v[i];
            if (!ratio) ratio = r;
            else if (*ratio != r) return std::nullopt;
        }
        if (!ratio) return std::nullopt;  // zero vector
        // T acts by i*u
        const CycScalar u = *ratio * CycScalar(0, -1);
        if (!u.is_rational() || !u[0].is_integer()) return std::nullopt;
        out[static_cast<std::size_t>(t)] = static_cast<int>(u[0].num().get_si());
    }
    return out;
}

namespace {
CycTensor module_tensor(const RepModule& m, const ModVec& v) {
    CycTensor t;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [mono, c] : m.basis()[j]) {
            auto it = t.find(mono);
            CycScalar d = v[j] * CycScalar(c);
            if (it == t.end()) {
                t.emplace(mono, d);
            } else {
                it->second += d;
                if (it->second.is_zero()) t.erase(it);
            }
        }
    }
    return t;
}
}  // namespace

ModVec group_act(const RepModule& m, const LieMatrix& g, const ModVec& v) {
    return m.coords_of(apply_group(g, module_tensor(m, v)), true);
}

CayleyVector cayley_vector(const RepModule& m, int idx) {
    if (idx < 0 || idx >= m.dim()) throw InputError("cayley_vector: basis index out of range");
    const LieMatrix sj = CycScalar::sqrt2() * J_matrix();  // entries in Z[i]
    CayleyVector cv;
    cv.coords = group_act(m, sj, m.basis_vector(idx));
    cv.sqrt2_exponent = -m.degree();
    const auto& w = m.weight_of(idx);
    const auto cw = compact_weight_of(m, cv.coords);
    if (!cw || (*cw)[0] != w[0] || (*cw)[1] != w[1])
        throw InternalError("Cayley transport did not produce a compact weight vector of the expected weight");
    cv.weight = CompactWeight(w[0], w[1], m.highest_weight().c);
    return cv;
}

// ------------------------------------------------------------------ G' decomposition

GprimeDecomposition::GprimeDecomposition(const RepModule& m) : m_(&m) {
    const auto& e20 = m.op("E(2,0)");
    const auto& e02 = m.op("E(0,2)");
    const auto& f20 = m.op("F(2,0)");
    const auto& f02 = m.op("F(0,2)");
    const auto& spaces = m.weight_spaces();

    for (const auto& [w, idx] : spaces) {
        if (w[0] < 0 || w[1] < 0) continue;
        std::vector<int> targets;
        for (const WeightKey t : {WeightKey{w[0] + 2, w[1]}, WeightKey{w[0], w[1] + 2}}) {
            auto it = spaces.find(t);
            if (it != spaces.end()) targets.insert(targets.end(), it->second.begin(), it->second.end());
        }
        std::map<int, std::size_t> row_of;
        for (std::size_t r = 0; r < targets.size(); ++r) row_of[targets[r]] = r;
        DenseMat<Rat> a(targets.size(), std::vector<Rat>(idx.size()));
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (const ModuleOp* op : {&e20, &e02})
                for (const auto& [i, val] : op->cols[static_cast<std::size_t>(idx[c])]) a[row_of.at(i)][c] += val;
        const auto ker = kernel(a, idx.size());
        const int p = w[0], q = w[1];
        for (const auto& kv : ker) {
            const int copy = types_[{p, q}]++;
            std::vector<Rat> h(static_cast<std::size_t>(m.dim()));
            for (std::size_t c = 0; c < idx.size(); ++c) h[static_cast<std::size_t>(idx[c])] = kv[c];
            std::vector<Rat> vb = h;
            for (int b = 0; b <= q; ++b) {
                std::vector<Rat> va = vb;
                for (int a2 = 0; a2 <= p; ++a2) {
                    orbits_.push_back({p, q, copy, a2, b, va});
                    va = f20.apply(va);
                }
                vb = f02.apply(vb);
            }
        }
    }

    for (std::size_t o = 0; o < orbits_.size(); ++o) {
        const auto& ob = orbits_[o];
        spaces_[{ob.p - 2 * ob.a, ob.q - 2 * ob.b}].orbits.push_back(static_cast<int>(o));
    }
    for (const auto& [w, idx] : spaces) {
        Space& s = spaces_[w];
        s.idx = idx;
        const std::size_t d = idx.size();
        if (s.orbits.size() != d)
            throw InternalError("adapted basis has wrong size in a weight space of " + m.highest_weight().str());
        DenseMat<Rat> aug(d, std::vector<Rat>(2 * d));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c)
                aug[r][c] = orbits_[static_cast<std::size_t>(s.orbits[c])].vec[static_cast<std::size_t>(idx[r])];
            aug[r][d + r] = Rat(1);
        }
        const auto e = rref(aug, 2 * d);
        if (e.pivots.size() != d || (d > 0 && e.pivots.back() != d - 1))
            throw InternalError("adapted basis is not linearly independent");
        s.inverse.assign(d, std::vector<Rat>(d));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) s.inverse[r][c] = e.rows[r][d + c];
    }
}

std::vector<CycScalar> GprimeDecomposition::solve_space(const Space& s, const ModVec& v) const {
    const std::size_t d = s.idx.size();
    std::vector<CycScalar> c(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j < d; ++j) {
            const auto& x = v[static_cast<std::size_t>(s.idx[j])];
            if (!x.is_zero() && !s.inverse[r][j].is_zero()) c[r] += CycScalar(s.inverse[r][j]) * x;
        }
    return c;
}

ModVec GprimeDecomposition::project(int p, int q, const ModVec& v) const {
    if (static_cast<int>(v.size()) != m_->dim()) throw InputError("vector size does not match the module");
    ModVec out(v.size());
    for (const auto& [w, s] : spaces_) {
        const auto c = solve_space(s, v);
        for (std::size_t r = 0; r < c.size(); ++r) {
            const auto& ob = orbits_[static_cast<std::size_t>(s.orbits[r])];
            if (ob.p != p || ob.q != q || c[r].is_zero()) continue;
            for (int i : s.idx)
                if (!ob.vec[static_cast<std::size_t>(i)].is_zero()) out[static_cast<std::size_t>(i)] += c[r] * CycScalar(ob.vec[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

CycScalar GprimeDecomposition::orbit_coefficient(int p, int q, int copy, int a, int b, const ModVec& v) const {
    auto it = spaces_.find({p - 2 * a, q - 2 * b});
    if (it == spaces_.end()) throw InputError("orbit weight not present in the module");
    const auto c = solve_space(it->second, v);
    for (std::size_t r = 0; r < c.size(); ++r) {
        const auto& ob = orbits_[static_cast<std::size_t>(it->second.orbits[r])];
        if (ob.p == p && ob.q == q && ob.copy == copy && ob.a == a && ob.b == b) return c[r];
    }
    throw InputError("no such adapted vector");
}

ModVec casimir_project(const RepModule& m, int p, int q, const ModVec& v) {
    // Casimir e f + f e + h^2/2 of each sl2 acts on Sym^p by p(p+2)/2.
    struct Sl2 {
        const ModuleOp *e, *f, *h;
    };
    const Sl2 parts[2] = {{&m.op("E(2,0)"), &m.op("F(2,0)"), &m.op("H1")},
                          {&m.op("E(0,2)"), &m.op("F(0,2)"), &m.op("H2")}};
    auto casimir = [&](const Sl2& s, const ModVec& x) {
        ModVec a = s.e->apply(s.f->apply(x)), b = s.f->apply(s.e->apply(x)), c = s.h->apply(s.h->apply(x));
        for (std::size_t i = 0; i < x.size(); ++i) a[i] += b[i] + c[i] * CycScalar(Rat(1, 2));
        return a;
    };
    auto eig = [](int n) { return Rat(n * (n + 2), 2); };
    ModVec x = v;
    const int target[2] = {p, q};
    for (int t = 0; t < 2; ++t) {
        for (int other = 0; other <= m.degree(); ++other) {
            if (other == target[t]) continue;
            ModVec cx = casimir(parts[t], x);
            const CycScalar scale = CycScalar(Rat(1) / (eig(target[t]) - eig(other)));
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = (cx[i] - CycScalar(eig(other)) * x[i]) * scale;
        }
    }
    return x;
}

IsotypicResult isotypic_project(const RepModule& m, const GprimeDecomposition& g, int p, int q, const ModVec& v) {
    IsotypicResult r;
    const Weight& lam = m.highest_weight();
    r.admissible = p >= 0 && q >= 0 && (lam.k + lam.kp - p - q) % 2 == 0 &&
                   branching_admissible(BranchQuery(p, q, lam));
    if (!r.admissible) {
        r.vec.assign(v.size(), CycScalar(0));
        return r;
    }
    r.vec = g.project(p, q, v);
    return r;
}

namespace {
bool is_zero_vec(const ModVec& v) {
    return std::all_of(v.begin(), v.end(), [](const CycScalar& c) { return c.is_zero(); });
}
}  // namespace

LambdaScan lambda_scan(int k, int kp, int p, int q, int i_min, int i_max) {
    if (!(k >= kp && kp >= 0)) throw InputError("lambda_scan needs k >= k' >= 0");
    if ((k + kp - p - q) % 2 != 0) throw InputError("lambda_scan needs p + q = k + k' mod 2");
    LambdaScan out;
    out.k = k;
    out.kp = kp;
    out.p = p;
    out.q = q;
    const RepModule m = build_irrep(Weight(k, kp, -p - q), std::max(12, k + kp));
    out.module_dim = m.dim();
    const GprimeDecomposition g(m);
    auto ty = g.types().find({p, q});
    out.multiplicity = ty == g.types().end() ? 0 : ty->second;

    const auto& sp = m.weight_spaces().at({-k, kp});
    if (sp.size() != 1) throw InternalError("extremal weight space is not one-dimensional");
    const int widx = sp.front();
    const CayleyVector cv = cayley_vector(m, widx);
    out.v_weight = cv.weight;

    // J lies in iota(G'), so projecting X^i v is the J-transport of projecting X'^i w,
    // X' = Ad_{J^-1} X(1,-1) a multiple of the split root vector E(1,-1).
    const LieMatrix x = compact_root(+1);
    const LieMatrix j = J_matrix();
    const LieMatrix xs = j.inverse() * x * j;

    ModVec xv = cv.coords, yw = m.basis_vector(widx);
    for (int i = 0; i < i_min; ++i) {
        xv = m.act(x, xv);
        yw = m.act(xs, yw);
    }
    for (int i = i_min; i <= i_max; ++i) {
        LambdaScanRow row;
        row.i = i;
        if ((p + k - i) % 2 == 0 && (q - kp + i) % 2 == 0) {
            const int r = (p + k - i) / 2, s = (q - kp + i) / 2;
            if (r >= 0 && r <= p && s >= 0 && s <= q) {
                row.matched = true;
                row.r = r;
                row.s = s;
                row.rDual = p - r;
                row.sDual = q - s;
            }
        }
        const auto proj = isotypic_project(m, g, p, q, xv);
        row.nonzero = proj.admissible && !is_zero_vec(proj.vec);
        if (out.multiplicity == 1 && row.matched) {
            // adapted vector F(2,0)^a F(0,2)^b h of split weight (-k+i, k'-i)
            const int a = (p + k - i) / 2, b = (q - kp + i) / 2;
            row.lambda = g.orbit_coefficient(p, q, 0, a, b, yw);
            row.lambda_defined = true;
            if (row.lambda.is_zero() == row.nonzero)
                throw InternalError("compact and split pictures disagree on the isotypic component");
        }
        out.rows.push_back(row);
        xv = m.act(x, xv);
        yw = m.act(xs, yw);
    }
    return out;
}

LambdaScan lambda_scan(int k, int kp, int i_min, int i_max) { return lambda_scan(k, kp, k - 1, kp - 1, i_min, i_max); }

// ------------------------------------------------------------------ U(2) modules

KTypeModule::KTypeModule(int a, int b) : a_(a), b_(b) {
    if (a < b) throw InputError("K-type needs a >= b");
}

std::vector<Rat> KTypeModule::basis_vector(int s) const {
    if (s < 0 || s > d()) throw InputError("standard basis index out of range");
    std::vector<Rat> v(static_cast<std::size_t>(dim()));
    v[static_cast<std::size_t>(s)] = Rat(1);
    return v;
}

std::vector<Rat> KTypeModule::e11(const std::vector<Rat>& v) const {
    std::vector<Rat> out(v.size());
    for (int s = 0; s <= d(); ++s) out[static_cast<std::size_t>(s)] = Rat(s + b_) * v[static_cast<std::size_t>(s)];
    return out;
}

std::vector<Rat> KTypeModule::e22(const std::vector<Rat>& v) const {
    std::vector<Rat> out(v.size());
    for (int s = 0; s <= d(); ++s) out[static_cast<std::size_t>(s)] = Rat(a_ - s) * v[static_cast<std::size_t>(s)];
    return out;
}

std::vector<Rat> KTypeModule::raise(const std::vector<Rat>& v) const {
    std::vector<Rat> out(v.size());
    for (int s = 0; s < d(); ++s) out[static_cast<std::size_t>(s + 1)] = Rat(s + 1) * v[static_cast<std::size_t>(s)];
    return out;
}

std::vector<Rat> KTypeModule::lower(const std::vector<Rat>& v) const {
    std::vector<Rat> out(v.size());
    for (int s = 1; s <= d(); ++s) out[static_cast<std::size_t>(s - 1)] = Rat(d() - s + 1) * v[static_cast<std::size_t>(s)];
    return out;
}

std::vector<Rat> lowering_power(const KTypeModule& m, int i) {
    if (i < 0 || i > m.d()) throw InputError("lowering_power: i out of range");
    std::vector<Rat> v = m.basis_vector(0);
    for (int t = 0; t < i; ++t) v = m.raise(v);
    return v;
}

Rat raise_lower_coefficient(int d, int m, int n) {
    if (m < 0 || m > n || n > d) throw InputError("raise_lower_coefficient needs 0 <= m <= n <= d");
    return factorial(n) * factorial(d - n + m) / (factorial(n - m) * factorial(d - n));
}

SymBasis::SymBasis(int n) : n_(n) {
    if (n < 0) throw InputError("SymBasis needs n >= 0");
    const std::vector<std::string> vars{"X", "Y"};
    const LaurentPoly X = LaurentPoly::variable(vars, "X"), Y = LaurentPoly::variable(vars, "Y");
    const CycScalar i = CycScalar::i();
    const LaurentPoly minus = i * X - Y, plus = i * X + Y;
    const auto d = static_cast<std::size_t>(n + 1);
    DenseMat<CycScalar> aug(d, std::vector<CycScalar>(2 * d));
    for (int j = 0; j <= n; ++j) {
        b_.push_back(minus.pow(j) * plus.pow(n - j));
        for (int mm = 0; mm <= n; ++mm) aug[static_cast<std::size_t>(mm)][static_cast<std::size_t>(j)] = b_.back().coeff({n - mm, mm});
    }
    for (std::size_t r = 0; r < d; ++r) aug[r][d + r] = CycScalar(1);
    const auto e = rref(aug, 2 * d);
    if (e.pivots.size() != d || e.pivots.back() != d - 1) throw InternalError("b_j are not a basis");
    for (std::size_t j = 0; j < d; ++j) a_.emplace_back(e.rows[j].begin() + static_cast<std::ptrdiff_t>(d), e.rows[j].end());
}

CycScalar SymBasis::pair(const std::vector<CycScalar>& f, const LaurentPoly& poly) const {
    CycScalar s;
    for (int mm = 0; mm <= n_; ++mm) s += f[static_cast<std::size_t>(mm)] * poly.coeff({n_ - mm, mm});
    return s;
}

DenseMat<CycScalar> SymBasis::dual_action(const Mat2& g) const {
    const std::vector<std::string> vars{"X", "Y"};
    const LaurentPoly X = LaurentPoly::variable(vars, "X"), Y = LaurentPoly::variable(vars, "Y");
    // columns of g give the images of X and Y
    const LaurentPoly gx = g[0] * X + g[2] * Y, gy = g[1] * X + g[3] * Y;
    const auto d = static_cast<std::size_t>(n_ + 1);
    DenseMat<CycScalar> aug(d, std::vector<CycScalar>(2 * d));
    for (int mm = 0; mm <= n_; ++mm) {
        const LaurentPoly img = gx.pow(n_ - mm) * gy.pow(mm);
        for (int r = 0; r <= n_; ++r) aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(mm)] = img.coeff({n_ - r, r});
    }
    for (std::size_t r = 0; r < d; ++r) aug[r][d + r] = CycScalar(1);
    const auto e = rref(aug, 2 * d);
    if (e.pivots.size() != d || e.pivots.back() != d - 1) throw InputError("dual_action needs an invertible matrix");
    // (g.f)(P) = f(g^{-1} P): matrix is the transpose of G^{-1}
    DenseMat<CycScalar> out(d, std::vector<CycScalar>(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out[c][r] = e.rows[r][d + c];
    return out;
}

// ------------------------------------------------------------------ wedge spaces

namespace {
const std::array<std::array<int, 2>, 3> kPlus{{{2, 0}, {1, 1}, {0, 2}}};
const std::array<std::array<int, 2>, 3> kMinus{{{-2, 0}, {-1, -1}, {0, -2}}};

std::vector<std::vector<int>> subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < 8; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
        std::vector<int> s;
        for (int j = 0; j < 3; ++j)
            if (mask & (1 << j)) s.push_back(j);
        out.push_back(s);
    }
    return out;
}

// sort with sign; 0 if repeated
int sort_sign(std::vector<int>& s) {
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j + 1 < s.size() - i; ++j)
            if (s[j] > s[j + 1]) {
                std::swap(s[j], s[j + 1]);
                sign = -sign;
            } else if (s[j] == s[j + 1]) {
                return 0;
            }
    for (std::size_t j = 0; j + 1 < s.size(); ++j)
        if (s[j] == s[j + 1]) return 0;
    return sign;
}

int root_index(const std::array<std::array<int, 2>, 3>& roots, const std::array<int, 2>& r) {
    for (int j = 0; j < 3; ++j)
        if (roots[static_cast<std::size_t>(j)] == r) return j;
    throw InputError("not a non-compact root of the requested sign");
}
}  // namespace

WedgeSpace::WedgeSpace(int np, int nm) : np_(np), nm_(nm) {
    if (np < 0 || np > 3 || nm < 0 || nm > 3) throw InputError("wedge degrees must lie in [0, 3]");
    for (const auto& sp : subsets(np))
        for (const auto& sm : subsets(nm)) basis_.push_back({sp, sm});
}

std::array<int, 2> WedgeSpace::weight(int idx) const {
    std::array<int, 2> w{0, 0};
    const auto& e = basis_[static_cast<std::size_t>(idx)];
    for (int j : e.plus) w = {w[0] + kPlus[static_cast<std::size_t>(j)][0], w[1] + kPlus[static_cast<std::size_t>(j)][1]};
    for (int j : e.minus) w = {w[0] + kMinus[static_cast<std::size_t>(j)][0], w[1] + kMinus[static_cast<std::size_t>(j)][1]};
    return w;
}

int WedgeSpace::index_of(const std::vector<std::array<int, 2>>& plus, const std::vector<std::array<int, 2>>& minus) const {
    std::vector<int> sp, sm;
    for (const auto& r : plus) sp.push_back(root_index(kPlus, r));
    for (const auto& r : minus) sm.push_back(root_index(kMinus, r));
    std::sort(sp.begin(), sp.end());
    std::sort(sm.begin(), sm.end());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].plus == sp && basis_[i].minus == sm) return static_cast<int>(i);
    throw InputError("wedge element not in this space");
}

std::vector<CycScalar> WedgeSpace::element(const std::vector<std::array<int, 2>>& plus,
                                           const std::vector<std::array<int, 2>>& minus) const {
    std::vector<int> sp, sm;
    for (const auto& r : plus) sp.push_back(root_index(kPlus, r));
    for (const auto& r : minus) sm.push_back(root_index(kMinus, r));
    const int sign = sort_sign(sp) * sort_sign(sm);
    std::vector<CycScalar> v(basis_.size());
    if (sign == 0) return v;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].plus == sp && basis_[i].minus == sm) v[i] = CycScalar(sign);
    return v;
}

std::vector<CycScalar> WedgeSpace::ad(const LieMatrix& y, const std::vector<CycScalar>& v) const {
    // ad y on p+ and p- in the root-vector bases
    std::vector<LieMatrix> bp, bm;
    for (const auto& r : kPlus) bp.push_back(nc_root(r[0], r[1]));
    for (const auto& r : kMinus) bm.push_back(nc_root(r[0], r[1]));
    std::array<std::vector<CycScalar>, 3> adp, adm;
    for (int j = 0; j < 3; ++j) {
        if (!solve_in_span(bp, bracket(y, bp[static_cast<std::size_t>(j)]), adp[static_cast<std::size_t>(j)]) ||
            !solve_in_span(bm, bracket(y, bm[static_cast<std::size_t>(j)]), adm[static_cast<std::size_t>(j)]))
            throw InputError("ad action needs an element of k_C");
    }
    std::vector<CycScalar> out(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (v[i].is_zero()) continue;
        const auto& e = basis_[i];
        auto emit = [&](std::vector<int> sp, std::vector<int> sm, const CycScalar& c) {
            const int sign = sort_sign(sp) * sort_sign(sm);
            if (sign == 0) return;
            for (std::size_t t = 0; t < basis_.size(); ++t)
                if (basis_[t].plus == sp && basis_[t].minus == sm) out[t] += CycScalar(sign) * c * v[i];
        };
        for (std::size_t pos = 0; pos < e.plus.size(); ++pos)
            for (int l = 0; l < 3; ++l) {
                const auto& c = adp[static_cast<std::size_t>(e.plus[pos])][static_cast<std::size_t>(l)];
                if (c.is_zero()) continue;
                auto sp = e.plus;
                sp[pos] = l;
                emit(sp, e.minus, c);
            }
        for (std::size_t pos = 0; pos < e.minus.size(); ++pos)
            for (int l = 0; l < 3; ++l) {
                const auto& c = adm[static_cast<std::size_t>(e.minus[pos])][static_cast<std::size_t>(l)];
                if (c.is_zero()) continue;
                auto sm = e.minus;
                sm[pos] = l;
                emit(e.plus, sm, c);
            }
    }
    return out;
}

DenseMat<CycScalar> WedgeSpace::ad_matrix(const LieMatrix& y) const {
    const auto d = static_cast<std::size_t>(dim());
    DenseMat<CycScalar> m(d, std::vector<CycScalar>(d));
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<CycScalar> e(d);
        e[c] = CycScalar(1);
        const auto col = ad(y, e);
        for (std::size_t r = 0; r < d; ++r) m[r][c] = col[r];
    }
    return m;
}

namespace {
std::vector<KTypeLabel> sorted_labels(std::map<std::array<int, 2>, int> acc) {
    std::vector<KTypeLabel> out;
    for (const auto& [ab, mult] : acc)
        if (mult != 0) out.push_back({ab[0], ab[1], mult});
    std::sort(out.begin(), out.end(), [](const KTypeLabel& x, const KTypeLabel& y) {
        return x.a - x.b != y.a - y.b ? x.a - x.b > y.a - y.b : x.a > y.a;
    });
    return out;
}
}  // namespace

std::vector<KTypeLabel> WedgeSpace::decompose() const {
    std::map<std::array<int, 2>, int> weights;
    for (int i = 0; i < dim(); ++i) ++weights[weight(i)];
    std::map<std::array<int, 2>, int> acc;
    while (!weights.empty()) {
        auto best = weights.begin();
        for (auto it = weights.begin(); it != weights.end(); ++it)
            if (it->first[0] - it->first[1] > best->first[0] - best->first[1]) best = it;
        const int a = best->first[0], b = best->first[1];
        if (a < b) throw InternalError("character peel found no dominant weight");
        ++acc[{a, b}];
        for (int s = 0; s <= a - b; ++s) {
            auto it = weights.find({s + b, a - s});
            if (it == weights.end()) throw InternalError("character peel: missing weight");
            if (--it->second == 0) weights.erase(it);
        }
    }
    return sorted_labels(acc);
}

std::vector<KTypeLabel> WedgeSpace::decompose_by_highest_vectors() const {
    const auto raise = ad_matrix(compact_root(+1));
    std::map<std::array<int, 2>, std::vector<std::size_t>> spaces;
    for (int i = 0; i < dim(); ++i) spaces[weight(i)].push_back(static_cast<std::size_t>(i));
    std::map<std::array<int, 2>, int> acc;
    for (const auto& [w, idx] : spaces) {
        if (w[0] < w[1]) continue;
        DenseMat<CycScalar> a(static_cast<std::size_t>(dim()), std::vector<CycScalar>(idx.size()));
        for (std::size_t r = 0; r < a.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) a[r][c] = raise[r][idx[c]];
        acc[w] += static_cast<int>(kernel(a, idx.size()).size());
    }
    return sorted_labels(acc);
}

std::vector<KTypeLabel> wedge_decompose(int np, int nm) { return WedgeSpace(np, nm).decompose(); }

}  // namespace gsp4
