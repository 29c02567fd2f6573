#include "gendo/algebra.hpp"

#include "gendo/error.hpp"
#include "gendo/kupisch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace gendo {

namespace {

using Witness = std::vector<long long>;

long long ll(std::size_t x) { return static_cast<long long>(x); }

std::vector<std::vector<BasedAlgebra::Term>> sparsify(const AlgebraPresentation& p)
{
    const std::size_t d = p.basis_labels.size();
    std::vector<std::vector<BasedAlgebra::Term>> out(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (p.mult[i][j][k]) out[i * d + j].push_back({k, p.mult[i][j][k]});
    return out;
}

void check_vec(const Field& f, const Vec& v, std::size_t d, const char* what)
{
    if (v.size() != d) throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": wrong length");
    for (auto x : v)
        if (!f.contains(x)) throw Error(ErrorKind::FieldMismatch, std::string(what) + ": entry outside the field");
}

}  // namespace

Vec BasedAlgebra::multiply(const Vec& x, const Vec& y) const
{
    const Field& f = field();
    const std::size_t d = dim();
    Vec r(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (!y[j]) continue;
            Elem s = f.mul(x[i], y[j]);
            for (const auto& t : sparse_[i * d + j]) r[t.index] = f.add(r[t.index], f.mul(s, t.coef));
        }
    }
    return r;
}

AlgebraPtr validate(AlgebraPresentation p)
{
    const Field f = p.field;
    const std::size_t d = p.basis_labels.size();
    if (d == 0) throw Error(ErrorKind::InvalidInput, "algebra of dimension 0");
    if (p.mult.size() != d) throw Error(ErrorKind::DimensionMismatch, "structure constants: wrong row count");
    for (std::size_t i = 0; i < d; ++i) {
        if (p.mult[i].size() != d) throw Error(ErrorKind::DimensionMismatch, "structure constants: wrong column count");
        for (std::size_t j = 0; j < d; ++j) check_vec(f, p.mult[i][j], d, "structure constant");
    }
    check_vec(f, p.unit, d, "unit");
    for (const auto& e : p.idempotents) check_vec(f, e, d, "idempotent");
    for (const auto& r : p.radical_generators) check_vec(f, r, d, "radical generator");
    if (p.idempotents.empty()) throw Error(ErrorKind::BadIdempotents, "no idempotents given");

    auto a = std::make_shared<BasedAlgebra>();
    a->sparse_ = sparsify(p);
    a->pres_ = std::move(p);
    const auto& P = a->pres_;
    const auto& sp = a->sparse_;
    const std::size_t n = P.idempotents.size();

    auto basis_vec = [d](std::size_t i) {
        Vec v(d, 0);
        v[i] = 1;
        return v;
    };

    // unit
    for (std::size_t i = 0; i < d; ++i) {
        auto b = basis_vec(i);
        if (a->multiply(P.unit, b) != b || a->multiply(b, P.unit) != b)
            throw Error(ErrorKind::BadUnit, "unit fails on basis element " + std::to_string(i), {ll(i)});
    }

    // associativity on basis triples
    {
        Vec lhs(d), rhs(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    std::fill(lhs.begin(), lhs.end(), 0);
                    std::fill(rhs.begin(), rhs.end(), 0);
                    for (const auto& t : sp[i * d + j])
                        for (const auto& u : sp[t.index * d + k])
                            lhs[u.index] = f.add(lhs[u.index], f.mul(t.coef, u.coef));
                    for (const auto& t : sp[j * d + k])
                        for (const auto& u : sp[i * d + t.index])
                            rhs[u.index] = f.add(rhs[u.index], f.mul(t.coef, u.coef));
                    if (lhs != rhs)
                        throw Error(ErrorKind::NonAssociative,
                                    "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" + std::to_string(k) +
                                        " != b" + std::to_string(i) + " (b" + std::to_string(j) + " b" +
                                        std::to_string(k) + ")",
                                    {ll(i), ll(j), ll(k)});
                }
    }

    // idempotents
    {
        Vec sum(d, 0);
        for (std::size_t s = 0; s < n; ++s) {
            sum = vec_add(f, sum, P.idempotents[s]);
            for (std::size_t t = 0; t < n; ++t) {
                auto prod = a->multiply(P.idempotents[s], P.idempotents[t]);
                bool ok = (s == t) ? prod == P.idempotents[s] : vec_is_zero(prod);
                if (!ok)
                    throw Error(ErrorKind::BadIdempotents,
                                "e" + std::to_string(s) + " e" + std::to_string(t) + " is wrong", {ll(s), ll(t)});
            }
            if (vec_is_zero(P.idempotents[s]))
                throw Error(ErrorKind::BadIdempotents, "zero idempotent " + std::to_string(s), {ll(s)});
        }
        if (sum != P.unit) throw Error(ErrorKind::BadIdempotents, "idempotents do not sum to the unit");
    }

    // homogeneity: b = e_s b e_t for exactly one (s, t)
    a->src_.assign(d, 0);
    a->tgt_.assign(d, 0);
    a->pieces_.assign(n * n, {});
    for (std::size_t b = 0; b < d; ++b) {
        auto bv = basis_vec(b);
        int found = 0;
        for (std::size_t s = 0; s < n && found < 2; ++s) {
            auto left = a->multiply(P.idempotents[s], bv);
            if (vec_is_zero(left)) continue;
            for (std::size_t t = 0; t < n; ++t) {
                auto both = a->multiply(left, P.idempotents[t]);
                if (vec_is_zero(both)) continue;
                if (both == bv && left == bv) {
                    a->src_[b] = s;
                    a->tgt_[b] = t;
                    ++found;
                } else {
                    found = 2;
                }
            }
        }
        if (found != 1)
            throw Error(ErrorKind::BasisNotHomogeneous,
                        "basis element " + std::to_string(b) + " is not of the form e_s b e_t", {ll(b)});
        a->pieces_[a->src_[b] * n + a->tgt_[b]].push_back(b);
    }

    // radical: span must be a nilpotent two-sided ideal with quotient spanned by the e_i
    SubspaceBasis rad(f, d);
    for (const auto& r : P.radical_generators) rad.add(r);
    const auto& rb = rad.rows();
    for (std::size_t b = 0; b < d; ++b) {
        auto bv = basis_vec(b);
        for (std::size_t g = 0; g < rb.size(); ++g)
            if (!rad.contains(a->multiply(bv, rb[g])) || !rad.contains(a->multiply(rb[g], bv)))
                throw Error(ErrorKind::RadicalNotIdeal,
                            "radical span not closed under basis element " + std::to_string(b), {ll(b), ll(g)});
    }
    {
        SubspaceBasis full = rad;
        for (std::size_t s = 0; s < n; ++s)
            if (!full.add(P.idempotents[s]))
                throw Error(ErrorKind::QuotientNotSemisimple,
                            "idempotent " + std::to_string(s) + " lies in radical + other idempotents", {ll(s)});
        if (full.dim() != d)
            throw Error(ErrorKind::QuotientNotSemisimple, "A/rad is larger than the span of the idempotents");
    }
    a->radical_ = rb;

    // powers of the radical
    std::vector<Vec> power = rb;
    std::vector<Vec> rad2;
    std::size_t k = 1;
    while (!power.empty()) {
        if (k > d + 1) throw Error(ErrorKind::RadicalNotNilpotent, "radical is not nilpotent", {ll(k)});
        SubspaceBasis next(f, d);
        for (const auto& x : power)
            for (const auto& r : rb) next.add(a->multiply(x, r));
        if (next.dim() == power.size())
            throw Error(ErrorKind::RadicalNotNilpotent, "rad^" + std::to_string(k) + " = rad^" + std::to_string(k + 1),
                        {ll(k)});
        power = next.rows();
        if (k == 1) rad2 = power;
        ++k;
    }
    a->loewy_ = k;

    // arrows: homogeneous complement of rad^2 in rad
    SubspaceBasis s2(f, d);
    for (const auto& v : rad2) s2.add(v);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            for (const auto& r : rb) {
                auto v = a->multiply(a->multiply(P.idempotents[s], r), P.idempotents[t]);
                if (!vec_is_zero(v) && s2.add(v)) {
                    a->arrows_.push_back(v);
                    a->arrow_src_.push_back(s);
                    a->arrow_tgt_.push_back(t);
                }
            }

    // connectedness over the arrow graph
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < a->arrows_.size(); ++e) parent[find(a->arrow_src_[e])] = find(a->arrow_tgt_[e]);
    std::size_t comps = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (find(v) == v) ++comps;
    a->connected_ = comps == 1;
    if (!a->connected_) a->warnings_.push_back("algebra is not connected (" + std::to_string(comps) + " blocks)");
    if (rb.empty()) a->warnings_.push_back("algebra is semisimple");
    return a;
}

AlgebraPtr opposite(const AlgebraPtr& a)
{
    std::lock_guard<std::mutex> lock(a->op_mutex_);
    if (a->op_strong_) return a->op_strong_;
    if (auto w = a->op_weak_.lock()) return w;
    AlgebraPresentation p = a->pres_;
    const std::size_t d = a->dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p.mult[i][j] = a->pres_.mult[j][i];
    p.name = a->name().size() > 3 && a->name().substr(a->name().size() - 3) == "^op"
                 ? a->name().substr(0, a->name().size() - 3)
                 : a->name() + "^op";
    auto op = validate(std::move(p));
    a->op_strong_ = op;
    op->op_weak_ = a;
    return op;
}

std::vector<std::vector<std::size_t>> cartan_matrix(const BasedAlgebra& a)
{
    const std::size_t n = a.num_vertices();
    std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = a.piece(i, j).size();
    return c;
}

SymmetryVerdict is_symmetric(const BasedAlgebra& a, std::uint64_t seed)
{
    const Field& f = a.field();
    const std::size_t d = a.dim();
    // lambda vanishes on every commutator b_i b_j - b_j b_i
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec c(d, 0);
            for (const auto& t : a.product(i, j)) c[t.index] = f.add(c[t.index], t.coef);
            for (const auto& t : a.product(j, i)) c[t.index] = f.sub(c[t.index], t.coef);
            if (!vec_is_zero(c)) rows.push_back(std::move(c));
        }
    std::vector<Vec> forms;
    if (rows.empty()) {
        for (std::size_t i = 0; i < d; ++i) {
            Vec v(d, 0);
            v[i] = 1;
            forms.push_back(v);
        }
    } else {
        forms = kernel_basis(Matrix::from_rows(f, rows));
    }
    SymmetryVerdict out;
    out.central_forms_dim = forms.size();
    if (forms.empty()) return out;

    auto nondegenerate = [&](const Vec& lam) {
        Matrix g(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Elem s = 0;
                for (const auto& t : a.product(i, j)) s = f.add(s, f.mul(t.coef, lam[t.index]));
                g(i, j) = s;
            }
        return rank(g) == d;
    };
    auto combine = [&](const Vec& coeffs) {
        Vec lam(d, 0);
        for (std::size_t k = 0; k < forms.size(); ++k)
            if (coeffs[k]) lam = vec_add(f, lam, vec_scale(f, coeffs[k], forms[k]));
        return lam;
    };
    auto accept = [&](Vec lam) {
        out.status = SymmetryVerdict::Status::Symmetric;
        out.form = std::move(lam);
        return out;
    };

    for (const auto& lam : forms)
        if (nondegenerate(lam)) return accept(lam);
    Rng rng(seed);
    for (int t = 0; t < 1000; ++t) {
        Vec c(forms.size());
        for (auto& x : c) x = static_cast<Elem>(rng() % f.order());
        auto lam = combine(c);
        if (nondegenerate(lam)) return accept(lam);
    }
    const double count = std::pow(static_cast<double>(f.order()), static_cast<double>(forms.size()));
    if (count <= static_cast<double>(1u << 20)) {
        // enumerate up to scalars: first nonzero coefficient is 1
        Vec c(forms.size(), 0);
        const std::size_t q = f.order();
        for (std::size_t lead = 0; lead < forms.size(); ++lead) {
            std::fill(c.begin(), c.end(), 0);
            c[lead] = 1;
            while (true) {
                auto lam = combine(c);
                if (nondegenerate(lam)) return accept(lam);
                std::size_t pos = lead + 1;
                while (pos < c.size() && c[pos] + 1 == q) c[pos++] = 0;
                if (pos >= c.size()) break;
                ++c[pos];
            }
        }
        out.status = SymmetryVerdict::Status::NotSymmetric;
        return out;
    }
    out.status = SymmetryVerdict::Status::ProbablyNotSymmetric;
    return out;
}

CornerAlgebra corner_algebra(const BasedAlgebra& a, const std::vector<std::size_t>& vertices)
{
    if (vertices.empty()) throw Error(ErrorKind::InvalidInput, "corner algebra needs a nonempty vertex set");
    const std::size_t n = a.num_vertices();
    std::vector<int> sel(n, -1);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (vertices[k] >= n) throw Error(ErrorKind::InvalidInput, "corner vertex out of range");
        sel[vertices[k]] = static_cast<int>(k);
    }
    CornerAlgebra c;
    c.vertices = vertices;
    std::vector<long> pos(a.dim(), -1);
    for (std::size_t b = 0; b < a.dim(); ++b)
        if (sel[a.source(b)] >= 0 && sel[a.target(b)] >= 0) {
            pos[b] = static_cast<long>(c.basis_map.size());
            c.basis_map.push_back(b);
        }
    const std::size_t m = c.basis_map.size();
    const auto& P = a.presentation();
    auto restrict = [&](const Vec& v) {
        Vec r(m, 0);
        for (std::size_t k = 0; k < m; ++k) r[k] = v[c.basis_map[k]];
        return r;
    };
    AlgebraPresentation p;
    p.field = a.field();
    p.name = a.name() + "[corner]";
    p.mult.assign(m, std::vector<Vec>(m));
    for (std::size_t i = 0; i < m; ++i) {
        p.basis_labels.push_back(P.basis_labels[c.basis_map[i]]);
        for (std::size_t j = 0; j < m; ++j) p.mult[i][j] = restrict(P.mult[c.basis_map[i]][c.basis_map[j]]);
    }
    Vec e(a.dim(), 0);
    for (auto v : vertices) {
        e = vec_add(a.field(), e, P.idempotents[v]);
        p.idempotents.push_back(restrict(P.idempotents[v]));
    }
    p.unit = restrict(e);
    for (const auto& r : a.radical_basis()) {
        auto v = a.multiply(a.multiply(e, r), e);
        if (!vec_is_zero(v)) p.radical_generators.push_back(restrict(v));
    }
    c.algebra = validate(std::move(p));
    return c;
}

// ------------------------------------------------------------------ rewriting

namespace {

using Word = std::vector<std::uint32_t>;  // arrow indices

struct WordOrder {
    const std::vector<std::size_t>* rank;
    bool operator()(const Word& x, const Word& y) const
    {
        if (x.size() != y.size()) return x.size() < y.size();
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i]) return (*rank)[x[i]] < (*rank)[y[i]];
        return false;
    }
};

using Poly = std::map<Word, Elem, WordOrder>;

struct Rule {
    Word lhs;
    Poly rhs;
};

class Rewriter {
public:
    Rewriter(const QuiverPresentation& q, std::vector<std::size_t> rank)
        : q_(q), f_(q.field), rank_(std::move(rank)), order_{&rank_}
    {
    }

    Poly empty() const { return Poly(order_); }

    void add_to(Poly& p, const Word& w, Elem c) const
    {
        if (!c) return;
        auto it = p.find(w);
        if (it == p.end()) {
            p.emplace(w, c);
            return;
        }
        it->second = f_.add(it->second, c);
        if (!it->second) p.erase(it);
    }

    static long find_sub(const Word& w, const Word& pat)
    {
        if (pat.size() > w.size()) return -1;
        for (std::size_t i = 0; i + pat.size() <= w.size(); ++i)
            if (std::equal(pat.begin(), pat.end(), w.begin() + static_cast<long>(i))) return static_cast<long>(i);
        return -1;
    }

    Poly reduce(Poly work)
    {
        Poly out = empty();
        while (!work.empty()) {
            auto it = std::prev(work.end());
            Word w = it->first;
            Elem c = it->second;
            work.erase(it);
            bool rewritten = false;
            for (const auto& r : rules_) {
                long pos = find_sub(w, r.lhs);
                if (pos < 0) continue;
                if (++steps_ > q_.step_budget)
                    throw Error(ErrorKind::RewritingDiverged,
                                "rewriting exceeded " + std::to_string(q_.step_budget) + " steps",
                                {static_cast<long long>(q_.step_budget)});
                for (const auto& [tw, tc] : r.rhs) {
                    Word nw(w.begin(), w.begin() + pos);
                    nw.insert(nw.end(), tw.begin(), tw.end());
                    nw.insert(nw.end(), w.begin() + pos + static_cast<long>(r.lhs.size()), w.end());
                    add_to(work, nw, f_.mul(c, tc));
                }
                rewritten = true;
                break;
            }
            if (!rewritten) add_to(out, w, c);
        }
        return out;
    }

    /// u * p * v
    Poly sandwich(const Word& u, const Poly& p, const Word& v) const
    {
        Poly out = empty();
        for (const auto& [w, c] : p) {
            Word nw = u;
            nw.insert(nw.end(), w.begin(), w.end());
            nw.insert(nw.end(), v.begin(), v.end());
            add_to(out, nw, c);
        }
        return out;
    }

    Poly minus(Poly a, const Poly& b) const
    {
        for (const auto& [w, c] : b) add_to(a, w, f_.neg(c));
        return a;
    }

    Poly mono(const Word& w) const
    {
        Poly p = empty();
        p.emplace(w, 1);
        return p;
    }

    void complete(const std::vector<Poly>& relations)
    {
        std::vector<Poly> pending(relations.begin(), relations.end());
        std::size_t head = 0;
        while (head < pending.size()) {
            Poly p = reduce(std::move(pending[head++]));
            if (p.empty()) continue;
            auto lt = std::prev(p.end());
            Word lhs = lt->first;
            Elem iv = f_.inv(lt->second);
            Poly rhs = empty();
            for (auto it = p.begin(); it != lt; ++it) add_to(rhs, it->first, f_.neg(f_.mul(iv, it->second)));
            if (lhs.size() > q_.max_path_length * 2 || rules_.size() > q_.step_budget)
                throw Error(ErrorKind::RewritingDiverged, "completion produced too many rules",
                            {static_cast<long long>(rules_.size())});
            rules_.push_back({lhs, rhs});
            const std::size_t nr = rules_.size() - 1;
            for (std::size_t o = 0; o <= nr; ++o) {
                critical_pairs(rules_[nr], rules_[o], pending);
                if (o != nr) critical_pairs(rules_[o], rules_[nr], pending);
            }
            if (++steps_ > q_.step_budget)
                throw Error(ErrorKind::RewritingDiverged, "completion exceeded the step budget",
                            {static_cast<long long>(q_.step_budget)});
        }
    }

    void critical_pairs(const Rule& r1, const Rule& r2, std::vector<Poly>& pending) const
    {
        const std::size_t l1 = r1.lhs.size(), l2 = r2.lhs.size();
        // suffix of lhs1 equals prefix of lhs2
        for (std::size_t k = 1; k < std::min(l1, l2); ++k) {
            if (!std::equal(r1.lhs.end() - static_cast<long>(k), r1.lhs.end(), r2.lhs.begin())) continue;
            Word tail(r2.lhs.begin() + static_cast<long>(k), r2.lhs.end());
            Word head(r1.lhs.begin(), r1.lhs.end() - static_cast<long>(k));
            pending.push_back(minus(sandwich({}, r1.rhs, tail), sandwich(head, r2.rhs, {})));
        }
        // lhs2 inside lhs1
        if (&r1 != &r2) {
            long pos = find_sub(r1.lhs, r2.lhs);
            if (pos >= 0) {
                Word u(r1.lhs.begin(), r1.lhs.begin() + pos);
                Word v(r1.lhs.begin() + pos + static_cast<long>(l2), r1.lhs.end());
                pending.push_back(minus(r1.rhs, sandwich(u, r2.rhs, v)));
            }
        }
    }

    bool normal(const Word& w) const
    {
        for (const auto& r : rules_)
            if (find_sub(w, r.lhs) >= 0) return false;
        return true;
    }

    const WordOrder& order() const { return order_; }

private:
    const QuiverPresentation& q_;
    Field f_;
    std::vector<std::size_t> rank_;
    WordOrder order_;
    std::vector<Rule> rules_;
    std::size_t steps_ = 0;
};

}  // namespace

AlgebraPresentation from_quiver(const QuiverPresentation& q)
{
    const Field& f = q.field;
    const std::size_t nv = q.vertices.size(), na = q.arrows.size();
    if (nv == 0) throw Error(ErrorKind::InvalidInput, "quiver without vertices");
    for (std::size_t a = 0; a < na; ++a)
        if (q.arrows[a].source >= nv || q.arrows[a].target >= nv)
            throw Error(ErrorKind::InvalidInput, "arrow " + std::to_string(a) + " has an unknown endpoint", {ll(a)});

    // arrow rank by label
    std::vector<std::size_t> idx(na);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return q.arrows[x].label < q.arrows[y].label; });
    std::vector<std::size_t> rank(na);
    for (std::size_t r = 0; r < na; ++r) rank[idx[r]] = r;

    Rewriter rw(q, rank);
    std::vector<Poly> rels;
    for (std::size_t r = 0; r < q.relations.size(); ++r) {
        const auto& rel = q.relations[r];
        Poly p = rw.empty();
        long s = -1, t = -1;
        for (std::size_t k = 0; k < rel.size(); ++k) {
            const auto& term = rel[k];
            if (term.arrows.size() < 2)
                throw Error(ErrorKind::InadmissibleRelation, "relation term of length < 2", {ll(r), ll(k)});
            for (std::size_t i = 0; i < term.arrows.size(); ++i) {
                if (term.arrows[i] >= na) throw Error(ErrorKind::InvalidInput, "relation uses unknown arrow", {ll(r), ll(k)});
                if (i && q.arrows[term.arrows[i - 1]].target != q.arrows[term.arrows[i]].source)
                    throw Error(ErrorKind::InadmissibleRelation, "relation term is not a path", {ll(r), ll(k)});
            }
            long ts = static_cast<long>(q.arrows[term.arrows.front()].source);
            long tt = static_cast<long>(q.arrows[term.arrows.back()].target);
            if (k == 0) {
                s = ts;
                t = tt;
            } else if (ts != s || tt != t) {
                throw Error(ErrorKind::InadmissibleRelation, "relation terms are not parallel", {ll(r), ll(k)});
            }
            if (!f.contains(term.coef)) throw Error(ErrorKind::FieldMismatch, "relation coefficient outside the field");
            rw.add_to(p, Word(term.arrows.begin(), term.arrows.end()), term.coef);
        }
        rels.push_back(std::move(p));
    }
    rw.complete(rels);

    // normal-form paths, grown by length (normal forms are closed under prefixes)
    std::vector<Word> words;
    std::vector<Word> frontier;
    for (std::size_t a = 0; a < na; ++a) {
        Word w{static_cast<std::uint32_t>(a)};
        if (rw.normal(w)) frontier.push_back(w);
    }
    while (!frontier.empty()) {
        if (frontier.front().size() > q.max_path_length)
            throw Error(ErrorKind::NotFiniteDimensional,
                        "normal-form path longer than " + std::to_string(q.max_path_length),
                        {static_cast<long long>(q.max_path_length)});
        std::vector<Word> next;
        for (const auto& w : frontier) {
            words.push_back(w);
            const std::size_t end = q.arrows[w.back()].target;
            for (std::size_t a = 0; a < na; ++a) {
                if (q.arrows[a].source != end) continue;
                Word x = w;
                x.push_back(static_cast<std::uint32_t>(a));
                if (rw.normal(x)) next.push_back(std::move(x));
            }
        }
        frontier = std::move(next);
    }

    // basis: per source vertex, e_v then its normal paths in term order
    struct Elt {
        std::size_t vertex;  // for trivial paths
        Word w;
    };
    std::vector<Elt> basis;
    std::map<Word, std::size_t, WordOrder> index(rw.order());
    std::vector<std::size_t> trivial_index(nv);
    std::sort(words.begin(), words.end(), rw.order());
    for (std::size_t v = 0; v < nv; ++v) {
        trivial_index[v] = basis.size();
        basis.push_back({v, {}});
        for (const auto& w : words)
            if (q.arrows[w.front()].source == v) {
                index[w] = basis.size();
                basis.push_back({v, w});
            }
    }
    const std::size_t d = basis.size();
    auto src = [&](const Elt& e) { return e.w.empty() ? e.vertex : q.arrows[e.w.front()].source; };
    auto tgt = [&](const Elt& e) { return e.w.empty() ? e.vertex : q.arrows[e.w.back()].target; };

    AlgebraPresentation p;
    p.field = f;
    p.name = q.name;
    for (const auto& e : basis) {
        if (e.w.empty()) {
            p.basis_labels.push_back("e_" + q.vertices[e.vertex]);
            continue;
        }
        std::string s;
        for (auto a : e.w) s += (s.empty() ? "" : "*") + q.arrows[a].label;
        p.basis_labels.push_back(s);
    }
    p.mult.assign(d, std::vector<Vec>(d, Vec(d, 0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto &x = basis[i], &y = basis[j];
            if (tgt(x) != src(y)) continue;
            if (x.w.empty()) {
                p.mult[i][j][j] = 1;
                continue;
            }
            if (y.w.empty()) {
                p.mult[i][j][i] = 1;
                continue;
            }
            Word w = x.w;
            w.insert(w.end(), y.w.begin(), y.w.end());
            for (const auto& [nw, c] : rw.reduce(rw.mono(w))) p.mult[i][j][index.at(nw)] = c;
        }
    p.unit.assign(d, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        Vec e(d, 0);
        e[trivial_index[v]] = 1;
        p.unit[trivial_index[v]] = 1;
        p.idempotents.push_back(std::move(e));
    }
    for (std::size_t b = 0; b < d; ++b)
        if (!basis[b].w.empty()) {
            Vec r(d, 0);
            r[b] = 1;
            p.radical_generators.push_back(std::move(r));
        }
    return p;
}

AlgebraPtr from_kupisch(const KupischSeries& series, const Field& field)
{
    auto s = validate_kupisch(series.c, series.cyclic);
    const std::size_t n = s.n();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + s.c[i];
    const std::size_t d = offset[n];
    AlgebraPresentation p;
    p.field = field;
    p.name = std::string(s.cyclic ? "kupisch" : "kupisch-linear") + "(" + s.to_string() + ")";
    p.mult.assign(d, std::vector<Vec>(d, Vec(d, 0)));
    p.unit.assign(d, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < s.c[i]; ++l) {
            const std::size_t b = offset[i] + l;
            p.basis_labels.push_back(l == 0 ? "e" + std::to_string(i) : "p" + std::to_string(i) + "_" + std::to_string(l));
            const std::size_t j = s.wrap(static_cast<long long>(i + l));
            for (std::size_t m = 0; m < s.c[j]; ++m)
                if (l + m < s.c[i]) p.mult[b][offset[j] + m][offset[i] + l + m] = 1;
            Vec v(d, 0);
            v[b] = 1;
            if (l == 0) {
                p.unit[b] = 1;
                p.idempotents.push_back(v);
            } else {
                p.radical_generators.push_back(v);
            }
        }
    return validate(std::move(p));
}

}  // namespace gendo
