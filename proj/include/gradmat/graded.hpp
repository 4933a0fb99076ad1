#pragma once

/// Graded vector spaces and gradings of matrix algebras: the good grading
/// END(V), grading verification, suspensions, the inertia group, the
/// group-algebra splitting of a graded space, isomorphism testing of good
/// gradings and recovery of homogeneous conjugators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "gradmat/algebra.hpp"
#include "gradmat/common.hpp"
#include "gradmat/group.hpp"
#include "gradmat/matrix.hpp"

namespace gradmat {

struct GradedVectorSpace {
    FiniteAbelianGroup group;
    std::vector<GroupElement> degrees;

    std::int64_t dim() const { return static_cast<std::int64_t>(degrees.size()); }
};

/// A G-grading of a subalgebra of M_size(k) given by explicit component
/// bases. For a full grading of M_m(k), algebra_dim = m^2; base extensions
/// keep size and algebra_dim separately because the extended algebra is a
/// proper subalgebra of the ambient matrix ring.
struct Grading {
    FiniteAbelianGroup group;
    Field field;
    std::int64_t size = 0;
    std::int64_t algebra_dim = 0;
    std::map<GroupElement, std::vector<Matrix>> components;

    const std::vector<Matrix>& component(const GroupElement& g) const {
        static const std::vector<Matrix> empty;
        auto it = components.find(g);
        return it == components.end() ? empty : it->second;
    }
};

enum class GradingAxiom { None, DirectSum, Identity, Product };

struct VerifyReport {
    bool ok = true;
    GradingAxiom axiom = GradingAxiom::None;
    std::string witness;
};

// ---------------------------------------------------------------------------

/// The good grading END(V): the component of degree s has basis
/// { e_ij | g_i g_j^{-1} = s }.
inline Grading end_grading(const GradedVectorSpace& v, const Field& field) {
    Grading a;
    a.group = v.group;
    a.field = field;
    a.size = v.dim();
    a.algebra_dim = a.size * a.size;
    for (std::int64_t i = 0; i < a.size; ++i)
        for (std::int64_t j = 0; j < a.size; ++j) {
            GroupElement deg = v.group.combine(v.degrees[static_cast<std::size_t>(i)],
                                               v.degrees[static_cast<std::size_t>(j)], true);
            a.components[deg].push_back(Matrix::unit(field, a.size, i, j));
        }
    return a;
}

inline VerifyReport verify_grading(const Grading& a) {
    VerifyReport rep;
    const Field& f = a.field;
    // direct sum: total count and joint independence
    std::vector<std::vector<Scalar>> all;
    for (const auto& [g, basis] : a.components) {
        if (!a.group.contains(g)) {
            rep.ok = false;
            rep.axiom = GradingAxiom::DirectSum;
            rep.witness = "component label outside the group: " + g.to_string();
            return rep;
        }
        for (const auto& m : basis) {
            if (m.rows() != a.size || m.cols() != a.size) {
                rep.ok = false;
                rep.axiom = GradingAxiom::DirectSum;
                rep.witness = "component matrix of wrong shape in degree " + g.to_string();
                return rep;
            }
            all.push_back(m.entries());
        }
    }
    if (static_cast<std::int64_t>(all.size()) != a.algebra_dim) {
        rep.ok = false;
        rep.axiom = GradingAxiom::DirectSum;
        rep.witness = "component dimensions sum to " + std::to_string(all.size()) +
                      ", expected " + std::to_string(a.algebra_dim);
        return rep;
    }
    if (!all.empty()) {
        Matrix cols = columns_from_vectors(f, all, all[0].size());
        if (rank(cols) < static_cast<std::int64_t>(all.size())) {
            rep.ok = false;
            rep.axiom = GradingAxiom::DirectSum;
            rep.witness = "component bases are linearly dependent";
            return rep;
        }
    }
    // identity in the e-component
    {
        std::vector<std::vector<Scalar>> espan;
        for (const auto& m : a.component(a.group.identity())) espan.push_back(m.entries());
        Matrix id = Matrix::identity(f, a.size);
        if (!vector_in_span(f, espan, id.entries())) {
            rep.ok = false;
            rep.axiom = GradingAxiom::Identity;
            rep.witness = "identity matrix not in the identity component";
            return rep;
        }
    }
    // products
    for (const auto& [g, bg] : a.components)
        for (const auto& [h, bh] : a.components) {
            GroupElement gh = a.group.combine(g, h);
            if (!subspace_contains_products(bg, bh, a.component(gh))) {
                rep.ok = false;
                rep.axiom = GradingAxiom::Product;
                rep.witness = "A_{" + g.to_string() + "} * A_{" + h.to_string() +
                              "} not contained in A_{" + gh.to_string() + "}";
                return rep;
            }
        }
    return rep;
}

enum class SuspensionSide { Left, Right };

/// Left: degrees g_i -> g_i * s (so V(s)_g = V_{g s}); right: g_i -> s * g_i.
inline GradedVectorSpace suspend(const GradedVectorSpace& v, const GroupElement& s,
                                 SuspensionSide side) {
    if (!v.group.contains(s)) throw invalid_argument("suspension element not in group");
    GradedVectorSpace w = v;
    for (auto& g : w.degrees)
        g = side == SuspensionSide::Left ? v.group.combine(g, s) : v.group.combine(s, g);
    return w;
}

inline std::vector<GroupElement> sorted_degrees(std::vector<GroupElement> d) {
    std::sort(d.begin(), d.end());
    return d;
}

/// I(V): all s with V(s) isomorphic to V, i.e. the stabilizer of the degree
/// multiset under right translation. Always a subgroup containing e.
inline std::vector<GroupElement> inertia_group(const GradedVectorSpace& v) {
    std::vector<GroupElement> out;
    auto base = sorted_degrees(v.degrees);
    for (const auto& s : v.group.elements()) {
        auto shifted = v.degrees;
        for (auto& g : shifted) g = v.group.combine(g, s);
        if (sorted_degrees(std::move(shifted)) == base) out.push_back(s);
    }
    return out;
}

struct SplitOffResult {
    GradedVectorSpace w;
    std::vector<GroupElement> h; // the inertia group of v
    bool certified = false;      // multiset identity + trivial inertia of w
};

/// Writes V as kH (x) W with H = I(V) and I(W) = {e}. Coset representatives
/// are the lexicographically minimal element of each H-coset.
inline SplitOffResult split_off_kH(const GradedVectorSpace& v) {
    SplitOffResult res;
    res.h = inertia_group(v);
    res.w.group = v.group;
    // coset representative of g under right translation by H
    auto rep_of = [&](const GroupElement& g) {
        GroupElement best = g;
        for (const auto& s : res.h) {
            GroupElement t = v.group.combine(g, s);
            if (t < best) best = t;
        }
        return best;
    };
    for (const auto& g : v.degrees)
        if (rep_of(g) == g) res.w.degrees.push_back(g);
    std::sort(res.w.degrees.begin(), res.w.degrees.end());
    // certificate: degrees(V) as a multiset equals the union of s*degrees(W)
    std::vector<GroupElement> rebuilt;
    for (const auto& s : res.h)
        for (const auto& g : res.w.degrees) rebuilt.push_back(v.group.combine(g, s));
    res.certified = sorted_degrees(rebuilt) == sorted_degrees(v.degrees);
    auto iw = inertia_group(res.w);
    res.certified = res.certified && iw.size() == 1 && iw[0].is_identity();
    if (!res.certified)
        throw internal_error("split_off_kH certificate failed");
    return res;
}

struct GoodIsoWitness {
    std::vector<std::int64_t> perm; // h_i = g_{perm[i]} * sigma
    GroupElement sigma;
};

/// Graded-isomorphism test for good gradings, in tuple form: some (pi, s)
/// with h_i = g_{pi(i)} * s exists iff the degree multisets agree after a
/// right translation.
inline std::optional<GoodIsoWitness> good_iso(const std::vector<GroupElement>& g,
                                              const std::vector<GroupElement>& h,
                                              const FiniteAbelianGroup& grp) {
    if (g.size() != h.size()) throw invalid_argument("tuples of different length");
    for (const auto& s : grp.elements()) {
        std::vector<GroupElement> gs = g;
        for (auto& x : gs) x = grp.combine(x, s);
        auto order_of = [](const std::vector<GroupElement>& v) {
            std::vector<std::int64_t> idx(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) idx[i] = static_cast<std::int64_t>(i);
            std::stable_sort(idx.begin(), idx.end(), [&](std::int64_t a, std::int64_t b) {
                return v[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(b)];
            });
            return idx;
        };
        auto ig = order_of(gs), ih = order_of(h);
        bool match = true;
        for (std::size_t t = 0; t < ig.size(); ++t)
            if (!(gs[static_cast<std::size_t>(ig[t])] == h[static_cast<std::size_t>(ih[t])])) {
                match = false;
                break;
            }
        if (!match) continue;
        GoodIsoWitness w;
        w.sigma = s;
        w.perm.assign(g.size(), 0);
        for (std::size_t t = 0; t < ig.size(); ++t)
            w.perm[static_cast<std::size_t>(ih[t])] = ig[t];
        return w;
    }
    return std::nullopt;
}

/// Degree tuple of a literally good grading (every matrix unit homogeneous),
/// normalized so that g_1 = e; nullopt when some unit is not homogeneous.
inline std::optional<std::vector<GroupElement>> degrees_of_good_grading(const Grading& a) {
    auto degree_of = [&](const Matrix& m) -> std::optional<GroupElement> {
        for (const auto& [g, basis] : a.components) {
            std::vector<std::vector<Scalar>> span;
            for (const auto& b : basis) span.push_back(b.entries());
            if (vector_in_span(a.field, span, m.entries())) return g;
        }
        return std::nullopt;
    };
    std::vector<GroupElement> degs;
    degs.push_back(a.group.identity());
    for (std::int64_t i = 1; i < a.size; ++i) {
        auto d = degree_of(Matrix::unit(a.field, a.size, i, 0));
        if (!d) return std::nullopt;
        degs.push_back(*d);
    }
    // cross-check the off-diagonal units
    for (std::int64_t i = 0; i < a.size; ++i)
        for (std::int64_t j = 0; j < a.size; ++j) {
            auto d = degree_of(Matrix::unit(a.field, a.size, i, j));
            if (!d) return std::nullopt;
            GroupElement expect = a.group.combine(degs[static_cast<std::size_t>(i)],
                                                  degs[static_cast<std::size_t>(j)], true);
            if (!(*d == expect)) return std::nullopt;
        }
    return degs;
}

struct ConjugatorResult {
    Matrix x;
    GroupElement degree;
};

/// Graded Skolem-Noether recovery: for a degree-preserving algebra
/// automorphism gamma of a good grading (given by the images of all matrix
/// units), returns an invertible homogeneous x with x*gamma(a) = a*x and its
/// degree. gamma is validated first; absence of a homogeneous solution is an
/// internal error, never silently ignored.
inline ConjugatorResult homogeneous_conjugator(const Grading& a,
                                               const std::vector<Matrix>& gamma_images) {
    const std::int64_t m = a.size;
    const Field& f = a.field;
    if (static_cast<std::int64_t>(gamma_images.size()) != m * m)
        throw invalid_argument("gamma must list images of all matrix units");
    auto img = [&](std::int64_t i, std::int64_t j) -> const Matrix& {
        return gamma_images[static_cast<std::size_t>(i * m + j)];
    };
    // algebra map: gamma(e_ij) gamma(e_rs) = delta_{jr} gamma(e_is)
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < m; ++j)
            for (std::int64_t r = 0; r < m; ++r)
                for (std::int64_t s = 0; s < m; ++s) {
                    Matrix lhs = img(i, j) * img(r, s);
                    Matrix rhs = j == r ? img(i, s) : Matrix(f, m, m);
                    if (!(lhs == rhs))
                        throw invalid_argument("gamma is not an algebra map");
                }
    {
        Matrix sum(f, m, m);
        for (std::int64_t i = 0; i < m; ++i) sum = sum + img(i, i);
        if (!(sum == Matrix::identity(f, m)))
            throw invalid_argument("gamma is not unital");
    }
    // degree preservation: each unit's image stays in the unit's component
    auto degs = degrees_of_good_grading(a);
    if (!degs) throw invalid_argument("grading is not good");
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < m; ++j) {
            GroupElement d = a.group.combine((*degs)[static_cast<std::size_t>(i)],
                                             (*degs)[static_cast<std::size_t>(j)], true);
            std::vector<std::vector<Scalar>> span;
            for (const auto& b : a.component(d)) span.push_back(b.entries());
            if (!vector_in_span(f, span, img(i, j).entries()))
                throw invalid_argument("gamma does not preserve degrees");
        }
    // commutation system: x gamma(e_ij) - e_ij x = 0 for all i,j
    const std::int64_t n2 = m * m;
    Matrix sys(f, n2 * n2, n2);
    std::int64_t row = 0;
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < m; ++j) {
            const Matrix& gij = img(i, j);
            // entry (r,c) of x*gij - e_ij*x as linear form in x entries
            for (std::int64_t r = 0; r < m; ++r)
                for (std::int64_t c = 0; c < m; ++c) {
                    // (x*gij)_{rc} = sum_t x_{rt} gij_{tc}
                    for (std::int64_t t = 0; t < m; ++t)
                        sys.at(row, r * m + t) = sys.at(row, r * m + t) + gij.at(t, c);
                    // (e_ij*x)_{rc} = delta_{ri} x_{jc}
                    if (r == i)
                        sys.at(row, j * m + c) = sys.at(row, j * m + c) - Scalar::one(f);
                    ++row;
                }
        }
    auto null_basis = kernel(sys);
    if (null_basis.empty())
        throw internal_error("gamma-twisted commutant is zero");
    // intersect the commutant with each homogeneous component, in group
    // enumeration order; return the first nonzero homogeneous solution.
    for (const auto& s : a.group.elements()) {
        const auto& comp = a.component(s);
        if (comp.empty()) continue;
        // solve N u = C v for a joint vector: columns [N | -C]
        std::vector<std::vector<Scalar>> cols;
        for (const auto& v : null_basis) cols.push_back(v);
        for (const auto& b : comp) {
            auto e = b.entries();
            for (auto& x : e) x = -x;
            cols.push_back(e);
        }
        Matrix joint = columns_from_vectors(f, cols, static_cast<std::size_t>(n2));
        for (const auto& kvec : kernel(joint)) {
            // reconstruct x from the commutant part
            std::vector<Scalar> xv(static_cast<std::size_t>(n2), Scalar::zero(f));
            bool nonzero = false;
            for (std::size_t t = 0; t < null_basis.size(); ++t) {
                if (kvec[t].is_zero()) continue;
                for (std::int64_t e = 0; e < n2; ++e)
                    xv[static_cast<std::size_t>(e)] =
                        xv[static_cast<std::size_t>(e)] +
                        kvec[t] * null_basis[t][static_cast<std::size_t>(e)];
            }
            for (const auto& e : xv)
                if (!e.is_zero()) { nonzero = true; break; }
            if (!nonzero) continue;
            // normalize: first nonzero entry = 1
            Scalar lead = Scalar::one(f);
            for (const auto& e : xv)
                if (!e.is_zero()) { lead = e; break; }
            Matrix x(f, m, m);
            for (std::int64_t r = 0; r < m; ++r)
                for (std::int64_t c = 0; c < m; ++c)
                    x.at(r, c) = xv[static_cast<std::size_t>(r * m + c)] / lead;
            if (!try_inverse(x)) continue;
            return ConjugatorResult{std::move(x), s};
        }
    }
    throw internal_error("no homogeneous conjugator found");
}

/// Base extension of a grading by a commutative algebra l: each component
/// basis matrix M and l-basis element b becomes the block matrix
/// kron(L_b^T, M) of size size*dim(l), l acting through the (transposed)
/// regular representation. Row index (r, i) -> r*size + i.
inline Grading base_extend_grading(const Grading& a, const CommutativeAlgebra& l) {
    if (!(l.base() == a.field))
        throw invalid_argument("extension algebra over a different base field");
    const std::int64_t d = l.dim();
    Grading out;
    out.group = a.group;
    out.field = a.field;
    out.size = a.size * d;
    out.algebra_dim = a.algebra_dim * d;
    for (const auto& [g, basis] : a.components) {
        for (std::int64_t r = 0; r < d; ++r) {
            Matrix lt = l.left_multiplication(l.basis_element(r)).transposed();
            for (const auto& m : basis) {
                Matrix blk(a.field, out.size, out.size);
                for (std::int64_t p = 0; p < d; ++p)
                    for (std::int64_t q = 0; q < d; ++q) {
                        if (lt.at(p, q).is_zero()) continue;
                        for (std::int64_t i = 0; i < a.size; ++i)
                            for (std::int64_t j = 0; j < a.size; ++j)
                                blk.at(p * a.size + i, q * a.size + j) =
                                    lt.at(p, q) * m.at(i, j);
                    }
                out.components[g].push_back(std::move(blk));
            }
        }
    }
    return out;
}

} // namespace gradmat
