#pragma once

/// Galois extensions of exact fields with abelian group, crossed products,
/// descended gradings on End_k(l), descent data and fixed points, splitting
/// witnesses (complete systems of homogeneous matrix units over l), and the
/// classification of the quadratic forms of the good C_2-grading.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradmat/algebra.hpp"
#include "gradmat/classify.hpp"
#include "gradmat/common.hpp"
#include "gradmat/graded.hpp"
#include "gradmat/group.hpp"
#include "gradmat/matrix.hpp"

namespace gradmat {

/// kron(A,B): index (i*rows(B)+r, j*cols(B)+s) = A_ij * B_rs.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::int64_t i = 0; i < a.rows(); ++i)
        for (std::int64_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::int64_t p = 0; p < b.rows(); ++p)
                for (std::int64_t q = 0; q < b.cols(); ++q)
                    r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Galois extensions.

class GaloisExtension {
public:
    GaloisExtension() = default;

    GaloisExtension(CommutativeAlgebra l, FiniteAbelianGroup group,
                    std::map<GroupElement, Matrix> action)
        : l_(std::move(l)), group_(std::move(group)), action_(std::move(action)) {
        validate();
    }

    const CommutativeAlgebra& algebra() const { return l_; }
    const FiniteAbelianGroup& group() const { return group_; }
    const Field& base() const { return l_.base(); }
    std::int64_t dim() const { return l_.dim(); }

    const Matrix& action_matrix(const GroupElement& s) const {
        auto it = action_.find(s);
        if (it == action_.end()) throw invalid_argument("no action for " + s.to_string());
        return it->second;
    }

    std::vector<Scalar> apply(const GroupElement& s, const std::vector<Scalar>& a) const {
        const Matrix& m = action_matrix(s);
        std::vector<Scalar> out(static_cast<std::size_t>(dim()), Scalar::zero(base()));
        for (std::int64_t i = 0; i < dim(); ++i)
            for (std::int64_t j = 0; j < dim(); ++j)
                out[static_cast<std::size_t>(i)] =
                    out[static_cast<std::size_t>(i)] +
                    m.at(i, j) * a[static_cast<std::size_t>(j)];
        return out;
    }

private:
    void validate() const {
        const std::int64_t d = dim();
        for (const auto& s : group_.elements()) {
            const Matrix& m = action_matrix(s);
            if (m.rows() != d || m.cols() != d)
                throw invalid_argument("action matrix of wrong shape");
            if (!(m * columns_from_vectors(base(), {l_.unit()}, static_cast<std::size_t>(d)) ==
                  columns_from_vectors(base(), {l_.unit()}, static_cast<std::size_t>(d))))
                throw invalid_argument("action of " + s.to_string() + " is not unital");
            // multiplicative on basis pairs
            for (std::int64_t i = 0; i < d; ++i)
                for (std::int64_t j = 0; j < d; ++j) {
                    auto lhs = apply(s, l_.multiply(l_.basis_element(i), l_.basis_element(j)));
                    auto rhs = l_.multiply(apply(s, l_.basis_element(i)),
                                           apply(s, l_.basis_element(j)));
                    if (lhs != rhs)
                        throw invalid_argument("action of " + s.to_string() +
                                               " is not an algebra map");
                }
        }
        if (!(action_matrix(group_.identity()) == Matrix::identity(base(), d)))
            throw invalid_argument("identity does not act trivially");
        for (const auto& s : group_.elements())
            for (const auto& t : group_.elements())
                if (!(action_matrix(group_.combine(s, t)) ==
                      action_matrix(s) * action_matrix(t)))
                    throw invalid_argument("action is not a group homomorphism");
        // fixed subalgebra = k: stacked kernel of (action(s) - I)
        const std::int64_t nontrivial = group_.order() - 1;
        if (nontrivial > 0) {
            Matrix stack(base(), d * nontrivial, d);
            std::int64_t row = 0;
            for (const auto& s : group_.elements()) {
                if (s.is_identity()) continue;
                Matrix diff = action_matrix(s) - Matrix::identity(base(), d);
                for (std::int64_t i = 0; i < d; ++i, ++row)
                    for (std::int64_t j = 0; j < d; ++j) stack.at(row, j) = diff.at(i, j);
            }
            if (static_cast<std::int64_t>(kernel(stack).size()) != 1)
                throw invalid_argument("fixed subalgebra is not one-dimensional");
        }
    }

    CommutativeAlgebra l_;
    FiniteAbelianGroup group_;
    std::map<GroupElement, Matrix> action_;
};

struct GaloisCheck {
    bool ok = false;
    bool fixed_field_ok = false;
    bool j_bijective = false;
    std::string diagnostics;
};

/// The Galois criterion: j: Delta(l,H) -> End_k(l), j(a u_s)(b) = a*s(b),
/// must be bijective. As a matrix, column (i, s) is the flattened operator
/// L_{b_i} * S_s.
inline GaloisCheck is_galois(const GaloisExtension& e) {
    GaloisCheck r;
    const std::int64_t d = e.dim();
    const std::int64_t h = e.group().order();
    r.fixed_field_ok = true; // enforced at construction
    std::vector<std::vector<Scalar>> cols;
    for (std::int64_t i = 0; i < d; ++i) {
        Matrix li = e.algebra().left_multiplication(e.algebra().basis_element(i));
        for (const auto& s : e.group().elements())
            cols.push_back((li * e.action_matrix(s)).entries());
    }
    if (d * h != d * d) {
        r.j_bijective = false;
        r.diagnostics = "j is not square: dim Delta = " + std::to_string(d * h) +
                        ", dim End = " + std::to_string(d * d);
        return r;
    }
    Matrix j = columns_from_vectors(e.base(), cols, static_cast<std::size_t>(d * d));
    r.j_bijective = rank(j) == d * d;
    if (!r.j_bijective) r.diagnostics = "j is not bijective (rank deficient)";
    r.ok = r.fixed_field_ok && r.j_bijective;
    return r;
}

// ---------------------------------------------------------------------------
// Constructors for the extensions the examples use.

/// Split extension l = Hk = direct product of |H| copies of k, basis v_g
/// indexed by the enumeration of H, with delta . v_g = v_{g delta^{-1}}.
inline GaloisExtension dual_group_extension(const FiniteAbelianGroup& h, const Field& k) {
    const auto elems = h.elements();
    const std::int64_t n = static_cast<std::int64_t>(elems.size());
    std::vector<std::vector<std::vector<Scalar>>> c(
        static_cast<std::size_t>(n),
        std::vector<std::vector<Scalar>>(
            static_cast<std::size_t>(n),
            std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(k))));
    for (std::int64_t i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]
         [static_cast<std::size_t>(i)] = Scalar::one(k);
    std::vector<Scalar> unit(static_cast<std::size_t>(n), Scalar::one(k));
    CommutativeAlgebra l(k, std::move(c), std::move(unit));
    std::map<GroupElement, Matrix> action;
    for (const auto& s : elems) {
        Matrix m(k, n, n);
        for (std::int64_t g = 0; g < n; ++g) {
            GroupElement img = h.combine(elems[static_cast<std::size_t>(g)], s, true);
            m.at(h.index_of(img), g) = Scalar::one(k);
        }
        action[s] = std::move(m);
    }
    return GaloisExtension(std::move(l), h, std::move(action));
}

/// Quadratic extension with group C_2. Characteristic != 2: l = k[X]/(X^2-a)
/// with s(x) = -x (a = 0 rejected). Characteristic 2: Artin-Schreier form
/// l = k[X]/(X^2-X-a) with s(x) = x+1.
inline GaloisExtension make_quadratic(const Field& k, const Scalar& alpha) {
    const Scalar z = Scalar::zero(k), o = Scalar::one(k);
    const bool char2 = k.characteristic() == 2;
    if (!char2 && alpha.is_zero())
        throw invalid_argument("alpha = 0 does not give a Galois extension");
    std::vector<std::vector<std::vector<Scalar>>> c(2);
    c[0] = {{o, z}, {z, o}};
    if (!char2)
        c[1] = {{z, o}, {alpha, z}}; // x*x = alpha
    else
        c[1] = {{z, o}, {alpha, o}}; // x*x = alpha + x
    CommutativeAlgebra l(k, std::move(c), {o, z});
    FiniteAbelianGroup c2 = FiniteAbelianGroup::cyclic(2);
    Matrix s(k, 2, 2);
    if (!char2) {
        s.at(0, 0) = o;
        s.at(1, 1) = -o;
    } else {
        s.at(0, 0) = o;
        s.at(0, 1) = o;
        s.at(1, 1) = o;
    }
    std::map<GroupElement, Matrix> action;
    action[c2.identity()] = Matrix::identity(k, 2);
    action[GroupElement{{1}}] = std::move(s);
    return GaloisExtension(std::move(l), std::move(c2), std::move(action));
}

/// GF(p^d)/GF(p) with H = C_d generated by the Frobenius x -> x^p, modulus
/// the first irreducible of degree d in lexicographic coefficient order.
inline GaloisExtension frobenius_extension(std::int64_t p, std::int64_t d) {
    if (!is_prime(p)) throw invalid_argument("p must be prime");
    if (d < 2) throw invalid_argument("need degree >= 2");
    std::int64_t q = 1;
    for (std::int64_t i = 0; i < d; ++i) {
        q *= p;
        if (q > (1 << 16)) throw invalid_argument("p^d too large");
    }
    const Field k = Field::prime(p);
    const polygf::Poly f = polygf::first_irreducible(p, static_cast<std::size_t>(d));
    auto coords = [&](const polygf::Poly& a) {
        std::vector<Scalar> v(static_cast<std::size_t>(d), Scalar::zero(k));
        for (std::size_t i = 0; i < a.size(); ++i)
            v[i] = Scalar::make(k, a[i]);
        return v;
    };
    std::vector<std::vector<std::vector<Scalar>>> c(
        static_cast<std::size_t>(d),
        std::vector<std::vector<Scalar>>(static_cast<std::size_t>(d)));
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            polygf::Poly bi(static_cast<std::size_t>(i) + 1, 0), bj(static_cast<std::size_t>(j) + 1, 0);
            bi.back() = 1;
            bj.back() = 1;
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                coords(polygf::mulmod(bi, bj, f, p));
        }
    std::vector<Scalar> unit(static_cast<std::size_t>(d), Scalar::zero(k));
    unit[0] = Scalar::one(k);
    CommutativeAlgebra l(k, std::move(c), std::move(unit));
    // Frobenius matrix: column j = b_j^p mod f
    Matrix frob(k, d, d);
    for (std::int64_t j = 0; j < d; ++j) {
        polygf::Poly bj(static_cast<std::size_t>(j) + 1, 0);
        bj.back() = 1;
        auto img = coords(polygf::powmod(bj, static_cast<std::uint64_t>(p), f, p));
        for (std::int64_t i = 0; i < d; ++i) frob.at(i, j) = img[static_cast<std::size_t>(i)];
    }
    FiniteAbelianGroup cd = FiniteAbelianGroup::cyclic(d);
    std::map<GroupElement, Matrix> action;
    Matrix cur = Matrix::identity(k, d);
    for (std::int64_t t = 0; t < d; ++t) {
        action[GroupElement{{t}}] = cur;
        cur = frob * cur;
    }
    return GaloisExtension(std::move(l), std::move(cd), std::move(action));
}

// ---------------------------------------------------------------------------
// Crossed product Delta(l,H).

class CrossedProduct {
public:
    explicit CrossedProduct(GaloisExtension e) : ext_(std::move(e)) {
        elems_ = ext_.group().elements();
        if (dim() > 16)
            throw invalid_argument("crossed product dimension limited to 16");
        validate();
    }

    const GaloisExtension& extension() const { return ext_; }
    std::int64_t dim() const {
        return ext_.dim() * static_cast<std::int64_t>(elems_.size());
    }

    /// Basis order: (b_i, sigma) -> i*|H| + index(sigma).
    std::int64_t index(std::int64_t i, const GroupElement& s) const {
        return i * static_cast<std::int64_t>(elems_.size()) + ext_.group().index_of(s);
    }

    GroupElement degree_of_index(std::int64_t idx) const {
        return elems_[static_cast<std::size_t>(idx % static_cast<std::int64_t>(elems_.size()))];
    }

    /// (b_i u_s)(b_j u_t) = b_i s(b_j) u_{st}, as a coordinate vector.
    std::vector<Scalar> multiply_basis(std::int64_t i, const GroupElement& s,
                                       std::int64_t j, const GroupElement& t) const {
        auto prod = ext_.algebra().multiply(
            ext_.algebra().basis_element(i),
            ext_.apply(s, ext_.algebra().basis_element(j)));
        std::vector<Scalar> out(static_cast<std::size_t>(dim()), Scalar::zero(ext_.base()));
        GroupElement st = ext_.group().combine(s, t);
        for (std::int64_t r = 0; r < ext_.dim(); ++r)
            out[static_cast<std::size_t>(index(r, st))] = prod[static_cast<std::size_t>(r)];
        return out;
    }

    std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                                 const std::vector<Scalar>& b) const {
        std::vector<Scalar> out(static_cast<std::size_t>(dim()), Scalar::zero(ext_.base()));
        const std::int64_t nh = static_cast<std::int64_t>(elems_.size());
        for (std::int64_t ia = 0; ia < dim(); ++ia) {
            if (a[static_cast<std::size_t>(ia)].is_zero()) continue;
            for (std::int64_t ib = 0; ib < dim(); ++ib) {
                if (b[static_cast<std::size_t>(ib)].is_zero()) continue;
                auto term = multiply_basis(ia / nh, elems_[static_cast<std::size_t>(ia % nh)],
                                           ib / nh, elems_[static_cast<std::size_t>(ib % nh)]);
                const Scalar c = a[static_cast<std::size_t>(ia)] * b[static_cast<std::size_t>(ib)];
                for (std::int64_t t = 0; t < dim(); ++t)
                    out[static_cast<std::size_t>(t)] =
                        out[static_cast<std::size_t>(t)] + c * term[static_cast<std::size_t>(t)];
            }
        }
        return out;
    }

private:
    void validate() const {
        const std::int64_t n = dim();
        auto unit_vec = [&](std::int64_t idx) {
            std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar::zero(ext_.base()));
            v[static_cast<std::size_t>(idx)] = Scalar::one(ext_.base());
            return v;
        };
        for (std::int64_t x = 0; x < n; ++x)
            for (std::int64_t y = 0; y < n; ++y)
                for (std::int64_t z = 0; z < n; ++z) {
                    auto lhs = multiply(multiply(unit_vec(x), unit_vec(y)), unit_vec(z));
                    auto rhs = multiply(unit_vec(x), multiply(unit_vec(y), unit_vec(z)));
                    if (lhs != rhs) throw internal_error("crossed product not associative");
                }
    }

    GaloisExtension ext_;
    std::vector<GroupElement> elems_;
};

// ---------------------------------------------------------------------------
// Descent data and fixed points.

class DescentDatum {
public:
    DescentDatum(GaloisExtension e, std::int64_t rank, std::map<GroupElement, Matrix> phi)
        : ext_(std::move(e)), rank_(rank), phi_(std::move(phi)) {
        validate();
    }

    const GaloisExtension& extension() const { return ext_; }
    std::int64_t rank() const { return rank_; }
    std::int64_t total_dim() const { return ext_.dim() * rank_; }

    const Matrix& phi(const GroupElement& s) const {
        auto it = phi_.find(s);
        if (it == phi_.end()) throw invalid_argument("no datum entry for " + s.to_string());
        return it->second;
    }

private:
    void validate() const {
        const std::int64_t d = ext_.dim(), n = total_dim();
        const Field& k = ext_.base();
        Matrix in = Matrix::identity(k, rank_);
        for (const auto& s : ext_.group().elements()) {
            const Matrix& p = phi(s);
            if (p.rows() != n || p.cols() != n)
                throw invalid_argument("datum matrix of wrong shape");
            // sigma-semilinearity: phi(s) (L_a (x) I) = (L_{s(a)} (x) I) phi(s)
            for (std::int64_t i = 0; i < d; ++i) {
                Matrix la = ext_.algebra().left_multiplication(ext_.algebra().basis_element(i));
                Matrix lsa = ext_.algebra().left_multiplication(
                    ext_.apply(s, ext_.algebra().basis_element(i)));
                if (!(p * kron(la, in) == kron(lsa, in) * p))
                    throw invalid_argument("datum entry for " + s.to_string() +
                                           " is not semilinear");
            }
        }
        if (!(phi(ext_.group().identity()) == Matrix::identity(k, n)))
            throw invalid_argument("datum at identity is not the identity");
        for (const auto& s : ext_.group().elements())
            for (const auto& t : ext_.group().elements())
                if (!(phi(ext_.group().combine(s, t)) == phi(s) * phi(t)))
                    throw invalid_argument("datum is not a group homomorphism");
    }

    GaloisExtension ext_;
    std::int64_t rank_;
    std::map<GroupElement, Matrix> phi_;
};

inline std::vector<GroupElement> group_generators(const FiniteAbelianGroup& g) {
    std::vector<GroupElement> out;
    const auto& f = g.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 2) continue;
        GroupElement e = g.identity();
        e.coords[i] = 1;
        out.push_back(e);
    }
    if (out.empty()) out.push_back(g.identity());
    return out;
}

/// k-basis of the fixed module (l (x) M)^H; its dimension must equal the
/// l-rank of the input, which is asserted.
inline std::vector<std::vector<Scalar>> fixed_points(const DescentDatum& datum) {
    const Field& k = datum.extension().base();
    const std::int64_t n = datum.total_dim();
    auto gens = group_generators(datum.extension().group());
    Matrix stack(k, n * static_cast<std::int64_t>(gens.size()), n);
    std::int64_t row = 0;
    for (const auto& g : gens) {
        Matrix diff = datum.phi(g) - Matrix::identity(k, n);
        for (std::int64_t i = 0; i < n; ++i, ++row)
            for (std::int64_t j = 0; j < n; ++j) stack.at(row, j) = diff.at(i, j);
    }
    auto basis = kernel(stack);
    if (static_cast<std::int64_t>(basis.size()) != datum.rank())
        throw internal_error("fixed module has wrong dimension: " +
                             std::to_string(basis.size()) + " vs rank " +
                             std::to_string(datum.rank()));
    return basis;
}

// ---------------------------------------------------------------------------
// Matrices over l (entries as coordinate vectors).

using LElem = std::vector<Scalar>;
using LMat = std::vector<std::vector<LElem>>; // [row][col] -> l-coords

inline LMat lmat_zero(const CommutativeAlgebra& l, std::int64_t n) {
    return LMat(static_cast<std::size_t>(n),
                std::vector<LElem>(static_cast<std::size_t>(n), l.zero_element()));
}

inline LMat lmat_identity(const CommutativeAlgebra& l, std::int64_t n) {
    LMat m = lmat_zero(l, n);
    for (std::int64_t i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = l.unit();
    return m;
}

inline LMat lmat_mul(const CommutativeAlgebra& l, const LMat& a, const LMat& b) {
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    LMat out = lmat_zero(l, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            LElem acc = l.zero_element();
            for (std::int64_t t = 0; t < n; ++t) {
                auto p = l.multiply(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                                    b[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]);
                for (std::size_t u = 0; u < acc.size(); ++u) acc[u] = acc[u] + p[u];
            }
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(acc);
        }
    return out;
}

inline LMat lmat_scale(const CommutativeAlgebra& l, const LElem& b, const LMat& a) {
    LMat out = a;
    for (auto& row : out)
        for (auto& e : row) e = l.multiply(b, e);
    return out;
}

inline std::vector<Scalar> lmat_flat(const LMat& a) {
    std::vector<Scalar> out;
    for (const auto& row : a)
        for (const auto& e : row) out.insert(out.end(), e.begin(), e.end());
    return out;
}

inline LMat lmat_transpose(const LMat& a) {
    const std::size_t n = a.size();
    LMat out = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = a[j][i];
    return out;
}

// ---------------------------------------------------------------------------
// Descended gradings.

/// The grading on End_k(l) induced by the H-grading of Delta(l,H) through j.
/// The component of degree s is spanned by (L_a S_s)^T for a running over
/// the basis of l; the transpose keeps the whole library in one convention
/// (components act on column vectors of l-coordinates).
inline Grading descended_grading(const GaloisExtension& e) {
    auto chk = is_galois(e);
    if (!chk.ok) throw invalid_argument("extension is not Galois: " + chk.diagnostics);
    const std::int64_t d = e.dim();
    Grading a;
    a.group = e.group();
    a.field = e.base();
    a.size = d;
    a.algebra_dim = d * d;
    for (const auto& s : e.group().elements()) {
        std::vector<Matrix> basis;
        for (std::int64_t r = 0; r < d; ++r)
            basis.push_back(
                (e.algebra().left_multiplication(e.algebra().basis_element(r)) *
                 e.action_matrix(s))
                    .transposed());
        a.components[s] = std::move(basis);
    }
    auto rep = verify_grading(a);
    if (!rep.ok) throw internal_error("descended grading failed verification: " + rep.witness);
    return a;
}

/// A homogeneous l-basis of l (x) k^N for a grading of M_N(k): vectors[i][s]
/// is the s-th coordinate (an element of l) of the i-th basis vector, of
/// degree degrees[i]. This is what the splitting witness conjugates against.
struct SplittingFrame {
    std::vector<std::vector<LElem>> vectors;
    std::vector<GroupElement> degrees;
};

/// Frame for descended_grading(E): the i-th vector is m^{-1}(v_{h_i}) where
/// m: l (x) l -> Hl is m(a (x) b) = sum_s a s(b) v_s; it has degree h_i.
inline SplittingFrame descended_frame(const GaloisExtension& e) {
    const Field& k = e.base();
    const std::int64_t d = e.dim();
    const auto elems = e.group().elements();
    const std::int64_t nh = static_cast<std::int64_t>(elems.size());
    if (nh != d) throw invalid_argument("extension is not Galois over the base field");
    // m as a k-matrix: column (q,j) = b_q (x) b_j, row (t,s) = b_t v_s
    Matrix mm(k, d * nh, d * d);
    for (std::int64_t q = 0; q < d; ++q)
        for (std::int64_t j = 0; j < d; ++j)
            for (std::int64_t si = 0; si < nh; ++si) {
                auto sbj = e.apply(elems[static_cast<std::size_t>(si)],
                                   e.algebra().basis_element(j));
                auto prod = e.algebra().multiply(e.algebra().basis_element(q), sbj);
                for (std::int64_t t = 0; t < d; ++t)
                    mm.at(t * nh + si, q * d + j) = prod[static_cast<std::size_t>(t)];
            }
    Matrix mmi = inverse(mm);
    SplittingFrame fr;
    for (std::int64_t si = 0; si < nh; ++si) {
        // unit * v_{h_si} in Hl coordinates
        std::vector<Scalar> v(static_cast<std::size_t>(d * nh), Scalar::zero(k));
        for (std::int64_t t = 0; t < d; ++t)
            v[static_cast<std::size_t>(t * nh + si)] = e.algebra().unit()[static_cast<std::size_t>(t)];
        std::vector<Scalar> pre(static_cast<std::size_t>(d * d), Scalar::zero(k));
        for (std::int64_t i = 0; i < d * d; ++i)
            for (std::int64_t j = 0; j < d * nh; ++j)
                pre[static_cast<std::size_t>(i)] =
                    pre[static_cast<std::size_t>(i)] + mmi.at(i, j) * v[static_cast<std::size_t>(j)];
        std::vector<LElem> vec(static_cast<std::size_t>(d));
        for (std::int64_t s = 0; s < d; ++s) {
            LElem coord(static_cast<std::size_t>(d), Scalar::zero(k));
            for (std::int64_t q = 0; q < d; ++q)
                coord[static_cast<std::size_t>(q)] = pre[static_cast<std::size_t>(q * d + s)];
            vec[static_cast<std::size_t>(s)] = std::move(coord);
        }
        fr.vectors.push_back(std::move(vec));
        fr.degrees.push_back(elems[static_cast<std::size_t>(si)]);
    }
    return fr;
}

struct SplittingWitness {
    std::int64_t size = 0;                 // N
    std::vector<LMat> units;               // index i*N + j
    std::vector<GroupElement> degrees;     // frame degrees; unit (i,j) has d_i d_j^{-1}
    bool validated = false;
};

/// Transports the matrix units of END along the frame: the unit (i,j) is
/// transpose_l of the operator sending frame_i to frame_j, realized over k
/// and read back as an l-matrix. Validates the matrix-unit axioms,
/// completeness and homogeneity against A's components.
inline SplittingWitness splitting_witness(const Grading& a, const GaloisExtension& e,
                                          const SplittingFrame& frame) {
    const Field& k = e.base();
    const CommutativeAlgebra& l = e.algebra();
    const std::int64_t d = e.dim();
    const std::int64_t n = a.size;
    if (static_cast<std::int64_t>(frame.vectors.size()) != n)
        throw invalid_argument("frame size does not match the grading");
    // k-matrix of the frame: column (r,i) = b_r * frame_i, row (r',s)
    Matrix fk(k, d * n, d * n);
    for (std::int64_t r = 0; r < d; ++r)
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t s = 0; s < n; ++s) {
                auto prod = l.multiply(l.basis_element(r),
                                       frame.vectors[static_cast<std::size_t>(i)]
                                                    [static_cast<std::size_t>(s)]);
                for (std::int64_t rp = 0; rp < d; ++rp)
                    fk.at(rp * n + s, r * n + i) = prod[static_cast<std::size_t>(rp)];
            }
    Matrix fki = inverse(fk);
    auto transported = [&](std::int64_t i, std::int64_t j) {
        // operator frame_i -> frame_j: Fk (I_d (x) E_{ji}) Fk^{-1}, then the
        // l-matrix entries t_{s's} from T(1 (x) e_s)
        Matrix p(k, d * n, d * n);
        for (std::int64_t r = 0; r < d; ++r)
            p.at(r * n + j, r * n + i) = Scalar::one(k);
        Matrix t = fk * p * fki;
        LMat lm = lmat_zero(l, n);
        for (std::int64_t s = 0; s < n; ++s) {
            std::vector<Scalar> vec(static_cast<std::size_t>(d * n), Scalar::zero(k));
            for (std::int64_t r = 0; r < d; ++r)
                vec[static_cast<std::size_t>(r * n + s)] = l.unit()[static_cast<std::size_t>(r)];
            for (std::int64_t row = 0; row < d * n; ++row) {
                Scalar acc = Scalar::zero(k);
                for (std::int64_t c = 0; c < d * n; ++c)
                    acc = acc + t.at(row, c) * vec[static_cast<std::size_t>(c)];
                lm[static_cast<std::size_t>(row % n)][static_cast<std::size_t>(s)]
                  [static_cast<std::size_t>(row / n)] = acc;
            }
        }
        return lm;
    };
    SplittingWitness w;
    w.size = n;
    w.degrees = frame.degrees;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            w.units.push_back(lmat_transpose(transported(i, j)));
    // --- validation ---
    auto unit_at = [&](std::int64_t i, std::int64_t j) -> const LMat& {
        return w.units[static_cast<std::size_t>(i * n + j)];
    };
    const LMat zero = lmat_zero(l, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            for (std::int64_t r = 0; r < n; ++r)
                for (std::int64_t s = 0; s < n; ++s) {
                    LMat prod = lmat_mul(l, unit_at(i, j), unit_at(r, s));
                    const LMat& expect = j == r ? unit_at(i, s) : zero;
                    if (prod != expect)
                        throw internal_error("matrix-unit relation failed in witness");
                }
    {
        LMat acc = lmat_zero(l, n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t x = 0; x < n; ++x)
                for (std::int64_t y = 0; y < n; ++y) {
                    auto& cell = acc[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                    const auto& u =
                        unit_at(i, i)[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                    for (std::size_t t2 = 0; t2 < cell.size(); ++t2)
                        cell[t2] = cell[t2] + u[t2];
                }
        if (acc != lmat_identity(l, n))
            throw internal_error("witness units do not sum to the identity");
    }
    // homogeneity: unit (i,j) in span_k{ b_r * lift(M) : M in A_{d_i d_j^{-1}} }
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            GroupElement delta = a.group.combine(frame.degrees[static_cast<std::size_t>(i)],
                                                 frame.degrees[static_cast<std::size_t>(j)], true);
            std::vector<std::vector<Scalar>> span;
            for (const auto& m : a.component(delta)) {
                LMat lifted = lmat_zero(l, n);
                for (std::int64_t x = 0; x < n; ++x)
                    for (std::int64_t y = 0; y < n; ++y)
                        for (std::int64_t t2 = 0; t2 < d; ++t2)
                            lifted[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]
                                  [static_cast<std::size_t>(t2)] =
                                m.at(x, y) * l.unit()[static_cast<std::size_t>(t2)];
                for (std::int64_t r = 0; r < d; ++r)
                    span.push_back(lmat_flat(lmat_scale(l, l.basis_element(r), lifted)));
            }
            if (!vector_in_span(k, span, lmat_flat(unit_at(i, j))))
                throw internal_error("witness unit not homogeneous of the expected degree");
        }
    w.validated = true;
    return w;
}

// ---------------------------------------------------------------------------
// The shift-matrix descent datum and its grading.

struct DatumGradingResult {
    Grading grading;
    SplittingFrame frame;
    std::vector<std::vector<Scalar>> fixed_basis; // k-basis of the descended module
};

/// Builds V = kH (x) W, the descent datum phi(s) = S_s (x) (translation by s
/// on kH) (x) I_W, and descends END_l(l (x) V) to a grading on M_N(k),
/// N = |H| dim W, expressed in the fixed-point basis. Components are emitted
/// transposed, matching descended_grading's convention.
inline DatumGradingResult datum_grading(const GaloisExtension& e, const GradedVectorSpace& w) {
    if (!(w.group == e.group()))
        throw invalid_argument("W must be graded by the Galois group");
    {
        auto iw = inertia_group(w);
        if (iw.size() != 1 || !iw[0].is_identity())
            throw invalid_argument("W must have trivial inertia group");
    }
    auto chk = is_galois(e);
    if (!chk.ok) throw invalid_argument("extension is not Galois: " + chk.diagnostics);
    const Field& k = e.base();
    const CommutativeAlgebra& l = e.algebra();
    const std::int64_t d = e.dim();
    const auto elems = e.group().elements();
    const std::int64_t nh = static_cast<std::int64_t>(elems.size());
    const std::int64_t mw = w.dim();
    const std::int64_t n = nh * mw;      // size of the resulting grading
    const std::int64_t dim = d * n;      // k-dimension of l (x) V
    // V-basis index (a,i) -> a*mw + i; l (x) V index (r,(a,i)) -> r*n + a*mw + i
    auto vidx = [&](std::int64_t a, std::int64_t i) { return a * mw + i; };
    std::map<GroupElement, Matrix> phi;
    for (const auto& s : elems) {
        const Matrix& sm = e.action_matrix(s);
        Matrix p(k, dim, dim);
        for (std::int64_t a = 0; a < nh; ++a) {
            std::int64_t as = e.group().index_of(
                e.group().combine(elems[static_cast<std::size_t>(a)], s));
            for (std::int64_t i = 0; i < mw; ++i)
                for (std::int64_t r = 0; r < d; ++r)
                    for (std::int64_t t = 0; t < d; ++t)
                        if (!sm.at(t, r).is_zero())
                            p.at(t * n + vidx(as, i), r * n + vidx(a, i)) = sm.at(t, r);
        }
        phi[s] = std::move(p);
    }
    DescentDatum datum(e, n, std::move(phi));
    auto fixed = fixed_points(datum);
    Matrix bcols = columns_from_vectors(k, fixed, static_cast<std::size_t>(dim));
    // degree of V-basis vector (a,i): h_a * deg_W(i)
    auto deg_of = [&](std::int64_t a, std::int64_t i) {
        return e.group().combine(elems[static_cast<std::size_t>(a)],
                                 w.degrees[static_cast<std::size_t>(i)]);
    };
    auto gens = group_generators(e.group());
    Grading out;
    out.group = e.group();
    out.field = k;
    out.size = n;
    out.algebra_dim = n * n;
    for (const auto& tau : elems) {
        // matrix units of END(V) of degree tau
        std::vector<std::pair<std::int64_t, std::int64_t>> units; // (row vidx, col vidx)
        for (std::int64_t a = 0; a < nh; ++a)
            for (std::int64_t i = 0; i < mw; ++i)
                for (std::int64_t b = 0; b < nh; ++b)
                    for (std::int64_t j = 0; j < mw; ++j)
                        if (e.group().combine(deg_of(a, i), deg_of(b, j), true) == tau)
                            units.emplace_back(vidx(a, i), vidx(b, j));
        if (units.empty()) continue;
        const std::int64_t nu = static_cast<std::int64_t>(units.size());
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> uindex;
        for (std::int64_t u = 0; u < nu; ++u) uindex[units[static_cast<std::size_t>(u)]] = u;
        // fixed points of conjugation: unknowns c_{r,u}, index r*nu + u;
        // Phi_g(b_r E_{(a,i),(b,j)}) = g(b_r) E_{(ag,i),(bg,j)}
        const std::int64_t unk = d * nu;
        Matrix stack(k, unk * static_cast<std::int64_t>(gens.size()), unk);
        std::int64_t rowbase = 0;
        for (const auto& g : gens) {
            const Matrix& sm = e.action_matrix(g);
            Matrix mx(k, unk, unk);
            for (std::int64_t r = 0; r < d; ++r)
                for (std::int64_t u = 0; u < nu; ++u) {
                    auto [ri, ci] = units[static_cast<std::size_t>(u)];
                    std::int64_t ag = e.group().index_of(
                        e.group().combine(elems[static_cast<std::size_t>(ri / mw)], g));
                    std::int64_t bg = e.group().index_of(
                        e.group().combine(elems[static_cast<std::size_t>(ci / mw)], g));
                    std::int64_t u2 = uindex.at({vidx(ag, ri % mw), vidx(bg, ci % mw)});
                    for (std::int64_t t = 0; t < d; ++t)
                        if (!sm.at(t, r).is_zero())
                            mx.at(t * nu + u2, r * nu + u) = sm.at(t, r);
                }
            Matrix diff = mx - Matrix::identity(k, unk);
            for (std::int64_t i = 0; i < unk; ++i)
                for (std::int64_t j = 0; j < unk; ++j)
                    stack.at(rowbase + i, j) = diff.at(i, j);
            rowbase += unk;
        }
        auto sols = kernel(stack);
        if (static_cast<std::int64_t>(sols.size()) != nu)
            throw internal_error("component fixed space has wrong dimension");
        std::vector<Matrix> basis;
        for (const auto& sol : sols) {
            // realize X = sum c_{r,u} b_r E_u as a k-operator on l (x) V
            Matrix x(k, dim, dim);
            for (std::int64_t r = 0; r < d; ++r)
                for (std::int64_t u = 0; u < nu; ++u) {
                    const Scalar& c = sol[static_cast<std::size_t>(r * nu + u)];
                    if (c.is_zero()) continue;
                    auto [ri, ci] = units[static_cast<std::size_t>(u)];
                    for (std::int64_t q = 0; q < d; ++q) {
                        auto prod = l.multiply(l.basis_element(r), l.basis_element(q));
                        for (std::int64_t t = 0; t < d; ++t)
                            x.at(t * n + ri, q * n + ci) =
                                x.at(t * n + ri, q * n + ci) + c * prod[static_cast<std::size_t>(t)];
                    }
                }
            // express in the fixed basis: X * B_s = sum T_{ts} B_t
            Matrix tmat(k, n, n);
            for (std::int64_t s = 0; s < n; ++s) {
                std::vector<Scalar> img(static_cast<std::size_t>(dim), Scalar::zero(k));
                for (std::int64_t i = 0; i < dim; ++i)
                    for (std::int64_t j = 0; j < dim; ++j)
                        if (!x.at(i, j).is_zero())
                            img[static_cast<std::size_t>(i)] =
                                img[static_cast<std::size_t>(i)] +
                                x.at(i, j) * fixed[static_cast<std::size_t>(s)]
                                                  [static_cast<std::size_t>(j)];
                auto coords = solve(bcols, img);
                if (!coords) throw internal_error("fixed operator leaves the fixed module");
                for (std::int64_t t = 0; t < n; ++t)
                    tmat.at(t, s) = (*coords)[static_cast<std::size_t>(t)];
            }
            basis.push_back(tmat.transposed());
        }
        out.components[tau] = std::move(basis);
    }
    auto rep = verify_grading(out);
    if (!rep.ok) throw internal_error("datum grading failed verification: " + rep.witness);
    // frame: l-coordinates of 1 (x) (h_a (x) w_i) in the fixed basis; solve
    // over k with columns b_r * B_s
    DatumGradingResult res;
    res.grading = std::move(out);
    res.fixed_basis = fixed;
    {
        Matrix cols(k, dim, dim);
        for (std::int64_t r = 0; r < d; ++r)
            for (std::int64_t s = 0; s < n; ++s)
                for (std::int64_t q = 0; q < d; ++q) {
                    auto br = l.basis_element(r);
                    for (std::int64_t v = 0; v < n; ++v) {
                        // (b_r . B_s) coordinate (t, v) = sum_q (b_r b_q)_t B_s[(q,v)]
                        const Scalar& bs = fixed[static_cast<std::size_t>(s)]
                                                [static_cast<std::size_t>(q * n + v)];
                        if (bs.is_zero()) continue;
                        auto prod = l.multiply(br, l.basis_element(q));
                        for (std::int64_t t = 0; t < d; ++t)
                            cols.at(t * n + v, r * n + s) =
                                cols.at(t * n + v, r * n + s) + prod[static_cast<std::size_t>(t)] * bs;
                    }
                }
        for (std::int64_t a = 0; a < nh; ++a)
            for (std::int64_t i = 0; i < mw; ++i) {
                std::vector<Scalar> target(static_cast<std::size_t>(dim), Scalar::zero(k));
                for (std::int64_t r = 0; r < d; ++r)
                    target[static_cast<std::size_t>(r * n + vidx(a, i))] =
                        l.unit()[static_cast<std::size_t>(r)];
                auto lam = solve(cols, target);
                if (!lam) throw internal_error("standard basis vector not in the l-span of the fixed basis");
                std::vector<LElem> vec(static_cast<std::size_t>(n));
                for (std::int64_t s = 0; s < n; ++s) {
                    LElem c(static_cast<std::size_t>(d), Scalar::zero(k));
                    for (std::int64_t r = 0; r < d; ++r)
                        c[static_cast<std::size_t>(r)] = (*lam)[static_cast<std::size_t>(r * n + s)];
                    vec[static_cast<std::size_t>(s)] = std::move(c);
                }
                res.frame.vectors.push_back(std::move(vec));
                // the transposed component convention flips the frame's
                // orientation relative to the descended case
                res.frame.degrees.push_back(e.group().inverse(deg_of(a, i)));
            }
    }
    return res;
}

// ---------------------------------------------------------------------------
// The dual crossed-product isomorphism.

struct DualCrossedIso {
    GaloisExtension extension;       // Hk with the translation action
    bool bijective = false;
    bool multiplicative = false;
    bool grade_preserving = false;
    // e_{sigma,tau} corresponds to v_sigma u_{tau sigma^{-1}}; per pair we
    // record (sigma, tau, degree = tau sigma^{-1})
    std::vector<std::tuple<GroupElement, GroupElement, GroupElement>> table;
};

/// The bijection Delta(Hk,H) <-> End_k(kH), f(e_{sigma,tau}) = v_sigma
/// u_{tau sigma^{-1}}; validated multiplicative and grade-preserving.
inline DualCrossedIso dual_crossed_iso(const FiniteAbelianGroup& h, const Field& k) {
    DualCrossedIso iso;
    iso.extension = dual_group_extension(h, k);
    CrossedProduct delta(iso.extension);
    const auto elems = h.elements();
    const std::int64_t n = static_cast<std::int64_t>(elems.size());
    // f as coordinate vectors in Delta, indexed by the (sigma,tau) unit
    auto image = [&](std::int64_t si, std::int64_t ti) {
        std::vector<Scalar> v(static_cast<std::size_t>(delta.dim()), Scalar::zero(k));
        GroupElement u = h.combine(elems[static_cast<std::size_t>(ti)],
                                   elems[static_cast<std::size_t>(si)], true);
        v[static_cast<std::size_t>(delta.index(si, u))] = Scalar::one(k);
        return v;
    };
    iso.bijective = true; // basis bijection by construction; rank-checked below
    {
        std::vector<std::vector<Scalar>> cols;
        for (std::int64_t si = 0; si < n; ++si)
            for (std::int64_t ti = 0; ti < n; ++ti) cols.push_back(image(si, ti));
        Matrix m = columns_from_vectors(k, cols, static_cast<std::size_t>(delta.dim()));
        iso.bijective = m.rows() == m.cols() && rank(m) == m.rows();
    }
    iso.multiplicative = true;
    for (std::int64_t si = 0; si < n && iso.multiplicative; ++si)
        for (std::int64_t ti = 0; ti < n && iso.multiplicative; ++ti)
            for (std::int64_t ri = 0; ri < n && iso.multiplicative; ++ri)
                for (std::int64_t vi = 0; vi < n && iso.multiplicative; ++vi) {
                    auto lhs = delta.multiply(image(si, ti), image(ri, vi));
                    std::vector<Scalar> rhs(static_cast<std::size_t>(delta.dim()),
                                            Scalar::zero(k));
                    if (ti == ri) rhs = image(si, vi);
                    if (lhs != rhs) iso.multiplicative = false;
                }
    // grade preservation: deg e_{sigma,tau} in END(kH with degrees h^{-1})
    // is tau sigma^{-1}, the Delta-degree of u_{tau sigma^{-1}}
    iso.grade_preserving = true;
    {
        GradedVectorSpace kh;
        kh.group = h;
        for (const auto& g : elems) kh.degrees.push_back(h.inverse(g));
        for (std::int64_t si = 0; si < n; ++si)
            for (std::int64_t ti = 0; ti < n; ++ti) {
                GroupElement end_deg = h.combine(kh.degrees[static_cast<std::size_t>(si)],
                                                 kh.degrees[static_cast<std::size_t>(ti)], true);
                GroupElement delta_deg = h.combine(elems[static_cast<std::size_t>(ti)],
                                                   elems[static_cast<std::size_t>(si)], true);
                if (!(end_deg == delta_deg)) iso.grade_preserving = false;
                iso.table.emplace_back(elems[static_cast<std::size_t>(si)],
                                       elems[static_cast<std::size_t>(ti)], delta_deg);
            }
    }
    return iso;
}

// ---------------------------------------------------------------------------
// Quadratic form classes and the identity-component invariant.

struct FormClass {
    Scalar alpha;
    bool split = false;
};

inline bool is_square(const Scalar& a) {
    const Field& f = a.field();
    if (f.is_rational()) {
        using boost::multiprecision::sqrt;
        if (a.rat() < 0) return false;
        BigInt num = numerator(a.rat()), den = denominator(a.rat());
        BigInt sn = sqrt(num), sd = sqrt(den);
        return sn * sn == num && sd * sd == den;
    }
    if (a.is_zero()) return true;
    if (f.characteristic() == 2) return true; // Frobenius is onto
    Scalar acc = Scalar::one(f), base = a;
    std::int64_t e = (f.order() - 1) / 2;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc.is_one();
}

/// Is a in the image of x -> x^2 - x (Artin-Schreier, characteristic 2)?
inline bool is_artin_schreier_image(const Scalar& a) {
    const Field& f = a.field();
    for (std::int64_t i = 0; i < f.order(); ++i) {
        Scalar x = Scalar::from_index(f, i);
        if (x * x - x == a) return true;
    }
    return false;
}

/// Representatives of the two classes of quadratic Galois extensions of a
/// finite field: k*/(k*)^2 in odd characteristic, k/{x^2-x} in
/// characteristic 2. The split class comes first.
inline std::vector<FormClass> quadratic_form_classes(const Field& k) {
    if (!k.is_finite()) throw invalid_argument("finite field required");
    std::vector<FormClass> out;
    if (k.characteristic() == 2) {
        out.push_back({Scalar::zero(k), true});
        for (std::int64_t i = 0; i < k.order(); ++i) {
            Scalar a = Scalar::from_index(k, i);
            if (!is_artin_schreier_image(a)) {
                out.push_back({a, false});
                break;
            }
        }
    } else {
        out.push_back({Scalar::one(k), true});
        for (std::int64_t i = 2; i < k.order(); ++i) {
            Scalar a = Scalar::from_index(k, i);
            if (!is_square(a)) {
                out.push_back({a, false});
                break;
            }
        }
    }
    if (out.size() != 2) throw internal_error("expected exactly two quadratic classes");
    return out;
}

struct IdentityComponentInvariant {
    bool split = false;
    Scalar class_rep; // discriminant class (odd char / Q) or Artin-Schreier class
    bool operator==(const IdentityComponentInvariant&) const = default;

    std::string to_string() const {
        return split ? "split" : "field alpha=" + class_rep.to_string();
    }
};

inline BigInt squarefree_part(BigInt v) {
    if (v == 0) return 0;
    BigInt out = v < 0 ? -1 : 1;
    if (v < 0) v = -v;
    for (BigInt p = 2; p * p <= v && p < 100000; ++p) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    using boost::multiprecision::sqrt;
    BigInt s = sqrt(v);
    if (s * s != v) out *= v; // residual cofactor with odd multiplicity
    return out;
}

/// The {I, N} presentation of a 2-dimensional identity component:
/// N^2 = a I + b N.
struct AePresentation {
    Matrix n;
    Scalar a, b;
};

inline AePresentation ae_presentation(const Grading& g) {
    if (g.size != 2 || g.group.order() != 2)
        throw invalid_argument("identity-component analysis needs m=2, G=C_2");
    const auto& comp = g.component(g.group.identity());
    if (comp.size() != 2 || g.component(GroupElement{{1}}).size() != 2)
        throw invalid_argument("component dimensions must be (2,2)");
    const Field& k = g.field;
    Matrix id = Matrix::identity(k, 2);
    {
        std::vector<std::vector<Scalar>> span;
        for (const auto& m : comp) span.push_back(m.entries());
        if (!vector_in_span(k, span, id.entries()))
            throw invalid_argument("identity not in the identity component");
    }
    Matrix n = comp[0];
    if (rank(columns_from_vectors(k, {id.entries(), n.entries()}, 4)) < 2) n = comp[1];
    auto sr = span_solve({id, n}, n * n);
    if (sr.status != SpanStatus::InSpan)
        throw invalid_argument("identity component is not closed under products");
    return {n, sr.coords[0], sr.coords[1]};
}

/// Classifies the identity component of a C_2-grading of M_2(k): split
/// (contains a nontrivial idempotent) or a field, with the class of its
/// defining alpha. Over Q the class is the squarefree discriminant.
inline IdentityComponentInvariant identity_component_invariant(const Grading& g) {
    auto pres = ae_presentation(g);
    const Field& k = g.field;
    IdentityComponentInvariant inv;
    if (k.characteristic() == 2) {
        if (pres.b.is_zero())
            throw invalid_argument("identity component is not etale");
        Scalar alpha = pres.a / (pres.b * pres.b);
        inv.split = is_artin_schreier_image(alpha);
        if (inv.split) {
            inv.class_rep = Scalar::zero(k);
        } else {
            for (std::int64_t i = 0; i < k.order(); ++i) {
                Scalar c = Scalar::from_index(k, i);
                if (!is_artin_schreier_image(c)) {
                    inv.class_rep = c;
                    break;
                }
            }
        }
        return inv;
    }
    const Scalar four = Scalar::make(k, 4);
    Scalar disc = pres.a + pres.b * pres.b / four;
    if (disc.is_zero()) throw invalid_argument("identity component is not etale");
    inv.split = is_square(disc);
    if (k.is_rational()) {
        inv.class_rep = Scalar::rational(
            BigRat(squarefree_part(numerator(disc.rat()) * denominator(disc.rat()))));
    } else if (inv.split) {
        inv.class_rep = Scalar::one(k);
    } else {
        for (std::int64_t i = 2; i < k.order(); ++i) {
            Scalar c = Scalar::from_index(k, i);
            if (!is_square(c)) {
                inv.class_rep = c;
                break;
            }
        }
    }
    return inv;
}

/// A nontrivial idempotent of the identity component, if one exists.
inline std::optional<Matrix> identity_component_idempotent(const Grading& g) {
    auto pres = ae_presentation(g);
    const Field& k = g.field;
    Matrix id = Matrix::identity(k, 2);
    if (k.is_finite()) {
        for (std::int64_t u = 0; u < k.order(); ++u)
            for (std::int64_t v = 0; v < k.order(); ++v) {
                Matrix x = id.scaled(Scalar::from_index(k, u)) +
                           pres.n.scaled(Scalar::from_index(k, v));
                if (x * x == x && !x.is_zero() && !(x == id)) return x;
            }
        return std::nullopt;
    }
    // rationals: complete the square, take an exact square root of the
    // discriminant when it is one
    const Scalar two = Scalar::make(k, 2);
    Scalar disc = pres.a + pres.b * pres.b / (two * two);
    if (!is_square(disc) || disc.is_zero()) return std::nullopt;
    using boost::multiprecision::sqrt;
    Scalar root = Scalar::rational(
        BigRat(sqrt(numerator(disc.rat())), sqrt(denominator(disc.rat()))));
    Matrix m = pres.n - id.scaled(pres.b / two); // m^2 = disc I
    Matrix x = (id + m.scaled(root.inverse())).scaled(two.inverse());
    if (!(x * x == x) || x.is_zero() || x == id)
        throw internal_error("idempotent construction failed");
    return x;
}

/// If the grading is a split form of the good C_2-grading of M_2(k),
/// conjugates it onto end_grading((e, s)) and returns the degree tuple with
/// the conjugating matrix; nullopt for non-split forms.
inline std::optional<std::pair<std::vector<GroupElement>, Matrix>>
split_good_form(const Grading& g) {
    auto u = identity_component_idempotent(g);
    if (!u) return std::nullopt;
    const Field& k = g.field;
    // columns: image of u, kernel of u
    std::vector<Scalar> col1, col2;
    for (std::int64_t j = 0; j < 2; ++j) {
        std::vector<Scalar> c = {u->at(0, j), u->at(1, j)};
        if (!(c[0].is_zero() && c[1].is_zero())) {
            col1 = c;
            break;
        }
    }
    auto ker = kernel(*u);
    if (col1.empty() || ker.size() != 1)
        throw internal_error("idempotent is not rank one");
    col2 = ker[0];
    Matrix t(k, 2, 2);
    for (std::int64_t i = 0; i < 2; ++i) {
        t.at(i, 0) = col1[static_cast<std::size_t>(i)];
        t.at(i, 1) = col2[static_cast<std::size_t>(i)];
    }
    Matrix ti = inverse(t);
    Grading conj;
    conj.group = g.group;
    conj.field = k;
    conj.size = g.size;
    conj.algebra_dim = g.algebra_dim;
    for (const auto& [s, basis] : g.components) {
        std::vector<Matrix> nb;
        for (const auto& m : basis) nb.push_back(ti * m * t);
        conj.components[s] = std::move(nb);
    }
    auto degs = degrees_of_good_grading(conj);
    if (!degs) throw internal_error("conjugated split form is not good");
    return std::make_pair(*degs, t);
}

struct FormReport {
    Scalar alpha;
    bool split = false;
    IdentityComponentInvariant invariant;
    Grading grading;
};

/// The two forms of the nontrivial good C_2-grading of M_2(k) over a finite
/// field: the descended gradings of the two quadratic classes.
inline std::vector<FormReport> classify_forms(const Field& k) {
    std::vector<FormReport> out;
    for (const auto& cls : quadratic_form_classes(k)) {
        FormReport r;
        r.alpha = cls.alpha;
        r.split = cls.split;
        r.grading = descended_grading(make_quadratic(k, cls.alpha));
        r.invariant = identity_component_invariant(r.grading);
        if (r.invariant.split != cls.split)
            throw internal_error("invariant disagrees with the quadratic class");
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace gradmat
