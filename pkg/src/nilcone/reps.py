"""Exact matrix models of irreducible modules and the principal nilpotent.

Modules are built by closing a highest-weight vector under the lowering
operators, pruning the maximal submodule with the contravariant form: a
monomial f-word enters the basis only if it enlarges the rank of the Gram
matrix at its weight, and the form is positive definite on a true basis, so
ranks decide membership exactly.  All arithmetic is over Fraction.

Operators are stored sparsely as {column: {row: value}}.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError, ResourceError
from .qpoly import QPoly, product_truncated
from .roots import _vec_add, _vec_sub
from .characters import (irreducible_character, weyl_dimension,
                         _require_dominant)

DEFAULT_DIM_CAP = 400


# -- sparse operator helpers -------------------------------------------------

def op_apply(op, vec):
    """Apply {col: {row: val}} to {index: val}."""
    out = {}
    for c, x in vec.items():
        col = op.get(c)
        if not col:
            continue
        for r, a in col.items():
            s = out.get(r, Fraction(0)) + a * x
            if s:
                out[r] = s
            else:
                out.pop(r, None)
    return out


def op_add(a, b, coeff=1):
    out = {c: dict(col) for c, col in a.items()}
    for c, col in b.items():
        tgt = out.setdefault(c, {})
        for r, v in col.items():
            s = tgt.get(r, Fraction(0)) + coeff * v
            if s:
                tgt[r] = s
            else:
                tgt.pop(r, None)
        if not tgt:
            del out[c]
    return out


def op_compose(a, b):
    """a after b, both {col: {row: val}}."""
    out = {}
    for c, col in b.items():
        img = op_apply(a, col)
        if img:
            out[c] = img
    return out


def op_scale(op, coeff):
    if not coeff:
        return {}
    return {c: {r: coeff * v for r, v in col.items()} for c, col in op.items()}


def op_equal(a, b):
    return _op_norm(a) == _op_norm(b)


def _op_norm(op):
    return {c: {r: v for r, v in col.items() if v} for c, col in op.items()
            if any(col.values())}


def op_commutator(a, b):
    return op_add(op_compose(a, b), op_compose(b, a), -1)


def _strip_column(col):
    """Rescale a rational column to a primitive integer one (rank-safe)."""
    if not col:
        return {}
    denom = 1
    for v in col.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = {r: int(v * denom) for r, v in col.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    if g > 1:
        ints = {r: v // g for r, v in ints.items()}
    return ints


def int_columns_rank(columns):
    """Rank of a list of integer sparse columns, by exact elimination."""
    pivots = {}  # pivot row -> reduced column
    rank = 0
    for col in columns:
        col = dict(col)
        while col:
            r = min(col)
            if r not in pivots:
                pivots[r] = col
                rank += 1
                break
            piv = pivots[r]
            a, b = piv[r], col[r]
            g = gcd(a, b)
            ca, cb = b // g, a // g
            new = {}
            for k in set(col) | set(piv):
                v = cb * col.get(k, 0) - ca * piv.get(k, 0)
                if v:
                    new[k] = v
            g2 = 0
            for v in new.values():
                g2 = gcd(g2, abs(v))
            if g2 > 1:
                new = {k: v // g2 for k, v in new.items()}
            col = new
    return rank


def fraction_solve(matrix, rhs):
    """Solve the invertible square system matrix * x = rhs over Fraction."""
    n = len(matrix)
    aug = [list(map(Fraction, matrix[i])) + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        assert piv is not None, "singular Gram matrix"
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


# -- the representation object ------------------------------------------------

class MatrixRep:
    """Chevalley generator matrices for one irreducible module."""

    def __init__(self, datum, highest_weight, basis, e_ops, f_ops):
        self.datum = datum
        self.highest_weight = highest_weight
        self.basis = basis  # list of (weight, occurrence index)
        self.e_ops = e_ops  # one sparse op per simple index
        self.f_ops = f_ops
        self.dim = len(basis)
        self.index_of = {bk: i for i, bk in enumerate(basis)}
        self.weight_spaces = {}
        for i, (w, _) in enumerate(basis):
            self.weight_spaces.setdefault(w, []).append(i)

    def h_op(self, i):
        out = {}
        for idx, (w, _) in enumerate(self.basis):
            c = self.datum.simple_pairing(w, i)
            if c:
                out[idx] = {idx: Fraction(c)}
        return out

    def weight_of(self, index):
        return self.basis[index][0]

    def principal_degree(self, index):
        return self.datum.pair_2rho_check(self.basis[index][0])

    def validate(self):
        d = self.datum
        for i in range(d.rank):
            hi = self.h_op(i)
            for j in range(d.rank):
                lhs = op_commutator(self.e_ops[i], self.f_ops[j])
                rhs = hi if i == j else {}
                assert op_equal(lhs, rhs), "[e_%d, f_%d] failed" % (i, j)
        char = irreducible_character(d, self.highest_weight)
        for w, idxs in self.weight_spaces.items():
            assert char.get(w, 0) == len(idxs), "weight space dim mismatch at %r" % (w,)
        assert self.dim == weyl_dimension(d, self.highest_weight)
        return True

    def serre_check(self):
        """(ad e_i)^(1 - <alpha_j, alpha_i-check>)(e_j) = 0 here, both sides."""
        d = self.datum
        ok = True
        for i in range(d.rank):
            for j in range(d.rank):
                if i == j:
                    continue
                n = 1 - d.cartan[i][j]
                for ops in (self.e_ops, self.f_ops):
                    acc = ops[j]
                    for _ in range(n):
                        acc = op_commutator(ops[i], acc)
                    if _op_norm(acc):
                        ok = False
        return ok

    def to_json(self):
        """Documented export: basis labels plus dense row-major matrices,
        every entry a rational string "p/q"."""
        def op_json(op):
            rows = [["0/1"] * self.dim for _ in range(self.dim)]
            for c, col in op.items():
                for r, v in col.items():
                    rows[r][c] = "%d/%d" % (v.numerator, v.denominator)
            return rows
        return {
            "preset": self.datum.name,
            "highest_weight": list(self.highest_weight),
            "basis": [[list(w), k] for w, k in self.basis],
            "e": [op_json(op) for op in self.e_ops],
            "f": [op_json(op) for op in self.f_ops],
            "h": [op_json(self.h_op(i)) for i in range(self.datum.rank)],
        }


_REP_CACHE = {}
_REP_CACHE_LIMIT = 12


def build_irrep(datum, lam, dim_cap=DEFAULT_DIM_CAP):
    """Construct the irreducible module with highest weight lam."""
    _require_dominant(datum, lam)
    lam = tuple(lam)
    key = (datum.name, lam)
    if key in _REP_CACHE:
        return _REP_CACHE[key]
    dim = weyl_dimension(datum, lam)
    if dim > dim_cap:
        raise ResourceError(
            "dim V_%r = %d exceeds the cap %d" % (lam, dim, dim_cap))

    char = irreducible_character(datum, lam)
    rank = datum.rank
    simple = datum.simple_roots
    levels = {}
    for w in char:
        lv = datum.height(_vec_sub(lam, w))
        levels.setdefault(lv, []).append(w)

    words = {lam: [()]}
    gram = {lam: [[Fraction(1)]]}
    f_cols = {}  # (i, source weight, source index) -> coords at target weight
    e_cols = {}  # (i, weight, index) -> coords at weight + alpha_i

    for lv in sorted(levels)[1:]:
        for mu in sorted(levels[lv]):
            target = char[mu]
            cands = []
            for i in range(rank):
                nu = _vec_add(mu, simple[i])
                for k in range(len(words.get(nu, ()))):
                    cands.append((i, nu, k))
            # e_j action on each candidate, expressed at weight mu + alpha_j
            evecs = []
            for (i, nu, k) in cands:
                per_j = {}
                for j in range(rank):
                    up = _vec_add(mu, simple[j])
                    if up not in words:
                        continue
                    m_up = len(words[up])
                    acc = [Fraction(0)] * m_up
                    # f_i applied to e_j of the source basis vector
                    src = e_cols.get((j, nu, k))
                    if src is not None:
                        over = _vec_add(nu, simple[j])
                        for t, c in enumerate(src):
                            if not c:
                                continue
                            fc = f_cols.get((i, over, t))
                            if fc is None:
                                continue
                            for r, v in enumerate(fc):
                                acc[r] += c * v
                    if i == j:
                        acc[k] += datum.simple_pairing(nu, i)
                    if any(acc):
                        per_j[j] = acc
                evecs.append(per_j)

            def pairing(sel_idx, cand_idx):
                # <candidate sel, candidate cand> = <source(sel), e_{i_sel} cand>
                i_s, nu_s, k_s = cands[sel_idx]
                vec = evecs[cand_idx].get(i_s)
                if vec is None:
                    return Fraction(0)
                grow = gram[nu_s][k_s]
                return sum(grow[t] * vec[t] for t in range(len(vec)) if vec[t])

            selected = []
            gsel = []
            for ci in range(len(cands)):
                if len(selected) == target:
                    break
                row = [pairing(sel_ci, ci) for sel_ci in selected]
                self_pairing = pairing(ci, ci)
                if selected:
                    y = fraction_solve(gsel, row)
                    residual = self_pairing - sum(a * b for a, b in zip(row, y))
                else:
                    residual = self_pairing
                if residual:
                    for t, r in enumerate(row):
                        gsel[t].append(r)
                    gsel.append(row + [self_pairing])
                    selected.append(ci)
            assert len(selected) == target, \
                "could not span weight space %r of V_%r" % (mu, lam)

            words[mu] = [(cands[ci][0],) + words[cands[ci][1]][cands[ci][2]]
                         for ci in selected]
            gram[mu] = gsel
            # coords of every candidate over the selected basis -> f columns
            for ci, (i, nu, k) in enumerate(cands):
                b = [pairing(sel_ci, ci) for sel_ci in selected]
                f_cols[(i, nu, k)] = fraction_solve(gsel, b)
            for pos, ci in enumerate(selected):
                for j, vec in evecs[ci].items():
                    e_cols[(j, mu, pos)] = vec

    # global basis: sorted by descending principal degree, then weight, then slot
    weight_order = sorted(char, key=lambda w: (-datum.pair_2rho_check(w), w))
    basis = []
    for w in weight_order:
        for k in range(char[w]):
            basis.append((w, k))
    index_of = {bk: i for i, bk in enumerate(basis)}

    e_ops = [dict() for _ in range(rank)]
    f_ops = [dict() for _ in range(rank)]
    for (i, mu, k), vec in e_cols.items():
        up = _vec_add(mu, simple[i])
        col = {}
        for t, v in enumerate(vec):
            if v:
                col[index_of[(up, t)]] = v
        if col:
            e_ops[i][index_of[(mu, k)]] = col
    for (i, nu, k), vec in f_cols.items():
        down = _vec_sub(nu, simple[i])
        col = {}
        for t, v in enumerate(vec):
            if v:
                col[index_of[(down, t)]] = v
        if col:
            f_ops[i][index_of[(nu, k)]] = col

    rep = MatrixRep(datum, lam, basis, e_ops, f_ops)
    rep.validate()
    if len(_REP_CACHE) >= _REP_CACHE_LIMIT:
        _REP_CACHE.pop(next(iter(_REP_CACHE)))
    _REP_CACHE[key] = rep
    return rep


def principal_e(rep, coefficients=None):
    """Sum of the simple raising operators (any nonzero coefficients)."""
    rank = rep.datum.rank
    if coefficients is None:
        coefficients = [1] * rank
    if len(coefficients) != rank or any(not c for c in coefficients):
        raise DomainError("need one nonzero coefficient per simple root")
    out = {}
    for i in range(rank):
        out = op_add(out, rep.e_ops[i], Fraction(coefficients[i]))
    return out


# -- abstract root vectors and the centralizer of e ---------------------------

def _pos_root_tree(datum, gamma_coords):
    """Bracket recipe for a root vector: chain of simple indices.

    Returns a list [i_k, ..., i_1] meaning [e_{i_k}, [... [e_{i_2}, e_{i_1}]]].
    Any chain through positive roots works (consecutive sums being roots
    forces nonvanishing brackets).
    """
    roots = {r.root_coords for r in datum.positive_roots()}
    coords = tuple(gamma_coords)
    chain = []
    while sum(coords) > 1:
        for j in range(datum.rank):
            if coords[j] == 0:
                continue
            lower = tuple(c - (1 if t == j else 0) for t, c in enumerate(coords))
            if lower in roots:
                chain.append(j)
                coords = lower
                break
        else:
            raise AssertionError("no descent found for %r" % (gamma_coords,))
    chain.append(coords.index(1))
    return chain


def realize_root_vector(rep, chain, negative=False):
    """Evaluate a bracket recipe in a module (e side or f side)."""
    gens = rep.f_ops if negative else rep.e_ops
    acc = gens[chain[-1]]
    for j in reversed(chain[:-1]):
        acc = op_commutator(gens[j], acc)
    return acc


def _abstract_basis(datum):
    """Basis of the Lie algebra as bracket recipes with principal degrees."""
    items = []
    for i in range(datum.rank):
        items.append(("h", i, 0))
    for r in datum.positive_roots():
        deg = datum.pair_2rho_check(r.weight)
        chain = tuple(_pos_root_tree(datum, r.root_coords))
        items.append(("pos", chain, deg))
        items.append(("neg", chain, -deg))
    return items


def realize_abstract(rep, item):
    kind, payload, _deg = item
    if kind == "h":
        return rep.h_op(payload)
    return realize_root_vector(rep, list(payload), negative=(kind == "neg"))


class CentralizerElement:
    """Element of the centralizer of e, as coefficients over bracket recipes."""

    __slots__ = ("degree", "items", "coeffs")

    def __init__(self, degree, items, coeffs):
        self.degree = degree
        self.items = items
        self.coeffs = coeffs

    def realize(self, rep):
        out = {}
        for item, c in zip(self.items, self.coeffs):
            if c:
                out = op_add(out, realize_abstract(rep, item), c)
        return out


_CENTRALIZER_CACHE = {}


def centralizer_and_exponents(datum):
    """Homogeneous basis of the centralizer of e, and the exponents.

    Solves [x, e] = 0 degree by degree in the adjoint module; the basis
    elements come back as abstract bracket combinations reusable in any
    module, with principal degrees 2 m_1 <= ... <= 2 m_r.
    """
    if datum.name in _CENTRALIZER_CACHE:
        return _CENTRALIZER_CACHE[datum.name]
    adj = build_irrep(datum, datum.highest_root().weight)
    e = principal_e(adj)
    items = _abstract_basis(datum)
    by_degree = {}
    for item in items:
        by_degree.setdefault(item[2], []).append(item)

    elements = []
    for deg in sorted(by_degree):
        group = by_degree[deg]
        mats = [realize_abstract(adj, item) for item in group]
        brackets = [op_commutator(m, e) for m in mats]
        # vectorize each bracket and find the joint kernel over coefficients
        cells = sorted({(c, r) for b in brackets for c, col in b.items() for r in col})
        cell_index = {cell: t for t, cell in enumerate(cells)}
        rows = len(cells)
        cols = []
        for b in brackets:
            col = {}
            for c, colv in b.items():
                for r, v in colv.items():
                    col[cell_index[(c, r)]] = v
            cols.append(col)
        for coeffs in _fraction_kernel(cols, rows):
            elements.append(CentralizerElement(deg, group, coeffs))

    elements.sort(key=lambda el: el.degree)
    for el in elements:
        assert el.degree > 0 and el.degree % 2 == 0, \
            "unexpected centralizer degree %r" % (el.degree,)
    exponents = [el.degree // 2 for el in elements]
    assert len(exponents) == datum.rank
    result = (elements, exponents)
    _CENTRALIZER_CACHE[datum.name] = result
    return result


def _fraction_kernel(columns, nrows):
    """Kernel basis of the matrix with the given sparse Fraction columns."""
    ncols = len(columns)
    dense = [[Fraction(0)] * ncols for _ in range(nrows)]
    for j, col in enumerate(columns):
        for r, v in col.items():
            dense[r][j] = v
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if dense[r][col]:
                piv = r
                break
        if piv is None:
            continue
        dense[row], dense[piv] = dense[piv], dense[row]
        inv = Fraction(1) / dense[row][col]
        dense[row] = [a * inv for a in dense[row]]
        for r in range(nrows):
            if r != row and dense[r][col]:
                f = dense[r][col]
                dense[r] = [a - f * b for a, b in zip(dense[r], dense[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -dense[r][fc]
        basis.append(vec)
    return basis


# -- the kernel filtration -----------------------------------------------------

class FiltrationProfile:
    """Dimensions of V(weight) cut by kernels of the powers of e."""

    __slots__ = ("weight", "dims", "total")

    def __init__(self, weight, dims, total):
        self.weight = weight
        self.dims = dims  # filtration index -> dim, nondecreasing
        self.total = total

    def graded_poly(self):
        out = {}
        prev = 0
        for i in sorted(self.dims):
            jump = self.dims[i] - prev
            if jump:
                out[i] = jump
            prev = self.dims[i]
        return QPoly(out)

    def __eq__(self, other):
        return (self.weight == other.weight and self.dims == other.dims
                and self.total == other.total)

    def __repr__(self):
        return "FiltrationProfile(%r, %r)" % (self.weight, self.dims)


def integer_principal_e(rep, coefficients=None):
    """principal_e rescaled to integer entries (kernel powers unchanged)."""
    key = tuple(coefficients) if coefficients is not None else None
    cache = getattr(rep, "_int_e_cache", None)
    if cache is None:
        cache = rep._int_e_cache = {}
    if key in cache:
        return cache[key]
    e = principal_e(rep, coefficients)
    denom = 1
    for col in e.values():
        for v in col.values():
            denom = denom * v.denominator // gcd(denom, v.denominator)
    out = {c: {r: int(v * denom) for r, v in col.items()}
           for c, col in e.items()}
    cache[key] = out
    return out


def _int_apply(op, vec):
    out = {}
    for c, x in vec.items():
        col = op.get(c)
        if not col:
            continue
        for r, a in col.items():
            s = out.get(r, 0) + a * x
            if s:
                out[r] = s
            else:
                out.pop(r, None)
    return out


def _strip_int_column(col):
    g = 0
    for v in col.values():
        g = gcd(g, abs(v))
        if g == 1:
            return col
    if g > 1:
        return {r: v // g for r, v in col.items()}
    return col


def bk_filtration(rep, lam, coefficients=None):
    """Filtration of the lam weight space by kernels of e powers."""
    lam = tuple(lam)
    cols = rep.weight_spaces.get(lam, [])
    m = len(cols)
    if m == 0:
        return FiltrationProfile(lam, {}, 0)
    e = integer_principal_e(rep, coefficients)
    current = [{idx: 1} for idx in cols]
    dims = {}
    i = 0
    while True:
        nxt = [_strip_int_column(_int_apply(e, col)) for col in current]
        live = [c for c in nxt if c]
        rank = int_columns_rank(live) if live else 0
        dims[i] = m - rank
        if dims[i] == m:
            break
        current = nxt
        i += 1
    return FiltrationProfile(lam, dims, m)


def bk_profile_all_weights(rep, coefficients=None):
    """bk_filtration for every weight of the module, one pass."""
    return {w: bk_filtration(rep, w, coefficients) for w in rep.weight_spaces}


def verify_theorem_filtrations(datum, nu, lam, dim_cap=DEFAULT_DIM_CAP):
    """Compare the kernel-filtration polynomial with the q-analog prediction.

    Returns (equal, filtration polynomial, predicted polynomial).
    """
    from .qanalog import p_bk_polynomial
    rep = build_irrep(datum, nu, dim_cap)
    actual = bk_filtration(rep, tuple(lam)).graded_poly()
    predicted = p_bk_polynomial(datum, nu, lam)
    return actual == predicted, actual, predicted


def poincare_gr(datum, truncation):
    """Series with exponents doubled: product of 1/(1 - t^(2 m_i))."""
    _, exponents = centralizer_and_exponents(datum)
    if truncation < 0:
        raise DomainError("truncation must be >= 0")
    factors = []
    for m in exponents:
        step = 2 * m
        factors.append(QPoly({e: 1 for e in range(0, truncation + 1, step)}))
    return product_truncated(factors, truncation)
