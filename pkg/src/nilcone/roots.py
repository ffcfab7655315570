"""Root data for the small-rank presets, with Weyl groups and pairings.

Weights are plain integer tuples in the preset's lattice basis:
fundamental-weight coordinates for the simply-connected presets, simple-root
coordinates for the adjoint ones.  Coweights live in the dual basis, so the
weight/coweight pairing is the standard dot product.  The only place the two
bases meet is the pairing-coordinate conversion pair
(:func:`RootDatum.pairing_coords`, :func:`RootDatum.weight_from_pairing`).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigurationError, DomainError

# name -> (cartan A with A[i][j] = <alpha_j, alpha_i-check>, symmetrizers d_i,
#          lattice kind, expected number of positive roots)
_PRESETS = {
    "A1-sc": ([[2]], [1], "simply-connected", 1),
    "A1-adj": ([[2]], [1], "adjoint", 1),
    "A2-sc": ([[2, -1], [-1, 2]], [1, 1], "simply-connected", 3),
    "A2-adj": ([[2, -1], [-1, 2]], [1, 1], "adjoint", 3),
    "A3-sc": ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 1, 1], "simply-connected", 6),
    "B2-sc": ([[2, -1], [-2, 2]], [2, 1], "simply-connected", 4),
    "G2": ([[2, -1], [-3, 2]], [3, 1], "simply-connected", 6),
}


def supported_presets():
    return sorted(_PRESETS)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vec_scale(c, u):
    return tuple(c * a for a in u)


def _mat_vec(m, v):
    return tuple(_dot(row, v) for row in m)


def _mat_mul(a, b):
    n = len(b)
    cols = list(zip(*b))
    return tuple(tuple(_dot(row, col) for col in cols) for row in a)


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


class WeylElement:
    """A Weyl group element: a reduced word plus its weight-lattice matrix."""

    __slots__ = ("word", "matrix", "comatrix")

    def __init__(self, word, matrix, comatrix):
        self.word = word
        self.matrix = matrix      # action on weights
        self.comatrix = comatrix  # action on coweights

    @property
    def length(self):
        return len(self.word)

    @property
    def sign(self):
        return -1 if len(self.word) % 2 else 1

    def apply(self, weight):
        return _mat_vec(self.matrix, weight)

    def apply_coweight(self, coweight):
        return _mat_vec(self.comatrix, coweight)

    def __repr__(self):
        return "WeylElement(%r)" % (self.word,)


class PositiveRoot:
    """A positive root with its coordinates in every basis we need."""

    __slots__ = ("weight", "root_coords", "coroot", "height", "length_sq_half")

    def __init__(self, weight, root_coords, coroot, height, length_sq_half):
        self.weight = weight            # coords in the datum's weight basis
        self.root_coords = root_coords  # integer coords over the simple roots
        self.coroot = coroot            # coweight-basis vector of the coroot
        self.height = height
        self.length_sq_half = length_sq_half  # d_gamma = (gamma,gamma)/2

    def __repr__(self):
        return "PositiveRoot(%r)" % (self.weight,)


class RootDatum:
    """Root datum of one preset (or of a Levi subgroup of one).

    Everything is computed once in __init__ and never mutated, so instances
    are safe to share between threads.
    """

    def __init__(self, name, cartan, symmetrizers, lattice_kind, basis,
                 weight_dim=None, simple_indices=None, parent=None):
        self.name = name
        self.cartan = tuple(tuple(row) for row in cartan)
        self.symmetrizers = tuple(symmetrizers)
        self.lattice_kind = lattice_kind
        self.basis = basis  # "fundamental" or "root"
        self.rank = len(self.cartan)
        self.weight_dim = self.rank if weight_dim is None else weight_dim
        self.parent = parent
        # indices of this datum's simple roots inside the ambient preset
        self.simple_indices = tuple(range(self.rank)) if simple_indices is None \
            else tuple(simple_indices)

        if parent is None:
            self._validate_cartan()
            if basis == "fundamental":
                # alpha_j has pairing coords = column j of the Cartan matrix
                self.simple_roots = tuple(
                    tuple(self.cartan[i][j] for i in range(self.rank))
                    for j in range(self.rank))
                self.simple_coroots = tuple(
                    tuple(1 if i == j else 0 for i in range(self.rank))
                    for j in range(self.rank))
            else:
                self.simple_roots = tuple(
                    tuple(1 if i == j else 0 for i in range(self.rank))
                    for j in range(self.rank))
                self.simple_coroots = tuple(
                    tuple(self.cartan[i][j] for j in range(self.rank))
                    for i in range(self.rank))
        else:
            self.simple_roots = tuple(parent.simple_roots[i] for i in self.simple_indices)
            self.simple_coroots = tuple(parent.simple_coroots[i] for i in self.simple_indices)

        self._positive_roots = None
        self._weyl = None
        self._levi_cache = {}
        self._root_coords_cache = {}
        self._build_static()

    # -- construction helpers -------------------------------------------

    def _validate_cartan(self):
        a = self.cartan
        d = self.symmetrizers
        n = self.rank
        for i in range(n):
            if a[i][i] != 2:
                raise ConfigurationError("Cartan diagonal must be 2")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise ConfigurationError("Cartan off-diagonal must be <= 0")
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise ConfigurationError("symmetrizer does not symmetrize")
        # positive definiteness of the symmetrized matrix via leading minors
        sym = [[Fraction(d[i] * a[i][j]) for j in range(n)] for i in range(n)]
        for k in range(1, n + 1):
            if _det([row[:k] for row in sym[:k]]) <= 0:
                raise ConfigurationError("Cartan symmetrization not positive definite")

    def _build_static(self):
        roots = self.positive_roots()
        self.two_rho_coweight = tuple(
            sum(r.coroot[k] for r in roots) for k in range(self.weight_dim))
        self.rho = tuple(
            Fraction(sum(r.weight[k] for r in roots), 2) for k in range(self.weight_dim))
        self.two_rho = tuple(sum(r.weight[k] for r in roots) for k in range(self.weight_dim))
        self.rho_coweight = tuple(Fraction(c, 2) for c in self.two_rho_coweight)

    # -- basic pairing and reflection operations -------------------------

    def pair(self, weight, coweight):
        """<weight, coweight> via the dual bases."""
        return _dot(weight, coweight)

    def simple_pairing(self, weight, i):
        return _dot(weight, self.simple_coroots[i])

    def reflect(self, weight, i):
        c = self.simple_pairing(weight, i)
        return _vec_sub(weight, _vec_scale(c, self.simple_roots[i]))

    def coreflect(self, coweight, i):
        c = _dot(self.simple_roots[i], coweight)
        return _vec_sub(coweight, _vec_scale(c, self.simple_coroots[i]))

    def is_dominant(self, weight):
        return all(self.simple_pairing(weight, i) >= 0 for i in range(self.rank))

    def pair_2rho_check(self, weight):
        """<weight, 2*rho-check> = sum over positive coroots of the pairing."""
        return _dot(weight, self.two_rho_coweight)

    def height(self, vector):
        """<v, rho-check> for v in the root lattice; equals the root height."""
        coords = self.root_coordinates(vector)
        if coords is None:
            raise DomainError("vector not in the root lattice span")
        return sum(coords)

    # -- roots ------------------------------------------------------------

    def positive_roots(self):
        if self._positive_roots is not None:
            return self._positive_roots
        # full root set as the closure of the simple roots under reflections
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    w = self.reflect(v, i)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        positives = []
        for v in seen:
            coords = self.root_coordinates(v)
            if coords is None or any(c < 0 for c in coords):
                continue
            ht = sum(coords)
            d_gamma = self._length_sq_half(coords)
            coroot = self._coroot_vector(coords, d_gamma)
            positives.append(PositiveRoot(v, coords, coroot, ht, d_gamma))
        positives.sort(key=lambda r: (r.height, r.weight))
        self._positive_roots = tuple(positives)
        return self._positive_roots

    def root_coordinates(self, vector):
        """Integer coords of vector over the simple roots, or None."""
        vector = tuple(vector)
        if vector in self._root_coords_cache:
            return self._root_coords_cache[vector]
        sol = _solve_columns([list(a) for a in self.simple_roots], list(vector))
        out = None
        if sol is not None:
            coords = []
            for x in sol:
                if x.denominator != 1:
                    coords = None
                    break
                coords.append(int(x))
            if coords is not None:
                out = tuple(coords)
        if all(isinstance(c, int) for c in vector):
            self._root_coords_cache[vector] = out
        return out

    def dominant_representative(self, weight):
        """The dominant Weyl conjugate, by repeated simple reflections."""
        w = tuple(weight)
        while True:
            for i in range(self.rank):
                if self.simple_pairing(w, i) < 0:
                    w = self.reflect(w, i)
                    break
            else:
                return w

    def _length_sq_half(self, root_coords):
        # (gamma,gamma)/2 with B(alpha_i,alpha_j) = d_i * A[i][j]
        total = Fraction(0)
        for i, ci in enumerate(root_coords):
            if not ci:
                continue
            for j, cj in enumerate(root_coords):
                if cj:
                    total += ci * cj * self.symmetrizers[i] * self.cartan[i][j]
        half = total / 2
        return half

    def _coroot_vector(self, root_coords, d_gamma):
        vec = [Fraction(0)] * self.weight_dim
        for j, c in enumerate(root_coords):
            if not c:
                continue
            scale = Fraction(c * self.symmetrizers[j], 1) / d_gamma
            for k in range(self.weight_dim):
                vec[k] += scale * self.simple_coroots[j][k]
        out = []
        for x in vec:
            if x.denominator != 1:
                raise DomainError("coroot has non-integral coordinates")
            out.append(int(x))
        return tuple(out)

    def highest_root(self):
        return self.positive_roots()[-1]

    def inner_product_with_root_vector(self, weight, root_coords):
        """B(weight, v) for v = sum c_j alpha_j, via the symmetrizers."""
        total = Fraction(0)
        for j, c in enumerate(root_coords):
            if c:
                total += c * self.symmetrizers[j] * _dot(weight, self.simple_coroots[j])
        return total

    # -- Weyl group --------------------------------------------------------

    def weyl_elements(self):
        """All Weyl elements, sorted by (length, word); index 0 is identity."""
        if self._weyl is not None:
            return self._weyl
        n = self.weight_dim
        refl = []
        corefl = []
        for i in range(self.rank):
            rows = []
            corows = []
            for k in range(n):
                basis = tuple(1 if t == k else 0 for t in range(n))
                rows.append(self.reflect(basis, i))
                corows.append(self.coreflect(basis, i))
            # rows computed columnwise: transpose to get matrices
            refl.append(tuple(zip(*rows)))
            corefl.append(tuple(zip(*corows)))
        ident = WeylElement((), _identity(n), _identity(n))
        elements = {ident.matrix: ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    m = _mat_mul(refl[i], w.matrix)
                    if m not in elements:
                        cm = _mat_mul(corefl[i], w.comatrix)
                        el = WeylElement((i,) + w.word, m, cm)
                        elements[m] = el
                        nxt.append(el)
            frontier = nxt
        ordered = sorted(elements.values(), key=lambda w: (w.length, w.word))
        self._weyl = tuple(ordered)
        return self._weyl

    def weyl_order(self):
        return len(self.weyl_elements())

    def longest_element(self):
        return self.weyl_elements()[-1]

    def dominant_conjugate(self, weight):
        """Minimal-length w with w(weight) dominant, and that dominant weight."""
        weight = tuple(weight)
        for w in self.weyl_elements():
            image = w.apply(weight)
            if self.is_dominant(image):
                return w, image
        raise DomainError("no dominant conjugate found; invalid weight")

    def weyl_orbit(self, weight):
        return sorted({w.apply(tuple(weight)) for w in self.weyl_elements()})

    # -- coordinate conversions (the single place bases meet) -------------

    def pairing_coords(self, weight):
        """(<weight, alpha_i-check>)_i, i.e. fundamental-weight coordinates."""
        return tuple(self.simple_pairing(weight, i) for i in range(self.rank))

    def weight_from_pairing(self, coords):
        """Inverse of pairing_coords; DomainError if not in the lattice."""
        coords = list(coords)
        if len(coords) != self.rank:
            raise DomainError("expected %d coordinates" % self.rank)
        if self.basis == "fundamental":
            return tuple(int(c) for c in coords)
        # root basis: solve sum_j x_j <alpha_j, alpha_i-check> = c_i
        cols = [[self.cartan[i][j] for i in range(self.rank)] for j in range(self.rank)]
        sol = _solve_columns(cols, coords)
        if sol is None:
            raise DomainError("coordinates not consistent")
        out = []
        for x in sol:
            if x.denominator != 1:
                raise DomainError(
                    "weight not in the %s lattice (root-lattice membership "
                    "fails; for adjoint presets only root-lattice weights "
                    "exist, e.g. even labels for A1-adj)" % self.lattice_kind)
            out.append(int(x))
        return tuple(out)

    # -- Levi subdata ------------------------------------------------------

    def levi(self, subset):
        """Levi sub-datum spanned by the given simple-root indices."""
        subset = tuple(sorted(set(subset)))
        for i in subset:
            if not 0 <= i < self.rank:
                raise DomainError("invalid simple root index %r" % (i,))
        if subset in self._levi_cache:
            return self._levi_cache[subset]
        cartan = [[self.cartan[i][j] for j in subset] for i in subset]
        sym = [self.symmetrizers[i] for i in subset]
        name = "%s|levi%s" % (self.name, list(subset))
        datum = RootDatum(name, cartan, sym, "torus-factor", self.basis,
                          weight_dim=self.weight_dim, simple_indices=subset,
                          parent=self)
        self._levi_cache[subset] = datum
        return datum

    def __repr__(self):
        return "RootDatum(%r)" % (self.name,)


def _det(mat):
    """Determinant over Fraction, by elimination (small matrices only)."""
    m = [list(map(Fraction, row)) for row in mat]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def _solve_columns(columns, target):
    """Solve sum_j x_j * columns[j] = target exactly; None if inconsistent."""
    ncols = len(columns)
    nrows = len(target)
    aug = [[Fraction(columns[j][r]) for j in range(ncols)] + [Fraction(target[r])]
           for r in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [a * inv for a in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    # consistency
    for r in range(row, nrows):
        if aug[r][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = aug[r][ncols]
    return sol


_DATUM_CACHE = {}


def build_datum(preset):
    """Return the validated RootDatum for a preset identifier."""
    if preset in _DATUM_CACHE:
        return _DATUM_CACHE[preset]
    if preset not in _PRESETS:
        raise ConfigurationError(
            "unknown preset %r; supported: %s" % (preset, ", ".join(supported_presets())))
    cartan, sym, kind, n_pos = _PRESETS[preset]
    basis = "root" if kind == "adjoint" else "fundamental"
    datum = RootDatum(preset, cartan, sym, kind, basis)
    if len(datum.positive_roots()) != n_pos:
        raise ConfigurationError(
            "preset %s produced %d positive roots, expected %d"
            % (preset, len(datum.positive_roots()), n_pos))
    _DATUM_CACHE[preset] = datum
    return datum
