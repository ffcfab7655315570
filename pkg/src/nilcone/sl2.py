"""Iwahori-orbit combinatorics on the rank-one affine Grassmannian.

Orbits are labelled by even integers (the weight lattice of the adjoint
rank-one group is identified with 2Z, matching twice a fundamental weight
with 2; this display convention is local to this module).  The module
generates:

* dimensions of orbits;
* composition series of standard, costandard and projective objects;
* the convolution table of simple classes, by a closed form and by the
  descent recursion through the label -2, cross-checked;
* the terms of the projective resolution of the skyscraper class;
* dimension profiles of the Hom complexes between that resolution and its
  convolutions with simple spherical classes.

Grothendieck-group reasoning is enough for every output: convolution with
a spherical simple class is exact, so composition multiplicities of a
convolution are the multiplicity-weighted sums of the simple convolution
classes.  Everything is generated; the boxed tables live only in test
golden files.
"""

from __future__ import annotations

from .errors import DomainError
from .roots import build_datum
from .characters import tensor_decompose


def _require_even(n):
    if n % 2:
        raise DomainError("orbit labels are even integers, got %r" % (n,))


def orbit_dim(n):
    """Dimension of the Iwahori orbit with label n."""
    _require_even(n)
    return n if n >= 0 else -n - 1


class FlagTable:
    """Layers (top to bottom) of one standard/costandard/projective object."""

    __slots__ = ("kind", "label", "layers", "delta_flag")

    def __init__(self, kind, label, layers, delta_flag=None):
        self.kind = kind
        self.label = label
        self.layers = [dict(layer) for layer in layers]
        self.delta_flag = list(delta_flag) if delta_flag is not None else None

    def jh_multiset(self):
        out = {}
        for layer in self.layers:
            for n, m in layer.items():
                out[n] = out.get(n, 0) + m
        return out

    def rows(self):
        """(object, label, layer index, simple label, multiplicity) rows."""
        out = []
        for li, layer in enumerate(self.layers):
            for n in sorted(layer):
                out.append((self.kind, self.label, li, n, layer[n]))
        return out

    def __eq__(self, other):
        return (self.kind == other.kind and self.label == other.label
                and self.layers == other.layers
                and self.delta_flag == other.delta_flag)

    def __repr__(self):
        return "FlagTable(%r, %r, %r)" % (self.kind, self.label, self.layers)


def standard_class(n):
    _require_even(n)
    if n == 0:
        return FlagTable("standard", 0, [{0: 1}])
    if n > 0:
        return FlagTable("standard", n, [{n: 1}, {-n: 1}])
    return FlagTable("standard", n, [{n: 1}, {-n - 2: 1}])


def costandard_class(n):
    _require_even(n)
    if n == 0:
        return FlagTable("costandard", 0, [{0: 1}])
    if n > 0:
        return FlagTable("costandard", n, [{-n: 1}, {n: 1}])
    return FlagTable("costandard", n, [{-n - 2: 1}, {n: 1}])


def projective_class(n):
    _require_even(n)
    if n >= 0:
        flag = [n, -n - 2]
    else:
        flag = [n, -n]
    layers = [dict(), dict(), dict()]
    top = standard_class(flag[0])
    bottom = standard_class(flag[1])
    layers[0] = dict(top.layers[0])
    middle = {}
    for src in (top.layers[1:], bottom.layers[:1]):
        for layer in src:
            for k, v in layer.items():
                middle[k] = middle.get(k, 0) + v
    layers[1] = middle
    layers[2] = dict(bottom.layers[1]) if len(bottom.layers) > 1 else {}
    layers = [layer for layer in layers if layer]
    return FlagTable("projective", n, layers, delta_flag=flag)


def simple_in_standard(m, a):
    """[standard_m : simple_a]."""
    return standard_class(m).jh_multiset().get(a, 0)


def simple_in_costandard(m, a):
    return costandard_class(m).jh_multiset().get(a, 0)


def standard_in_projective(n, m):
    """[P_n : standard_m], read off the standard flag."""
    return projective_class(n).delta_flag.count(m)


def hom_dim_proj(a, b):
    """dim Hom(P_a, P_b) = [P_b : simple_a]."""
    _require_even(a)
    _require_even(b)
    return projective_class(b).jh_multiset().get(a, 0)


# -- convolution -----------------------------------------------------------------

def convolve_ic(m, k):
    """Class of IC_m * IC_k (k spherical, i.e. k >= 0), closed form."""
    _require_even(m)
    _require_even(k)
    if k < 0:
        raise DomainError("the right factor must have a nonnegative label")
    if m >= 0:
        lo, hi = abs(m - k), m + k
    else:
        n = -m
        if n > k:
            lo, hi = -n - k, -n + k
        else:
            lo, hi = -n - k, n - k - 2
    return {j: 1 for j in range(lo, hi + 1, 2)}


def convolve_class(cls, k):
    """Extend convolve_ic linearly to a nonnegative combination of simples."""
    out = {}
    for m, mult in cls.items():
        for j, c in convolve_ic(m, k).items():
            out[j] = out.get(j, 0) + mult * c
    return {j: v for j, v in out.items() if v}


_SPHERICAL_DATUM = None


def _spherical_convolution(n, k):
    """IC_n * IC_k for n, k >= 0, from the rank-one adjoint tensor ring."""
    global _SPHERICAL_DATUM
    if _SPHERICAL_DATUM is None:
        _SPHERICAL_DATUM = build_datum("A1-adj")
    dec = tensor_decompose(_SPHERICAL_DATUM, (n // 2,), (k // 2,))
    return {2 * w[0]: m for w, m in dec.items()}


_RECURSIVE_CACHE = {}


def convolve_ic_recursive(m, k):
    """IC_m * IC_k by the descent recursion through label -2.

    Base cases: nonnegative m from the spherical tensor ring, and m = -2
    directly.  For m = -n-2 < -2 the class is obtained by convolving the
    two-step class of label -2 against IC_n * IC_k and removing IC_{-n} * IC_k.
    """
    _require_even(m)
    _require_even(k)
    if k < 0:
        raise DomainError("the right factor must have a nonnegative label")
    if m >= 0:
        return _spherical_convolution(m, k)
    if m == -2:
        # two-step base case: produced by the rank-one resolution geometry
        return {-2: 1} if k == 0 else {-k - 2: 1, -k: 1}
    key = (m, k)
    if key in _RECURSIVE_CACHE:
        return dict(_RECURSIVE_CACHE[key])
    n = -m - 2
    left = {}
    for j, c in convolve_ic_recursive(n, k).items():
        for t, c2 in convolve_ic_recursive(-2, abs(j)).items():
            left[t] = left.get(t, 0) + c * c2
    for j, c in convolve_ic_recursive(-n, k).items():
        s = left.get(j, 0) - c
        if s < 0:
            raise AssertionError("recursion produced a negative multiplicity")
        if s:
            left[j] = s
        else:
            left.pop(j, None)
    _RECURSIVE_CACHE[key] = dict(left)
    return left


# -- projective resolution and Hom complexes --------------------------------------

def resolution_term(j):
    """Label of the degree-j term of the projective resolution (j <= 0)."""
    if j > 0:
        raise DomainError("resolution indices are nonpositive")
    if j == 0:
        return 0
    m = (-j + 1) // 2
    return 2 * m if (-j) % 2 == 0 else -2 * m


def hom_complex_profile(k, window):
    """Hom dimensions from the resolution into its convolution with IC_k.

    For each resolution index i in the window, maps complex degree n to
    dim Hom(P^i, P^(i+n) * IC_k), through composition multiplicities.
    """
    _require_even(k)
    if k < 0:
        raise DomainError("spherical label must be nonnegative")
    lo, hi = window
    out = {}
    for i in range(min(hi, 0), lo - 1, -1):
        out[i] = _index_profile(k, i)
    return out


def _index_profile(k, i):
    # support is confined to |n| <= k + 1; scan with a margin
    a = resolution_term(i)
    profile = {}
    for n in range(-(k + 3), min(k + 3, -i) + 1):
        j = i + n
        if j > 0:
            continue
        cls = convolve_class(projective_class(resolution_term(j)).jh_multiset(), k)
        dim = cls.get(a, 0)
        if dim:
            profile[n] = dim
    return profile


def hom_complex_pattern(k, probe_depth=None):
    """(eventual per-index profile, exceptional prefix profiles).

    Profiles of deep resolution indices stabilize; the prefix collects the
    indices that differ from the stable pattern.
    """
    _require_even(k)
    if probe_depth is None:
        probe_depth = k // 2 + 6
    profiles = {i: _index_profile(k, i) for i in range(0, -probe_depth - 1, -1)}
    deepest = profiles[-probe_depth]
    assert profiles[-probe_depth + 1] == deepest, \
        "profiles did not stabilize within the probe depth"
    exceptional = {}
    for i in range(0, -probe_depth - 1, -1):
        if profiles[i] != deepest:
            exceptional[i] = profiles[i]
        elif all(profiles[t] == deepest for t in range(i, -probe_depth - 1, -1)):
            break
    return deepest, exceptional


def euler_characteristic(profile):
    return sum(d if n % 2 == 0 else -d for n, d in profile.items())


def table_rows(kinds=("standard", "costandard", "projective"), labels=range(-8, 10, 2)):
    """TSV-ready rows for the requested objects."""
    builders = {"standard": standard_class, "costandard": costandard_class,
                "projective": projective_class}
    rows = []
    for kind in kinds:
        for n in labels:
            rows.extend(builders[kind](n).rows())
    return rows
