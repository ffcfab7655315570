"""Characters of the small-rank groups: weight multiplicities, tensor
product decomposition and branching to Levi subgroups.

A character is a dict mapping weight tuples to integer multiplicities.
Decompositions are dicts mapping dominant weight tuples to nonnegative
multiplicities.  Tensor products and branching both go through the same
peel-off loop on characters: multiply (or restrict), then repeatedly strip
the character of the largest remaining dominant weight.
"""

from __future__ import annotations

from fractions import Fraction

from . import cache
from .errors import DomainError
from .roots import RootDatum, _vec_add, _vec_sub, _vec_scale

# per-datum memo tables; pure caches (results identical with or without)
_MULT_CACHE = {}
_CHAR_CACHE = {}


def _require_dominant(datum, weight):
    if not datum.is_dominant(weight):
        raise DomainError("weight %r is not dominant for %s" % (weight, datum.name))


def weyl_dimension(datum, lam):
    """dim V_lam by the product formula over positive roots."""
    _require_dominant(datum, lam)
    lam_rho = tuple(Fraction(a) + b for a, b in zip(lam, datum.rho))
    num = Fraction(1)
    den = Fraction(1)
    for root in datum.positive_roots():
        num *= sum(a * b for a, b in zip(lam_rho, root.coroot))
        den *= sum(a * b for a, b in zip(datum.rho, root.coroot))
    dim = num / den
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def _dominant_weights_below(datum, lam):
    """All dominant mu with lam - mu a nonnegative root combination."""
    found = set()
    frontier = {tuple(lam)}
    while frontier:
        nxt = set()
        for mu in frontier:
            if mu in found:
                continue
            found.add(mu)
            for root in datum.positive_roots():
                nu = _vec_sub(mu, root.weight)
                dom = datum.dominant_representative(nu)
                coords = datum.root_coordinates(_vec_sub(lam, dom))
                if coords is not None and all(c >= 0 for c in coords) and dom not in found:
                    nxt.add(dom)
        frontier = nxt
    return found


def weight_multiplicity(datum, lam, mu):
    """dim of the mu weight space of V_lam, by the Freudenthal recursion."""
    _require_dominant(datum, lam)
    lam = tuple(lam)
    mu = datum.dominant_representative(tuple(mu))
    return _mult_dominant(datum, lam, mu)


def _mult_dominant(datum, lam, mu):
    key = (datum.name, lam, mu)
    if key in _MULT_CACHE:
        return _MULT_CACHE[key]
    if mu == lam:
        _MULT_CACHE[key] = 1
        return 1
    diff = datum.root_coordinates(_vec_sub(lam, mu))
    if diff is None or any(c < 0 for c in diff):
        _MULT_CACHE[key] = 0
        return 0
    # denominator |lam+rho|^2 - |mu+rho|^2 = B(lam+mu+2rho, lam-mu)
    lam_mu_2rho = tuple(Fraction(a + b) + 2 * r
                        for a, b, r in zip(lam, mu, datum.rho))
    denom = datum.inner_product_with_root_vector(lam_mu_2rho, diff)
    if denom == 0:
        _MULT_CACHE[key] = 0
        return 0
    total = Fraction(0)
    for root in datum.positive_roots():
        # lam - (mu + k*root) stays a nonnegative root combination
        remaining = diff
        nu = mu
        while True:
            remaining = tuple(a - b for a, b in zip(remaining, root.root_coords))
            if any(c < 0 for c in remaining):
                break
            nu = _vec_add(nu, root.weight)
            m = _mult_dominant(datum, lam, datum.dominant_representative(nu))
            if m:
                total += m * datum.inner_product_with_root_vector(nu, root.root_coords)
    value = 2 * total / denom
    assert value.denominator == 1
    value = int(value)
    _MULT_CACHE[key] = value
    return value


def irreducible_character(datum, lam):
    """Full weight multiset of V_lam as a dict weight -> multiplicity."""
    _require_dominant(datum, lam)
    lam = tuple(lam)
    key = (datum.name, lam)
    if key in _CHAR_CACHE:
        return dict(_CHAR_CACHE[key])
    request = {"op": "irreducible_character", "preset": datum.name,
               "weight": list(lam)}
    stored = cache.fetch(request)
    if stored is not None:
        char = {tuple(w): m for w, m in stored}
    else:
        char = {}
        for dom in _dominant_weights_below(datum, lam):
            m = _mult_dominant(datum, lam, dom)
            if not m:
                continue
            for w in datum.weyl_orbit(dom):
                char[w] = m
        cache.store(request, sorted([list(w), m] for w, m in char.items()))
    assert sum(char.values()) == weyl_dimension(datum, lam)
    _CHAR_CACHE[key] = dict(char)
    return char


def character_dimension(char):
    return sum(char.values())


def multiply_characters(a, b):
    out = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            w = _vec_add(wa, wb)
            out[w] = out.get(w, 0) + ma * mb
    return {w: m for w, m in out.items() if m}


def _peel_key(datum, weight):
    # graded lexicographic: total pairing with 2rho-check, then coords
    return (datum.pair_2rho_check(weight), weight)


def decompose_character(datum, char):
    """Write a character as a sum of irreducibles of `datum`.

    Repeatedly strips the largest remaining weight, which must be dominant
    when the input really is a character of a representation.
    """
    remaining = {w: m for w, m in char.items() if m}
    out = {}
    while remaining:
        top = max(remaining, key=lambda w: _peel_key(datum, w))
        mult = remaining[top]
        if not datum.is_dominant(top) or mult < 0:
            raise DomainError("input is not the character of a representation")
        out[top] = out.get(top, 0) + mult
        for w, m in irreducible_character(datum, top).items():
            s = remaining.get(w, 0) - mult * m
            if s:
                remaining[w] = s
            else:
                remaining.pop(w, None)
    return out


def tensor_decompose(datum, lam, mu):
    """Multiplicities of each V_nu inside V_lam tensor V_mu."""
    _require_dominant(datum, lam)
    _require_dominant(datum, mu)
    prod = multiply_characters(irreducible_character(datum, lam),
                               irreducible_character(datum, mu))
    out = decompose_character(datum, prod)
    total = sum(m * weyl_dimension(datum, nu) for nu, m in out.items())
    assert total == weyl_dimension(datum, lam) * weyl_dimension(datum, mu)
    return out


def dual_weight(datum, lam):
    """Highest weight of the dual module: -w0(lam)."""
    _require_dominant(datum, lam)
    w0 = datum.longest_element()
    return tuple(-c for c in w0.apply(tuple(lam)))


def restrict_to_levi(datum, subset, lam):
    """Decompose V_lam over the Levi spanned by the given simple indices."""
    _require_dominant(datum, lam)
    levi = datum.levi(subset)
    char = irreducible_character(datum, lam)
    out = decompose_character(levi, char)
    total = sum(m * weyl_dimension(levi, nu) for nu, m in out.items())
    assert total == weyl_dimension(datum, lam)
    return out


def tensor_decompose_on(datum, entries_a, entries_b):
    """Tensor product of two decompositions, summed with multiplicities."""
    out = {}
    for la, ma in entries_a.items():
        for lb, mb in entries_b.items():
            for nu, m in tensor_decompose(datum, la, lb).items():
                out[nu] = out.get(nu, 0) + ma * mb * m
    return {k: v for k, v in out.items() if v}


def restrict_decomposition(datum, subset, entries):
    """Apply restrict_to_levi to a whole decomposition list."""
    out = {}
    for lam, mult in entries.items():
        for nu, m in restrict_to_levi(datum, subset, lam).items():
            out[nu] = out.get(nu, 0) + mult * m
    return {k: v for k, v in out.items() if v}


def levi_degree_shift(datum, subset, chi):
    """<chi, 2rho_G-check - 2rho_L-check> for chi central for the Levi."""
    levi = datum.levi(subset)
    chi = tuple(chi)
    for root in levi.positive_roots():
        if datum.pair(chi, root.coroot) != 0:
            raise DomainError(
                "weight %r is not central for the Levi %r" % (chi, list(subset)))
    return datum.pair_2rho_check(chi) - levi.pair_2rho_check(chi)


def is_representation_character(datum, char):
    """Check W-invariance of a weight multiset (the character predicate)."""
    for w, m in char.items():
        for elt in datum.weyl_elements():
            if char.get(elt.apply(w), 0) != m:
                return False
    return True


def weyl_character_oracle(datum, lam):
    """Character of V_lam straight from the Weyl character formula.

    Independent of the Freudenthal path: expands the alternating sums
    numerator / denominator by long division on group-ring elements.  Slow;
    used as a test oracle only.
    """
    _require_dominant(datum, lam)
    lam = tuple(lam)
    # exponents are shifted by rho so that all of them lie in the lattice
    lam_rho = tuple(Fraction(a) + b for a, b in zip(lam, datum.rho))
    rho_v = datum.rho

    def alt(vec):
        out = {}
        for w in datum.weyl_elements():
            img = w.apply(vec)
            key = tuple(img[k] - rho_v[k] for k in range(datum.weight_dim))
            ikey = []
            for a in key:
                a = Fraction(a)
                assert a.denominator == 1
                ikey.append(int(a))
            ikey = tuple(ikey)
            out[ikey] = out.get(ikey, 0) + w.sign
        return {k: v for k, v in out.items() if v}

    numerator = alt(lam_rho)
    denominator = alt(rho_v)
    # divide: denominator has leading (graded-lex maximal) term e^0 with
    # coefficient 1, so plain long division terminates
    key = lambda w: _peel_key(datum, w)
    lead = max(denominator, key=key)
    assert lead == tuple([0] * datum.weight_dim) and denominator[lead] == 1
    quotient = {}
    work = dict(numerator)
    while work:
        top = max(work, key=key)
        c = work[top]
        quotient[top] = quotient.get(top, 0) + c
        for t, m in denominator.items():
            w = _vec_add(top, _vec_sub(t, lead))
            s = work.get(w, 0) - c * m
            if s:
                work[w] = s
            else:
                work.pop(w, None)
    return {k: v for k, v in quotient.items() if v}
