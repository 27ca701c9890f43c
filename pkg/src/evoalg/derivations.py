"""Derivation algebras of 2-dimensional algebras.

A matrix D is a derivation of the algebra with structure constants E when
E(D (x) I + I (x) D) - DE = 0. The condition is linear in D, so Der(E) is
the nullspace of an 8x4 exact linear system; `der_solve` builds that system
from the defining residual and reduces it by Gaussian elimination over the
field. The known answers for the canonical representatives (one regime for
characteristic 0 and >= 5, one each for characteristic 2 and 3) are exposed
by `der_closed_form` as a cross-check, never as the computation.

Bases are normalized to reduced row echelon form in the coordinate order
(x, y, z, t) with leading coefficient 1, so equal subspaces have equal bases.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import CanonicalKey, UnsupportedKey
from .fields import FieldCtx, MixedFields
from .msc import Mat2, Msc

DerivationMatrix = Mat2


def _der_residual_raw(E: Msc, De):
    """Raw 2x4 residual E(D (x) I + I (x) D) - DE for raw 2x2 entries De."""
    f = E.field
    (x, y), (z, t) = De
    add, mul, sub = f.add, f.mul, f.sub
    xt = add(x, t)
    x2 = add(x, x)
    t2 = add(t, t)
    zero = f.zero
    # D (x) I + I (x) D in the column order (1,1),(1,2),(2,1),(2,2)
    M = (
        (x2, y, y, zero),
        (z, xt, zero, y),
        (z, zero, xt, y),
        (zero, z, z, t2),
    )
    rows = E.rows
    out = []
    for i in (0, 1):
        Ei = rows[i]
        Di = De[i]
        row = []
        for j in range(4):
            lhs = f.zero
            for l in range(4):
                e = Ei[l]
                if e != zero:
                    lhs = add(lhs, mul(e, M[l][j]))
            rhs = add(mul(Di[0], rows[0][j]), mul(Di[1], rows[1][j]))
            row.append(sub(lhs, rhs))
        out.append(tuple(row))
    return tuple(out)


def der_check(E: Msc, D: Mat2) -> bool:
    """True iff D satisfies the derivation condition for E."""
    if D.field is not E.field:
        raise MixedFields("matrix and structure constants over different fields")
    z = E.field.zero
    res = _der_residual_raw(E, D.e)
    return all(v == z for row in res for v in row)


def lie_bracket(D1: Mat2, D2: Mat2) -> Mat2:
    """Commutator D1 D2 - D2 D1."""
    if D1.field is not D2.field:
        raise MixedFields("commutator of matrices over different fields")
    f = D1.field
    a = D1.mul(D2)
    b = D2.mul(D1)
    return Mat2(
        f,
        tuple(
            tuple(f.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.e, b.e)
        ),
    )


def _rref(rows, f: FieldCtx):
    """Reduced row echelon form with unit pivots; returns (rows, pivot cols),
    zero rows dropped."""
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    pr = 0
    for col in range(n):
        pivot = next((r for r in range(pr, m) if rows[r][col] != f.zero), None)
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        inv = f.inv(rows[pr][col])
        rows[pr] = [f.mul(inv, v) for v in rows[pr]]
        for r in range(m):
            if r != pr and rows[r][col] != f.zero:
                c = rows[r][col]
                rows[r] = [f.sub(v, f.mul(c, w)) for v, w in zip(rows[r], rows[pr])]
        pivots.append(col)
        pr += 1
        if pr == m:
            break
    return [tuple(r) for r in rows[:pr]], pivots


def _nullspace(rows, f: FieldCtx):
    """Canonical basis (RREF rows) of the nullspace of the system rows."""
    red, pivots = _rref(rows, f)
    n = len(rows[0])
    free = [c for c in range(n) if c not in pivots]
    vecs = []
    for fc in free:
        v = [f.zero] * n
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(red[i][fc])
        vecs.append(v)
    if not vecs:
        return []
    canon, _ = _rref(vecs, f)
    return canon


@dataclass(frozen=True)
class DerBasis:
    """Basis of a derivation algebra, rows in reduced echelon normal form."""

    field: FieldCtx
    basis: tuple  # of Mat2

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self):
        """The basis as flat (x, y, z, t) coordinate tuples."""
        return tuple((m.e[0][0], m.e[0][1], m.e[1][0], m.e[1][1]) for m in self.basis)


def _basis_from_vectors(f: FieldCtx, vecs) -> DerBasis:
    mats = tuple(Mat2(f, ((v[0], v[1]), (v[2], v[3]))) for v in vecs)
    return DerBasis(f, mats)


def der_solve(E: Msc) -> DerBasis:
    """Exact nullspace of the derivation condition for E."""
    f = E.field
    units = (
        ((f.one, f.zero), (f.zero, f.zero)),
        ((f.zero, f.one), (f.zero, f.zero)),
        ((f.zero, f.zero), (f.one, f.zero)),
        ((f.zero, f.zero), (f.zero, f.one)),
    )
    cols = [
        [v for row in _der_residual_raw(E, u) for v in row] for u in units
    ]
    system = [tuple(cols[k][r] for k in range(4)) for r in range(8)]
    return _basis_from_vectors(f, _nullspace(system, f))


# generating vectors (x, y, z, t) of the known derivation algebras, one table
# per characteristic regime; normalized through the same RREF as der_solve
_CLOSED = {
    "not23": {
        "E1": (),
        "E2b": (),
        "E20": ((0, 0, 1, -1),),
        "E3": (),
        "E4": (),
        "E5": ((-1, 1, 1, -1),),
        "E6": ((2, 0, 0, 1), (0, 1, 0, 0)),
    },
    "char2": {
        "E1": (),
        "E2b": (),
        "E20": ((0, 0, 1, -1),),
        "E3": (),
        "E4": ((0, 0, 0, 1),),
        "E5": ((1, -1, 1, -1),),
        "E6": ((0, 1, 0, 0), (0, 0, 0, 1)),
    },
    "char3": {
        "E1": (),
        "E2b": (),
        "E20": ((0, 0, 1, -1),),
        "E3": ((2, 0, 0, 1),),
        "E4": (),
        "E5": ((-1, 1, 1, -1),),
        "E6": ((2, 0, 0, 1), (0, 1, 0, 0)),
    },
}


def der_closed_form(key: CanonicalKey, field: FieldCtx) -> DerBasis:
    """The known derivation algebra of a canonical representative, by label
    and characteristic regime."""
    if field is not key.field:
        raise MixedFields("key and field disagree")
    if key.label == "E0":
        raise UnsupportedKey("the zero algebra has every matrix as a derivation")
    regime = (
        "char2" if field.char == 2 else "char3" if field.char == 3 else "not23"
    )
    label = key.label
    if label == "E2":
        label = "E20" if key.params[0].is_zero else "E2b"
    gens = _CLOSED[regime][label]
    vecs = [tuple(field.coerce(c) for c in g) for g in gens]
    canon, _ = _rref(vecs, field) if vecs else ([], [])
    return _basis_from_vectors(field, canon)
