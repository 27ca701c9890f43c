"""Brute-force ground truth over small finite fields.

Everything here goes through the defining conditions directly: GL(2,q) is
enumerated, isomorphisms are found by trying every invertible change of
basis, automorphisms and derivations by scanning all matrices. The census
partitions the whole evolution subset of a field's structure-constant space
into orbits and cross-checks the classifier, the closed-form automorphism
groups and the derivation solver against the scans.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from multiprocessing import get_context

from .autgroup import aut_check, aut_closed_form, aut_instantiate
from .classify import CanonicalKey, canonical_msc, classify
from .derivations import der_check, der_solve, der_closed_form
from .fields import Fel, FieldCtx, InfiniteField, MixedFields, embed, field_make
from .msc import (
    BasisChange,
    EvolutionMsc,
    Mat2,
    Msc,
    _kron4_raw,
    _mul_2x4_raw,
    _mul_rows_kron_raw,
    transform,
)

_GL_MAX_ORDER = 32  # enumeration scans q^4 matrices
_CENSUS_MAX_ORDER = 16


class BudgetExceeded(ValueError):
    """The requested brute-force computation is beyond desk scale."""


def gl2_enumerate(field: FieldCtx):
    """All invertible 2x2 matrices as basis changes, the enumerated entries
    being those of g^-1, in lexicographic canonical-order on the rows."""
    if field.order is None:
        raise InfiniteField("cannot enumerate GL(2) over an infinite field")
    if field.order > _GL_MAX_ORDER:
        raise BudgetExceeded(f"GL(2, {field.order}) enumeration refused")
    f = field
    q = f.order
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if f.sub(f.mul(a, d), f.mul(b, c)) != f.zero:
                        yield BasisChange(Mat2(f, ((a, b), (c, d))))


def brute_iso(E: Msc, F: Msc, K: FieldCtx):
    """First basis change over K carrying E onto F, or None."""
    if E.field is not F.field:
        raise MixedFields("both algebras must share a base field")
    emb = embed(E.field, K)
    ek = Msc(K, tuple(tuple(emb.raw(v) for v in row) for row in E.rows))
    fk_rows = tuple(tuple(emb.raw(v) for v in row) for row in F.rows)
    for change in gl2_enumerate(K):
        Kr = _kron4_raw(K, change.ginv.e)
        X = _mul_rows_kron_raw(K, ek.rows, Kr)
        if _mul_2x4_raw(K, change.g.e, X) == fk_rows:
            return change
    return None


def brute_aut(E: Msc, field: FieldCtx) -> list:
    """All g in GL(2, field) with gE = E(g (x) g), in enumeration order."""
    if E.field is not field:
        raise MixedFields("structure constants must lie in the scanned field")
    if field.order is None:
        raise InfiniteField("cannot scan an infinite field")
    if field.order > _GL_MAX_ORDER:
        raise BudgetExceeded(f"Aut scan over {field} refused")
    out = []
    f = field
    q = f.order
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if f.sub(f.mul(a, d), f.mul(b, c)) == f.zero:
                        continue
                    g = Mat2(f, ((a, b), (c, d)))
                    if aut_check(E, g):
                        out.append(g)
    return out


def brute_der(E: Msc, field: FieldCtx) -> list:
    """All matrices (invertible or not) satisfying the derivation condition."""
    if E.field is not field:
        raise MixedFields("structure constants must lie in the scanned field")
    if field.order is None:
        raise InfiniteField("cannot scan an infinite field")
    if field.order > _GL_MAX_ORDER:
        raise BudgetExceeded(f"derivation scan over {field} refused")
    out = []
    f = field
    q = f.order
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    D = Mat2(f, ((a, b), (c, d)))
                    if der_check(E, D):
                        out.append(D)
    return out


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRecord:
    key: CanonicalKey
    orbit_representatives: tuple  # EvolutionMsc
    orbit_size_in_evolution_subset: int
    brute_aut_order: int
    der_dim: int


@dataclass(frozen=True)
class CensusReport:
    field: FieldCtx
    gl2_order: int
    total_evolution_msc: int
    max_witness_ext: int
    records: tuple  # CensusRecord, sorted by key
    flags: dict  # keys_vs_orbits_ok, witnesses_ok, aut_closed_form_ok, der_closed_form_ok

    @property
    def ok(self) -> bool:
        return all(self.flags.values())


def _abcd_of_index(q: int, idx: int):
    out = []
    for _ in range(4):
        idx, r = divmod(idx, q)
        out.append(r)
    return tuple(out)


def _verify_witness(E: EvolutionMsc, res, max_ext: int):
    """Witness transported onto the canonical representative, within the
    allowed extension degree. Returns (ok, extension degree)."""
    F = E.field
    if res.witness is None:
        return False, None
    K = res.witness_field
    ext_deg = K.k // F.k
    if ext_deg > max_ext:
        return False, ext_deg
    if K is F:
        return transform(E, res.witness) == canonical_msc(res.key), ext_deg
    emb = embed(F, K)
    ek = EvolutionMsc(K, tuple(emb.raw(v) for v in E.abcd))
    key_k = CanonicalKey(
        K, res.key.label, tuple(Fel(K, emb.raw(p.raw)) for p in res.key.params)
    )
    return transform(ek, res.witness) == canonical_msc(key_k), ext_deg


def _phase1_chunk(desc: dict, lo: int, hi: int, max_ext: int):
    """Classify and witness-check the evolution algebras with indices
    [lo, hi); returns plain picklable tuples."""
    F = field_make(desc)
    q = F.order
    out = []
    for idx in range(lo, hi):
        abcd = _abcd_of_index(q, idx)
        E = EvolutionMsc(F, abcd)
        res = classify(E)
        ok, _ = _verify_witness(E, res, max_ext)
        out.append((res.key.label, tuple(p.raw for p in res.key.params), ok))
    return out


def census(field: FieldCtx, max_witness_ext: int = 6, jobs: int = 1) -> CensusReport:
    """Classify every evolution algebra over a small finite field and check
    the classifier, automorphism and derivation machinery against brute force.

    Flags:
      keys_vs_orbits_ok   every GL(2,q)-orbit has a constant key
      witnesses_ok        every witness lands exactly on its canonical form
                          within the allowed extension degree
      aut_closed_form_ok  instantiated closed forms match the Aut scans
      der_closed_form_ok  solver, closed forms and derivation scans agree

    The result is deterministic and independent of `jobs`.
    """
    if field.order is None:
        raise InfiniteField("census needs a finite field")
    q = field.order
    if q > _CENSUS_MAX_ORDER:
        raise BudgetExceeded(f"census over {field} refused (order {q} > {_CENSUS_MAX_ORDER})")
    F = field
    total = q**4
    desc = F.descriptor()

    # phase 1: classify + witness verification, partitionable over workers
    if jobs > 1:
        bounds = [(total * w // jobs, total * (w + 1) // jobs) for w in range(jobs)]
        with get_context("fork").Pool(jobs) as pool:
            chunks = pool.starmap(
                _phase1_chunk, [(desc, lo, hi, max_witness_ext) for lo, hi in bounds]
            )
        raw_results = [r for chunk in chunks for r in chunk]
    else:
        raw_results = _phase1_chunk(desc, 0, total, max_witness_ext)

    keys = []
    witnesses_ok = True
    for label, params, ok in raw_results:
        keys.append(CanonicalKey(F, label, tuple(Fel(F, p) for p in params)))
        witnesses_ok = witnesses_ok and ok

    # phase 2: orbit partition of the evolution subset under the full group
    gl_pairs = []
    for change in gl2_enumerate(F):
        gl_pairs.append((change.g.e, _kron4_raw(F, change.ginv.e)))
    gl2_order = len(gl_pairs)

    z = F.zero
    assigned: dict[tuple, int] = {}
    orbit_reps: list[tuple] = []
    orbit_sizes: list[int] = []
    keys_vs_orbits_ok = True
    key_by_abcd = {}
    for idx in range(total):
        key_by_abcd[_abcd_of_index(q, idx)] = keys[idx]
    for idx in range(total):
        abcd = _abcd_of_index(q, idx)
        if abcd in assigned:
            continue
        oid = len(orbit_reps)
        rows = ((abcd[0], z, z, abcd[1]), (abcd[2], z, z, abcd[3]))
        members = set()
        for g_e, kr in gl_pairs:
            X = _mul_rows_kron_raw(F, rows, kr)
            (r0, r1) = _mul_2x4_raw(F, g_e, X)
            if r0[1] == z and r0[2] == z and r1[1] == z and r1[2] == z:
                members.add((r0[0], r0[3], r1[0], r1[3]))
        ref_key = key_by_abcd[abcd]
        for m in members:
            assigned[m] = oid
            if key_by_abcd[m] != ref_key:
                keys_vs_orbits_ok = False
        orbit_reps.append(abcd)
        orbit_sizes.append(len(members))
    if sum(orbit_sizes) != total or len(assigned) != total:
        keys_vs_orbits_ok = False

    # phase 3: per-key aggregation and oracle comparisons
    by_key: dict[CanonicalKey, dict] = {}
    for oid, rep in enumerate(orbit_reps):
        k = key_by_abcd[rep]
        slot = by_key.setdefault(k, {"reps": [], "size": 0})
        slot["reps"].append(rep)
        slot["size"] += orbit_sizes[oid]

    aut_ok = True
    der_ok = True
    records = []
    for k in sorted(by_key, key=lambda kk: kk.sort_key()):
        C = canonical_msc(k)
        aut_scan = brute_aut(C, F)
        solved = der_solve(C)
        der_scan = brute_der(C, F)
        span = _span_matrices(F, solved)
        if set(der_scan) != span:
            der_ok = False
        if k.label != "E0":
            inst = aut_instantiate(aut_closed_form(k, F), F)
            if set(inst) != set(aut_scan):
                aut_ok = False
            if der_closed_form(k, F) != solved:
                der_ok = False
        records.append(
            CensusRecord(
                key=k,
                orbit_representatives=tuple(
                    EvolutionMsc(F, rep) for rep in by_key[k]["reps"]
                ),
                orbit_size_in_evolution_subset=by_key[k]["size"],
                brute_aut_order=len(aut_scan),
                der_dim=solved.dim,
            )
        )

    flags = {
        "keys_vs_orbits_ok": keys_vs_orbits_ok,
        "witnesses_ok": witnesses_ok,
        "aut_closed_form_ok": aut_ok,
        "der_closed_form_ok": der_ok,
    }
    return CensusReport(
        field=F,
        gl2_order=gl2_order,
        total_evolution_msc=total,
        max_witness_ext=max_witness_ext,
        records=tuple(records),
        flags=flags,
    )


def _span_matrices(f: FieldCtx, basis) -> set:
    """All field-linear combinations of a derivation basis, as matrices."""
    vecs = basis.vectors()
    if not vecs:
        return {Mat2(f, ((f.zero, f.zero), (f.zero, f.zero)))}
    out = set()
    for coeffs in itertools.product(range(f.order), repeat=len(vecs)):
        acc = [f.zero] * 4
        for c, v in zip(coeffs, vecs):
            if c != f.zero:
                for i in range(4):
                    acc[i] = f.add(acc[i], f.mul(c, v[i]))
        out.add(Mat2(f, ((acc[0], acc[1]), (acc[2], acc[3]))))
    return out
