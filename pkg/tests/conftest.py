from fractions import Fraction

from hypothesis import strategies as st

from evoalg import GF, BasisChange, EvolutionMsc, Fel, Mat2, Msc

F2 = GF(2)
F3 = GF(3)
F4 = GF(2, 2, [1, 1, 1])
F5 = GF(5)
F7 = GF(7)
F9 = GF(3, 2)

SMALL_FINITE = [F2, F3, F4, F5, F7, F9]


def fel_st(field, nonzero=False):
    if field.order is None:
        s = st.fractions(min_value=-20, max_value=20, max_denominator=12)
        if nonzero:
            s = s.filter(lambda x: x != 0)
        return s.map(lambda x: Fel(field, Fraction(x)))
    lo = 1 if nonzero else 0
    return st.integers(lo, field.order - 1).map(lambda i: Fel(field, i))


def evolution_st(field):
    return st.tuples(*(fel_st(field) for _ in range(4))).map(
        lambda t: EvolutionMsc(field, tuple(x.raw for x in t))
    )


def msc_st(field):
    return st.tuples(*(fel_st(field) for _ in range(8))).map(
        lambda t: Msc(
            field,
            (
                tuple(x.raw for x in t[:4]),
                tuple(x.raw for x in t[4:]),
            ),
        )
    )


def mat2_st(field):
    return st.tuples(*(fel_st(field) for _ in range(4))).map(
        lambda t: Mat2(
            field, ((t[0].raw, t[1].raw), (t[2].raw, t[3].raw))
        )
    )


def invertible_mat2_st(field):
    return mat2_st(field).filter(lambda m: not m.det().is_zero)


def basis_change_st(field):
    return invertible_mat2_st(field).map(BasisChange)
