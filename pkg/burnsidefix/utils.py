"""
utils.py
========

Exact arithmetic helpers shared by the ``burnsidefix`` modules. No floating
point value ever enters these routines: matrices are
:class:`sympy.ImmutableMatrix` objects with ``Rational`` entries, scalars are
:class:`fractions.Fraction`, and integer tables are ``numpy`` arrays of
``dtype=object`` holding Python integers.

**Functions**:

1. **`parse_fraction(value)`**
   - Accepts integers and ``"p/q"`` strings, rejects floats and zero
     denominators.

2. **`exact_matrix(rows, size=None)`** / **`matrix_to_strings(m)`**
   - Convert between nested lists of fractions (or fraction strings) and
     exact sympy matrices.

3. **`determinant(m)`** / **`det_sign(m)`**
   - Exact determinant by clearing denominators and running fraction-free
     Bareiss elimination over the integers. The empty matrix has
     determinant 1.

4. **`column_basis(m)`** / **`restricted_det_sign(m, basis)`**
   - A basis of the column space, and the determinant sign of ``m``
     restricted to an invariant subspace given by a basis.

5. **`integer_array(rows, shape)`**
   - Build an exact integer ``numpy`` array with an explicit shape, so that
     empty chain groups keep their dimensions.
"""

from fractions import Fraction
from math import lcm
from numbers import Integral

import numpy as np
from sympy import ImmutableMatrix, Rational


def parse_fraction(value) -> Fraction:
    """
    Parse one exact rational entry.

    :param value: An integer, a :class:`~fractions.Fraction`, a sympy
        ``Rational`` or a string like ``"-3/4"``.
    :return: The value as a ``Fraction``.
    :raises ValueError: For floats, malformed strings and zero denominators.
    """
    if isinstance(value, bool):
        raise ValueError(f"Boolean {value!r} is not a number.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise ValueError(f"Zero denominator in '{value}'.") from None
        except ValueError:
            raise ValueError(f"'{value}' is not an exact fraction.") from None
    raise ValueError(f"Unsupported entry {value!r}; use an integer or a 'p/q' string.")


def to_rational(value) -> Rational:
    f = parse_fraction(value)
    return Rational(f.numerator, f.denominator)


def to_fraction(value) -> Fraction:
    return parse_fraction(value)


def exact_matrix(rows, size: int | None = None) -> ImmutableMatrix:
    """
    Build a square or rectangular exact matrix from nested rows.

    :param rows: Row-major nested sequence of exact entries.
    :param size: Expected dimension of a square matrix; required to build the
        ``0 x 0`` matrix from an empty list.
    :raises ValueError: On ragged rows or a size mismatch.
    """
    rows = [list(r) for r in rows]
    if not rows:
        if size not in (None, 0):
            raise ValueError(f"Expected a {size}x{size} matrix, got no rows.")
        return ImmutableMatrix.zeros(0, 0)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("Matrix rows have different lengths.")
    if size is not None and (len(rows) != size or width != size):
        raise ValueError(f"Expected a {size}x{size} matrix, got {len(rows)}x{width}.")
    return ImmutableMatrix([[to_rational(x) for x in r] for r in rows])


def identity_matrix(n: int) -> ImmutableMatrix:
    if n == 0:
        return ImmutableMatrix.zeros(0, 0)
    return ImmutableMatrix.eye(n)


def matrix_to_strings(m: ImmutableMatrix) -> list[list[str]]:
    return [[str(to_fraction(m[i, j])) for j in range(m.cols)] for i in range(m.rows)]


def clear_denominators(m: ImmutableMatrix) -> tuple[ImmutableMatrix, int]:
    """Return ``(d * m, d)`` with ``d > 0`` the least common denominator."""
    d = lcm(*(int(Rational(x).q) for x in m)) if m.rows and m.cols else 1
    return ImmutableMatrix(m * d), d


def determinant(m: ImmutableMatrix) -> Fraction:
    if not m.is_square:
        raise ValueError(f"Determinant of a non-square {m.rows}x{m.cols} matrix.")
    if m.rows == 0:
        return Fraction(1)
    scaled, d = clear_denominators(m)
    return Fraction(int(scaled.det(method="bareiss")), d**m.rows)


def det_sign(m: ImmutableMatrix) -> int:
    det = determinant(m)
    return (det > 0) - (det < 0)


def column_basis(m: ImmutableMatrix) -> ImmutableMatrix:
    """Pivot columns of ``m``: a basis of its column space."""
    _, pivots = m.rref()
    if not pivots:
        return ImmutableMatrix.zeros(m.rows, 0)
    return ImmutableMatrix.hstack(*[m[:, j] for j in pivots])


def restricted_det_sign(m: ImmutableMatrix, basis: ImmutableMatrix) -> int:
    """
    Sign of the determinant of ``m`` restricted to the ``m``-invariant
    subspace spanned by the columns of ``basis``.
    """
    if basis.cols == 0:
        return 1
    # m*B = B*R gives B^T m B = (B^T B) R, and the Gram matrix B^T B has
    # positive determinant.
    return det_sign(ImmutableMatrix(basis.T * m * basis))


def integer_array(rows, shape: tuple[int, int]) -> np.ndarray:
    """
    Exact integer matrix with an explicit shape.

    :raises ValueError: If the entries are not integers or the shape is wrong.
    """
    out = np.empty(shape, dtype=object)
    rows = [list(r) for r in rows]
    if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
        raise ValueError(f"Expected a {shape[0]}x{shape[1]} integer matrix.")
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            f = parse_fraction(x)
            if f.denominator != 1:
                raise ValueError(f"Entry {x!r} is not an integer.")
            out[i, j] = f.numerator
    return out
