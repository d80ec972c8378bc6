"""Exact integer matrix helpers.

Matrices are tuples of tuples of Python ints, vectors are tuples of ints.
Python integers are arbitrary precision, so every product, power and
comparison below is exact; nothing here ever touches floating point.
"""

from __future__ import annotations

Mat = tuple
Vec = tuple


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero(n: int) -> Mat:
    return tuple((0,) * n for _ in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Mat, v: Vec) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_neg(a: Mat) -> Mat:
    return tuple(tuple(-x for x in row) for row in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_pow(a: Mat, k: int) -> Mat:
    if k < 0:
        raise ValueError("negative power not supported here")
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def outer(u: Vec, v: Vec) -> Mat:
    return tuple(tuple(x * y for y in v) for x in u)


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def rows_as_strings(a: Mat) -> list[str]:
    """Rows rendered as space-separated decimal strings, for certificates."""
    return [" ".join(str(x) for x in row) for row in a]
