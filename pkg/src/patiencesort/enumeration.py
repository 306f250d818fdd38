"""Exact counting sequences: Bell numbers, Fibonacci, convolved Fibonacci,
the f(n, k) triangle and the matrix form X = (I - A)^{-1} F.

f(n) counts permutations avoiding both 3-~1-42 and 3-~1-24, and f(n, k)
those among them that start with k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence


Matrix = List[List[int]]


def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    if n < 0 or n > 30:
        raise ValueError("bell(n) supports 0 <= n <= 30")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    """Fibonacci numbers offset so that F_0 = F_1 = 1."""
    if n < 0:
        raise ValueError("fib(n) needs n >= 0")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def series_inverse_one_minus_x_minus_x2(terms: int) -> List[int]:
    """Coefficients of 1/(1 - x - x^2): 1, 1, 2, 3, 5, ..."""
    return [fib(i) for i in range(terms)]


def series_mul(a: Sequence[int], b: Sequence[int], terms: int) -> List[int]:
    out = [0] * terms
    for i, x in enumerate(a[:terms]):
        if x:
            for j, y in enumerate(b[: terms - i]):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def _convolved_column(k: int, terms: int) -> tuple:
    """Coefficients of x^{k+2} / (1 - x - x^2)^{k+1}, degrees 0..terms-1."""
    base = series_inverse_one_minus_x_minus_x2(terms)
    acc = [1] + [0] * (terms - 1)
    for _ in range(k + 1):
        acc = series_mul(acc, base, terms)
    shifted = [0] * terms
    for i in range(terms - k - 2):
        shifted[i + k + 2] = acc[i]
    return tuple(shifted)


def convolved_fib(n: int, k: int) -> int:
    """a(n, k): coefficient of x^n in x^{k+2}/(1-x-x^2)^{k+1}; zero for n < k+2."""
    if n < 0 or k < 0:
        raise ValueError("n, k must be non-negative")
    if n < k + 2:
        return 0
    return _convolved_column(k, n + 1)[n]


def convolved_fib_compositions(n: int, k: int) -> int:
    """Independent form: sum over weak compositions (c_0..c_k) of n-k-2 of
    the product of F_{c_i}."""
    if n < k + 2:
        return 0
    total = n - k - 2

    @lru_cache(maxsize=None)
    def go(parts: int, left: int) -> int:
        if parts == 0:
            return 1 if left == 0 else 0
        return sum(fib(c) * go(parts - 1, left - c) for c in range(left + 1))

    return go(k + 1, total)


@dataclass(frozen=True)
class FTable:
    entries: Dict[tuple, int]
    N: int

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def row(self, n: int) -> List[int]:
        return [self[(n, k)] for k in range(n + 1)]

    def f(self, n: int) -> int:
        return sum(self.row(n))

    def sequence(self) -> List[int]:
        return [self.f(n) for n in range(self.N + 1)]


def f_table(N: int) -> FTable:
    """f(0,0)=1; f(n,0)=0; f(n,1)=f(n,n)=f(n-1); f(n,2)=0 for n>=3;
    f(n,k) = f(n,k-1) + f(n-1,k-1) + f(n-2,k-2) for 3 <= k < n."""
    if N < 0 or N > 64:
        raise ValueError("f_table supports 0 <= N <= 64")
    t: Dict[tuple, int] = {(0, 0): 1}
    total = {0: 1}
    for n in range(1, N + 1):
        t[(n, 0)] = 0
        t[(n, 1)] = total[n - 1]
        if n >= 2:
            t[(n, n)] = total[n - 1]
        if n >= 3:
            t[(n, 2)] = 0
        for k in range(3, n):
            t[(n, k)] = t[(n, k - 1)] + t.get((n - 1, k - 1), 0) + t.get((n - 2, k - 2), 0)
        total[n] = sum(t[(n, k)] for k in range(n + 1))
    return FTable(t, N)


def f_sequence(N: int) -> List[int]:
    return f_table(N).sequence()


def matrix_A(size: int) -> Matrix:
    """A[n][k] = a(n, k); strictly lower triangular with a zero sub-diagonal."""
    return [[convolved_fib(n, k) for k in range(size)] for n in range(size)]


def vector_F(size: int) -> List[int]:
    """F = (1, F_0, F_1, ...): entry n is F_{n-1}, with 1 at n = 0."""
    return [1] + [fib(n - 1) for n in range(1, size)]


def identity_matrix(size: int) -> Matrix:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(p):
                    oi[j] += x * bk[j]
    return out


def mat_vec(a: Matrix, v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def neumann_inverse(A: Matrix) -> Matrix:
    """(I - A)^{-1} = I + A + A^2 + ... for nilpotent A (stops at the zero power)."""
    size = len(A)
    acc = identity_matrix(size)
    power = identity_matrix(size)
    for _ in range(size):
        power = mat_mul(power, A)
        if not any(any(row) for row in power):
            break
        acc = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, power)]
    return acc


def f_via_matrix(N: int) -> List[int]:
    if N < 0 or N > 64:
        raise ValueError("f_via_matrix supports 0 <= N <= 64")
    size = N + 1
    return mat_vec(neumann_inverse(matrix_A(size)), vector_F(size))


def involution_count(n: int) -> int:
    """I_n = I_{n-1} + (n-1) I_{n-2}."""
    a, b = 1, 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b if n >= 1 else 1


def f_alternate(n: int, k: int, table: FTable = None) -> int:
    """f(n, k) for n >= k >= 2 from the closed sum
    f(n,k) = sum_{m=0}^{k-3} a(k-1, m) f(n-k+m) + [n == k] F_{k-2}.

    The coefficient is a(k-1, m): with a(k, m) the k = 4 row already fails
    (it would give f(5,4) = 6 instead of 3)."""
    if not n >= k >= 2:
        raise ValueError("needs n >= k >= 2")
    t = table or f_table(n)
    s = sum(convolved_fib(k - 1, m) * t.f(n - k + m) for m in range(k - 2))
    return s + (fib(k - 2) if n == k else 0)
