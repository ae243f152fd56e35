"""Independent brute-force oracles for the test suite.

These deliberately avoid the package's simplex path: LP minima come
from enumerating candidate vertices as solutions of n active
constraints chosen from the stacked constraint rows.
"""

from itertools import combinations

import numpy as np

TOL = 1e-9


def enumerate_lp_minimum(objective, eq_matrix, eq_rhs, ineq_matrix, ineq_rhs,
                         lower, upper):
    """Minimum of a box-bounded LP by exhaustive vertex enumeration.

    Returns None when no feasible vertex exists (infeasible, given
    finite boxes make the region a polytope).
    """
    c = np.asarray(objective, dtype=float)
    n = c.size
    eq_matrix = np.asarray(eq_matrix, dtype=float).reshape(-1, n)
    eq_rhs = np.asarray(eq_rhs, dtype=float).reshape(-1)
    ineq_matrix = np.asarray(ineq_matrix, dtype=float).reshape(-1, n)
    ineq_rhs = np.asarray(ineq_rhs, dtype=float).reshape(-1)
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)

    rows = [(eq_matrix[i], eq_rhs[i]) for i in range(eq_matrix.shape[0])]
    optional = [(ineq_matrix[i], ineq_rhs[i]) for i in range(ineq_matrix.shape[0])]
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        if np.isfinite(lower[i]):
            optional.append((e.copy(), lower[i]))
        if np.isfinite(upper[i]):
            optional.append((e.copy(), upper[i]))

    n_eq = len(rows)
    if n_eq > n:
        n_active = 0
    else:
        n_active = n - n_eq

    def feasible(x):
        if eq_matrix.shape[0] and np.max(np.abs(eq_matrix @ x - eq_rhs)) > 1e-7:
            return False
        if ineq_matrix.shape[0] and np.max(ineq_matrix @ x - ineq_rhs) > 1e-7:
            return False
        return bool(
            np.all(x >= lower - 1e-7) and np.all(x <= upper + 1e-7)
        )

    best = None
    for combo in combinations(range(len(optional)), n_active):
        M = np.array([r for r, _ in rows] + [optional[i][0] for i in combo])
        rhs = np.array([v for _, v in rows] + [optional[i][1] for i in combo])
        if M.shape[0] != n:
            continue
        try:
            x = np.linalg.solve(M, rhs)
        except np.linalg.LinAlgError:
            continue
        if not np.all(np.isfinite(x)):
            continue
        if feasible(x):
            val = float(c @ x)
            if best is None or val < best:
                best = val
    return best


def enumerate_binary_minimum(A, b):
    """Minimum cardinality binary cover by direct 2^n enumeration."""
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    m, n = A.shape
    best = None
    optima = set()
    for code in range(2**n):
        x = np.array([(code >> i) & 1 for i in range(n)], dtype=float)
        if np.all(A @ x >= b - 1e-9):
            val = int(x.sum())
            if best is None or val < best:
                best = val
                optima = {tuple(int(v) for v in x)}
            elif val == best:
                optima.add(tuple(int(v) for v in x))
    return best, optima
