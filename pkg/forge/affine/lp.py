import logging
from fractions import Fraction
from typing import List, Optional, Sequence

logger = logging.getLogger("forge")


class LPResult:

    def __init__(self, feasible: bool, solution: Optional[List[Fraction]], residual: Fraction, pivots: int) -> None:
        self.feasible = feasible
        self.solution = solution
        self.residual = residual
        """
        Optimal phase-1 objective; positive exactly when the system is infeasible.
        """
        self.pivots = pivots

    def __repr__(self) -> str:
        return f"LPResult(feasible={self.feasible}, pivots={self.pivots})"


class PhaseOneTableau:
    """
    Phase-1 simplex for A x = b, x >= 0 over the rationals with Bland's rule.

    One artificial variable per row starts in the basis; the last row holds the reduced costs
    of the artificial objective and, in its last column, minus its value.
    """

    def __init__(self, equalities: Sequence[Sequence], rhs: Sequence) -> None:
        self.m = len(equalities)
        self.n = len(equalities[0]) if equalities else 0
        self.rows: List[List[Fraction]] = []
        for i, (row, b) in enumerate(zip(equalities, rhs)):
            if len(row) != self.n:
                raise ValueError(f"Row {i} has {len(row)} coefficients, expected {self.n}")
            row = [Fraction(a) for a in row]
            b = Fraction(b)
            if b < 0:
                row, b = [-a for a in row], -b
            artificials = [Fraction(1) if k == i else Fraction(0) for k in range(self.m)]
            self.rows.append(row + artificials + [b])
        self.basis = [self.n + i for i in range(self.m)]
        width = self.n + self.m + 1
        self.cost = [Fraction(0)] * width
        for row in self.rows:
            for j in range(self.n):
                self.cost[j] -= row[j]
            self.cost[-1] -= row[-1]
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        pivot_row = self.rows[i]
        piv = pivot_row[j]
        pivot_row = [a / piv for a in pivot_row]
        self.rows[i] = pivot_row
        for k in range(self.m):
            if k != i and self.rows[k][j] != 0:
                factor = self.rows[k][j]
                self.rows[k] = [a - factor * p for a, p in zip(self.rows[k], pivot_row)]
        if self.cost[j] != 0:
            factor = self.cost[j]
            self.cost = [a - factor * p for a, p in zip(self.cost, pivot_row)]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self) -> bool:
        entering = next((j for j in range(self.n + self.m) if self.cost[j] < 0), None)
        if entering is None:
            return False
        candidates = [
            (self.rows[i][-1] / self.rows[i][entering], self.basis[i], i)
            for i in range(self.m) if self.rows[i][entering] > 0
        ]
        # the artificial objective is bounded below by zero
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return True

    def solve(self) -> LPResult:
        while self.bland_step():
            pass
        residual = -self.cost[-1]
        if residual != 0:
            return LPResult(False, None, residual, self.pivots)
        solution = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                solution[var] = self.rows[i][-1]
        return LPResult(True, solution, residual, self.pivots)


def lp_feasible(equalities: Sequence[Sequence], rhs: Sequence) -> LPResult:
    """
    Decides whether A x = b has a solution with x >= 0; exact rationals throughout.
    """
    if len(equalities) != len(rhs):
        raise ValueError(f"{len(equalities)} rows but {len(rhs)} right-hand sides")
    if not equalities:
        return LPResult(True, [], Fraction(0), 0)
    result = PhaseOneTableau(equalities, rhs).solve()
    logger.debug(f"Phase-1 simplex: {result}")
    return result
