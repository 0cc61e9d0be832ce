"""Wall-clock budgets for the exponential searches.

A budget is installed with :func:`time_budget` and polled from hot loops with
:func:`check_budget`; polling is cheap (a counter) and only consults the
clock every few thousand calls.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from contextvars import ContextVar


class BudgetExceeded(RuntimeError):
    """Raised when a computation runs past its time or work budget."""


_deadline: ContextVar[float | None] = ContextVar("extraconn_deadline", default=None)
_ticks = [0]


@contextmanager
def time_budget(seconds: float | None):
    """Limit nested computations to ``seconds`` of wall time (``None`` = no limit).

    Nested budgets never extend an outer one."""
    if seconds is None:
        yield
        return
    new = time.monotonic() + seconds
    outer = _deadline.get()
    token = _deadline.set(new if outer is None else min(outer, new))
    try:
        yield
    finally:
        _deadline.reset(token)


def check_budget(every: int = 4096) -> None:
    deadline = _deadline.get()
    if deadline is None:
        return
    _ticks[0] += 1
    if _ticks[0] % every == 0 and time.monotonic() > deadline:
        raise BudgetExceeded("time budget exhausted")


def remaining() -> float | None:
    deadline = _deadline.get()
    return None if deadline is None else deadline - time.monotonic()
