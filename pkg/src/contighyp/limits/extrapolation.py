"""
Extrapolation of eps-dependent values to eps = 0.

The limit is the constant coefficient of a fit through the trailing schedule
points with basis 1, t, t**2, ... (t = eps / max eps), optionally with a
t*log(t) function in place of the highest power. Call inside a workspace.
"""

from collections.abc import Callable, Sequence

import mpmath

# a t*log(t) column needs the constant and at least one power beside it
MIN_LOG_TERM_POINTS = 3


def _basis(count: int, *, log_term: bool) -> list[Callable[[mpmath.mpf], mpmath.mpf]]:
    functions: list[Callable[[mpmath.mpf], mpmath.mpf]] = [lambda _t: mpmath.mpf(1)]
    powers = count - 1
    if log_term and count >= MIN_LOG_TERM_POINTS:
        functions.append(lambda t: t * mpmath.log(t))
        powers -= 1
    functions.extend(lambda t, j=j: t**j for j in range(1, powers + 1))
    return functions


def extrapolate_to_zero(
    eps: Sequence[mpmath.mpf], values: Sequence[mpmath.mpc], *, log_term: bool = False
) -> mpmath.mpc:
    """
    Value at eps = 0 of the interpolant through ``(eps, values)``.

    Raises:
        ValueError: If the sequences are empty or differ in length
    """
    if not eps or len(eps) != len(values):
        msg = "extrapolation needs matching, non-empty eps and value sequences"
        raise ValueError(msg)
    if len(eps) == 1:
        return mpmath.mpc(values[0])
    scale = max(eps)
    scaled = [e / scale for e in eps]
    basis = _basis(len(eps), log_term=log_term)
    system = mpmath.matrix([[f(t) for f in basis] for t in scaled])
    coefficients = mpmath.lu_solve(system, mpmath.matrix(list(values)))
    return mpmath.mpc(coefficients[0])


def fit_error_order(
    eps: Sequence[mpmath.mpf], values: Sequence[mpmath.mpc]
) -> mpmath.mpf | None:
    """
    Empirical order p of the correction in ``values ~ L + C eps**p``.

    Successive differences shrink by (eps_{j-1}/eps_j)**p; the median over the
    schedule is returned, or None when the values do not change.
    """
    estimates: list[mpmath.mpf] = []
    for j in range(2, len(values)):
        earlier = abs(values[j - 1] - values[j - 2])
        later = abs(values[j] - values[j - 1])
        if earlier == 0 or later == 0:
            continue
        estimates.append(mpmath.log(earlier / later) / mpmath.log(eps[j - 1] / eps[j]))
    if not estimates:
        return None
    estimates.sort()
    middle = len(estimates) // 2
    if len(estimates) % 2:
        return estimates[middle]
    return (estimates[middle - 1] + estimates[middle]) / 2
