import math
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from src.domain.entities.quadrature import QuadResult, QuadSpec, Transform
from src.domain.interface.integrator import IIntegrator
from src.utils.exceptions import DomainError, QuadratureConvergenceError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

# QUADPACK 7/15-point Gauss-Kronrod pair on [-1, 1].
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

KRONROD_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[-2::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[-2::-1]])
# Gauss nodes sit at the odd Kronrod positions
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[13, 11, 9]] = _WG[:3]

_GEOMETRIC_RATIO = 1.5
_ROUNDOFF = 50.0 * np.finfo(float).eps


def _acceptable(value, error: float, spec: QuadSpec) -> bool:
    return error <= max(spec.abs_tol, spec.rel_tol * float(np.max(np.abs(value))))


class ScipyIntegrator(IIntegrator):
    """Adaptive Gauss-Kronrod integration built on scipy.integrate.

    Semi-infinite axes are mapped onto [0, 1) with x = offset + scale*t/(1-t)
    (exp-decay transform) or handed to QUADPACK's infinite-range routine
    (algebraic transform). Nested integrals tighten the inner tolerance by
    `nest_factor` per level.
    """

    def __init__(self, nest_factor: float = 10.0, panel_max_rounds: int = 12,
                 q_cutoff_decay: float = 50.0, soft_failure_factor: float = 100.0):
        if soft_failure_factor < 1.0:
            raise DomainError("soft_failure_factor must be at least 1")
        self.nest_factor = nest_factor
        self.panel_max_rounds = panel_max_rounds
        self.q_cutoff_decay = q_cutoff_decay
        self.soft_failure_factor = soft_failure_factor

    # -- one-dimensional -------------------------------------------------

    def _check(self, value, error: float, spec: QuadSpec, axis: str, message: str = None):
        """Accept within tolerance, warn within soft_failure_factor * tolerance
        (the caller still reports the error estimate), raise beyond."""
        tol = max(spec.abs_tol, spec.rel_tol * float(np.max(np.abs(value))))
        if error <= tol:
            return
        if error <= self.soft_failure_factor * tol:
            logger.warning({
                "type": "QuadratureWarning",
                "axis": axis,
                "error": float(error),
                "tolerance": float(tol),
                "detail": message,
            })
            return
        raise QuadratureConvergenceError(
            message or "error estimate above tolerance",
            best_estimate=float(np.ravel(value)[0]),
            error_estimate=float(error),
            axis=axis,
        )

    def _quad(self, g: Callable[[float], float], a: float, b: float, spec: QuadSpec, axis: str) -> QuadResult:
        out = integrate.quad(
            g, a, b,
            epsabs=spec.abs_tol,
            epsrel=spec.rel_tol,
            limit=spec.max_subdivisions,
            full_output=1,
        )
        value, error, info = out[0], out[1], out[2]
        if len(out) > 3:
            self._check(value, error, spec, axis, out[3])
        return QuadResult(float(value), float(error), max(int(info["neval"]), 1))

    def integrate_semiinf(self, f, spec: QuadSpec, scale: float = 1.0, axis: str = "x",
                          offset: float = 0.0) -> QuadResult:
        if spec.transform == Transform.ALGEBRAIC:
            return self._quad(f, offset, np.inf, spec, axis)

        def mapped(t: float) -> float:
            one_minus = 1.0 - t
            return f(offset + scale * t / one_minus) * scale / (one_minus * one_minus)

        return self._quad(mapped, 0.0, 1.0, spec, axis)

    def integrate_finite(self, f, a: float, b: float, spec: QuadSpec, axis: str = "x") -> QuadResult:
        return self._quad(f, a, b, spec, axis)

    def integrate_semiinf_vec(self, f, spec: QuadSpec, scale: float = 1.0, axis: str = "x",
                              offset: float = 0.0) -> QuadResult:
        if spec.transform == Transform.ALGEBRAIC:
            g, a, b = f, offset, np.inf
        else:
            def g(t: float) -> np.ndarray:
                one_minus = 1.0 - t
                return np.asarray(f(offset + scale * t / one_minus)) * (scale / (one_minus * one_minus))
            a, b = 0.0, 1.0

        value, error, info = integrate.quad_vec(
            g, a, b,
            epsabs=spec.abs_tol,
            epsrel=spec.rel_tol,
            limit=spec.max_subdivisions,
            norm="max",
            full_output=True,
        )
        if info.status != 0:
            self._check(value, error, spec, axis, info.message)
        return QuadResult(np.asarray(value), float(error), max(int(info.neval), 1))

    # -- nested ----------------------------------------------------------

    def integrate_2d(self, f, spec: QuadSpec, scales: Sequence[float] = (1.0, 1.0),
                     offsets: Sequence[float] = (0.0, 0.0)) -> QuadResult:
        inner_spec = spec.tightened(self.nest_factor)
        state = {"evaluations": 0, "rel_error": 0.0}

        def outer(x: float) -> float:
            res = self.integrate_semiinf(lambda y: f(x, y), inner_spec, scales[1], axis="y", offset=offsets[1])
            state["evaluations"] += res.evaluations
            if res.value != 0.0:
                state["rel_error"] = max(state["rel_error"], res.abs_error_estimate / abs(res.value))
            return res.value

        res = self.integrate_semiinf(outer, spec, scales[0], axis="x", offset=offsets[0])
        error = res.abs_error_estimate + state["rel_error"] * abs(res.value)
        return QuadResult(res.value, error, state["evaluations"])

    def integrate_3d(self, f, spec: QuadSpec, scales: Sequence[float] = (1.0, 1.0, 1.0),
                     offsets: Sequence[float] = (0.0, 0.0, 0.0)) -> QuadResult:
        inner_spec = spec.tightened(self.nest_factor)
        state = {"evaluations": 0, "rel_error": 0.0}

        def outer(x: float) -> float:
            res = self.integrate_2d(lambda y, z: f(x, y, z), inner_spec, scales[1:], offsets[1:])
            state["evaluations"] += res.evaluations
            if res.value != 0.0:
                state["rel_error"] = max(state["rel_error"], res.abs_error_estimate / abs(res.value))
            return res.value

        res = self.integrate_semiinf(outer, spec, scales[0], axis="x", offset=offsets[0])
        error = res.abs_error_estimate + state["rel_error"] * abs(res.value)
        return QuadResult(res.value, error, state["evaluations"])

    # -- vectorized panels for Bessel-weighted q integrals ---------------

    def panel_breakpoints(self, feature: float, decay_length: float, frequency: float = 0.0) -> np.ndarray:
        """Breakpoints on [0, cutoff]: geometric near the origin feature scale,
        then uniform panels no wider than the decay length or half a Bessel
        period."""
        cutoff = self.q_cutoff_decay / decay_length
        width = 1.0 / decay_length
        if frequency > 0:
            width = min(width, math.pi / frequency)
        knee = min(2.0 * width, cutoff)

        start = min(0.25 * feature, 0.5 * knee)
        if start > 0 and start < knee:
            n_geo = max(int(math.ceil(math.log(knee / start) / math.log(_GEOMETRIC_RATIO))), 1)
            head = np.concatenate([[0.0], np.geomspace(start, knee, n_geo + 1)])
        else:
            head = np.array([0.0, knee])

        n_uniform = int(math.ceil((cutoff - knee) / width))
        if n_uniform > 0:
            tail = np.linspace(knee, cutoff, n_uniform + 1)[1:]
            return np.concatenate([head, tail])
        return head

    @staticmethod
    def _panel_sums(f, a: np.ndarray, b: np.ndarray):
        centre = 0.5 * (a + b)
        half = 0.5 * (b - a)
        nodes = centre[:, None] + half[:, None] * KRONROD_NODES[None, :]
        values = np.asarray(f(nodes.ravel()))
        squeeze = values.ndim == 1
        values = np.atleast_2d(values).reshape(-1, a.size, KRONROD_NODES.size)
        kronrod = np.einsum("mpk,k->mp", values, KRONROD_WEIGHTS) * half
        gauss = np.einsum("mpk,k->mp", values, GAUSS_WEIGHTS) * half
        error = np.max(np.abs(kronrod - gauss), axis=0)
        magnitude = np.max(np.einsum("mpk,k->mp", np.abs(values), KRONROD_WEIGHTS) * half, axis=0)
        return kronrod, error, magnitude, squeeze

    def integrate_panels(self, f, spec: QuadSpec, feature: float, decay_length: float,
                         frequency: float = 0.0, axis: str = "q") -> QuadResult:
        """Integrate a vectorized f over [0, inf) for integrands damped like
        exp(-q * decay_length), possibly oscillating like J(q * frequency).

        f maps an array of abscissae to an array of shape (n,) or (m, n).
        The axis is truncated at q_cutoff_decay / decay_length; panels with
        the largest Kronrod-Gauss discrepancy are bisected until the summed
        estimate meets tolerance, or falls to the rounding floor
        50 * eps * int |f| when cancellation makes the tolerance unreachable.
        """
        edges = self.panel_breakpoints(feature, decay_length, frequency)
        a, b = edges[:-1], edges[1:]
        sums, errors, magnitude, squeeze = self._panel_sums(f, a, b)
        evaluations = a.size * KRONROD_NODES.size

        for _ in range(self.panel_max_rounds):
            total = sums.sum(axis=1)
            error = float(errors.sum())
            if _acceptable(total, error, spec) or error <= _ROUNDOFF * float(magnitude.sum()):
                break
            tol = max(spec.abs_tol, spec.rel_tol * float(np.max(np.abs(total))))
            marked = errors > tol / errors.size
            if not marked.any():
                marked[np.argmax(errors)] = True

            mid = 0.5 * (a[marked] + b[marked])
            new_a = np.concatenate([a[marked], mid])
            new_b = np.concatenate([mid, b[marked]])
            new_sums, new_errors, new_magnitude, _ = self._panel_sums(f, new_a, new_b)
            evaluations += new_a.size * KRONROD_NODES.size

            keep = ~marked
            a = np.concatenate([a[keep], new_a])
            b = np.concatenate([b[keep], new_b])
            sums = np.concatenate([sums[:, keep], new_sums], axis=1)
            errors = np.concatenate([errors[keep], new_errors])
            magnitude = np.concatenate([magnitude[keep], new_magnitude])
        else:
            total = sums.sum(axis=1)
            error = float(errors.sum())
            if error > _ROUNDOFF * float(magnitude.sum()):
                self._check(total, error, spec, axis, "panel refinement exhausted")

        total = sums.sum(axis=1)
        logger.debug({"axis": axis, "panels": int(a.size), "evaluations": evaluations})
        value = float(total[0]) if squeeze else total
        return QuadResult(value, float(errors.sum()), evaluations)
