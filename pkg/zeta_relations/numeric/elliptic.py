"""
Arbitrary-precision elliptic data: nome → (k, k', K, E) and the Jacobi
functions with their reciprocal squares.

Every call builds its own mpmath context at p + g digits; nothing touches the
global ``mpmath.mp``.
"""

from dataclasses import dataclass
from typing import Optional, Union

from mpmath.ctx_mp import MPContext

from ..utils.errors import PoleProximityError, VerificationError
from ..utils.logger import get_logger

__all__ = [
    "make_context",
    "EllipticContext",
    "agm_elliptic",
    "nome_to_elliptic",
    "JacobiValues",
    "jacobi_fn",
    "check_lemma54",
]

logger = get_logger("numeric.elliptic")

DEFAULT_POLE_THRESHOLD = "1e-20"


def make_context(precision: int, guard_digits: int = 10) -> MPContext:
    ctx = MPContext()
    ctx.dps = precision + guard_digits
    return ctx


@dataclass(frozen=True)
class EllipticContext:
    precision: int
    guard_digits: int
    ctx: MPContext
    q: object
    k: object
    kp: object
    K: object
    E: object
    roundtrip_residual: object

    @property
    def k2(self):
        return self.k * self.k

    @property
    def X(self):
        """2K/π."""
        return 2 * self.K / self.ctx.pi

    @property
    def tolerance(self):
        return self.ctx.mpf(10) ** (self.guard_digits - self.precision)


def agm_elliptic(ctx: MPContext, k, kp):
    """(K, E) by the arithmetic-geometric mean seeded with (1, k'), c_0 = k."""
    a, b, c = ctx.one, kp, k
    acc = c * c / 2
    power = ctx.one
    eps = ctx.eps
    while abs(c) > eps * abs(a):
        a, b, c = (a + b) / 2, ctx.sqrt(a * b), (a - b) / 2
        acc += power * c * c
        power *= 2
    K = ctx.pi / (2 * a)
    return K, K * (1 - acc)


def nome_to_elliptic(q: Union[str, object], precision: int, guard_digits: int = 10,
                     ctx: Optional[MPContext] = None) -> EllipticContext:
    if ctx is None:
        ctx = make_context(precision, guard_digits)
    q = ctx.mpf(q)
    if not 0 < q < 1:
        raise ValueError(f"nome must lie in (0, 1), got {ctx.nstr(q, 10)}")

    t2 = ctx.jtheta(2, 0, q)
    t3 = ctx.jtheta(3, 0, q)
    t4 = ctx.jtheta(4, 0, q)
    k = (t2 / t3) ** 2
    kp = (t4 / t3) ** 2
    K_theta = ctx.pi / 2 * t3 * t3

    K, E = agm_elliptic(ctx, k, kp)
    tol = ctx.mpf(10) ** (guard_digits - precision)
    if abs(K - K_theta) > tol * K:
        raise VerificationError(f"AGM and theta values of K disagree by {ctx.nstr(abs(K - K_theta), 5)}")

    Kp = ctx.ellipk(kp * kp)
    residual = abs(ctx.exp(-ctx.pi * Kp / K) - q)
    if residual > tol:
        raise VerificationError(f"nome round trip off by {ctx.nstr(residual, 5)}")

    logger.debug(f"Elliptic context at q={ctx.nstr(q, 12)}: k={ctx.nstr(k, 12)}, round trip {ctx.nstr(residual, 3)}")
    return EllipticContext(
        precision=precision,
        guard_digits=guard_digits,
        ctx=ctx,
        q=q,
        k=k,
        kp=kp,
        K=K,
        E=E,
        roundtrip_residual=residual,
    )


@dataclass(frozen=True)
class JacobiValues:
    ctx: MPContext
    sn: object
    cn: object
    dn: object
    k2: object
    threshold: object

    def _reciprocal_square(self, value, name: str):
        if abs(value) < self.threshold:
            raise PoleProximityError(f"{name} vanishes to within {self.ctx.nstr(self.threshold, 3)}")
        return 1 / (value * value)

    @property
    def ns2(self):
        return self._reciprocal_square(self.sn, "sn")

    @property
    def nc2(self):
        return self._reciprocal_square(self.cn, "cn")

    @property
    def nd2(self):
        return self._reciprocal_square(self.dn, "dn")

    @property
    def dn2(self):
        return self.dn * self.dn

    def pythagorean_residuals(self):
        """|sn² + cn² - 1| and |k²sn² + dn² - 1|."""
        sn2 = self.sn * self.sn
        return abs(sn2 + self.cn * self.cn - 1), abs(self.k2 * sn2 + self.dn * self.dn - 1)


def jacobi_fn(z, k2, precision: int, guard_digits: int = 10,
              pole_threshold: str = DEFAULT_POLE_THRESHOLD, ctx: Optional[MPContext] = None) -> JacobiValues:
    if ctx is None:
        ctx = make_context(precision, guard_digits)
    z = ctx.convert(z)
    k2 = ctx.convert(k2)
    return JacobiValues(
        ctx=ctx,
        sn=ctx.ellipfun('sn', z, m=k2),
        cn=ctx.ellipfun('cn', z, m=k2),
        dn=ctx.ellipfun('dn', z, m=k2),
        k2=k2,
        threshold=ctx.mpf(pole_threshold),
    )


def check_lemma54(z, k2, precision: int, guard_digits: int = 10,
                  pole_threshold: str = DEFAULT_POLE_THRESHOLD):
    """|4ns²(2z) - [(1-k²)(nc² - nd²) + (ns² - dn²) + (2+k²)]| at z."""
    ctx = make_context(precision, guard_digits)
    z = ctx.convert(z)
    k2 = ctx.convert(k2)
    at_z = jacobi_fn(z, k2, precision, guard_digits, pole_threshold, ctx=ctx)
    at_2z = jacobi_fn(2 * z, k2, precision, guard_digits, pole_threshold, ctx=ctx)
    lhs = 4 * at_2z.ns2
    rhs = (1 - k2) * (at_z.nc2 - at_z.nd2) + (at_z.ns2 - at_z.dn2) + (2 + k2)
    return abs(lhs - rhs)
