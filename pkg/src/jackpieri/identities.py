"""Verification suites: every identity checked by exact structural equality.

Each suite walks a grid of partitions (plus seeded random points where the
identity is rational in x) for every configured value of d and returns a
:class:`VerificationReport`.  Nothing is compared with a tolerance.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .combinatorics import (
    complement,
    contains,
    format_partition,
    format_subset,
    is_partition,
    partitions_of,
    partitions_up_to,
    shift_by_subset,
    subsets,
    unit,
)
from .errors import JackPieriError, PoleInA
from .field import Field, eval_at_d
from .interpjack import (
    apply_difference_operator,
    binomial_coefficient,
    eval_interp,
    interp_jack,
    jack_decompose,
    own_value,
    shifted_point,
)
from .jack import a_coefficient, eigenvalue, eval_at_ones, jack, phi, psi
from .operators import (
    UPoly,
    apply_ad_twist,
    apply_D,
    apply_sekiguchi_gen,
    apply_total_derivative,
    eigen_I,
    eigen_poly_I,
    elementary_scalar,
    multiply_total,
    s_shift,
)
from .polyring import MultiPoly, elementary, schur_bialternant

DEFAULT_D_VALUES = (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2))


@dataclass
class SuiteConfig:
    r: int = 2
    max_weight: int = 3
    d_values: tuple = DEFAULT_D_VALUES  # None stands for symbolic d
    u_value: Fraction | None = None  # None: formal u
    seed: int = 0
    random_points: int = 20

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.max_weight < 0:
            raise ValueError("max_weight must be >= 0")
        self.d_values = tuple(None if d is None else Fraction(d) for d in self.d_values)
        if any(d == 0 for d in self.d_values if d is not None):
            raise ValueError("d values must be nonzero")

    @property
    def fields(self):
        return [Field(d) for d in self.d_values]

    @property
    def u_mode(self) -> str:
        return "formal" if self.u_value is None else f"value:{self.u_value}"

    def grid(self):
        return partitions_up_to(self.max_weight, self.r)

    def rng(self, *tags) -> random.Random:
        return random.Random(":".join(map(str, (self.seed,) + tags)))

    def to_json(self):
        return {
            "r": self.r,
            "max_weight": self.max_weight,
            "d_values": ["symbolic" if d is None else str(d) for d in self.d_values],
            "u": self.u_mode,
            "seed": self.seed,
            "random_points": self.random_points,
        }


@dataclass
class VerificationReport:
    suite: str
    anchors: tuple = ()
    cases: int = 0
    passed: int = 0
    first_failure: dict | None = None
    millis: float | None = None
    notes: list = dc_field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.cases - self.passed

    @property
    def ok(self) -> bool:
        return self.cases == self.passed

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "anchors": list(self.anchors),
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
        }
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        out["millis"] = round(self.millis, 1) if (timing and self.millis is not None) else None
        return out

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{status} {self.suite}: {self.passed}/{self.cases}"
        if self.first_failure:
            line += f"  first failure {self.first_failure['params']}"
        return line


def render(v) -> str:
    if isinstance(v, (MultiPoly, UPoly)):
        return v.to_text()
    return str(v)


class _Runner:
    def __init__(self, report: VerificationReport, cfg: SuiteConfig):
        self.report = report
        self.cfg = cfg

    def _specialize(self, v):
        if isinstance(v, UPoly) and self.cfg.u_value is not None:
            return v.at(v.zero.field(self.cfg.u_value) if isinstance(v.zero, MultiPoly) else self.cfg.u_value)
        return v

    def case(self, params: dict, compute):
        """Run one case; ``compute`` returns (lhs, rhs)."""
        rep = self.report
        rep.cases += 1
        try:
            lhs, rhs = compute()
            lhs, rhs = self._specialize(lhs), self._specialize(rhs)
            if lhs == rhs:
                rep.passed += 1
                return True
            residual = render(lhs - rhs)
        except JackPieriError as exc:
            residual = f"error: {type(exc).__name__}: {exc}"
        if rep.first_failure is None:
            rep.first_failure = {"params": params, "residual": residual}
        return False


def _p(field, **kw):
    out = {"d": str(field)}
    for k, v in kw.items():
        out[k] = format_partition(v) if isinstance(v, tuple) and k != "J" else (format_subset(v) if k == "J" else v)
    return out


def _random_vectors(cfg: SuiteConfig, count: int, guard, *tags):
    """Seeded integer vectors in [-20, 20]^r that pass ``guard`` (pole check)."""
    rng = cfg.rng(*tags)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * (count + 1):
            raise RuntimeError("pole guard rejected too many samples")
        x = tuple(rng.randint(-20, 20) for _ in range(cfg.r))
        try:
            guard(x)
        except PoleInA:
            continue
        out.append(x)
    return out


def _sum_upolys(items, zero):
    out = UPoly([], zero)
    for it in items:
        out = out + it
    return out


# ---------------------------------------------------------------------------
# Jack eigen-characterization


def verify_sekiguchi_eigen(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("sekiguchi-eigen", SUITE_ANCHORS["sekiguchi-eigen"])
    run = _Runner(rep, cfg)
    for f in cfg.fields:
        for m in cfg.grid():
            def compute(m=m, f=f):
                P = jack(m, f).poly
                return apply_sekiguchi_gen(P), eigen_I(m, f).times_poly(P)

            run.case(_p(f, m=m), compute)
    return rep


def verify_d_eigen(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("d-eigen", SUITE_ANCHORS["d-eigen"])
    run = _Runner(rep, cfg)
    for f in cfg.fields:
        for m in cfg.grid():
            def compute(m=m, f=f):
                P = jack(m, f).poly
                return apply_D(P), P.scale(eigenvalue(m, f))

            run.case(_p(f, m=m), compute)
    return rep


def verify_schur_oracle(cfg: SuiteConfig) -> VerificationReport:
    """Jack at d=2 against the bialternant ratio (independent of cfg.d_values)."""
    rep = VerificationReport("schur-oracle", SUITE_ANCHORS["schur-oracle"])
    run = _Runner(rep, cfg)
    f = Field(2)
    for m in cfg.grid():
        run.case(_p(f, m=m), lambda m=m: (jack(m, f).poly, schur_bialternant(m, cfg.r, f)))
    return rep


# ---------------------------------------------------------------------------
# classical Pieri


def _lin_comb(terms, r, f):
    out = MultiPoly.zero(r, f)
    for poly, c in terms:
        out = out + poly.scale(c)
    return out


class UnexpectedTerm(JackPieriError):
    """A nonzero coefficient attached to an index outside the partition cone."""


def _require_partition(y, coef):
    if not is_partition(y):
        if coef:
            raise UnexpectedTerm(f"nonzero coefficient {coef} on non-partition {y}")
        return False
    return True


def _phi_lowering_rhs(x, f):
    r = len(x)
    s = s_shift(x, f)
    terms = []
    for i in range(r):
        c = s[i]
        if c:
            c = c * a_coefficient(-1, x, (i,), f)
        y, _ = shift_by_subset(x, (i,), -1)
        if _require_partition(y, c) and c:
            terms.append((phi(y, f).poly, c))
    return _lin_comb(terms, r, f)


def verify_classical_pieri(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("classical-pieri", SUITE_ANCHORS["classical-pieri"])
    run = _Runner(rep, cfg)
    r = cfg.r
    for f in cfg.fields:
        for x in cfg.grid():

            def phi_minus(x=x, f=f):
                return apply_total_derivative(phi(x, f).poly), _phi_lowering_rhs(x, f)

            def psi_minus(x=x, f=f):
                terms = []
                for i in range(r):
                    y, ok = shift_by_subset(x, (i,), -1)
                    if ok:
                        terms.append((psi(y, f).poly, a_coefficient(+1, y, (i,), f)))
                return apply_total_derivative(psi(x, f).poly), _lin_comb(terms, r, f)

            def phi_plus(x=x, f=f):
                terms = []
                for i in range(r):
                    c = a_coefficient(+1, x, (i,), f)
                    y, _ = shift_by_subset(x, (i,), +1)
                    if _require_partition(y, c) and c:
                        terms.append((phi(y, f).poly, c))
                return multiply_total(phi(x, f).poly), _lin_comb(terms, r, f)

            def psi_plus(x=x, f=f):
                terms = []
                for i in range(r):
                    y, ok = shift_by_subset(x, (i,), +1)
                    if ok:
                        c = (f(x[i]) + 1 + f.half_d * (r - 1 - i)) * a_coefficient(-1, y, (i,), f)
                        terms.append((psi(y, f).poly, c))
                return multiply_total(psi(x, f).poly), _lin_comb(terms, r, f)

            run.case(_p(f, family="phi-lowering", x=x), phi_minus)
            run.case(_p(f, family="psi-lowering", x=x), psi_minus)
            run.case(_p(f, family="phi-raising", x=x), phi_plus)
            run.case(_p(f, family="psi-raising", x=x), psi_plus)
            for l in range(r + 1):

                def e_pieri(x=x, f=f, l=l):
                    terms = []
                    for J in subsets(r, l):
                        y, ok = shift_by_subset(x, J, +1)
                        if ok:
                            terms.append((phi(y, f).poly, a_coefficient(+1, x, J, f)))
                    return elementary(r, l, f) * phi(x, f).poly, _lin_comb(terms, r, f)

                run.case(_p(f, family="elementary", x=x, l=l), e_pieri)
            # |z| is e_{r,1}: both raising formulas must agree
            if r >= 1:
                run.case(
                    _p(f, family="e1-vs-total", x=x),
                    lambda x=x, f=f: (multiply_total(phi(x, f).poly), elementary(r, 1, f) * phi(x, f).poly),
                )
    return rep


def verify_commutator(cfg: SuiteConfig) -> VerificationReport:
    """[|d_z|, |z|] f = r f."""
    rep = VerificationReport("commutator", SUITE_ANCHORS["commutator"])
    run = _Runner(rep, cfg)
    for f in cfg.fields:
        for x in cfg.grid():
            def compute(x=x, f=f):
                g = phi(x, f).poly
                lhs = apply_total_derivative(multiply_total(g)) - multiply_total(apply_total_derivative(g))
                return lhs, g.scale(cfg.r)

            run.case(_p(f, x=x), compute)
    return rep


# ---------------------------------------------------------------------------
# twisted Pieri


def twisted_rhs_phi(x, l, f) -> UPoly:
    r = len(x)
    zero = MultiPoly.zero(r, f)
    s = s_shift(x, f)
    out = UPoly([], zero)
    for J in subsets(r, l):
        c = f.one
        for j in J:
            c = c * s[j]
        if c:
            c = c * a_coefficient(-1, x, J, f)
        y, _ = shift_by_subset(x, J, -1)
        if _require_partition(y, c) and c:
            out = out + (eigen_poly_I(x, complement(J, r), f) * c).times_poly(phi(y, f).poly)
    return out


def twisted_rhs_psi(x, l, f) -> UPoly:
    r = len(x)
    out = UPoly([], MultiPoly.zero(r, f))
    for J in subsets(r, l):
        y, ok = shift_by_subset(x, J, -1)
        if ok:
            c = a_coefficient(+1, y, J, f)
            out = out + (eigen_poly_I(x, complement(J, r), f) * c).times_poly(psi(y, f).poly)
    return out


def verify_twisted_pieri(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("twisted-pieri", SUITE_ANCHORS["twisted-pieri"])
    run = _Runner(rep, cfg)
    r = cfg.r
    for f in cfg.fields:
        for x in cfg.grid():
            for l in range(r + 1):
                cache = {}

                def twist(x=x, f=f, l=l, cache=cache):
                    if "t" not in cache:
                        cache["t"] = apply_ad_twist(l, jack(x, f).poly)
                    return cache["t"]

                def phi_case(x=x, f=f, l=l):
                    lhs = twist().map(lambda c: c.scale(1 / eval_at_ones(x, f)))
                    return lhs, twisted_rhs_phi(x, l, f)

                def psi_case(x=x, f=f, l=l):
                    lhs = twist().map(lambda c: c.scale(1 / own_value(x, f)))
                    return lhs, twisted_rhs_psi(x, l, f)

                def phi_coef(x=x, f=f, l=l):
                    scale = f.half_d**l / eval_at_ones(x, f)
                    lhs = twist().coeff(r - l).scale(scale)
                    s = s_shift(x, f)
                    terms = []
                    for J in subsets(r, l):
                        y, ok = shift_by_subset(x, J, -1)
                        if ok:
                            c = a_coefficient(-1, x, J, f)
                            for j in J:
                                c = c * s[j]
                            terms.append((phi(y, f).poly, c))
                    return lhs, _lin_comb(terms, r, f)

                def psi_coef(x=x, f=f, l=l):
                    scale = f.half_d**l / own_value(x, f)
                    lhs = twist().coeff(r - l).scale(scale)
                    terms = []
                    for J in subsets(r, l):
                        y, ok = shift_by_subset(x, J, -1)
                        if ok:
                            terms.append((psi(y, f).poly, a_coefficient(+1, y, J, f)))
                    return lhs, _lin_comb(terms, r, f)

                run.case(_p(f, form="phi", x=x, l=l), phi_case)
                run.case(_p(f, form="psi", x=x, l=l), psi_case)
                run.case(_p(f, form="phi-coefficient", x=x, l=l), phi_coef)
                run.case(_p(f, form="psi-coefficient", x=x, l=l), psi_coef)
    return rep


# ---------------------------------------------------------------------------
# mysterious summation


def mysterious_sides(I, x, f):
    """(first sum, second sum); their difference should be |I|."""
    r = len(x)
    s1 = f.zero
    s2 = f.zero
    for i in I:
        si = f(x[i]) + f.half_d * (r - 1 - i)
        xp, _ = shift_by_subset(x, (i,), +1)
        xm, _ = shift_by_subset(x, (i,), -1)
        s1 = s1 + (si + 1) * a_coefficient(-1, xp, (i,), f, within=I) * a_coefficient(+1, x, (i,), f, within=I)
        s2 = s2 + si * a_coefficient(+1, xm, (i,), f, within=I) * a_coefficient(-1, x, (i,), f, within=I)
    return s1, s2


def mysterious_difference(I, x, f):
    """First sum minus second sum.

    At a specialized d a partition x can put a vanishing factor against a
    pole in one term.  The identity is one in Q(d), so such points are
    evaluated over Q(d) and the difference is specialized afterwards.
    """
    try:
        s1, s2 = mysterious_sides(I, x, f)
        return s1 - s2
    except PoleInA:
        if f.symbolic or not is_partition(x):
            raise
    s1, s2 = mysterious_sides(I, x, Field(None))
    return eval_at_d(s1 - s2, f.d_value)


def verify_mysterious_sum(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("mysterious-sum", SUITE_ANCHORS["mysterious-sum"])
    run = _Runner(rep, cfg)
    r = cfg.r
    for f in cfg.fields:
        all_I = subsets(r)

        def guard(x, f=f):
            for I in all_I:
                mysterious_sides(I, x, f)

        points = list(cfg.grid()) + _random_vectors(cfg, cfg.random_points, guard, "mysterious", f)
        for x in points:
            for I in all_I:
                def compute(I=I, x=x, f=f):
                    return mysterious_difference(I, x, f), f(len(I))

                run.case(_p(f, I=format_subset(I), x=x), compute)
    return rep


# ---------------------------------------------------------------------------
# interpolation Jack identities


def _interp_at(k, x, f):
    return eval_interp(k, shifted_point(x, f), f)


def _diff_guard(x, f):
    for J in subsets(len(x)):
        a_coefficient(-1, x, J, f)


def difference_coefficient_sides(k, x, l, f):
    r = len(x)
    s = s_shift(x, f)
    lhs = elementary_scalar(s_shift(k, f), l, f) * _interp_at(k, x, f)
    rhs = f.zero
    for J in subsets(r):
        if len(J) > l:
            continue
        c = f.one
        for j in J:
            c = c * s[j]
        if not c:
            continue
        c = c * a_coefficient(-1, x, J, f)
        if not c:
            continue
        y, _ = shift_by_subset(x, J, -1)
        rest = [s[i] for i in complement(J, r)]
        term = _interp_at(k, y, f) * elementary_scalar(rest, l - len(J), f) * c
        rhs = rhs + (-term if len(J) % 2 else term)
    return lhs, rhs


def verify_interp_vanishing(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("interp-vanishing", SUITE_ANCHORS["interp-vanishing"])
    run = _Runner(rep, cfg)
    for f in cfg.fields:
        for k in cfg.grid():
            n = sum(k)
            for m in partitions_of(n, cfg.r) + partitions_of(n + 1, cfg.r):
                if not contains(k, m):
                    run.case(_p(f, k=k, m=m), lambda k=k, m=m, f=f: (_interp_at(k, m, f), f.zero))
            run.case(
                _p(f, k=k, check="own-value-nonzero"),
                lambda k=k, f=f: (bool(_interp_at(k, k, f)), True),
            )
    return rep


def verify_difference_equation(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("difference-equation", SUITE_ANCHORS["difference-equation"])
    run = _Runner(rep, cfg)
    r = cfg.r
    for f in cfg.fields:
        for k in cfg.grid():
            points = list(cfg.grid()) + _random_vectors(
                cfg, cfg.random_points, lambda x, f=f: _diff_guard(x, f), "difference", f, format_partition(k)
            )
            for x in points:
                def full(k=k, x=x, f=f):
                    lhs = apply_difference_operator(k, x, f)
                    return lhs, eigen_I(k, f) * _interp_at(k, x, f)

                run.case(_p(f, k=k, x=x), full)
                for l in range(r + 1):
                    run.case(
                        _p(f, k=k, x=x, l=l, form="coefficient"),
                        lambda k=k, x=x, l=l, f=f: difference_coefficient_sides(k, x, l, f),
                    )
    return rep


def _ratio(k, x, f):
    return _interp_at(k, x, f) / eval_at_ones(k, f)


def interp_pieri_sides(k, x, f):
    r = len(k)
    lhs = eigen_I(x, f) * _ratio(k, x, f)
    rhs = UPoly([], f.zero)
    for J in subsets(r):
        y, ok = shift_by_subset(k, J, +1)
        if ok:
            rhs = rhs + eigen_poly_I(k, complement(J, r), f) * (_ratio(y, x, f) * a_coefficient(+1, k, J, f))
    return lhs, rhs


def interp_pieri_coefficient_sides(k, x, l, f):
    r = len(k)
    sk = s_shift(k, f)
    lhs = elementary_scalar(s_shift(x, f), l, f) * _ratio(k, x, f)
    rhs = f.zero
    for J in subsets(r):
        if len(J) > l:
            continue
        y, ok = shift_by_subset(k, J, +1)
        if ok:
            rest = [sk[i] for i in complement(J, r)]
            rhs = rhs + _ratio(y, x, f) * elementary_scalar(rest, l - len(J), f) * a_coefficient(+1, k, J, f)
    return lhs, rhs


def verify_interp_pieri(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("interp-pieri", SUITE_ANCHORS["interp-pieri"])
    run = _Runner(rep, cfg)
    r = cfg.r
    for f in cfg.fields:
        for k in cfg.grid():
            rng_pts = _random_vectors(cfg, cfg.random_points, lambda x: None, "interp-pieri", f, format_partition(k))
            for x in list(cfg.grid()) + rng_pts:
                run.case(_p(f, k=k, x=x), lambda k=k, x=x, f=f: interp_pieri_sides(k, x, f))
                for l in range(r + 1):
                    run.case(
                        _p(f, k=k, x=x, l=l, form="coefficient"),
                        lambda k=k, x=x, l=l, f=f: interp_pieri_coefficient_sides(k, x, l, f),
                    )
    return rep


def binomial_sides(x, f):
    """Psi-coefficients of Phi_x(1 + z) vs the binomial coefficients."""
    r = len(x)
    shifted = phi(x, f).poly.substitute_shift([1] * r)
    got = {k: c * own_value(k, f) for k, c in jack_decompose(shifted).items()}
    want = {}
    for k in partitions_up_to(sum(x), r):
        if contains(k, x):
            c = binomial_coefficient(k, x, f)
            if c:
                want[k] = c
    return got, want


def verify_binomial(cfg: SuiteConfig) -> VerificationReport:
    rep = VerificationReport("binomial", SUITE_ANCHORS["binomial"])
    run = _Runner(rep, cfg)
    for f in cfg.fields:
        for x in cfg.grid():
            def compute(x=x, f=f):
                got, want = binomial_sides(x, f)
                return _Coeffs(got), _Coeffs(want)

            run.case(_p(f, x=x), compute)
    return rep


class _Coeffs(dict):
    """Partition-indexed coefficients with a readable difference."""

    def __sub__(self, other):
        keys = sorted(set(self) | set(other), key=lambda k: (sum(k), k))
        return {format_partition(k): str(self.get(k, 0) - other.get(k, 0)) for k in keys if self.get(k, 0) != other.get(k, 0)}


# ---------------------------------------------------------------------------

SUITE_ANCHORS = {
    "schur-oracle": ("jack-at-d2-is-schur",),
    "d-eigen": ("jack-differential-equation",),
    "sekiguchi-eigen": ("sekiguchi-generating-eigenvalue",),
    "classical-pieri": (
        "phi-pieri-lowering",
        "psi-pieri-lowering",
        "phi-pieri-raising",
        "psi-pieri-raising",
        "jack-elementary-pieri",
    ),
    "commutator": ("total-derivative-commutator",),
    "twisted-pieri": (
        "twisted-pieri-phi",
        "twisted-pieri-psi",
        "twisted-pieri-phi-top-coefficient",
        "twisted-pieri-psi-top-coefficient",
    ),
    "mysterious-sum": ("mysterious-summation",),
    "interp-vanishing": ("interpolation-vanishing",),
    "binomial": ("binomial-formula",),
    "difference-equation": ("knop-sahi-difference-equation", "difference-equation-coefficients"),
    "interp-pieri": ("interpolation-pieri", "interpolation-pieri-coefficients"),
    "kernel-symmetry": ("kernel-symmetry",),
    "kernel-intertwining": ("kernel-intertwining",),
}


def _kernel_symmetry(cfg):
    from .kernel import verify_kernel_symmetry

    return verify_kernel_symmetry(cfg)


def _kernel_intertwining(cfg):
    from .kernel import verify_kernel_intertwining

    return verify_kernel_intertwining(cfg)


SUITES = {
    "schur-oracle": verify_schur_oracle,
    "d-eigen": verify_d_eigen,
    "sekiguchi-eigen": verify_sekiguchi_eigen,
    "classical-pieri": verify_classical_pieri,
    "commutator": verify_commutator,
    "twisted-pieri": verify_twisted_pieri,
    "mysterious-sum": verify_mysterious_sum,
    "interp-vanishing": verify_interp_vanishing,
    "binomial": verify_binomial,
    "difference-equation": verify_difference_equation,
    "interp-pieri": verify_interp_pieri,
    "kernel-symmetry": _kernel_symmetry,
    "kernel-intertwining": _kernel_intertwining,
}


def run_suite(name: str, cfg: SuiteConfig) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(name)
    t0 = time.perf_counter()
    rep = SUITES[name](cfg)
    rep.millis = (time.perf_counter() - t0) * 1000
    return rep


def coverage_manifest() -> list:
    return [a for name in SUITES for a in SUITE_ANCHORS[name]]
