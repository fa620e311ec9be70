"""Degree-truncated kernel sum_m Psi_m(z) Phi_m(w) and its intertwining relations.

The kernel is kept termwise as pairs (Psi_m in z, Phi_m in w).  Two-sided
expressions are compared as dicts keyed by (z-exponent, w-exponent).
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import format_partition, partitions_of, partitions_up_to, shift_by_subset, subsets
from .field import Field
from .identities import SUITE_ANCHORS, SuiteConfig, VerificationReport, _Runner
from .jack import a_coefficient, phi, psi
from .operators import apply_ad_twist
from .polyring import MultiPoly, elementary


@dataclass(frozen=True, eq=False)
class TruncatedKernel:
    max_weight: int
    rank: int
    field: Field
    terms: dict  # partition -> (Psi_m(z), Phi_m(w))

    def coefficient(self, ez, ew):
        """Coefficient of z^ez w^ew in the truncated kernel."""
        return _Tensor.from_pairs(self.terms.values()).get((tuple(ez), tuple(ew)), self.field.zero)


def build_kernel(N: int, r: int, field: Field) -> TruncatedKernel:
    terms = {m: (psi(m, field).poly, phi(m, field).poly) for m in partitions_up_to(N, r)}
    return TruncatedKernel(N, r, field, terms)


class _Tensor(dict):
    """Sparse element of C[z] (x) C[w]."""

    @classmethod
    def from_pairs(cls, pairs):
        out = cls()
        for a, b in pairs:
            out.add(a, b)
        return out

    def add(self, a: MultiPoly, b: MultiPoly, c=1):
        for ez, cz in a.terms.items():
            for ew, cw in b.terms.items():
                key = (ez, ew)
                v = self.get(key)
                v = cz * cw * c if v is None else v + cz * cw * c
                if v:
                    self[key] = v
                else:
                    self.pop(key, None)
        return self

    def __sub__(self, other):
        out = _Tensor(self)
        for k, v in other.items():
            w = out.get(k)
            w = -v if w is None else w - v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return out

    def __str__(self):
        items = sorted(self.items())
        return " + ".join(f"({c})*z^{list(ez)}*w^{list(ew)}" for (ez, ew), c in items) or "0"


def verify_symmetry(kern: TruncatedKernel, cfg: SuiteConfig | None = None) -> VerificationReport:
    rep = VerificationReport("kernel-symmetry", SUITE_ANCHORS["kernel-symmetry"])
    run = _Runner(rep, cfg or SuiteConfig(r=kern.rank))
    f = kern.field
    for n in range(kern.max_weight + 1):
        layer = partitions_of(n, kern.rank)

        def compute(layer=layer):
            lhs = _Tensor.from_pairs(kern.terms[m] for m in layer)
            rhs = _Tensor.from_pairs((kern.terms[m][1], kern.terms[m][0]) for m in layer)
            return lhs, rhs

        run.case({"d": str(f), "N": kern.max_weight, "weight": n}, compute)
    return rep


def _twisted_H(l, g):
    return apply_ad_twist(l, g, p=l)


def verify_intertwining(kern: TruncatedKernel, l: int, cfg: SuiteConfig | None = None) -> VerificationReport:
    """Compare both sides on w-degrees <= N - l, where truncation cannot interfere.

    Besides the end-to-end relation, the two intermediate sums from the
    reindexing argument are checked against each side.
    """
    r, f, N = kern.rank, kern.field, kern.max_weight
    if not 0 <= l <= r:
        raise ValueError(f"l={l} outside 0..{r}")
    rep = VerificationReport("kernel-intertwining", SUITE_ANCHORS["kernel-intertwining"])
    run = _Runner(rep, cfg or SuiteConfig(r=r))
    e_l = elementary(r, l, f)
    scale = f.half_d**l
    for n in range(N - l + 1):
        top = partitions_of(n, r)  # |m| = n on the operator side
        low = partitions_of(n - l, r) if n >= l else ()

        def lhs_layer(top=top):
            out = _Tensor()
            for m in top:
                ps, ph = kern.terms[m]
                out.add(_twisted_H(l, ps).scale(scale), ph)
            return out

        def rhs_layer(low=low):
            out = _Tensor()
            for m in low:
                ps, ph = kern.terms[m]
                out.add(ps, e_l * ph)
            return out

        def lowered_layer(top=top):
            # sum_m sum_J Psi_{m - eps_J}(z) A_{+,J}(m - eps_J) Phi_m(w)
            out = _Tensor()
            for m in top:
                for J in subsets(r, l):
                    y, ok = shift_by_subset(m, J, -1)
                    if ok:
                        out.add(kern.terms[y][0], kern.terms[m][1], a_coefficient(+1, y, J, f))
            return out

        def raised_layer(low=low):
            # sum_m Psi_m(z) sum_J Phi_{m + eps_J}(w) A_{+,J}(m)
            out = _Tensor()
            for m in low:
                for J in subsets(r, l):
                    y, ok = shift_by_subset(m, J, +1)
                    if ok:
                        out.add(kern.terms[m][0], phi(y, f).poly, a_coefficient(+1, m, J, f))
            return out

        params = {"d": str(f), "N": N, "l": l, "w_degree": n}
        run.case(dict(params, step="end-to-end"), lambda a=lhs_layer, b=rhs_layer: (a(), b()))
        run.case(dict(params, step="operator-side"), lambda a=lhs_layer, b=lowered_layer: (a(), b()))
        run.case(dict(params, step="reindexing"), lambda a=lowered_layer, b=raised_layer: (a(), b()))
        run.case(dict(params, step="multiplication-side"), lambda a=raised_layer, b=rhs_layer: (a(), b()))
    return rep


def _merge(into: VerificationReport, rep: VerificationReport):
    into.cases += rep.cases
    into.passed += rep.passed
    if into.first_failure is None and rep.first_failure is not None:
        into.first_failure = rep.first_failure


def verify_kernel_symmetry(cfg: SuiteConfig) -> VerificationReport:
    out = VerificationReport("kernel-symmetry", SUITE_ANCHORS["kernel-symmetry"])
    for f in cfg.fields:
        _merge(out, verify_symmetry(build_kernel(cfg.max_weight, cfg.r, f), cfg))
    return out


def verify_kernel_intertwining(cfg: SuiteConfig) -> VerificationReport:
    out = VerificationReport("kernel-intertwining", SUITE_ANCHORS["kernel-intertwining"])
    for f in cfg.fields:
        kern = build_kernel(cfg.max_weight, cfg.r, f)
        for l in range(cfg.r + 1):
            _merge(out, verify_intertwining(kern, l, cfg))
    return out


def kernel_text(kern: TruncatedKernel) -> str:
    lines = []
    for m, (ps, ph) in kern.terms.items():
        lines.append(f"[{format_partition(m)}] ({ps.to_pretty('z')}) * ({ph.to_pretty('w')})")
    return "\n".join(lines)
