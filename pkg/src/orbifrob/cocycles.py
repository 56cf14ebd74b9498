"""2-cocycles on finite groups and the twisted group rings they generate.

The distinguished family here is the normalized symmetric-group cocycle
``alpha(s, s') = lambda^((|s| + |s'| - |ss'|)/2)``: it is 1 on transversal
pairs, it is fixed by its value on a transposition pair, its conjugation
scalar ``eps`` is identically 1, and ``lambda = -1`` is the sign twist that
turns the symmetric-product algebra into the Hilbert-scheme ring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import exactnum as ex
from ._report import Report
from .gfrob import GFrobeniusAlgebra
from .groups import FiniteGroup, degree, symmetric_group


@dataclass
class Cocycle2:
    """alpha: G x G -> k*, stored as a full order x order value table."""

    group: FiniteGroup
    values: list  # values[g][h]

    def __post_init__(self):
        n = self.group.order
        if len(self.values) != n or any(len(row) != n for row in self.values):
            raise ValueError("cocycle value table must be order x order")
        for g in range(n):
            for h in range(n):
                if self.values[g][h] == 0:
                    raise ValueError(
                        f"cocycle value at ({self.group.labels[g]}, {self.group.labels[h]}) is zero"
                    )

    def value(self, g: int, h: int) -> ex.Rat:
        return self.values[g][h]

    def validate(self) -> Report:
        return validate(self)

    def __mul__(self, other: "Cocycle2") -> "Cocycle2":
        if self.group != other.group:
            raise ValueError("cocycle product requires one common group")
        n = self.group.order
        return Cocycle2(self.group, [
            [ex.norm(self.values[g][h] * other.values[g][h]) for h in range(n)] for g in range(n)
        ])

    def inverse(self) -> "Cocycle2":
        n = self.group.order
        return Cocycle2(self.group, [
            [ex.norm(1 / Fraction(self.values[g][h])) for h in range(n)] for g in range(n)
        ])


@dataclass
class SuperTwist:
    """A parity homomorphism G -> Z/2."""

    group: FiniteGroup
    parity: list  # 0/1 per element

    def __post_init__(self):
        if len(self.parity) != self.group.order:
            raise ValueError("parity table length must equal the group order")
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parities must be 0 or 1")

    def parity_of(self, g: int) -> int:
        return self.parity[g]

    def validate_homomorphism(self) -> None:
        G = self.group
        for g in G.elements():
            for h in G.elements():
                if (self.parity[g] + self.parity[h] - self.parity[G.mul(g, h)]) % 2:
                    raise ValueError(
                        f"parity map is not a homomorphism at "
                        f"({G.labels[g]}, {G.labels[h]})"
                    )


def trivial_cocycle(group: FiniteGroup) -> Cocycle2:
    return Cocycle2(group, [[1] * group.order for _ in range(group.order)])


def zero_supertwist(group: FiniteGroup) -> SuperTwist:
    return SuperTwist(group, [0] * group.order)


def coboundary(group: FiniteGroup, scale: list) -> Cocycle2:
    """d(scale)(g,h) = scale(g) scale(h) / scale(gh); scale(e) must be 1."""
    if scale[group.identity] != 1:
        raise ValueError("coboundary scaling must send the identity to 1")
    if any(s == 0 for s in scale):
        raise ValueError("coboundary scaling values must be nonzero")
    n = group.order
    return Cocycle2(group, [
        [ex.norm(Fraction(scale[g]) * Fraction(scale[h]) / Fraction(scale[group.mul(g, h)]))
         for h in range(n)]
        for g in range(n)
    ])


def validate(alpha: Cocycle2) -> Report:
    """Exhaustive cocycle-law and normalization check."""
    report = Report()
    G = alpha.group
    vals = alpha.values
    e = G.identity

    witness = None
    count = 0
    for g in G.elements():
        count += 2
        if (vals[g][e] != 1 or vals[e][g] != 1) and witness is None:
            witness = {"g": G.labels[g]}
    report.add("normalization", "alpha(g,e) = alpha(e,g) = 1", witness is None, count, witness)

    witness = None
    count = 0
    mul = G.mul
    for g in G.elements():
        for h in G.elements():
            gh = mul(g, h)
            vgh = vals[g][h]
            vg = vals[g]
            row_gh = vals[gh]
            for k in G.elements():
                count += 1
                if vgh * row_gh[k] != vg[mul(h, k)] * vals[h][k] and witness is None:
                    witness = {"g": G.labels[g], "h": G.labels[h], "k": G.labels[k],
                               "lhs": ex.fmt_rat(ex.norm(vgh * row_gh[k])),
                               "rhs": ex.fmt_rat(ex.norm(vals[g][mul(h, k)] * vals[h][k]))}
    report.add("cocycle-law", "alpha(g,h) alpha(gh,k) = alpha(g,hk) alpha(h,k)",
               witness is None, count, witness)

    witness = None
    count = 0
    for g in G.elements():
        count += 1
        if vals[g][G.inv(g)] != vals[G.inv(g)][g] and witness is None:
            witness = {"g": G.labels[g]}
    report.add("inverse-symmetry", "alpha(g,g^-1) = alpha(g^-1,g)", witness is None, count, witness)
    return report


def epsilon(alpha: Cocycle2) -> list:
    """Conjugation scalars eps(g,h) = alpha(g,h) / alpha(ghg^-1, g)."""
    G = alpha.group
    n = G.order
    return [
        [ex.norm(Fraction(alpha.values[g][h]) / Fraction(alpha.values[G.conj(g, h)][g]))
         for h in range(n)]
        for g in range(n)
    ]


def twisted_group_ring(group: FiniteGroup, alpha: Cocycle2 | None = None,
                       sigma: SuperTwist | None = None) -> GFrobeniusAlgebra:
    """The twisted group ring as a group-graded Frobenius algebra.

    One-dimensional sectors spanned by ``g^``; product ``g^ h^ = alpha(g,h)
    (gh)^``, pairing ``eta(g^, (g^-1)^) = alpha(g,g^-1)``, action by twisted
    conjugation with scalar ``(-1)^{sigma(g)sigma(h)} eps(g,h)``, character
    ``(-1)^{sigma(g)}``, sector parity ``sigma(g)``.
    """
    if alpha is None:
        alpha = trivial_cocycle(group)
    if alpha.group != group:
        raise ValueError("cocycle is defined over a different group")
    rep = validate(alpha)
    if not rep.passed:
        raise ValueError(f"invalid cocycle: {rep.failures()[0].witness}")
    if sigma is None:
        sigma = zero_supertwist(group)
    if sigma.group != group:
        raise ValueError("super twist is defined over a different group")
    sigma.validate_homomorphism()

    n = group.order
    eps = epsilon(alpha)
    product = {}
    action = {}
    for g in range(n):
        sg = sigma.parity[g]
        for h in range(n):
            product[(g, h)] = {(0, 0): {0: alpha.values[g][h]}}
            coeff = eps[g][h]
            if (sg * sigma.parity[h]) % 2:
                coeff = ex.norm(-coeff)
            action[(g, h)] = [[coeff]]
    metric = [[[alpha.values[g][group.inv(g)]]] for g in range(n)]
    character = [(-1 if sigma.parity[g] else 1) for g in range(n)]

    return GFrobeniusAlgebra(
        name=f"k^(alpha,sigma)[{'S' if group.perms else 'G'}]",
        group=group,
        sector_dims=[1] * n,
        sector_degrees=[[0] for _ in range(n)],
        sector_parities=[[sigma.parity[g]] for g in range(n)],
        sector_labels=[["1"] for _ in range(n)],
        product=product,
        action=action,
        metric=metric,
        character=character,
        unit=[1],
    )


def normalized_sn_cocycle(n: int, lam: ex.Rat) -> Cocycle2:
    """The normalized S_n cocycle fixed by alpha(tau, tau) = lambda.

    Values are lambda^((|s|+|s'|-|ss'|)/2); transversal pairs get 1.
    """
    lam = ex.rat(lam) if isinstance(lam, str) else ex.norm(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    group = symmetric_group(n)
    perms = group.perms
    degs = [degree(p) for p in perms]
    powers = {0: 1}
    values = []
    for gi, p in enumerate(perms):
        row = []
        for hi, q in enumerate(perms):
            expo = degs[gi] + degs[hi] - degs[group.mul(gi, hi)]
            if expo < 0 or expo % 2:
                raise ValueError(f"length defect is negative or odd at ({p}, {q})")
            expo //= 2
            if expo not in powers:
                powers[expo] = ex.norm(Fraction(lam) ** expo)
            row.append(powers[expo])
        values.append(row)
    return Cocycle2(group, values)


def sign_supertwist(n: int) -> SuperTwist:
    """The parity homomorphism s -> |s| mod 2 on S_n."""
    group = symmetric_group(n)
    return SuperTwist(group, [degree(p) % 2 for p in group.perms])


# -- JSON document -----------------------------------------------------------

def to_json_dict(alpha: Cocycle2) -> dict:
    G = alpha.group
    if G.perms is not None:
        group_doc: dict = {"type": "symmetric", "n": G.perms[0].n}
    else:
        group_doc = {"type": "table", "labels": list(G.labels), "table": [list(r) for r in G.table]}
    values = []
    for g in G.elements():
        for h in G.elements():
            if alpha.values[g][h] != 1:
                values.append([G.labels[g], G.labels[h], ex.fmt_rat(alpha.values[g][h])])
    return {"group": group_doc, "values": values}


def from_json_dict(doc: dict) -> Cocycle2:
    gdoc = doc["group"]
    if gdoc.get("type") == "symmetric":
        group = symmetric_group(gdoc["n"])
    else:
        group = FiniteGroup(gdoc["labels"], gdoc["table"])
    n = group.order
    values = [[1] * n for _ in range(n)]
    for glabel, hlabel, v in doc.get("values", []):
        values[group.index_of(glabel)][group.index_of(hlabel)] = ex.rat(v)
    return Cocycle2(group, values)


def save(alpha: Cocycle2, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(alpha), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load(path) -> Cocycle2:
    with open(path, encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))
