"""Labelings and the three verification modes.

A *total prime labeling* assigns ``1..n+m`` bijectively to the vertices and
edges of a graph so that adjacent vertex labels are coprime and, at every
vertex of degree at least two, the labels on its incident edges have
collective gcd 1.  A *prime labeling* is a bijection of ``1..n`` onto the
vertices with coprime endpoints on every edge; a *coprime labeling* relaxes
the range to an injection into ``1..k`` for some ``k >= n``.

Verifiers report every violation, not just the first, which keeps
construction bugs debuggable.  Vertices of degree 0 or 1 carry no incident
edge condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .errors import BoundTooSmallError, SizeMismatchError
from .graphs import Edge, Graph

NON_BIJECTIVE = "non_bijective"
ADJACENT_NOT_COPRIME = "adjacent_not_coprime"
INCIDENT_SHARED_FACTOR = "incident_shared_factor"


@dataclass(frozen=True)
class Violation:
    """One broken constraint.

    ``kind`` is one of the module constants.  ``vertices`` are the involved
    vertex indices (the endpoint pair for coprimality, the hub vertex for a
    shared incident factor).  ``label`` is the offending label for
    bijectivity issues, ``gcd`` the shared factor otherwise.
    """

    kind: str
    vertices: tuple[int, ...] = ()
    label: Optional[int] = None
    gcd: Optional[int] = None
    note: str = ""

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.vertices:
            out["vertices"] = list(self.vertices)
        if self.label is not None:
            out["label"] = self.label
        if self.gcd is not None:
            out["gcd"] = self.gcd
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Labeling:
    """Vertex labels by index plus an edge -> label mapping.

    Vertex-only labelings (prime / coprime) leave ``edge_labels`` empty.
    """

    vertex_labels: list[int]
    edge_labels: dict[Edge, int] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "vertex_labels": list(self.vertex_labels),
            "edge_labels": [
                [list(e), lab] for e, lab in sorted(self.edge_labels.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Labeling":
        edge_labels = {}
        for pair, lab in data.get("edge_labels", []):
            u, v = pair
            edge_labels[(u, v) if u < v else (v, u)] = lab
        return cls(list(data["vertex_labels"]), edge_labels)


@dataclass
class VerificationReport:
    valid: bool
    violations: list[Violation]

    @classmethod
    def from_violations(cls, violations: list[Violation]) -> "VerificationReport":
        return cls(not violations, list(violations))

    def to_json_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def _check_shape(g: Graph, labeling: Labeling, with_edges: bool) -> None:
    if len(labeling.vertex_labels) != g.n:
        raise SizeMismatchError(
            f"{len(labeling.vertex_labels)} vertex labels for order {g.n}"
        )
    if with_edges:
        if set(labeling.edge_labels) != set(g.edges):
            raise SizeMismatchError("edge label keys do not match the edge set")
    elif labeling.edge_labels:
        raise SizeMismatchError("vertex-only check, but edge labels present")


def _range_violations(labels, subjects, limit: int, exact: bool) -> list[Violation]:
    """Injectivity into 1..limit; when exact, every value must be hit."""
    out = []
    seen: dict[int, int] = {}
    for lab, subject in zip(labels, subjects):
        if not 1 <= lab <= limit:
            out.append(
                Violation(NON_BIJECTIVE, label=lab, note=f"out of range at {subject}")
            )
        elif lab in seen:
            out.append(
                Violation(
                    NON_BIJECTIVE,
                    label=lab,
                    note=f"duplicate at {subject} and {seen[lab]}",
                )
            )
        else:
            seen[lab] = subject
    if exact and not out and len(seen) != limit:
        missing = min(set(range(1, limit + 1)) - set(seen))
        out.append(Violation(NON_BIJECTIVE, label=missing, note="label never used"))
    return out


def _coprime_violations(g: Graph, labeling: Labeling) -> list[Violation]:
    out = []
    vl = labeling.vertex_labels
    for u, v in g.edges:
        d = gcd(vl[u], vl[v])
        if d != 1:
            out.append(Violation(ADJACENT_NOT_COPRIME, (u, v), gcd=d))
    return out


def verify_total_prime(g: Graph, labeling: Labeling) -> VerificationReport:
    """Check bijectivity onto 1..n+m, edge coprimality, and incident gcds."""
    _check_shape(g, labeling, with_edges=True)
    total = g.n + g.m
    labels = list(labeling.vertex_labels) + [labeling.edge_labels[e] for e in g.edges]
    subjects = list(range(g.n)) + [e for e in g.edges]
    violations = _range_violations(labels, subjects, total, exact=True)
    violations += _coprime_violations(g, labeling)
    for v in range(g.n):
        if g.degree(v) < 2:
            continue
        d = 0
        for u in g.adjacency[v]:
            e = (u, v) if u < v else (v, u)
            d = gcd(d, labeling.edge_labels[e])
        if d != 1:
            violations.append(Violation(INCIDENT_SHARED_FACTOR, (v,), gcd=d))
    return VerificationReport.from_violations(violations)


def verify_prime(g: Graph, labeling: Labeling) -> VerificationReport:
    """Check a vertex bijection onto 1..n with coprime adjacent labels."""
    _check_shape(g, labeling, with_edges=False)
    violations = _range_violations(
        labeling.vertex_labels, list(range(g.n)), g.n, exact=True
    )
    violations += _coprime_violations(g, labeling)
    return VerificationReport.from_violations(violations)


def verify_coprime(g: Graph, labeling: Labeling, bound: int) -> VerificationReport:
    """Check an injection into 1..bound with coprime adjacent labels."""
    if bound < g.n:
        raise BoundTooSmallError(f"bound {bound} below vertex count {g.n}")
    _check_shape(g, labeling, with_edges=False)
    violations = _range_violations(
        labeling.vertex_labels, list(range(g.n)), bound, exact=False
    )
    violations += _coprime_violations(g, labeling)
    return VerificationReport.from_violations(violations)
