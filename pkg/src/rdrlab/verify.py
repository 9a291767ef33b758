"""Executable checks of the parameterized classification claims.

Each verifier scans a parameter range, compares the computed RDR status
against the closed-form predicate, and reports disagreements.  Girth and
signature values are compared against the claimed classification too,
but those comparisons are reported side by side rather than asserted:
the claim set is known to be internally inconsistent in a few spots
(conflicting values are recorded verbatim), and the harness's job is to
surface the computed truth next to every claim.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .families import (
    complete_bipartite,
    cycle,
    gp,
    htg,
    mobius,
    prism,
    valid_htg_parameters,
    wreath,
    xn,
)
from .graphs import Graph, girth, girth_signature, is_isomorphic
from .rainbow import solve_rdr
from .symmetry import is_vertex_transitive


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    parameters: dict
    total: int
    agree: int
    disagreements: tuple[dict, ...]
    elapsed_s: float
    extras: dict = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.disagreements

    def to_json_dict(self):
        return {
            "theorem": self.theorem,
            "parameters": self.parameters,
            "total": self.total,
            "agree": self.agree,
            "disagreements": list(self.disagreements),
            "elapsed_s": round(self.elapsed_s, 3),
            "extras": self.extras,
        }


def _scan(instances, predicate_name):
    """Compare computed RDR status with a predicate over (label, graph, predicted)."""
    disagreements = []
    total = 0
    for label, graph, predicted in instances:
        total += 1
        decision = solve_rdr(graph)
        computed = decision.status == "rdr"
        if decision.status == "undecided" or computed != predicted:
            disagreements.append(
                {
                    "instance": label,
                    "computed": decision.status,
                    "predicted": predicted,
                    "check": predicate_name,
                }
            )
    return total, disagreements


def verify_basic_families(max_n: int = 42) -> TheoremReport:
    """Cycles are 2-RDR iff 4 | n; prisms 3-RDR iff 6 | n; Mobius ladders
    3-RDR iff n = 3 (mod 6); wreaths 4-RDR iff 4 | n (n >= 4); K_{d,d} is
    d-RDR for every d."""
    start = time.time()
    instances = []
    for n in range(3, max_n + 1):
        instances.append((f"cycle:{n}", cycle(n), n % 4 == 0))
    for n in range(3, max_n // 2 + 1):
        instances.append((f"prism:{n}", prism(n), n % 6 == 0))
        instances.append((f"mobius:{n}", mobius(n), n % 6 == 3))
    for n in range(3, min(12, max_n // 2) + 1):
        instances.append((f"wreath:{n}", wreath(n), n >= 4 and n % 4 == 0))
    for d in range(1, 7):
        instances.append((f"kdd:{d}", complete_bipartite(d), True))
    total, disagreements = _scan(instances, "rdr-predicate")
    return TheoremReport(
        theorem="basic-families",
        parameters={"max_n": max_n},
        total=total,
        agree=total - len(disagreements),
        disagreements=tuple(disagreements),
        elapsed_s=time.time() - start,
    )


# Claimed (girth, signatures) for vertex-transitive 3-RDR members of the
# two parameterized families.  Where the claim set conflicts internally,
# every variant is listed and the computed value is reported next to them.

GP_SIGNATURE_CLAIMS_24_7 = ((10, 11, 11), (5, 5, 6))  # conflicting claims
XN_SIGNATURE_CLAIMS = ((5, 5, 6), (5, 6, 6))  # statement vs proof text


def _gp_claim(n: int, k: int):
    """Claimed (girth, admissible signatures) for a VT 3-RDR gp(n, k)."""
    if k == 1:
        return 4, ((1, 1, 2),)
    if (n, k) == (24, 5):
        return 8, ((8, 8, 8),)
    if (n, k) == (24, 7):
        return 8, GP_SIGNATURE_CLAIMS_24_7
    if n % 12 == 0 and k == n // 2 - 1:
        return 6, ((2, 2, 2),)
    if (
        n % 18 == 0
        and n >= 72
        and 17 <= k <= n // 2 - 2
        and k % 18 in (1, 17)
        and k * k % n == 1
    ):
        return 8, ((2, 2, 4),)
    if (
        n % 18 in (6, 12)
        and n >= 30
        and 5 <= k <= n // 2 - 2
        and k % 6 in (1, 5)
        and k * k % n == 1
    ):
        return 8, ((5, 5, 6),)
    return None


def verify_gp(max_n: int = 36, workers: int = 1) -> TheoremReport:
    """gp(n, k) is 3-RDR iff n = 0 (mod 6) and k = +-1 (mod 6); for the
    vertex-transitive 3-RDR members the girth/signature classification is
    reported against the claimed case values."""
    start = time.time()
    params = [(n, k) for n in range(3, max_n + 1) for k in range(1, (n - 1) // 2 + 1)]
    results = _parallel_map(_gp_one, params, workers)
    disagreements = []
    signature_reports = []
    vt_checks = []
    for (n, k), (status, vt, gi, sig) in zip(params, results):
        predicted = n % 6 == 0 and k % 6 in (1, 5)
        if status == "undecided" or (status == "rdr") != predicted:
            disagreements.append(
                {
                    "instance": f"gp:{n},{k}",
                    "computed": status,
                    "predicted": predicted,
                    "check": "rdr-predicate",
                }
            )
        vt_predicted = (k * k % n in (1, n - 1)) or (n, k) == (10, 2)
        if vt != vt_predicted:
            vt_checks.append({"instance": f"gp:{n},{k}", "computed": vt})
        if status == "rdr" and vt:
            claim = _gp_claim(n, k)
            entry = {
                "instance": f"gp:{n},{k}",
                "computed_girth": gi,
                "computed_signature": sig,
                "claimed_girth": claim[0] if claim else None,
                "claimed_signatures": list(claim[1]) if claim else None,
                "matches_claim": bool(claim and gi == claim[0] and sig in claim[1]),
            }
            signature_reports.append(entry)
    agree = len(params) - len(disagreements)
    return TheoremReport(
        theorem="gp-criterion",
        parameters={"max_n": max_n},
        total=len(params),
        agree=agree,
        disagreements=tuple(disagreements),
        elapsed_s=time.time() - start,
        extras={
            "signature_reports": signature_reports,
            "vt_predicate_mismatches": vt_checks,
        },
    )


def _gp_one(args):
    n, k = args
    g = gp(n, k)
    decision = solve_rdr(g)
    vt = is_vertex_transitive(g)
    gi = sig = None
    if decision.status == "rdr" and vt:
        rep = girth_signature(g)
        gi, sig = rep.girth, rep.graph_signature
    return decision.status, vt, gi, sig


def _htg_claim(m: int, n: int, ell: int, g: Graph, gi: int):
    """Claimed signatures for a 3-RDR htg(m, n, ell) of computed girth gi.

    The girth-6 cases overlap on isomorphic parameterizations and the
    claim set records every published variant for the overlap.
    """
    if gi == 4:
        return ((1, 1, 2),)
    order = m * n
    if order == 18:
        return ((4, 4, 4),)
    # the htg(m', 6, 0|3) class (equivalently htg(3, n', 3)), recognised in
    # any of its parameterizations; the claim set carries every published
    # variant for these overlapping cases
    in_class = n == 6 and (
        (m % 2 == 0 and ell == 0) or (m % 2 == 1 and ell == 3)
    )
    if not in_class and order % 6 == 0 and order >= 24:
        mm = order // 6
        in_class = is_isomorphic(g, htg(mm, 6, 0 if mm % 2 == 0 else 3))[0]
    if in_class:
        return ((3, 3, 3), (2, 3, 3), (2, 2, 3))
    return ((2, 2, 2),)


def verify_htg(max_order: int = 48, workers: int = 1) -> TheoremReport:
    """htg(m, n, ell) is 3-RDR iff m is even with n = ell = 0 (mod 6), or
    m is odd with n = 0 (mod 6) and ell = 3 (mod 6); signatures and the
    claimed cross-parameterization isomorphisms are reported as extras."""
    start = time.time()
    params = valid_htg_parameters(max_order)
    results = _parallel_map(_htg_one, params, workers)
    disagreements = []
    signature_reports = []
    for (m, n, ell), (status, gi, sig) in zip(params, results):
        predicted = (m % 2 == 0 and n % 6 == 0 and ell % 6 == 0) or (
            m % 2 == 1 and n % 6 == 0 and ell % 6 == 3
        )
        if status == "undecided" or (status == "rdr") != predicted:
            disagreements.append(
                {
                    "instance": f"htg:{m},{n},{ell}",
                    "computed": status,
                    "predicted": predicted,
                    "check": "rdr-predicate",
                }
            )
        if status == "rdr":
            claims = _htg_claim(m, n, ell, htg(m, n, ell), gi)
            signature_reports.append(
                {
                    "instance": f"htg:{m},{n},{ell}",
                    "computed_girth": gi,
                    "computed_signature": sig,
                    "claimed_signatures": list(claims),
                    "matches_claim": sig in claims,
                }
            )
    iso_checks = []
    for a, b in _htg_iso_claims(max_order):
        ga = htg(*a) if len(a) == 3 else gp(*a)
        gb = htg(*b) if len(b) == 3 else gp(*b)
        iso_checks.append(
            {
                "left": f"{'htg' if len(a) == 3 else 'gp'}:{','.join(map(str, a))}",
                "right": f"{'htg' if len(b) == 3 else 'gp'}:{','.join(map(str, b))}",
                "isomorphic": is_isomorphic(ga, gb)[0],
            }
        )
    agree = len(params) - len(disagreements)
    return TheoremReport(
        theorem="htg-criterion",
        parameters={"max_order": max_order},
        total=len(params),
        agree=agree,
        disagreements=tuple(disagreements),
        elapsed_s=time.time() - start,
        extras={"signature_reports": signature_reports, "iso_checks": iso_checks},
    )


def _htg_one(args):
    m, n, ell = args
    g = htg(m, n, ell)
    decision = solve_rdr(g)
    gi = sig = None
    if decision.status == "rdr":
        rep = girth_signature(g)
        gi, sig = rep.girth, rep.graph_signature
    return decision.status, gi, sig


def _htg_iso_claims(max_order: int):
    """Claimed cross-parameterization isomorphisms inside the range."""
    claims = []
    # htg(3, n, 3) = htg(n/2, 6, 0) for n = 0 (mod 12), htg(n/2, 6, 3) otherwise
    for n in range(8, max_order // 3 + 1, 2):
        if n % 6 == 0:
            other = (n // 2, 6, 0) if n % 12 == 0 else (n // 2, 6, 3)
            if other[0] * 6 <= max_order:
                claims.append(((3, n, 3), other))
    # htg(2, n, n/2) = gp(n, n/2 - 1) for n = 0 (mod 4)
    for n in range(8, max_order // 2 + 1, 4):
        claims.append(((2, n, n // 2), (n, n // 2 - 1)))
    # prisms and Mobius ladders: htg(1, 2q, 3) vs htg(2, q, 0) / htg(1, 2q, q)
    for q in range(6, max_order // 2 + 1, 6):
        claims.append(((1, 2 * q, 3), (2, q, 0)))
    for q in range(9, max_order // 2 + 1, 6):
        claims.append(((1, 2 * q, 3), (1, 2 * q, q)))
    # htg(m, 6, 0|3) = htg(1, 6m, 2m -+ 1) per the residue of m mod 6
    for m in range(4, max_order // 6 + 1):
        if m % 6 == 2:
            claims.append(((m, 6, 0), (1, 6 * m, 2 * m - 1)))
        elif m % 6 == 4:
            claims.append(((m, 6, 0), (1, 6 * m, 2 * m + 1)))
        elif m % 6 == 5:
            claims.append(((m, 6, 3), (1, 6 * m, 2 * m - 1)))
        elif m % 6 == 1:
            claims.append(((m, 6, 3), (1, 6 * m, 2 * m + 1)))
    out = []
    for a, b in claims:
        if len(b) == 3 and not (0 <= b[2] <= b[1] // 2):
            continue
        out.append((a, b))
    return out


def verify_xn(max_n: int = 6) -> TheoremReport:
    """The Cayley family: connected, vertex-transitive, 3-RDR of order 12n;
    girth 6 with signature (0,1,1) at n=3, girth 8 beyond; isomorphic to
    gp(6n, 2n-+1) for n != 0 (mod 3) and to no gp or htg otherwise.

    Signatures for n >= 4 are reported next to the conflicting claimed
    values rather than asserted; the criterion-12 discrepancy report for
    X_4 against gp(24, 7) lands in extras["signature_discrepancy"].
    """
    start = time.time()
    disagreements = []
    signature_reports = []
    total = 0

    def claim(label, ok, computed, predicted):
        nonlocal total
        total += 1
        if not ok:
            disagreements.append(
                {
                    "instance": label,
                    "computed": computed,
                    "predicted": predicted,
                    "check": "xn-claims",
                }
            )

    for n in range(3, max_n + 1):
        g = xn(n)
        label = f"xn:{n}"
        claim(f"{label} order", g.n == 12 * n, g.n, 12 * n)
        claim(f"{label} connected", g.connected, g.connected, True)
        claim(f"{label} cubic", g.regular_degree == 3, g.regular_degree, 3)
        vt = is_vertex_transitive(g)
        claim(f"{label} vertex-transitive", vt, vt, True)
        status = solve_rdr(g).status
        claim(f"{label} 3-rdr", status == "rdr", status, "rdr")
        rep = girth_signature(g)
        if n == 3:
            claim(f"{label} girth", rep.girth == 6, rep.girth, 6)
            claim(
                f"{label} signature",
                rep.graph_signature == (0, 1, 1),
                rep.graph_signature,
                (0, 1, 1),
            )
        else:
            claim(f"{label} girth", rep.girth == 8, rep.girth, 8)
            signature_reports.append(
                {
                    "instance": label,
                    "computed_signature": rep.graph_signature,
                    "claimed_signatures": list(XN_SIGNATURE_CLAIMS),
                }
            )
        if n % 3 != 0:
            k = 2 * n - 1 if n % 3 == 1 else 2 * n + 1
            iso = is_isomorphic(g, gp(6 * n, k))[0]
            claim(f"{label} = gp:{6 * n},{k}", iso, iso, True)
        else:
            others = []
            for k in range(1, 3 * n):
                if is_isomorphic(g, gp(6 * n, k))[0]:
                    others.append(f"gp:{6 * n},{k}")
            for (m, q, ell) in valid_htg_parameters(12 * n):
                if m * q == 12 * n and is_isomorphic(g, htg(m, q, ell))[0]:
                    others.append(f"htg:{m},{q},{ell}")
            claim(f"{label} outside gp/htg", not others, others, [])

    x4 = girth_signature(xn(4)).graph_signature
    gp247 = girth_signature(gp(24, 7)).graph_signature
    iso_flag = is_isomorphic(xn(4), gp(24, 7))[0]
    discrepancy = {
        "computed_x4": x4,
        "computed_gp_24_7": gp247,
        "x4_isomorphic_gp_24_7": iso_flag,
        "claimed_values": {
            "xn_statement": (5, 5, 6),
            "xn_proof_text": (5, 6, 6),
            "gp_24_7_claim": (10, 11, 11),
        },
        "internally_consistent": (x4 == gp247) == iso_flag,
    }
    return TheoremReport(
        theorem="xn-family",
        parameters={"max_n": max_n},
        total=total,
        agree=total - len(disagreements),
        disagreements=tuple(disagreements),
        elapsed_s=time.time() - start,
        extras={
            "signature_reports": signature_reports,
            "signature_discrepancy": discrepancy,
        },
    )


# Expected classification of vertex-transitive 3-RDR graphs by order:
# each entry is (girth, all family parameterizations of the class in this
# package).  Order 36 additionally contains one graph with no family
# construction, flagged by classify_table2 itself.

TABLE2_EXPECTED = {
    6: (
        (4, ("htg:1,6,3", "kdd:3", "mobius:3")),
    ),
    12: (
        (4, ("gp:6,1", "htg:1,12,3", "htg:2,6,0", "prism:6")),
    ),
    18: (
        (4, ("htg:1,18,3", "htg:1,18,9", "mobius:9")),
        (6, ("htg:3,6,3",)),
    ),
    24: (
        (4, ("gp:12,1", "htg:1,24,3", "htg:2,12,0", "prism:12")),
        (6, ("gp:12,5", "htg:2,12,6")),
        (6, ("htg:1,24,9", "htg:4,6,0")),
    ),
    30: (
        (4, ("htg:1,30,15", "htg:1,30,3", "mobius:15")),
        (6, ("htg:1,30,9", "htg:5,6,3")),
    ),
    36: (
        (4, ("gp:18,1", "htg:1,36,3", "htg:2,18,0", "prism:18")),
        (6, ("htg:1,36,15", "htg:1,36,9", "htg:2,18,6")),
        (6, ("htg:3,12,3", "htg:6,6,0")),
        (6, ("xn:3",)),
    ),
}


def verify_table2(max_order: int = 36, use_census: bool | None = None) -> TheoremReport:
    """Compare classify_table2 output against the expected classification."""
    from .census import classify_table2

    start = time.time()
    disagreements = []
    total = 0
    for order in sorted(TABLE2_EXPECTED):
        if order > max_order:
            continue
        total += 1
        report = classify_table2(order, use_census=use_census)
        got = sorted((e.girth, tuple(sorted(e.specs))) for e in report.entries)
        expected = sorted(
            (girth_, tuple(sorted(specs))) for girth_, specs in TABLE2_EXPECTED[order]
        )
        if got != expected:
            disagreements.append(
                {
                    "instance": f"order {order}",
                    "computed": [list(map(str, g)) for g in got],
                    "predicted": [list(map(str, e)) for e in expected],
                    "check": "table2",
                }
            )
    return TheoremReport(
        theorem="table2",
        parameters={"max_order": max_order},
        total=total,
        agree=total - len(disagreements),
        disagreements=tuple(disagreements),
        elapsed_s=time.time() - start,
    )


def _parallel_map(fn, items, workers):
    if workers > 1 and len(items) > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            return pool.map(fn, items)
    return [fn(x) for x in items]
