import logging
from collections.abc import Iterable, Mapping

from ..enumeration.dag import SubgroupDag, build_subgroup_dag
from ..models.certificate import Certificate, ExceptionPair
from ..models.node import AmbientNode
from ..models.options import EnumOptions
from ..models.signature import nu, weyl_vcd
from ..models.vcd import harer_vcd, lambda_upper
from .rules import exception_family, issue

logger = logging.getLogger(__name__)

Dags = Mapping[int, SubgroupDag]


def _dag(g: int, opts: EnumOptions | None, workers: int, dags: Dags | None) -> SubgroupDag:
    if dags is not None and g in dags:
        return dags[g]
    return build_subgroup_dag(g, opts, workers=workers)


def _genera(g_max: int) -> range:
    if g_max < 2:
        raise ValueError(f"g_max must be >= 2, got {g_max}")
    return range(2, g_max + 1)


def _require_three(g: int):
    if g < 3:
        raise ValueError(f"The weyl-vcd plus length bound is stated for genus >= 3, got g={g}")


def check_gendec(
    g_max: int, opts: EnumOptions | None = None, workers: int = 1, dags: Dags | None = None
) -> list[Certificate]:
    """Quotient genus never grows along a cover edge, and strictly drops above genus 1.

    One certificate per edge of every DAG with ambient genus 2..g_max.
    """
    certs = []
    for g in _genera(g_max):
        dag = _dag(g, opts, workers, dags)
        for lower, higher, cover in dag.edges:
            base, total = cover.base, cover.total
            certs.append(
                issue(
                    "gendec",
                    f"g={g} {cover}",
                    [
                        ("g_T", base.genus),
                        ("k_T", base.k),
                        ("g_L", total.genus),
                        ("k_L", total.k),
                        ("degree", cover.degree),
                        ("K", cover.preimage_count),
                    ],
                )
            )
    exceptions = sum(c.verdict == "exception" for c in certs)
    if exceptions:
        logger.info("gendec: %d equal-genus edges keep the cone count but gain preimages", exceptions)
    return certs


def check_prop4(
    g_max: int, opts: EnumOptions | None = None, workers: int = 1, dags: Dags | None = None
) -> list[Certificate]:
    """Weyl-group vcd along every cover edge, labelled with the proof case it falls under."""
    certs = []
    for g in _genera(g_max):
        dag = _dag(g, opts, workers, dags)
        for _, _, cover in dag.edges:
            base, total = cover.base, cover.total
            cert = issue(
                "prop4",
                f"g={g} {cover}",
                [
                    ("g_L", total.genus),
                    ("k_L", total.k),
                    ("g_T", base.genus),
                    ("k_T", base.k),
                    ("vcd_L", weyl_vcd(total)),
                    ("vcd_T", weyl_vcd(base)),
                ],
            )
            if cert.failed:
                logger.warning("prop4 violation: %s (%s)", cert.subject, cert.case_label)
            certs.append(cert)
    return certs


def find_vcd_exceptions(
    g_max: int, opts: EnumOptions | None = None, workers: int = 1, dags: Dags | None = None
) -> list[ExceptionPair]:
    """Edges with g_T < g_L on which the Weyl-group vcd does not drop.

    Only pairs from the two known families are returned; family (ii) stops
    at opts.max_exception_r. Anything else is logged here and shows up as a
    fail certificate in check_prop4.
    """
    opts = opts or EnumOptions()
    found = set()
    for g in _genera(g_max):
        dag = _dag(g, opts, workers, dags)
        for _, _, cover in dag.edges:
            base, total = cover.base, cover.total
            if base.genus >= total.genus or weyl_vcd(base) < weyl_vcd(total):
                continue
            family = exception_family(total.shape, base.shape)
            if family is None or weyl_vcd(base) != weyl_vcd(total):
                logger.warning("out-of-family vcd exception at g=%d: %s", g, cover)
                continue
            if family == "ii" and total.k > opts.max_exception_r:
                continue
            found.add(ExceptionPair(total.shape, base.shape, cover))
    return sorted(found)


def _lambda(dag: SubgroupDag, node: AmbientNode) -> int:
    return min(lambda_upper(node.order), dag.tower_lambda(node))


def verify_claim_uno(
    g: int, opts: EnumOptions | None = None, workers: int = 1, dag: SubgroupDag | None = None
) -> list[Certificate]:
    """vcd(WT) + λ(T) + 1 ≤ vcd(Γ_g) for every nontrivial node with positive quotient genus."""
    _require_three(g)
    if dag is None:
        dag = build_subgroup_dag(g, opts, workers=workers)
    vcd_g = harer_vcd(g, 0)
    certs = []
    for node in dag.nodes:
        sig = node.signature
        if node.order < 2 or sig.genus == 0:
            continue
        vcd_wt = weyl_vcd(sig)
        certs.append(
            issue(
                "claim_uno",
                str(node),
                [
                    ("order", node.order),
                    ("g_T", sig.genus),
                    ("vcd_WT", vcd_wt),
                    ("lambda", _lambda(dag, node)),
                    ("vcd_G", vcd_g),
                    ("order_bound", node.order * vcd_wt - 1),
                ],
            )
        )
    return certs


def _route(dag: SubgroupDag, node: AmbientNode) -> AmbientNode | None:
    # a step descends when the quotient genus grows, or the cone count does
    sig = node.signature
    candidates = [
        p
        for p in dag.graph.predecessors(node)
        if p in dag.rooted and (p.signature.k > sig.k or p.signature.genus > sig.genus)
    ]
    if not candidates:
        return None
    return max(
        candidates,
        key=lambda p: (p.signature.k > sig.k, dag.tower_lengths[p], p.signature.genus > 0, p.signature.k, p),
    )


def verify_prop5(
    g: int, opts: EnumOptions | None = None, workers: int = 1, dag: SubgroupDag | None = None
) -> list[Certificate]:
    """vcd(WT) + Λ(T) ≤ vcd(Γ_g) on every node, the root included.

    Genus-0 nodes name the predecessor the inductive step descends to in
    their subject: one with strictly more cones when there is one, else one
    of larger quotient genus, longest chain first.
    """
    _require_three(g)
    if dag is None:
        dag = build_subgroup_dag(g, opts, workers=workers)
    vcd_g = harer_vcd(g, 0)
    certs = []
    for node in dag.nodes:
        sig = node.signature
        subject = str(node)
        route = _route(dag, node) if sig.genus == 0 and not node.is_root else None
        if route is not None:
            subject = f"{node} via {route}"
        certs.append(
            issue(
                "prop5",
                subject,
                [
                    ("order", node.order),
                    ("g_T", sig.genus),
                    ("k_T", sig.k),
                    ("vcd_WT", weyl_vcd(sig)),
                    ("lambda", dag.tower_lambda(node)),
                    ("vcd_G", vcd_g),
                ],
            )
        )
    return certs


def check_eq5_consistency(g_range: Iterable[int], k_range: Iterable[int]) -> list[Certificate]:
    """harer_vcd against the piecewise ν form, for every (g, k) with 2g + k > 2."""
    k_values = list(k_range)
    certs = []
    for g in g_range:
        for k in k_values:
            if g < 0 or k < 0:
                raise ValueError(f"Invalid surface type: g={g}, k={k}")
            if 2 * g + k <= 2:
                continue
            certs.append(
                issue(
                    "eq5",
                    f"({g},{k})",
                    [("g", g), ("k", k), ("nu", 4 * g + k - 4), ("vcd", harer_vcd(g, k))],
                )
            )
    return certs


def check_dichotomy(
    g_max: int, opts: EnumOptions | None = None, workers: int = 1, dags: Dags | None = None
) -> list[Certificate]:
    """ν(T) · d ≤ ν(L) + k_L on every cover edge."""
    certs = []
    for g in _genera(g_max):
        dag = _dag(g, opts, workers, dags)
        for _, _, cover in dag.edges:
            certs.append(
                issue(
                    "dichot",
                    f"g={g} {cover}",
                    [
                        ("nu_T", nu(cover.base)),
                        ("nu_L", nu(cover.total)),
                        ("k_L", cover.total.k),
                        ("degree", cover.degree),
                    ],
                )
            )
    return certs
