import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import cached_property

import networkx as nx
import pyarrow as pa
from sympy import divisors

from ..models.cover import CoverPair
from ..models.node import AmbientNode
from ..models.options import EnumOptions
from ..models.signature import Signature
from ..models.vcd import lambda_upper
from .covers import enumerate_covers
from .signatures import enumerate_signatures

logger = logging.getLogger(__name__)

Edge = tuple[AmbientNode, AmbientNode, CoverPair]


class SubgroupDag:
    """Admissible (order, signature) nodes of one ambient genus, joined by cover edges.

    An edge lower -> higher means lower.order strictly divides higher.order
    and lower.signature covers higher.signature with degree
    higher.order / lower.order.

    Without the divisor constraint some nodes have no cover path from the
    root. They stay in the graph, and their tower length is the group-order
    bound lambda_upper(order).
    """

    def __init__(self, ambient_genus: int, options: EnumOptions, graph: nx.DiGraph):
        self.ambient_genus = ambient_genus
        self.options = options
        self.graph = graph
        self.root = AmbientNode.root(ambient_genus)

    def __contains__(self, node: AmbientNode) -> bool:
        return node in self.graph

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    @cached_property
    def nodes(self) -> list[AmbientNode]:
        return sorted(self.graph.nodes)

    @cached_property
    def edges(self) -> list[Edge]:
        return sorted(
            ((lower, higher, data["cover"]) for lower, higher, data in self.graph.edges(data=True)),
            key=lambda e: (e[1], e[0]),
        )

    def fiber(self, order: int) -> list[Signature]:
        return [n.signature for n in self.nodes if n.order == order]

    @cached_property
    def rooted(self) -> frozenset[AmbientNode]:
        """Nodes joined to the root by a chain of cover edges, the root included."""
        return frozenset(nx.descendants(self.graph, self.root) | {self.root})

    @cached_property
    def tower_lengths(self) -> dict[AmbientNode, int]:
        # ascending order is a topological order: edges strictly increase the order
        lengths: dict[AmbientNode, int] = {}
        for node in self.nodes:
            if node not in self.rooted:
                lengths[node] = lambda_upper(node.order)
                continue
            lengths[node] = max(
                (lengths[p] + 1 for p in self.graph.predecessors(node) if p in self.rooted), default=0
            )
        return lengths

    def tower_lambda(self, node: AmbientNode) -> int:
        """Longest chain of cover edges from the root to node, or lambda_upper(order) off the root."""
        if node not in self.graph:
            raise ValueError(f"Node {node} not found in subgroup DAG of genus {self.ambient_genus}")
        return self.tower_lengths[node]

    def tower_predecessors(self, node: AmbientNode) -> list[AmbientNode]:
        """Rooted predecessors lying on a longest chain to node."""
        length = self.tower_lambda(node)
        return sorted(
            p
            for p in self.graph.predecessors(node)
            if p in self.rooted and node in self.rooted and self.tower_lengths[p] == length - 1
        )

    def cover(self, lower: AmbientNode, higher: AmbientNode) -> CoverPair:
        return self.graph.edges[lower, higher]["cover"]

    @property
    def df(self):
        return pa.Table.from_pylist(
            [
                {**n.as_dict(), "tower_lambda": self.tower_lengths[n], "rooted": n in self.rooted}
                for n in self.nodes
            ]
        )

    @property
    def edges_df(self):
        return pa.Table.from_pylist(
            [
                {"lower": str(lower), "higher": str(higher), **cover.as_dict()}
                for lower, higher, cover in self.edges
            ]
        )


def _fiber(args: tuple[int, int, EnumOptions]) -> list[Signature]:
    g, order, opts = args
    return enumerate_signatures(g, order, opts)


def _edges_into(args: tuple[AmbientNode, dict[int, list[AmbientNode]]]) -> list[Edge]:
    higher, lower_by_order = args
    edges = []
    for order, candidates in sorted(lower_by_order.items()):
        covers = {c.total: c for c in enumerate_covers(higher.signature, higher.order // order)}
        for lower in candidates:
            if lower.signature in covers:
                edges.append((lower, higher, covers[lower.signature]))
    return edges


def build_subgroup_dag(g: int, opts: EnumOptions | None = None, workers: int = 1) -> SubgroupDag:
    """Materialize every admissible (order, signature) of genus g up to opts.max_order.

    Worker processes only change scheduling; node and edge order is canonical.
    """
    if g < 2:
        raise ValueError(f"Ambient genus must be >= 2, got {g}")
    opts = (opts or EnumOptions()).resolved(g)
    if opts.max_order < 2:
        raise ValueError(f"max_order must be >= 2, got {opts.max_order}")

    orders = range(2, opts.max_order + 1)
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        mapper = executor.map if executor else map
        fibers = list(mapper(_fiber, [(g, e, opts) for e in orders]))

        by_order: dict[int, list[AmbientNode]] = defaultdict(list)
        root = AmbientNode.root(g)
        by_order[1].append(root)
        for order, signatures in zip(orders, fibers):
            for sig in signatures:
                by_order[order].append(AmbientNode(g, order, sig))
        nodes = [n for order in sorted(by_order) for n in by_order[order]]

        tasks = []
        for higher in nodes:
            if higher.is_root:
                continue
            lower = {e: by_order[e] for e in divisors(higher.order) if e < higher.order and e in by_order}
            tasks.append((higher, lower))
        edge_lists = list(mapper(_edges_into, tasks))
    finally:
        if executor:
            executor.shutdown()

    graph = nx.DiGraph()
    graph.add_nodes_from(nodes)
    for edges in edge_lists:
        for lower, higher, cover in edges:
            graph.add_edge(lower, higher, cover=cover)

    if not nx.is_directed_acyclic_graph(graph):
        raise ValueError(f"Subgroup graph of genus {g} has a cycle")

    dag = SubgroupDag(g, opts, graph)
    unrooted = len(dag) - len(dag.rooted)
    if unrooted:
        logger.warning(
            "genus %d: %d nodes have no cover path from the trivial subgroup; their tower length is lambda_upper",
            g,
            unrooted,
        )

    logger.info(
        "genus %d: %d nodes, %d edges (max_order=%d)",
        g,
        graph.number_of_nodes(),
        graph.number_of_edges(),
        opts.max_order,
    )
    return dag
