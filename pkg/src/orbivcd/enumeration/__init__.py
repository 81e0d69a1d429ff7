from .covers import branch_data_solutions, cover_admissible, enumerate_covers
from .dag import SubgroupDag, build_subgroup_dag
from .periods import enumerate_period_multisets
from .signatures import enumerate_signatures


def tower_lambda(dag: SubgroupDag, node) -> int:
    return dag.tower_lambda(node)


__all__ = [
    "SubgroupDag",
    "branch_data_solutions",
    "build_subgroup_dag",
    "cover_admissible",
    "enumerate_covers",
    "enumerate_period_multisets",
    "enumerate_signatures",
    "tower_lambda",
]
