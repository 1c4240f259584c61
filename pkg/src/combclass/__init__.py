"""Exact toolkit for labelled combinatorial classes."""

from .egf import (
    CountSeq,
    Stirling1Table,
    egf_add,
    egf_exp,
    egf_log,
    egf_mul,
    egf_seq,
    point,
    solve_catalan_class,
    solve_npt,
    solve_windmill,
    stirling1,
    windmill_stirling,
)
from .lyndon import cfl_factorize, is_lyndon, ltos_via_lyndon
from .partitions import CyclicPartition, OrderedPartition, SetOfCycles, factor_indices, ltos, stol
from .seqcyc import (
    AtomJewellery,
    AtomNecklace,
    AtomSequence,
    LabelledAtom,
    jtoseq,
    jtoset,
    label_partition,
    seqtoj,
    standardize,
)
from .trees import (
    Forest,
    NestedDiscs,
    PlaneTreeR,
    RootedTreeRr,
    Windmill,
    ftoj,
    ftor,
    jtof,
    relabel_root_insert,
    rtof,
)

__version__ = "0.1.0"

__all__ = [
    "CountSeq",
    "Stirling1Table",
    "egf_add",
    "egf_exp",
    "egf_log",
    "egf_mul",
    "egf_seq",
    "point",
    "solve_catalan_class",
    "solve_npt",
    "solve_windmill",
    "stirling1",
    "windmill_stirling",
    "cfl_factorize",
    "is_lyndon",
    "ltos_via_lyndon",
    "CyclicPartition",
    "OrderedPartition",
    "SetOfCycles",
    "factor_indices",
    "ltos",
    "stol",
    "AtomJewellery",
    "AtomNecklace",
    "AtomSequence",
    "LabelledAtom",
    "jtoseq",
    "jtoset",
    "label_partition",
    "seqtoj",
    "standardize",
    "Forest",
    "NestedDiscs",
    "PlaneTreeR",
    "RootedTreeRr",
    "Windmill",
    "ftoj",
    "ftor",
    "jtof",
    "relabel_root_insert",
    "rtof",
]
