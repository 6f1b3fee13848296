"""Single-pass closed frequent itemset mining over sliding windows."""

from .ingest import MalformedLine, SourceStats, TransactionSource, open_source, parse_transaction
from .miner import (
    FPGTree,
    MinedPattern,
    MinerConfig,
    PatternNode,
    Status,
    build_level1,
    expand_level,
    grow_tree,
    mine,
    prune_nonclosed,
    top_k,
)
from .oracle import IntractableEnumeration, OracleResult, oracle_mine
from .pipeline import WindowReport, make_report, render_report, run_stream
from .ternary import (
    IncompatibleVectors,
    TernaryBit,
    TernaryVector,
    combine,
    combine_bit,
    from_memberships,
    support,
)
from .window import (
    SlidingWindow,
    StreamOrderError,
    Transaction,
    UnknownItem,
    WindowConfig,
    WindowSnapshot,
    build_snapshot,
    item_vector,
)

__version__ = "0.1.0"
