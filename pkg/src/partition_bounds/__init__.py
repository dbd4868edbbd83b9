"""Exact counting and certificates for graphical partitions and their
Frobenius-symbol bounds.

For even weight n the four counters obey

    f'(n) <= g(n) <= f(n) <= p(n)

where p counts all partitions, g the graphical ones (degree sequences of
simple graphs), f the partitions whose Frobenius symbol has
columns + sum(top) <= sum(bottom), and f' the partitions whose successive
ranks are all <= -1.
"""

from .frobenius import (
    FrobeniusSymbol,
    RankVector,
    dyson_rank,
    from_frobenius,
    leg_length_recurrence,
    successive_ranks,
    to_frobenius,
)
from .genfunc import (
    CoefficientTable,
    count_A,
    count_B,
    count_f_gf,
    count_fprime_gf,
    count_fprime_ranks,
)
from .graphical import (
    EgReport,
    RealizationWitness,
    count_g,
    erdos_gallai_report,
    havel_hakimi_witness,
    is_graphical,
)
from .oracle import (
    DEFAULT_CEILING,
    count_f_bruteforce,
    count_fprime_bruteforce,
    count_g_bruteforce,
)
from .partitions import (
    Partition,
    conjugate,
    count_p,
    durfee_size,
    enumerate_partitions,
    from_raw,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientTable",
    "DEFAULT_CEILING",
    "EgReport",
    "FrobeniusSymbol",
    "Partition",
    "RankVector",
    "RealizationWitness",
    "conjugate",
    "count_A",
    "count_B",
    "count_f_bruteforce",
    "count_f_gf",
    "count_fprime_bruteforce",
    "count_fprime_gf",
    "count_fprime_ranks",
    "count_g",
    "count_g_bruteforce",
    "count_p",
    "durfee_size",
    "dyson_rank",
    "enumerate_partitions",
    "erdos_gallai_report",
    "from_frobenius",
    "from_raw",
    "havel_hakimi_witness",
    "is_graphical",
    "leg_length_recurrence",
    "successive_ranks",
    "to_frobenius",
]
