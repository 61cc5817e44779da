"""Forcibly connected and forcibly k-connected graphical degree sequences."""

from .criteria import (is_graphical_eg, is_graphical_hh, nash_williams,
                       potentially_k_connected)
from .enumeration import (count_forcibly, count_partitions,
                          gen_graphical_partitions, gen_zero_free_sequences,
                          proposition1_witness)
from .errors import *  # noqa: F401,F403
from .forcible import (enumerate_candidates, enumerate_decompositions,
                       is_forcibly_connected, natural_split_bound)
from .kforce import ghh, is_forcibly_biconnected, is_forcibly_k_connected
from .sampling import ScanConfig, run_scan, sample_sequence
from .seqcore import (DecidedBy, Decomposition, DegreeSequence, RunLengthForm,
                      Verdict, multiset_subtract, normalize, to_run_length)

__version__ = "0.1.0"
