"""Combinatorics on words around Shirshov's theorem.

Submodules:

* :mod:`.words` -- words, deg-lex order, subwords and occurrence scans
* :mod:`.witness` -- p-power and (strongly) q-decomposable subword witnesses
* :mod:`.avoidance` -- depth-first search for long witness-free words
* :mod:`.morphic` -- generated infinite words, complexity and recurrence
* :mod:`.certificate` -- certified strong decompositions of recurrent words
* :mod:`.identity` -- exact standard polynomial and quaternion checks
"""

from .words import Alphabet, Position, Word, compare_deglex, occurrences, parse_word, render_word, subword
from .witness import (
    AnalysisReport,
    DecompWitness,
    PowerWitness,
    analyze,
    check_decomposition,
    find_decomposable_subword,
    find_power,
    verify_witness,
)
from .avoidance import BoundReport, SearchBudget, longest_witness_free, verify_frontier
from .morphic import MorphicGenerator, PeriodicGenerator, complexity, eventually_periodic_check, recurrence
from .certificate import StrongDecompCertificate, construct, estimate_L, select_markers, verify_certificate
from .identity import (
    ExactMatrix,
    Quaternion,
    amitsur_levitzski_check,
    quaternion_min_poly,
    spanning_constant,
    standard_polynomial,
)

__version__ = "0.1.0"
