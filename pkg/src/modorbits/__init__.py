"""Orbits of the modular group PSL(2, Z) on the sets M_{-n} of Q(sqrt(-n)).

M_{-n} holds the elements (a + sqrt(-n))/c with a, c and b = (a^2 + n)/c
all integers.  Each element is handled through its signature (a, b, c).
"""

from .arith import divisor_count, divisor_count_upto, divisors, factorize, is_squarefree
from .core import (
    ElementClass,
    Gen,
    Signature,
    apply_word,
    apply_x,
    apply_y,
    apply_y2,
    classify,
    make_signature,
    norm,
    parse_word,
)
from .enumeration import PositiveTriple, SetKind, SignatureSet, a_minus, a_plus, diagonal, norm_zero, t_plus
from .errors import CapExceeded, ModulusMismatch, NotDivisible, NotSquareFree, OutOfDomain
from .orbits import (
    OrbitRep,
    OrbitReport,
    canonical_reps,
    count_orbits,
    count_orbits_divisor_sum,
    descend,
    reduce,
    same_orbit,
    verify_report,
)

__version__ = "0.1.0"
