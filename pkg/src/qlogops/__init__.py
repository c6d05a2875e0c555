"""Logical operators and entanglement counts of quantum codes.

The central tool is the symplectic Gram-Schmidt procedure (:func:`sgsop`),
applied to the check generators and to the normalizer of stabilizer, CSS,
CRSS and entanglement-assisted codes.
"""

from .codes import (
    CodeReport,
    CssCodePair,
    FormulaCheck,
    Gf4Code,
    analyze_crss,
    analyze_css,
    analyze_stabilizer,
    crss_check_matrix,
    crss_entanglement_G,
    crss_entanglement_H,
    crss_normalizer,
    css_check_matrix,
    css_entanglement_G,
    css_entanglement_H,
    css_normalizer,
)
from .errors import (
    GenerationError,
    InvalidCodeError,
    ParseError,
    QlogopsError,
    ReplayError,
    ShapeError,
)
from .gf2 import BinMatrix
from .gf4 import Gf4Matrix
from .pauli import (
    GeneratorSet,
    PauliVector,
    multiply,
    omega,
    parse_pauli,
    symplectic_product,
    to_matrix,
)
from .sgsop import (
    SgsopStep,
    SymplecticDecomposition,
    pair_count,
    replay_inverse,
    sgsop,
    standard_form,
    standard_form_omega,
)

__version__ = "0.1.0"
