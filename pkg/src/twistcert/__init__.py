"""twistcert: exact verification of twist-word identities on closed surfaces.

The package models words in twist and involution generators of the genus-g
reference surface, evaluates them exactly in the integral symplectic
representation, compiles every twist generator into words over the small
generating sets (four elements, three elements, four involutions for g >= 3,
three involutions for g >= 8), verifies the catalogue of displayed
identities, and corroborates generation in finite symplectic quotients.
"""

__version__ = "0.1.0"

from .words import (
    CurveId,
    Letter,
    Symbol,
    Word,
    WordSyntaxError,
    compose,
    conjugate,
    curve,
    format_word,
    free_reduce,
    invert,
    parse_word,
    rotate_shift,
)
from .homology import (
    InvolutionModel,
    SurfaceRep,
    involution_matrices,
    involution_product,
    surface_rep,
)
from .compiler import (
    CompilationError,
    CompilationResult,
    Compiler,
    GeneratingSet,
    PairLedger,
    compile_set,
    generating_set,
)
from .verify import (
    Certificate,
    Claim,
    check_conjugation_image,
    check_curve_tuple_image,
    check_involution,
    check_relation,
    run_suite,
)
from .finite import (
    BudgetExceeded,
    GroupUnderTest,
    ModPMatrix,
    bsgs_order,
    check_full_generation_mod_p,
    orbit_size,
    reduce_mod,
    sp_order_formula,
)
