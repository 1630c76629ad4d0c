"""Quantum automorphism Hopf algebras of finite diagrams of measured algebras, over Q."""

from .catalog import shipped_algebras, shipped_diagrams, shipped_hopf
from .diagram import Arrow, Diagram, graph_diagram, single_object, validate_diagram
from .finite_hopf import (
    Comodule,
    ComoduleAlgebra,
    FiniteHopfAlgebra,
    check_comodule_algebra,
    check_star_condition,
    function_hopf,
    group_hopf,
    haar_integral,
    kappa,
    regular_comodule,
    sweedler_hopf,
    trivial_comodule,
    validate_hopf,
)
from .measured_algebra import (
    AlgebraMap,
    MeasuredAlgebra,
    copairing,
    dual_function_algebra_of_group,
    dual_numbers,
    function_algebra,
    gram,
    group_algebra,
    invertible_decomposition,
    matrix_algebra,
    measure_decomposition,
    sweedler_algebra,
    validate,
)
from .ncrewrite import NCPolynomial, RewriteSystem, Verdict, complete, is_zero_mod, normal_form
from .presentation import (
    HopfPresentation,
    antipode_matrix,
    check_hopf_wellformedness,
    classical_points,
    present,
    verify_classical_point,
)

__version__ = "0.1.0"
