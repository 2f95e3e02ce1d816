"""Exact computation with Taft algebra actions on preprojective algebras of type A~."""

from __future__ import annotations

from .action import (
    REFLECTION,
    ROTATION,
    ActionSpec,
    ConstraintReport,
    SigmaTable,
    TaftData,
    act_g,
    act_x,
    is_inner_faithful,
    verify_action,
    verify_hopf_relations,
    verify_module_algebra,
    verify_structure,
)
from .classify import (
    ReflectionParams,
    RotationParams,
    build_n4d2,
    build_reflection,
    build_rotation,
    check_necessary,
    enumerate_actions,
)
from .config import parse_action_config, spec_text
from .invariants import compare_invariants_center, invariant_basis, phi, x_on_phi
from .kernels import BACKEND
from .preprojective import NormalPath, PiElement, center_basis, normal_form, pi_basis, pi_mul
from .quiver import Arrow, FreeElement, PathWord
from .scalars import CycNum, RootOfUnity, cyc_sqrt, zeta

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "REFLECTION",
    "ROTATION",
    "ActionSpec",
    "Arrow",
    "ConstraintReport",
    "CycNum",
    "FreeElement",
    "NormalPath",
    "PathWord",
    "PiElement",
    "ReflectionParams",
    "RootOfUnity",
    "RotationParams",
    "SigmaTable",
    "TaftData",
    "act_g",
    "act_x",
    "build_n4d2",
    "build_reflection",
    "build_rotation",
    "center_basis",
    "check_necessary",
    "compare_invariants_center",
    "cyc_sqrt",
    "enumerate_actions",
    "invariant_basis",
    "is_inner_faithful",
    "normal_form",
    "parse_action_config",
    "phi",
    "pi_basis",
    "pi_mul",
    "spec_text",
    "verify_action",
    "verify_hopf_relations",
    "verify_module_algebra",
    "verify_structure",
    "x_on_phi",
    "zeta",
]
