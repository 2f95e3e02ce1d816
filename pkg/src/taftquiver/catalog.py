"""Named reference actions used by the tests, the CLI and the acceptance suite."""

from __future__ import annotations

from .action import ActionSpec
from .classify import ReflectionParams, RotationParams, build_n4d2, build_reflection, build_rotation

__all__ = ["spec_s3", "spec_r3", "spec_n4d2", "rotation_s3_params", "reflection_r3_params"]


def rotation_s3_params() -> RotationParams:
    """n = 3, d = 1, r = m = 3, mu = mu^* = 1, gamma_i = lambda^-i, sigma = 0."""
    return RotationParams(n=3, r=3, m=3, d=1)


def reflection_r3_params() -> ReflectionParams:
    """n = 3, d = 1, r = m = 2, mu = 1, gamma = (1, 0, -1), c_j = 1 at j = 1, c_k = 0 at k = 2."""
    return ReflectionParams(n=3, m=2, d=1)


def _certified(result) -> ActionSpec:
    if not isinstance(result, ActionSpec):
        raise AssertionError("reference action failed verification:\n" + "\n".join(result.lines()))
    return result


def spec_s3() -> ActionSpec:
    return _certified(build_rotation(rotation_s3_params(), D=2))


def spec_r3() -> ActionSpec:
    return _certified(build_reflection(reflection_r3_params(), D=2))


def spec_n4d2() -> ActionSpec:
    """mu = 1, gamma_0 = 1, c = 1, c^* = 2: sigma^2(a_0) = 2 a_0."""
    return _certified(build_n4d2(D=2))
