"""JSON action configs: parsing with field diagnostics and a canonical serializer.

Schema::

    {"n": 3, "r": 3, "m": 3, "L": 12, "kind": "rotation", "d": 1,
     "lambda": "zeta(3)^1",
     "mu": [...], "mu_star": [...], "gamma": [...],
     "sigma": [{"arrow": "a0", "element": [["a0.a1*", scalar], ...]}]}

Scalars are ints, ``"p/q"`` strings, ``"zeta(M)^j"`` strings, or
``{"L": ..., "coeffs": [...]}`` objects.  ``L`` and ``lambda`` are optional
(defaults lcm(m, n, 4) and zeta(r)^1); ``mu_star`` is optional only for
reflections, where it defaults to the inverses of ``mu``.
"""

from __future__ import annotations

import json
import math

from .action import REFLECTION, ROTATION, ActionSpec, SigmaTable, TaftData
from .errors import ConfigError
from .quiver import Arrow, FreeElement, PathWord
from .scalars import RootOfUnity, parse_scalar

__all__ = ["parse_action_config", "load_action_config", "spec_to_config", "config_text", "spec_text"]

_REQUIRED = ("n", "r", "m", "kind", "d", "mu", "gamma")
_KNOWN = set(_REQUIRED) | {"L", "lambda", "mu_star", "sigma"}


def _field_int(data: dict, name: str, minimum: int) -> int:
    value = data[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"field '{name}': expected an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(f"field '{name}': must be >= {minimum}, got {value}")
    return value


def _scalars(data: dict, name: str, n: int, L: int) -> list:
    values = data[name]
    if not isinstance(values, list) or len(values) != n:
        raise ConfigError(f"field '{name}': expected a list of {n} scalars")
    out = []
    for i, v in enumerate(values):
        try:
            out.append(parse_scalar(v, L))
        except (ValueError, TypeError, KeyError) as exc:
            raise ConfigError(f"field '{name}[{i}]': {exc}") from None
    return out


def _sigma(data: dict, n: int, L: int) -> SigmaTable:
    entries: dict[Arrow, FreeElement] = {}
    for idx, item in enumerate(data.get("sigma") or []):
        where = f"field 'sigma[{idx}]'"
        if not isinstance(item, dict) or set(item) != {"arrow", "element"}:
            raise ConfigError(f"{where}: expected an object with keys 'arrow' and 'element'")
        try:
            word = PathWord.parse(item["arrow"], n)
        except ValueError as exc:
            raise ConfigError(f"{where}.arrow: {exc}") from None
        if len(word.arrows) != 1:
            raise ConfigError(f"{where}.arrow: expected a single arrow, got {item['arrow']!r}")
        pairs = []
        for j, pair in enumerate(item["element"]):
            try:
                path, scalar = pair
                pairs.append((PathWord.parse(path, n), parse_scalar(scalar, L)))
            except (ValueError, TypeError, KeyError) as exc:
                raise ConfigError(f"{where}.element[{j}]: {exc}") from None
        a = word.arrows[0]
        if a in entries:
            raise ConfigError(f"{where}: arrow {a} listed twice")
        entries[a] = FreeElement.from_terms(n, pairs)
    return SigmaTable(entries)


def parse_action_config(text: str) -> ActionSpec:
    """Build an ActionSpec from JSON text; raises ConfigError naming the line or field at fault."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = sorted(set(data) - _KNOWN)
    if unknown:
        raise ConfigError(f"unknown field(s): {', '.join(unknown)}")
    for name in _REQUIRED:
        if name not in data:
            raise ConfigError(f"field '{name}': required")
    n = _field_int(data, "n", 3)
    r = _field_int(data, "r", 2)
    m = _field_int(data, "m", 1)
    d = _field_int(data, "d", 0)
    if m % r:
        raise ConfigError(f"field 'm': r={r} must divide m={m}")
    kind = data["kind"]
    if kind not in (ROTATION, REFLECTION):
        raise ConfigError(f"field 'kind': expected 'rotation' or 'reflection', got {kind!r}")
    if d >= n:
        raise ConfigError(f"field 'd': must be < n={n}, got {d}")
    L = _field_int(data, "L", 1) if "L" in data else math.lcm(m, n, 4)
    try:
        lam = RootOfUnity.parse(data["lambda"]) if "lambda" in data else RootOfUnity(r, 1)
        taft = TaftData(r, m, lam)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"field 'lambda': {exc}") from None
    if L % lam.order or L % m:
        raise ConfigError(f"field 'L': Q(zeta_{L}) must contain lambda and the m-th roots of unity")
    mu = _scalars(data, "mu", n, L)
    if "mu_star" in data:
        mu_star = _scalars(data, "mu_star", n, L)
    elif kind == REFLECTION:
        if any(not v for v in mu):
            raise ConfigError("field 'mu': entries must be nonzero")
        mu_star = [v.inv() for v in mu]
    else:
        raise ConfigError("field 'mu_star': required for rotation actions")
    gamma = _scalars(data, "gamma", n, L)
    sigma = _sigma(data, n, L)
    try:
        return ActionSpec(taft, n, kind, d, mu, mu_star, gamma, sigma, L)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def load_action_config(path: str) -> ActionSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    return parse_action_config(text)


def spec_to_config(spec: ActionSpec) -> dict:
    """Canonical dict form; every scalar written as a CycNum object of order L."""
    sigma = []
    for a in sorted(spec.sigma.entries, key=Arrow.code):
        elem = spec.sigma.entries[a]
        terms = [[str(w), c.embed(spec.L).to_json()] for w, c in elem.sorted_terms()]
        sigma.append({"arrow": str(a), "element": terms})
    return {
        "n": spec.n,
        "r": spec.r,
        "m": spec.m,
        "L": spec.L,
        "kind": spec.kind,
        "d": spec.d,
        "lambda": str(spec.taft.lam),
        "mu": [c.to_json() for c in spec.mu],
        "mu_star": [c.to_json() for c in spec.mu_star],
        "gamma": [c.to_json() for c in spec.gamma],
        "sigma": sigma,
    }


def config_text(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def spec_text(spec: ActionSpec) -> str:
    return config_text(spec_to_config(spec))
