"""Algebra specification documents: one algebra per TOML file.

Fields: field ("Q" or "Fp:<prime>"), variables, optional weights, mode
("graded" or "local"), exactly one of generators / dual_generator, and an
optional [elements] table of named expressions.  Unknown keys are rejected.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field as dc_field

from .algebra import ArtinAlgebra, build_graded, build_local
from .duality import DualPresentation, algebra_from_dual
from .errors import InvalidArgumentError
from .linalg import FieldSpec
from .polyring import RingSpec

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

_ALLOWED_KEYS = {"field", "variables", "weights", "mode", "generators",
                 "dual_generator", "elements", "dim_cap"}


@dataclass(frozen=True)
class AlgebraSpecDoc:
    ring: RingSpec
    mode: str
    generators: tuple | None
    dual_generator: str | None
    elements: dict
    dim_cap: int | None = None

    def build(self) -> ArtinAlgebra:
        if self.dual_generator is not None:
            return algebra_from_dual(self.dual_presentation())
        kwargs = {}
        if self.dim_cap is not None:
            kwargs["dim_cap"] = self.dim_cap
        if self.mode == "graded":
            return build_graded(self.ring, list(self.generators), **kwargs)
        return build_local(self.ring, list(self.generators), **kwargs)

    def dual_presentation(self) -> DualPresentation:
        if self.dual_generator is None:
            raise InvalidArgumentError("this spec has no dual_generator")
        return DualPresentation.from_string(self.dual_generator, self.ring)

    def resolve_element(self, text: str) -> str:
        """Named elements from the document, or the expression itself."""
        return self.elements.get(text, text)


def _parse_field(spec: str) -> FieldSpec:
    if spec == "Q":
        return FieldSpec()
    if spec.startswith("Fp:"):
        try:
            return FieldSpec(int(spec[3:]))
        except ValueError:
            raise InvalidArgumentError(f"bad prime in field spec {spec!r}")
    raise InvalidArgumentError(f'field must be "Q" or "Fp:<prime>", got {spec!r}')


def parse_spec_data(data: dict) -> AlgebraSpecDoc:
    unknown = set(data) - _ALLOWED_KEYS
    if unknown:
        raise InvalidArgumentError(f"unknown spec keys: {sorted(unknown)}")
    for key in ("field", "variables", "mode"):
        if key not in data:
            raise InvalidArgumentError(f"spec is missing required key {key!r}")
    mode = data["mode"]
    if mode not in ("graded", "local"):
        raise InvalidArgumentError(f'mode must be "graded" or "local", got {mode!r}')
    has_gens = "generators" in data
    has_dual = "dual_generator" in data
    if has_gens == has_dual:
        raise InvalidArgumentError(
            "spec needs exactly one of generators / dual_generator")
    variables = data["variables"]
    if (not isinstance(variables, list)
            or not all(isinstance(v, str) for v in variables)):
        raise InvalidArgumentError("variables must be a list of names")
    weights = data.get("weights", [])
    if weights and (not isinstance(weights, list)
                    or not all(isinstance(w, int) for w in weights)):
        raise InvalidArgumentError("weights must be a list of integers")
    ring = RingSpec(tuple(variables), tuple(weights),
                    _parse_field(data["field"]), local=(mode == "local"))
    generators = None
    if has_gens:
        gens = data["generators"]
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise InvalidArgumentError("generators must be a list of expressions")
        generators = tuple(gens)
    dual = data.get("dual_generator")
    if dual is not None and not isinstance(dual, str):
        raise InvalidArgumentError("dual_generator must be an expression string")
    elements = data.get("elements", {})
    if (not isinstance(elements, dict)
            or not all(isinstance(k, str) and isinstance(v, str)
                       for k, v in elements.items())):
        raise InvalidArgumentError("elements must be a table of name = expression")
    dim_cap = data.get("dim_cap")
    if dim_cap is not None and not isinstance(dim_cap, int):
        raise InvalidArgumentError("dim_cap must be an integer")
    return AlgebraSpecDoc(ring, mode, generators, dual, dict(elements), dim_cap)


def load_spec(path: str) -> AlgebraSpecDoc:
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    return parse_spec_data(data)
