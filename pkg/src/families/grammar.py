# src/families/grammar.py

import json
import re
from typing import Dict

from src.errors import FamilySpecError
from src.families.base import FamilyBuilder, FamilySpec, LabeledGraph
from src.families.cycle import CycleBuilder
from src.families.extended_spiral import ExtendedSpiralBuilder
from src.families.fixtures import FixtureBuilder
from src.families.ladders import MobiusBuilder, NeckbandBuilder
from src.families.spiral import SpiralBuilder

BUILDERS: Dict[str, FamilyBuilder] = {
    builder.get_family_name(): builder
    for builder in (
        CycleBuilder(),
        MobiusBuilder(),
        NeckbandBuilder(),
        SpiralBuilder(),
        ExtendedSpiralBuilder(),
        FixtureBuilder("k4"),
        FixtureBuilder("wheel"),
    )
}

_GADGET = re.compile(r"^(\d+)-(\d+)$")


def parse_family(text: str) -> FamilySpec:
    """
    Parse `kind[:params[:gadget-edges]]`, e.g. `spiral:5,6` or
    `extspiral:5,6:13-14,3-4`. Vertex indices may carry a leading `v`.
    """
    parts = text.strip().split(":")
    kind = parts[0].lower()
    if kind not in BUILDERS:
        raise FamilySpecError(f"unknown family {kind!r} (known: {', '.join(sorted(BUILDERS))})")
    if len(parts) > 3 or (len(parts) == 3 and kind != "extspiral"):
        raise FamilySpecError(f"too many fields in {text!r}")

    params = ()
    if len(parts) >= 2 and parts[1]:
        try:
            params = tuple(int(p) for p in parts[1].split(","))
        except ValueError:
            raise FamilySpecError(f"parameters must be integers: {parts[1]!r}") from None

    gadgets = []
    if len(parts) == 3:
        for token in parts[2].split(","):
            match = _GADGET.match(token.strip().replace("v", ""))
            if not match:
                raise FamilySpecError(f"bad gadget edge {token!r}, expected x-y")
            gadgets.append((int(match.group(1)), int(match.group(2))))
    return FamilySpec(kind, params, tuple(gadgets))


def generate(spec) -> LabeledGraph:
    """Build a family member from a FamilySpec or its text form."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    builder = BUILDERS.get(spec.kind)
    if builder is None:
        raise FamilySpecError(f"unknown family {spec.kind!r}")
    return builder.build(spec)


def format_labels(lg: LabeledGraph) -> str:
    """JSON sidecar {vertex_labels, ears, gadgets}."""
    return json.dumps(lg.labels_dict(), indent=2, sort_keys=True)
