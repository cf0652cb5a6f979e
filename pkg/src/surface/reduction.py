# src/surface/reduction.py

import logging
from dataclasses import dataclass
from typing import List, Tuple

from src.errors import ReductionError
from src.surface.transforms import (
    TransformStep,
    cancel_step,
    first_interlaced,
    simplify_steps,
    transform4_step,
)
from src.surface.word import SurfaceWord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardForm:
    """Result of reducing a word: number of handles, final word and the replayable steps."""
    genus: int
    word: SurfaceWord
    trace: Tuple[TransformStep, ...]


def reduce_to_standard(word: SurfaceWord) -> StandardForm:
    """
    Reduce an orientable word to a sphere word or a product of handles.

    The word is first put in canonical rotation, then cancelled and folded
    to a fixpoint. Interlaced pairs are moved to the tail one at a time;
    whatever is left in front has no interlaced pair and must cancel away.
    """
    if len(word) == 0:
        return StandardForm(0, word, ())

    steps: List[TransformStep] = []
    current = word.canonical()
    for step in simplify_steps(current):
        steps.append(step)
        current = step.result

    prefix_len = len(current)
    handles = 0
    while True:
        pair = first_interlaced(current, prefix_len)
        if pair is None:
            break
        step = transform4_step(current, pair)
        logger.debug("handle %d from %s,%s at %s", handles + 1, pair.first, pair.second, step.positions)
        steps.append(step)
        current = step.result
        prefix_len -= 4
        handles += 1

    tail = current.letters[prefix_len:]
    residue = SurfaceWord(current.letters[:prefix_len])
    while len(residue) > 2:
        step = cancel_step(residue)
        if step is None:
            raise ReductionError(f"residue without interlaced pairs does not cancel: {residue}")
        residue = step.result
        steps.append(TransformStep(1, step.positions, SurfaceWord(residue.letters + tail)))

    if handles and len(residue) == 2:
        steps.append(TransformStep(1, (0, 1), SurfaceWord(tail)))
        residue = SurfaceWord(())

    final = SurfaceWord(residue.letters + tail)
    if len(tail) != 4 * handles:
        raise ReductionError(f"handle tail has {len(tail)} letters for {handles} handles")
    return StandardForm(handles, final, tuple(steps))


def format_trace(trace) -> List[str]:
    lines = []
    for n, step in enumerate(trace, start=1):
        positions = ",".join(str(p) for p in step.positions)
        lines.append(f"STEP {n} T{step.kind} @{positions} -> {step.result}")
    return lines
