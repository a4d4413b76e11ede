"""Generator files: a plain-text format for permutation group input.

Format: the first significant line is ``degree <d>``; each following line is
one permutation in disjoint-cycle notation with 0-based points, e.g.
``(0 1 2)(3 4)``.  The identity is written ``()``.  Blank lines and ``#``
comments are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Permutation


class GenFileError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class GeneratorFile:
    degree: int
    generators: tuple[Permutation, ...]


def parse_generator_file(text: str) -> GeneratorFile:
    degree = None
    gens: list[Permutation] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise GenFileError(line_no, "expected 'degree <d>' as the first entry")
            try:
                degree = int(parts[1])
            except ValueError:
                raise GenFileError(line_no, f"bad degree {parts[1]!r}") from None
            if degree < 1:
                raise GenFileError(line_no, "degree must be positive")
            continue
        try:
            gens.append(Permutation.parse(line, degree))
        except ValueError as err:
            raise GenFileError(line_no, str(err)) from None
    if degree is None:
        raise GenFileError(1, "missing 'degree <d>' line")
    if not gens:
        raise GenFileError(1, "no generators given")
    return GeneratorFile(degree, tuple(gens))


def format_generator_file(degree: int, gens) -> str:
    lines = [f"degree {degree}"]
    lines.extend(g.cycle_string() for g in gens)
    return "\n".join(lines) + "\n"
