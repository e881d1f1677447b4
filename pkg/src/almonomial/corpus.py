"""The regression corpus: groups with pinned almost-monomiality verdicts.

Monomiality expectations are recorded only where they are forced (abelian
and other nilpotent entries, plus the classical small cases); a None leaves
the monomial column unchecked.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CorpusEntry:
    spec: str
    almost_monomial: bool
    monomial: bool | None = None


DEFAULT_CORPUS: tuple[CorpusEntry, ...] = (
    # symmetric groups
    CorpusEntry("S2", True, True),
    CorpusEntry("S3", True, True),
    CorpusEntry("S4", True, True),
    CorpusEntry("S5", True),
    CorpusEntry("S6", True),
    CorpusEntry("S7", True),
    # alternating groups
    CorpusEntry("A2", True, True),
    CorpusEntry("A3", True, True),
    CorpusEntry("A4", True, True),
    CorpusEntry("A5", True),
    CorpusEntry("A6", False),
    CorpusEntry("A7", False),
    # linear groups
    CorpusEntry("SL2(2)", True, True),
    CorpusEntry("SL2(3)", True, False),
    CorpusEntry("SL2(4)", True),
    CorpusEntry("SL2(8)", True),
    CorpusEntry("SL2(5)", False),
    CorpusEntry("GL2(3)", False),
    # nilpotent non-abelian presets
    CorpusEntry("D4", True, True),
    CorpusEntry("Q8", True, True),
    # abelian groups up to order 32
    CorpusEntry("C1", True, True),
    CorpusEntry("C2", True, True),
    CorpusEntry("C3", True, True),
    CorpusEntry("C4", True, True),
    CorpusEntry("C5", True, True),
    CorpusEntry("C6", True, True),
    CorpusEntry("C8", True, True),
    CorpusEntry("C9", True, True),
    CorpusEntry("C12", True, True),
    CorpusEntry("C16", True, True),
    CorpusEntry("C32", True, True),
    CorpusEntry("C2xC2", True, True),
    CorpusEntry("C2xC4", True, True),
    CorpusEntry("C2xC2xC2", True, True),
    CorpusEntry("C3xC3", True, True),
    CorpusEntry("C2xC6", True, True),
)


@dataclass
class CorpusRow:
    spec: str
    order: int
    irreducibles: int
    expected_am: bool
    got_am: bool
    expected_monomial: bool | None
    got_monomial: bool
    seconds: float

    @property
    def ok(self) -> bool:
        if self.got_am != self.expected_am:
            return False
        if self.expected_monomial is not None and self.got_monomial != self.expected_monomial:
            return False
        return True


@dataclass
class CorpusResult:
    rows: list[CorpusRow] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def mismatches(self) -> list[CorpusRow]:
        return [row for row in self.rows if not row.ok]


def load_corpus_file(path: str) -> tuple[CorpusEntry, ...]:
    """Whitespace table: SPEC EXPECTED_AM [EXPECTED_MONOMIAL], booleans as
    true/false, # starts a comment."""
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise ValueError(f"{path}:{lineno}: expected 2 or 3 fields")

            def parse_bool(tok: str) -> bool:
                if tok.lower() in ("true", "yes", "1"):
                    return True
                if tok.lower() in ("false", "no", "0"):
                    return False
                raise ValueError(f"{path}:{lineno}: not a boolean: {tok!r}")

            mono = parse_bool(parts[2]) if len(parts) == 3 else None
            entries.append(CorpusEntry(parts[0], parse_bool(parts[1]), mono))
    return tuple(entries)


def run_corpus(
    entries,
    *,
    cap: int = 10_000,
    fast: bool = False,
    threads: int = 1,
    progress=None,
) -> CorpusResult:
    from .amcore import is_almost_monomial
    from .cli import parse_group_spec

    result = CorpusResult()
    if not entries:
        result.warnings.append("corpus is empty; nothing was checked")
        return result
    for entry in entries:
        start = time.perf_counter()
        group = parse_group_spec(entry.spec, cap=cap)
        verdict = is_almost_monomial(group, fast=fast, threads=threads)
        elapsed = time.perf_counter() - start
        row = CorpusRow(
            spec=entry.spec,
            order=group.order,
            irreducibles=verdict.matrix.size,
            expected_am=entry.almost_monomial,
            got_am=verdict.almost_monomial,
            expected_monomial=entry.monomial,
            got_monomial=verdict.monomial,
            seconds=elapsed,
        )
        result.rows.append(row)
        if progress is not None:
            progress(row)
    return result
