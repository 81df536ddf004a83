"""Text file formats for matrices and tracks, plus "p/q" rational strings.

Matrix files: first data line "rows cols", then one line per row of
nonnegative integers, then optionally "real: i1 i2 ..." (0-based column
indices) and "surface: g n".  Track files: a "surface g n" line, a
"switches" section, a "branches" section (one branch per line: name, two
switch:side:slot endpoints, tag) and an "attach" section giving (genus,
punctures) per boundary cycle.  Blank lines and lines starting with "#"
are ignored everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .pfmatrix import IntMatrix
from .surfaces import SurfaceSig
from .traintrack import Branch, BranchEnd, RegionAttachment, TrainTrack

__all__ = [
    "MatrixFileError",
    "TrackFileError",
    "frac_str",
    "parse_frac",
    "MatrixDocument",
    "parse_matrix_text",
    "load_matrix",
    "format_matrix",
    "TrackDocument",
    "parse_track_text",
    "load_track",
    "format_track",
    "track_to_json",
    "data_path",
]


class MatrixFileError(ValueError):
    """Malformed matrix file; message names the offending line."""


class TrackFileError(ValueError):
    """Malformed track file; message names the offending line."""


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(text: str) -> Fraction:
    return Fraction(text)


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


# --- matrices ---------------------------------------------------------------


@dataclass(frozen=True)
class MatrixDocument:
    matrix: IntMatrix
    real_set: frozenset | None
    surface: SurfaceSig | None


def parse_matrix_text(text: str) -> MatrixDocument:
    lines = list(_data_lines(text))
    if not lines:
        raise MatrixFileError("empty matrix file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MatrixFileError(f'line {lineno}: expected "rows cols", got {header!r}')
    rows, cols = int(parts[0]), int(parts[1])
    if rows < 1 or cols < 1:
        raise MatrixFileError(f"line {lineno}: dimensions must be positive")
    entries = []
    pos = 1
    for _ in range(rows):
        if pos >= len(lines):
            raise MatrixFileError(
                f"line {lines[-1][0]}: expected {rows} matrix rows, found {len(entries)}"
            )
        lineno, line = lines[pos]
        pos += 1
        cells = line.split()
        if not all(c.isdigit() for c in cells):
            raise MatrixFileError(f"line {lineno}: row entries must be nonnegative integers")
        if len(cells) != cols:
            raise MatrixFileError(
                f"line {lineno}: expected {cols} entries, got {len(cells)}"
            )
        entries.append([int(c) for c in cells])
    real_set = None
    surface = None
    for lineno, line in lines[pos:]:
        if line.startswith("real:"):
            if real_set is not None:
                raise MatrixFileError(f'line {lineno}: duplicate "real:" line')
            items = line[len("real:"):].split()
            if not items or not all(i.isdigit() for i in items):
                raise MatrixFileError(
                    f'line {lineno}: "real:" needs 0-based indices'
                )
            real_set = frozenset(int(i) for i in items)
        elif line.startswith("surface:"):
            if surface is not None:
                raise MatrixFileError(f'line {lineno}: duplicate "surface:" line')
            items = line[len("surface:"):].split()
            if len(items) != 2 or not all(i.isdigit() for i in items):
                raise MatrixFileError(f'line {lineno}: "surface:" needs "g n"')
            surface = SurfaceSig(int(items[0]), int(items[1]))
        else:
            raise MatrixFileError(f"line {lineno}: unexpected trailing line {line!r}")
    return MatrixDocument(IntMatrix(entries), real_set, surface)


def load_matrix(path) -> MatrixDocument:
    return parse_matrix_text(Path(path).read_text())


def format_matrix(
    matrix: IntMatrix, real_set=None, surface: SurfaceSig | None = None
) -> str:
    out = [f"{matrix.rows} {matrix.cols}"]
    for row in matrix.entries:
        out.append(" ".join(str(e) for e in row))
    if real_set is not None:
        out.append("real: " + " ".join(str(i) for i in sorted(real_set)))
    if surface is not None:
        out.append(f"surface: {surface.genus} {surface.punctures}")
    return "\n".join(out) + "\n"


# --- tracks -----------------------------------------------------------------


@dataclass(frozen=True)
class TrackDocument:
    surface: SurfaceSig
    switches: tuple[str, ...]
    branches: tuple[Branch, ...]
    attach: tuple[tuple[int, int], ...]

    def build(self) -> tuple[TrainTrack, RegionAttachment]:
        """Construct the validated track and its region attachment.

        Raises TrackStructureError when the slot data is inconsistent.
        """
        track = TrainTrack(self.switches, self.branches)
        return track, RegionAttachment(surface=self.surface, regions=self.attach)


def _parse_end(token: str, lineno: int) -> BranchEnd:
    bits = token.split(":")
    if len(bits) != 3 or not bits[1].isdigit() or not bits[2].isdigit():
        raise TrackFileError(
            f"line {lineno}: endpoint must be switch:side:slot, got {token!r}"
        )
    return BranchEnd(bits[0], int(bits[1]), int(bits[2]))


def parse_track_text(text: str) -> TrackDocument:
    surface = None
    switches: list[str] = []
    branches: list[Branch] = []
    attach: dict[int, tuple[int, int]] = {}
    attach_max_line = 0
    section = None
    for lineno, line in _data_lines(text):
        parts = line.split()
        head = parts[0]
        if head == "surface":
            if surface is not None:
                raise TrackFileError(f"line {lineno}: duplicate surface line")
            if len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
                raise TrackFileError(f'line {lineno}: expected "surface g n"')
            surface = SurfaceSig(int(parts[1]), int(parts[2]))
        elif head == "switches":
            section = "switches"
            switches.extend(parts[1:])
        elif head == "branches":
            section = "branches"
        elif head == "attach":
            section = "attach"
        elif section == "switches":
            switches.extend(parts)
        elif section == "branches":
            if len(parts) != 4:
                raise TrackFileError(
                    f"line {lineno}: branch needs name, two endpoints and a tag"
                )
            name, e0, e1, tag = parts
            branches.append(
                Branch(name, (_parse_end(e0, lineno), _parse_end(e1, lineno)), tag)
            )
        elif section == "attach":
            if len(parts) != 3 or not all(p.isdigit() for p in parts):
                raise TrackFileError(
                    f'line {lineno}: expected "cycle genus punctures"'
                )
            idx = int(parts[0])
            if idx in attach:
                raise TrackFileError(f"line {lineno}: duplicate attach for cycle {idx}")
            attach[idx] = (int(parts[1]), int(parts[2]))
            attach_max_line = lineno
        else:
            raise TrackFileError(f"line {lineno}: unexpected line {line!r}")
    if surface is None:
        raise TrackFileError("missing surface line")
    if not switches:
        raise TrackFileError("missing switches section")
    if not branches:
        raise TrackFileError("missing branches section")
    if sorted(attach) != list(range(len(attach))):
        raise TrackFileError(
            f"line {attach_max_line}: attach cycle indices must cover 0..{len(attach) - 1}"
        )
    regions = tuple(attach[i] for i in range(len(attach)))
    return TrackDocument(surface, tuple(switches), tuple(branches), regions)


def load_track(path) -> TrackDocument:
    return parse_track_text(Path(path).read_text())


def format_track(
    track: TrainTrack, attachment: RegionAttachment
) -> str:
    out = [f"surface {attachment.surface.genus} {attachment.surface.punctures}"]
    out.append("switches " + " ".join(track.switches))
    out.append("branches")
    for b in track.branches:
        e0, e1 = b.ends
        out.append(
            f"{b.name} {e0.switch}:{e0.side}:{e0.slot} "
            f"{e1.switch}:{e1.side}:{e1.slot} {b.tag}"
        )
    out.append("attach")
    for i, (genus, punctures) in enumerate(attachment.regions):
        out.append(f"{i} {genus} {punctures}")
    return "\n".join(out) + "\n"


def track_to_json(track: TrainTrack, attachment: RegionAttachment) -> dict:
    """Canonical JSON form of a parsed track (the validator's echo)."""
    return {
        "surface": {
            "genus": attachment.surface.genus,
            "punctures": attachment.surface.punctures,
        },
        "switches": list(track.switches),
        "branches": [
            {
                "name": b.name,
                "ends": [[e.switch, e.side, e.slot] for e in b.ends],
                "tag": b.tag,
            }
            for b in track.branches
        ],
        "attach": [list(r) for r in attachment.regions],
    }


def data_path(name: str) -> Path:
    """Path of a data file shipped with the package."""
    return Path(__file__).parent / "data" / name
