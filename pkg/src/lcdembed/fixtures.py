"""Reference codes shipped as data files, with their published parameters.

Eleven explicit generator matrices from the literature on shortest LCD
embeddings: one base Hamming code, and ten LCD codes each constructed as a
shortest LCD embedding (the trailing ``appended`` columns are the added
block; puncturing them recovers the base code).  The verify-fixtures
command re-checks every recorded claim against the shipped matrices.

One recorded value intentionally deviates from its published source: the
base of the quaternary [21,10,8] code is listed in print as [20,10,7], but
the shipped matrix's punctured base measures minimum distance 8 (confirmed
by two independent field implementations and exact MacWilliams-identity
checks).  The registry stores the measured value and keeps the published
one in ``note``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .code import LinearCode
from .matio import parse_code


@dataclass(frozen=True)
class FixtureEntry:
    """Expected facts about one shipped matrix.

    ``appended`` is the number of trailing embedding columns (0 for plain
    base codes).  ``hull_dim`` is the hull dimension of the matrix itself;
    the ``base_*`` fields describe the code left after puncturing the
    appended columns.
    """

    name: str
    q: int
    ip: str
    n: int
    k: int
    d: int
    lcd: bool
    hull_dim: int
    appended: int = 0
    base_d: int | None = None
    base_hull: int | None = None
    note: str | None = None

    @property
    def filename(self) -> str:
        return f"{self.name}.txt"

    @property
    def base_n(self) -> int | None:
        return self.n - self.appended if self.appended else None

    @property
    def base_k(self) -> int | None:
        return self.k if self.appended else None


FIXTURES: tuple[FixtureEntry, ...] = (
    FixtureEntry("hamming_7_4_3", q=2, ip="E", n=7, k=4, d=3, lcd=False, hull_dim=3),
    FixtureEntry("lcd_10_4_4", q=2, ip="E", n=10, k=4, d=4, lcd=True, hull_dim=0,
                 appended=3, base_d=3, base_hull=3),
    FixtureEntry("lcd_19_11_4", q=2, ip="E", n=19, k=11, d=4, lcd=True, hull_dim=0,
                 appended=4, base_d=3, base_hull=4),
    FixtureEntry("lcd_36_26_4", q=2, ip="E", n=36, k=26, d=4, lcd=True, hull_dim=0,
                 appended=5, base_d=3, base_hull=5),
    FixtureEntry("lcd_16_10_4", q=3, ip="E", n=16, k=10, d=4, lcd=True, hull_dim=0,
                 appended=3, base_d=3, base_hull=3),
    FixtureEntry("lcd_44_36_4", q=3, ip="E", n=44, k=36, d=4, lcd=True, hull_dim=0,
                 appended=4, base_d=3, base_hull=4),
    FixtureEntry("lcd_23_4_14", q=3, ip="E", n=23, k=4, d=14, lcd=True, hull_dim=0,
                 appended=4, base_d=12, base_hull=4),
    FixtureEntry("lcd_23_5_12", q=3, ip="E", n=23, k=5, d=12, lcd=True, hull_dim=0,
                 appended=4, base_d=11, base_hull=4),
    FixtureEntry("lcd_24_6_12", q=3, ip="E", n=24, k=6, d=12, lcd=True, hull_dim=0,
                 appended=4, base_d=10, base_hull=4),
    FixtureEntry("lcd_25_5_14", q=3, ip="E", n=25, k=5, d=14, lcd=True, hull_dim=0,
                 appended=5, base_d=12, base_hull=5),
    FixtureEntry("lcd_21_10_8", q=4, ip="H", n=21, k=10, d=8, lcd=True, hull_dim=0,
                 appended=1, base_d=8, base_hull=1,
                 note="published base distance is 7; the shipped matrix's "
                      "punctured base measures 8"),
)

_BY_NAME = {entry.name: entry for entry in FIXTURES}


def fixture(name: str) -> FixtureEntry:
    return _BY_NAME[name]


def fixture_text(entry: FixtureEntry) -> str:
    return (resources.files(__package__) / "fixtures" / entry.filename).read_text()


def load(entry: FixtureEntry) -> LinearCode:
    return parse_code(fixture_text(entry))


def load_by_name(name: str) -> LinearCode:
    return load(fixture(name))
