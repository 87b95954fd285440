"""Brute-force verification by systematic coset-table search.

Independent of the catalog machinery, every index-n subgroup of

    < x, y, z | x y^2 x^-1 y^2 = y x^2 y^-1 x^2 = x y z = 1 >

is found as a transitive permutation action of the generators on n points
with a marked basepoint (the subgroup is the basepoint stabilizer).  The
search is the classical low-index backtrack: fill coset-table entries in
scan order, propagate relator consequences after every definition, and
introduce new cosets in first-appearance order so that each *subgroup* (not
each conjugacy class) is produced exactly once.

Conjugacy classes are recovered afterwards by canonical relabeling: two
stabilizers are conjugate exactly when their tables agree after forgetting
the basepoint, i.e. when they share the minimum-over-basepoints canonical
form.

References: Holt, Eick, O'Brien, "Handbook of Computational Group Theory",
chapter 5 (coset enumeration and the low-index subgroups algorithm).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import catalog
from .group import IDENTITY, TOKEN_ELEMENT, Element
from .catalog import Descriptor, contains, index_of

# Generator columns: x, x^-1, y, y^-1, z, z^-1; column g's inverse is g ^ 1.
_COLS = 6
_RELATORS = (
    (0, 2, 2, 1, 2, 2),  # x y y x^-1 y y
    (2, 0, 0, 3, 0, 0),  # y x x y^-1 x x
    (0, 2, 4),           # x y z
)

# All cyclic rotations of the relators, bucketed by first column; scans of
# exactly these words at a fresh table entry cover every relator cycle
# through that entry.
_ROT: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
    tuple(
        rel[i:] + rel[:i]
        for rel in sorted(_RELATORS, key=len)
        for i in range(len(rel))
        if rel[i] == g
    )
    for g in range(_COLS)
)

DEFAULT_ORACLE_LIMIT = 16
HARD_CAP = 24


@dataclass(frozen=True)
class CosetTable:
    """Transitive relator-respecting action of x, y, z on {0..n-1}, basepoint 0.

    Validity (permutations, transitivity, trivial relator action) is asserted
    on construction, so a CosetTable value is always a genuine subgroup.
    """

    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.x)
        pts = set(range(n))
        for perm in (self.x, self.y, self.z):
            if len(perm) != n or set(perm) != pts:
                raise ValueError("generator images are not permutations of equal degree")
        perms = self.perms()
        for rel in _RELATORS:
            for c in range(n):
                p = c
                for g in rel:
                    p = perms[g][p]
                if p != c:
                    raise ValueError(f"relator {rel} acts nontrivially at coset {c}")
        seen = {0}
        frontier = [0]
        while frontier:
            c = frontier.pop()
            for perm in (self.x, self.y, self.z):
                if perm[c] not in seen:
                    seen.add(perm[c])
                    frontier.append(perm[c])
        if len(seen) != n:
            raise ValueError("action is not transitive")

    @property
    def degree(self) -> int:
        return len(self.x)

    def perms(self) -> tuple[tuple[int, ...], ...]:
        """Images per column (x, x^-1, y, y^-1, z, z^-1)."""
        return (
            self.x, _inverse_perm(self.x),
            self.y, _inverse_perm(self.y),
            self.z, _inverse_perm(self.z),
        )

    def to_json_dict(self) -> dict:
        return {"x": list(self.x), "y": list(self.y), "z": list(self.z)}


def _inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


# ---------------------------------------------------------------------------
# Low-index search
# ---------------------------------------------------------------------------

def _search(max_index: int) -> list[CosetTable]:
    """All complete tables on at most max_index cosets, each subgroup once."""
    table: list[list[int | None]] = [[None] * _COLS]
    results: list[CosetTable] = []

    def set_entry(c: int, g: int, d: int, trail: list[tuple[int, int]]) -> None:
        table[c][g] = d
        table[d][g ^ 1] = c
        trail.append((c, g))
        trail.append((d, g ^ 1))

    def scan(start: int, word: tuple[int, ...],
             queue: list[tuple[int, int]], trail: list[tuple[int, int]]) -> bool:
        """Trace one relator cycle; fill a single gap or report a clash."""
        f, i = start, 0
        L = len(word)
        while i < L:
            nxt = table[f][word[i]]
            if nxt is None:
                break
            f = nxt
            i += 1
        if i == L:
            return f == start
        b, j = start, L
        while j > i + 1:
            nxt = table[b][word[j - 1] ^ 1]
            if nxt is None:
                break
            b = nxt
            j -= 1
        if j == i + 1:
            if table[b][word[i] ^ 1] is not None:
                return False  # the edge into b is already taken
            set_entry(f, word[i], b, trail)
            queue.append((f, word[i]))
        return True

    def propagate(queue: list[tuple[int, int]], trail: list[tuple[int, int]]) -> bool:
        while queue:
            c, g = queue.pop()
            d = table[c][g]
            for word in _ROT[g]:
                if not scan(c, word, queue, trail):
                    return False
            for word in _ROT[g ^ 1]:
                if not scan(d, word, queue, trail):
                    return False
        return True

    def undo(trail: list[tuple[int, int]]) -> None:
        for c, g in trail:
            table[c][g] = None

    def first_gap() -> tuple[int, int] | None:
        for c, row in enumerate(table):
            for g in range(_COLS):
                if row[g] is None:
                    return c, g
        return None

    def extend() -> None:
        gap = first_gap()
        if gap is None:
            results.append(CosetTable(
                x=tuple(row[0] for row in table),
                y=tuple(row[2] for row in table),
                z=tuple(row[4] for row in table),
            ))
            return
        c, g = gap
        for d in range(len(table)):
            if table[d][g ^ 1] is not None:
                continue
            trail: list[tuple[int, int]] = []
            set_entry(c, g, d, trail)
            if propagate([(c, g)], trail):
                extend()
            undo(trail)
        if len(table) < max_index:
            table.append([None] * _COLS)
            trail = []
            set_entry(c, g, len(table) - 1, trail)
            if propagate([(c, g)], trail):
                extend()
            undo(trail)
            table.pop()

    extend()
    return results


@lru_cache(maxsize=8)
def _tables_up_to(max_index: int) -> tuple[CosetTable, ...]:
    if max_index < 1:
        return ()
    if max_index > HARD_CAP:
        raise ValueError(f"index limit {max_index} exceeds the hard cap {HARD_CAP}")
    return tuple(_search(max_index))


def low_index(n: int, search_limit: int | None = None) -> tuple[CosetTable, ...]:
    """Coset tables of all index-n subgroups, each exactly once.

    search_limit (>= n) selects the cached search run to draw from, so a
    loop over n = 1..N with search_limit=N triggers a single backtrack.
    """
    limit = max(n, search_limit or 0)
    return tuple(t for t in _tables_up_to(limit) if t.degree == n)


# ---------------------------------------------------------------------------
# Classification and canonical labeling
# ---------------------------------------------------------------------------

def stabilizer_type(t: CosetTable) -> str:
    """Isomorphism type of the basepoint stabilizer: g1, g2 or g6.

    The translation subgroup acts through the squared generator
    permutations; its orbit count o determines the Klein image size 4/o.
    """
    n = t.degree
    squares = [tuple(p[p[i]] for i in range(n)) for p in (t.x, t.y, t.z)]
    seen: set[int] = set()
    orbits = 0
    for start in range(n):
        if start in seen:
            continue
        orbits += 1
        frontier = [start]
        seen.add(start)
        while frontier:
            c = frontier.pop()
            for p in squares:
                if p[c] not in seen:
                    seen.add(p[c])
                    frontier.append(p[c])
    return {1: "g1", 2: "g2", 4: "g6"}[4 // orbits]


def canonical_table(t: CosetTable, base: int = 0) -> CosetTable:
    """Relabel cosets by breadth-first order from base.

    Generator order x, y, z, x^-1, y^-1, z^-1; the result depends only on
    the abstract action and the chosen basepoint.
    """
    perms = (t.x, t.y, t.z, *(_inverse_perm(p) for p in (t.x, t.y, t.z)))
    order = [base]
    pos = {base: 0}
    qi = 0
    while qi < len(order):
        c = order[qi]
        qi += 1
        for p in perms:
            d = p[c]
            if d not in pos:
                pos[d] = len(order)
                order.append(d)
    def relabel(p: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(p)
        for old, new in pos.items():
            out[new] = pos[p[old]]
        return tuple(out)
    return CosetTable(relabel(t.x), relabel(t.y), relabel(t.z))


def _class_key(t: CosetTable) -> tuple:
    forms = (canonical_table(t, base) for base in range(t.degree))
    return min((f.x + f.y + f.z) for f in forms)


def classes_of(tables: Iterable[CosetTable]) -> list[list[CosetTable]]:
    """Group tables of one degree into conjugacy classes of stabilizers."""
    tables = list(tables)
    degrees = {t.degree for t in tables}
    if len(degrees) > 1:
        raise ValueError(f"tables of mixed degree: {sorted(degrees)}")
    buckets: dict[tuple, list[CosetTable]] = {}
    for t in tables:
        buckets.setdefault(_class_key(t), []).append(t)
    return [buckets[key] for key in sorted(buckets)]


# ---------------------------------------------------------------------------
# Catalog <-> oracle bridge
# ---------------------------------------------------------------------------

class EnumerationError(RuntimeError):
    """Coset enumeration of a descriptor disagreed with its stated index."""


def descriptor_to_table(d: Descriptor, max_cosets: int | None = None) -> CosetTable:
    """Permutation action on the right cosets of the descriptor's subgroup.

    Built by breadth-first coset enumeration over the exact group
    arithmetic, using the descriptor's membership test to identify cosets;
    basepoint 0 is the subgroup itself.  Raises EnumerationError when the
    enumeration does not close at exactly index_of(d) cosets (a diagnostic
    for inconsistent generators/membership, e.g. under fault injection).
    """
    expected = index_of(d)
    limit = max_cosets if max_cosets is not None else expected
    if expected > limit:
        raise EnumerationError(f"index {expected} exceeds the enumeration limit {limit}")
    reps: list[Element] = [IDENTITY]
    inverses: list[Element] = [IDENTITY]
    images: dict[str, list[int]] = {"x": [], "y": [], "z": []}
    qi = 0
    while qi < len(reps):
        rep = reps[qi]
        for gen in ("x", "y", "z"):
            moved = rep * TOKEN_ELEMENT[gen]
            target = None
            for j, other_inv in enumerate(inverses):
                if contains(d, moved * other_inv):
                    target = j
                    break
            if target is None:
                if len(reps) >= expected:
                    raise EnumerationError(
                        f"more than {expected} cosets found for {d!r}"
                    )
                target = len(reps)
                reps.append(moved)
                inverses.append(moved.inverse())
            images[gen].append(target)
        qi += 1
    if len(reps) != expected:
        raise EnumerationError(
            f"enumeration closed at {len(reps)} cosets, descriptor says {expected}"
        )
    try:
        return CosetTable(tuple(images["x"]), tuple(images["y"]), tuple(images["z"]))
    except ValueError as exc:
        raise EnumerationError(str(exc)) from exc


def element_word(g: Element) -> list[str]:
    """A defining word for g in the generator tokens."""
    word = []
    if g.letter != "e":
        word.append(g.letter)
    for tok, count in (("x", g.a), ("y", g.b), ("z", g.c)):
        word.extend([tok if count > 0 else tok.upper()] * (2 * abs(count)))
    return word


def table_membership(t: CosetTable, g: Element) -> bool:
    """Whether g stabilizes the basepoint of the table."""
    perms = t.perms()
    cols = {"x": 0, "X": 1, "y": 2, "Y": 3, "z": 4, "Z": 5}
    p = 0
    for tok in element_word(g):
        p = perms[cols[tok]][p]
    return p == 0


# ---------------------------------------------------------------------------
# Three-way cross-check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountRow:
    """One (index, type) cell of the verification report.

    Oracle columns are None beyond the oracle limit; match requires every
    present column to agree.
    """

    n: int
    iso: str
    s_closed: int
    s_catalog: int | None
    s_oracle: int | None
    c_closed: int
    c_catalog: int | None
    c_oracle: int | None

    @property
    def match(self) -> bool:
        s_vals = {v for v in (self.s_closed, self.s_catalog, self.s_oracle) if v is not None}
        c_vals = {v for v in (self.c_closed, self.c_catalog, self.c_oracle) if v is not None}
        return (
            len(s_vals) == 1
            and len(c_vals) == 1
            and self.s_catalog is not None
            and self.c_catalog is not None
        )


@dataclass(frozen=True)
class CrossCheckReport:
    n: int
    rows: tuple[CountRow, ...]
    tables_bijective: bool | None  # None when the oracle was not run

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows) and self.tables_bijective is not False

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "tables_bijective": self.tables_bijective,
            "rows": [
                {
                    "n": r.n, "type": r.iso,
                    "s_closed": r.s_closed, "s_catalog": r.s_catalog, "s_oracle": r.s_oracle,
                    "c_closed": r.c_closed, "c_catalog": r.c_catalog, "c_oracle": r.c_oracle,
                    "match": r.match,
                }
                for r in self.rows
            ],
        }


CSV_HEADER = "n,type,s_closed,s_catalog,s_oracle,c_closed,c_catalog,c_oracle,match"


def csv_rows(report: CrossCheckReport) -> list[list]:
    def cell(v):
        return "" if v is None else v
    return [
        [r.n, r.iso, r.s_closed, cell(r.s_catalog), cell(r.s_oracle),
         r.c_closed, cell(r.c_catalog), cell(r.c_oracle), str(r.match).lower()]
        for r in report.rows
    ]


def cross_check(n: int, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> CrossCheckReport:
    """Compare closed forms, catalog enumeration, and the oracle at index n.

    Disagreements are reported, never raised: a failing catalog or oracle
    computation shows up as a None column or a false flag.
    """
    use_oracle = 1 <= n <= oracle_limit
    oracle_s: dict[str, int] = {}
    oracle_c: dict[str, int] = {}
    oracle_keys: dict[tuple, int] | None = None
    if use_oracle:
        by_type: dict[str, list[CosetTable]] = {iso: [] for iso in catalog.ISO_TYPES}
        oracle_keys = {}
        for t in low_index(n, search_limit=oracle_limit):
            by_type[stabilizer_type(t)].append(t)
            norm = canonical_table(t, 0)
            key = norm.x + norm.y + norm.z
            oracle_keys[key] = oracle_keys.get(key, 0) + 1
        for iso in catalog.ISO_TYPES:
            oracle_s[iso] = len(by_type[iso])
            oracle_c[iso] = len(classes_of(by_type[iso]))

    rows = []
    bijective: bool | None = None
    catalog_keys: dict[tuple, int] = {}
    catalog_ok = use_oracle
    for iso in catalog.ISO_TYPES:
        try:
            ds = catalog.enumerate_iso(iso, n)
            s_cat: int | None = len(ds)
        except Exception:
            ds, s_cat = [], None
        try:
            c_cat: int | None = catalog.class_count(iso, n)
        except Exception:
            c_cat = None
        if use_oracle and s_cat is not None:
            for d in ds:
                try:
                    norm = canonical_table(descriptor_to_table(d), 0)
                except (EnumerationError, ValueError):
                    catalog_ok = False
                    break
                key = norm.x + norm.y + norm.z
                catalog_keys[key] = catalog_keys.get(key, 0) + 1
        elif use_oracle:
            catalog_ok = False
        rows.append(CountRow(
            n=n, iso=iso,
            s_closed=catalog.count_s(iso, n), s_catalog=s_cat,
            s_oracle=oracle_s.get(iso) if use_oracle else None,
            c_closed=catalog.count_c(iso, n), c_catalog=c_cat,
            c_oracle=oracle_c.get(iso) if use_oracle else None,
        ))
    if use_oracle:
        bijective = catalog_ok and catalog_keys == oracle_keys
    return CrossCheckReport(n=n, rows=tuple(rows), tables_bijective=bijective)
