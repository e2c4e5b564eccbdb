"""Simple closed curves on the boundary of a genus-2 handlebody.

Curves are conjugacy classes in the surface group
``<a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1>``, realized as a Fuchsian group
whose fundamental domain is the regular octagon with interior angles pi/4.
The side lines of that tiling extend to complete geodesics, so the cutting
sequence of a closed geodesic is a shortest word for its class; the
canonical form of a class is the shortlex-least rotation of the cutting
sequences of the class and its inverse.

Intersection numbers count translates of one axis crossing a fundamental
segment of the other.  Everything runs in double precision first and is
redone with :mod:`mpmath` when any comparison lands inside the ambiguity
band ``[tight, eps)``.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Iterable, Sequence

import numpy as np

from . import _pykernels as pyk
from . import kernels as K
from .parallel import parallel_map

LETTERS = "aAbBcCdD"
_CODE = {ch: i for i, ch in enumerate(LETTERS)}
_SIDE_WORD = "".join(LETTERS[c] for c in pyk.SIDE_CODE)
RELATOR_WORD = "abABcdCD"


class SurfaceError(ValueError):
    pass


class TrivialClassError(SurfaceError):
    """The word represents the identity of the surface group."""


class PrecisionError(SurfaceError):
    """A comparison stayed inside the ambiguity band after escalation."""


# ---------------------------------------------------------------------------
# words

_TOKEN = re.compile(r"\s*([abcdABCD])(?:\^\{?(-?\d+)\}?)?\s*")


def parse_word(word) -> tuple[int, ...]:
    """Letter codes for a word.

    Accepts compact strings (``"abAB"``, uppercase = inverse), spaced or
    exponent notation (``"a b b^{-1}"``, ``"a^-1"``, ``"a^2"``), a
    :class:`SurfaceCurve`, or a sequence of codes.

    >>> parse_word("a b^{-1}")
    (0, 3)
    """
    if isinstance(word, SurfaceCurve):
        return word.codes
    if not isinstance(word, str):
        codes = tuple(int(c) for c in word)
        if any(c < 0 or c > 7 for c in codes):
            raise SurfaceError(f"letter code out of range in {codes!r}")
        return codes
    out: list[int] = []
    pos = 0
    text = word.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SurfaceError(f"cannot parse word {word!r} at position {pos}")
        code = _CODE[m.group(1)]
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp < 0:
            code ^= 1
            exp = -exp
        out.extend([code] * exp)
        pos = m.end()
    return tuple(out)


def word_str(codes: Iterable[int]) -> str:
    return "".join(LETTERS[c] for c in codes)


def invert(codes: Sequence[int]) -> tuple[int, ...]:
    return tuple(c ^ 1 for c in reversed(codes))


def free_reduce(codes: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for c in codes:
        if out and out[-1] == c ^ 1:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


def cyclic_reduce(codes: Sequence[int]) -> tuple[int, ...]:
    w = free_reduce(codes)
    i, j = 0, len(w) - 1
    while i < j and w[i] == w[j] ^ 1:
        i += 1
        j -= 1
    return w[i:j + 1]


def min_rotation(codes: Sequence[int]) -> tuple[int, ...]:
    w = tuple(codes)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def shortlex(codes: Sequence[int]):
    return (len(codes), tuple(codes))


def primitive_period(codes: Sequence[int]) -> int:
    """Smallest p with the word equal to its rotation by p."""
    w = tuple(codes)
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w == w[p:] + w[:p]:
            return p
    return n


@total_ordering
@dataclass(frozen=True)
class SurfaceCurve:
    """Conjugacy class of a non-trivial element, stored by canonical word."""

    word: str

    @cached_property
    def codes(self) -> tuple[int, ...]:
        return tuple(_CODE[ch] for ch in self.word)

    def __len__(self):
        return len(self.word)

    def __lt__(self, other):
        if not isinstance(other, SurfaceCurve):
            return NotImplemented
        return shortlex(self.codes) < shortlex(other.codes)

    def __str__(self):
        return self.word

    @property
    def power(self) -> int:
        return len(self.word) // primitive_period(self.codes)

    @property
    def is_primitive(self) -> bool:
        return self.power == 1

    def root(self) -> "SurfaceCurve":
        return SurfaceCurve(self.word[: primitive_period(self.codes)])


# ---------------------------------------------------------------------------
# the Fuchsian model


def _generator_table(dps: int):
    """SU(1,1) entries (ar, ai, br, bi) of the side pairings, as mpmath numbers."""
    import mpmath

    ctx = mpmath.mp.clone()
    ctx.dps = dps

    def rot(t):
        return (ctx.cos(t / 2), ctx.sin(t / 2), ctx.mpf(0), ctx.mpf(0))

    c = 1 + ctx.sqrt(2)
    trans = (c, ctx.mpf(0), ctx.sqrt(c * c - 1), ctx.mpf(0))  # translation by 2 * inradius
    table = [None] * 8
    for i, ch in enumerate(_SIDE_WORD):
        if ch.islower():
            j = _SIDE_WORD.index(ch.upper())
            m = pyk._mul(pyk._mul(rot(i * ctx.pi / 4), trans), rot(ctx.pi - j * ctx.pi / 4))
            code = _CODE[ch]
            table[code] = m
            table[code ^ 1] = (m[0], -m[1], -m[2], -m[3])
    return table


class FuchsianModel:
    """Discrete faithful representation of the genus-2 surface group.

    Side ``k`` of the regular octagon (outward normal at angle ``k*pi/4``)
    is labelled by ``aBAbcDCd[k]``; the generator with that label maps the
    octagon to its neighbour across side ``k``.  The model is immutable; it
    memoizes per-curve geometry.
    """

    def __init__(self, eps: float = 1e-9, tight: float = 1e-11, dps: int = 60):
        if not (0 < tight < eps):
            raise SurfaceError("need 0 < tight < eps")
        self.eps = float(eps)
        self.tight = float(tight)
        self.dps = int(dps)
        table = _generator_table(dps + 10)
        self.gens = np.array([[float(x) for x in row] for row in table])
        self._mp_ctx = pyk.mp_context(dps)
        self._mp_gens = [tuple(self._mp_ctx.num(x) for x in row) for row in table]
        # ambiguity band used after escalation
        self.mp_tight = 10.0 ** -(dps - 20)
        self.mp_eps = 10.0 ** -(dps // 2)
        self.nbhd, self._mp_nbhd = self._touching_tiles()
        self._pieces: dict = {}
        self._lifts: dict = {}
        self.escalations = 0

    def _touching_tiles(self):
        """Group elements whose tiles share at least a point with the octagon."""
        ctx = self._mp_ctx
        tanh_r = ctx.rk  # Klein radius of the vertices, i.e. tanh of the circumradius
        ident = pyk._identity(ctx)
        found = [ident]
        centers = [(ctx.num(0), ctx.num(0))]
        frontier = [((), ident)]
        for _ in range(4):
            nxt = []
            for word, m in frontier:
                for c in range(8):
                    if word and c == word[-1] ^ 1:
                        continue
                    g = pyk._mul(m, self._mp_gens[c])
                    ar, ai, br, bi = g
                    # image of the centre is beta / conj(alpha)
                    den = ar * ar + ai * ai
                    zx = (br * ar - bi * ai) / den
                    zy = (bi * ar + br * ai) / den
                    # hyperbolic distance 2*atanh|z| <= 2R  <=>  |z| <= tanh R
                    r = ctx.sqrt(zx * zx + zy * zy)
                    if r > tanh_r + 1e-20:
                        continue
                    if all(abs(zx - x) + abs(zy - y) > 1e-20 for x, y in centers):
                        centers.append((zx, zy))
                        found.append(g)
                    nxt.append((word + (c,), g))
            frontier = nxt
        floats = np.array([[float(x) for x in g] for g in found])
        return floats, found

    # -- matrices -----------------------------------------------------------

    def matrix(self, word) -> np.ndarray:
        """2x2 complex matrix of a word (double precision)."""
        m = pyk._identity(pyk.FLOAT)
        for c in parse_word(word):
            m = pyk._mul(m, tuple(self.gens[c]))
        ar, ai, br, bi = m
        a, b = complex(ar, ai), complex(br, bi)
        return np.array([[a, b], [b.conjugate(), a.conjugate()]])

    def relator_defect(self) -> float:
        return float(np.abs(self.matrix(RELATOR_WORD) - np.eye(2)).max())

    def translation_length(self, word) -> float:
        tr = abs(self.matrix(word)[0, 0].real)
        return float(2 * np.arccosh(max(tr, 1.0)))

    def as_dict(self) -> dict:
        return {
            "presentation": "<a,b,c,d | " + RELATOR_WORD + ">",
            "side_labels": _SIDE_WORD,
            "generators": {
                LETTERS[c]: [float(x) for x in self.gens[c]] for c in (0, 2, 4, 6)
            },
            "generator_format": "SU(1,1) [[alpha, beta], [conj beta, conj alpha]] as [Re alpha, Im alpha, Re beta, Im beta]",
            "eps": self.eps,
            "tight": self.tight,
            "escalation_dps": self.dps,
        }

    # -- geometry with escalation --------------------------------------------

    def _mp_walk(self, codes):
        return pyk.walk_rotations(list(codes), self._mp_gens, self.mp_tight, self.mp_eps, self._mp_ctx)

    def pieces(self, codes: tuple[int, ...]):
        """Local axis pieces of a canonical word; ``(exact, pieces)``.

        ``exact`` is False when the data came from the mpmath path, in
        which case ``pieces`` holds mpmath tuples.
        """
        hit = self._pieces.get(codes)
        if hit is not None:
            return hit
        status, pieces, exits = K.rotation_walk(np.asarray(codes, dtype=np.int64), self.gens, self.tight, self.eps)
        if status == pyk.OK and _exits_match(codes, exits):
            out = (True, pieces)
        else:
            self.escalations += 1
            status, mp_pieces, exits = self._mp_walk(codes)
            if status == pyk.TRIVIAL:
                raise TrivialClassError(word_str(codes))
            if status != pyk.OK:
                raise PrecisionError(f"axis of {word_str(codes)} is ambiguous at {self.dps} digits")
            if not _exits_match(codes, exits):
                raise SurfaceError(f"{word_str(codes)} is not a cutting sequence")
            out = (False, mp_pieces)
        self._pieces[codes] = out
        return out

    def _mp_pieces(self, codes):
        exact, pieces = self.pieces(codes)
        if not exact:
            return pieces
        status, mp_pieces, exits = self._mp_walk(codes)
        if status != pyk.OK or not _exits_match(codes, exits):
            raise PrecisionError(f"axis of {word_str(codes)} is ambiguous at {self.dps} digits")
        return mp_pieces

    def lifts(self, codes: tuple[int, ...]):
        hit = self._lifts.get(codes)
        if hit is not None:
            return hit
        exact, pieces = self.pieces(codes)
        out = None
        if exact:
            status, lifts = K.lift_set(pieces, self.nbhd, self.tight, self.eps)
            if status == pyk.OK:
                out = (True, lifts)
        if out is None:
            self.escalations += 1
            status, lifts = pyk.lifts_near(self._mp_pieces(codes), self._mp_nbhd,
                                           self.mp_tight, self.mp_eps, self._mp_ctx)
            if status != pyk.OK:
                raise PrecisionError(f"lifts of {word_str(codes)} are ambiguous at {self.dps} digits")
            out = (False, lifts)
        self._lifts[codes] = out
        return out

    def crossing_count(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        """Translates of the axis of ``y`` crossing one period of the axis of ``x``."""
        px_exact, px = self.pieces(x)
        ly_exact, ly = self.lifts(y)
        if px_exact and ly_exact:
            status, count = K.count_crossings(px, ly, self.tight, self.eps)
            if status == pyk.OK:
                return int(count)
        self.escalations += 1
        mx = self._mp_pieces(x)
        my = self.lifts(y)[1] if not ly_exact else self._mp_lifts(y)
        status, count = pyk.crossings(mx, my, self.mp_tight, self.mp_eps, self._mp_ctx)
        if status != pyk.OK:
            raise PrecisionError(
                f"intersection of {word_str(x)} and {word_str(y)} is ambiguous at {self.dps} digits")
        return int(count)

    def _mp_lifts(self, codes):
        exact, lifts = self.lifts(codes)
        if not exact:
            return lifts
        status, mp_lifts = pyk.lifts_near(self._mp_pieces(codes), self._mp_nbhd,
                                          self.mp_tight, self.mp_eps, self._mp_ctx)
        if status != pyk.OK:
            raise PrecisionError(f"lifts of {word_str(codes)} are ambiguous at {self.dps} digits")
        return mp_lifts

    def cutting_sequence(self, codes: tuple[int, ...]) -> tuple[int, ...]:
        """Cyclic cutting sequence of the primitive root of a class (some rotation)."""
        if not codes:
            raise TrivialClassError("empty word")
        st = K.cutting_check(np.asarray(codes, dtype=np.int64), self.gens, self.tight, self.eps)
        if st == pyk.OK:
            return codes[: primitive_period(codes)]
        if st == pyk.TRIVIAL:
            raise TrivialClassError(word_str(codes))
        max_steps = 8 * len(codes) + 64
        status, letters = K.general_walk(np.asarray(codes, dtype=np.int64), self.gens,
                                         self.tight, self.eps, max_steps)
        letters = tuple(letters)
        if status == pyk.OK and K.cutting_check(np.asarray(letters, dtype=np.int64), self.gens,
                                                self.tight, self.eps) == pyk.OK:
            return letters
        if status == pyk.TRIVIAL:
            raise TrivialClassError(word_str(codes))
        self.escalations += 1
        status, letters = pyk.walk_general(list(codes), self._mp_gens, self.mp_tight, self.mp_eps,
                                           max_steps, self._mp_ctx)
        letters = tuple(letters)
        if status == pyk.OK and pyk.check_cutting(list(letters), self._mp_gens, self.mp_tight,
                                                  self.mp_eps, self._mp_ctx) == pyk.OK:
            return letters
        raise PrecisionError(f"cutting sequence of {word_str(codes)} is ambiguous at {self.dps} digits")


def _exits_match(codes, exits) -> bool:
    if len(exits) != len(codes):
        return False
    for c, k in zip(codes, exits):
        if k < 0 or pyk.SIDE_CODE[int(k)] != c:
            return False
    return True


_DEFAULT_MODEL: FuchsianModel | None = None


def default_model() -> FuchsianModel:
    global _DEFAULT_MODEL
    if _DEFAULT_MODEL is None:
        _DEFAULT_MODEL = FuchsianModel()
    return _DEFAULT_MODEL


# ---------------------------------------------------------------------------
# operations


def canonical_form(word, model: FuchsianModel | None = None) -> SurfaceCurve:
    """Canonical representative of the conjugacy class of ``word``.

    Free and cyclic reduction first; then the word is replaced by the
    cutting sequence of its axis (a shortest word in the class) and the
    shortlex-least rotation over both orientations is chosen.

    >>> canonical_form("a b b^{-1}").word
    'a'
    >>> canonical_form("b a") == canonical_form("a b")
    True
    """
    model = model or default_model()
    codes = cyclic_reduce(parse_word(word))
    if not codes:
        raise TrivialClassError(f"{word!r} reduces to the empty word")
    root = model.cutting_sequence(codes)
    power = round(model.translation_length(codes) / model.translation_length(root))
    inv_root = model.cutting_sequence(invert(root))
    best = min(min_rotation(root), min_rotation(inv_root), key=shortlex)
    return SurfaceCurve(word_str(best * max(power, 1)))


def _curve(x, model) -> SurfaceCurve:
    if isinstance(x, SurfaceCurve):
        return x
    return canonical_form(x, model)


def intersection_number(x, y, model: FuchsianModel | None = None) -> int:
    """Geometric intersection number of two closed curves.

    For ``x == y`` this is the count of transverse double points of two
    parallel copies, i.e. twice the self-intersection number (0 for simple
    curves).  Proper powers scale multiplicatively.
    """
    model = model or default_model()
    cx, cy = _curve(x, model), _curve(y, model)
    rx, ry = cx.root(), cy.root()
    count = model.crossing_count(rx.codes, ry.codes)
    return count * cx.power * cy.power


def self_intersection(x, model: FuchsianModel | None = None) -> int:
    """Number of double points of the geodesic representative of a primitive class."""
    model = model or default_model()
    c = _curve(x, model).root()
    count = model.crossing_count(c.codes, c.codes)
    if count % 2:
        raise PrecisionError(f"odd self-crossing count for {c.word}")
    return count // 2


def is_simple(x, model: FuchsianModel | None = None) -> bool:
    """True iff the class is primitive and its geodesic has no double points."""
    model = model or default_model()
    c = _curve(x, model)
    if not c.is_primitive:
        return False
    return self_intersection(c, model) == 0


_PROJECTION = {0: "x", 1: "X", 4: "y", 5: "Y"}  # b and d are killed


def handlebody_image(word) -> str:
    """Freely reduced image under a->x, b->1, c->y, d->1."""
    out: list[str] = []
    for c in parse_word(word):
        ch = _PROJECTION.get(c)
        if ch is None:
            continue
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def disc_bounding(x) -> bool:
    """Kernel test for the inclusion of the boundary surface into the handlebody.

    Well defined on conjugacy classes; combined with simplicity it detects
    meridians (boundaries of essential discs).
    """
    return handlebody_image(x) == ""


@total_ordering
@dataclass(frozen=True)
class DiscClass:
    """An essential disc, recorded by its boundary curve."""

    boundary: SurfaceCurve

    def __lt__(self, other):
        if not isinstance(other, DiscClass):
            return NotImplemented
        return self.boundary < other.boundary

    def __str__(self):
        return self.boundary.word

    @property
    def word(self) -> str:
        return self.boundary.word


def make_disc(x, model: FuchsianModel | None = None) -> DiscClass:
    model = model or default_model()
    c = _curve(x, model)
    if not is_simple(c, model):
        raise SurfaceError(f"{c.word} is not simple")
    if not disc_bounding(c):
        raise SurfaceError(f"{c.word} does not bound a disc")
    return DiscClass(c)


# ---------------------------------------------------------------------------
# inventory


def _classify(word, model):
    """Canonical class of a forward cutting word, or None if it is not the representative."""
    codes = tuple(word)
    if K.cutting_check(np.asarray(invert(codes), dtype=np.int64), model.gens,
                       model.tight, model.eps) == pyk.OK:
        other = invert(codes)
    else:
        other = model.cutting_sequence(invert(codes))
    best = min(codes, min_rotation(other), key=shortlex)
    return best == codes


def _inventory_worker(args):
    words, eps, tight, dps = args
    model = _worker_model(eps, tight, dps)
    start = model.escalations
    out = []
    for codes, status in words:
        try:
            if status == pyk.AMBIGUOUS:
                model.escalations += 1
                st = pyk.check_cutting(list(codes), model._mp_gens, model.mp_tight, model.mp_eps, model._mp_ctx)
                if st == pyk.AMBIGUOUS:
                    raise PrecisionError(f"cutting test of {word_str(codes)} is ambiguous")
                if st != pyk.OK:
                    continue
            if not _classify(codes, model):
                continue
            simple = model.crossing_count(codes, codes) == 0
            out.append((codes, simple, None))
        except PrecisionError as exc:
            out.append((codes, None, str(exc)))
    return out, model.escalations - start


_WORKER_MODELS: dict = {}


def _worker_model(eps, tight, dps):
    key = (eps, tight, dps)
    if key not in _WORKER_MODELS:
        d = default_model()
        if (d.eps, d.tight, d.dps) == key:
            _WORKER_MODELS[key] = d
        else:
            _WORKER_MODELS[key] = FuchsianModel(eps=eps, tight=tight, dps=dps)
    return _WORKER_MODELS[key]


@dataclass
class Inventory:
    """Simple closed curves (and discs) with canonical word length <= max_len.

    Graphs built from an inventory are inventory-relative: curves longer
    than ``max_len`` are invisible to them.
    """

    max_len: int
    curves: tuple[SurfaceCurve, ...]
    discs: tuple[DiscClass, ...]
    model: FuchsianModel
    exclusions: tuple[dict, ...] = ()
    stats: dict = field(default_factory=dict)
    _iota: dict = field(default_factory=dict, repr=False)

    def iota(self, x, y) -> int:
        cx = x.boundary if isinstance(x, DiscClass) else x
        cy = y.boundary if isinstance(y, DiscClass) else y
        key = (cx.word, cy.word) if cx.word <= cy.word else (cy.word, cx.word)
        hit = self._iota.get(key)
        if hit is None:
            if cx == cy:
                hit = 0  # inventory curves are simple
            else:
                hit = intersection_number(cx, cy, self.model)
            self._iota[key] = hit
        return hit

    def preload(self, pairs, workers: int = 1):
        """Compute intersection numbers for many pairs, possibly in parallel."""
        todo = []
        for x, y in pairs:
            cx = x.boundary if isinstance(x, DiscClass) else x
            cy = y.boundary if isinstance(y, DiscClass) else y
            key = (cx.word, cy.word) if cx.word <= cy.word else (cy.word, cx.word)
            if key not in self._iota and key[0] != key[1]:
                todo.append(key)
        todo = sorted(set(todo))
        if not todo:
            return
        m = self.model
        chunks = [todo[i:i + 2000] for i in range(0, len(todo), 2000)]
        results = parallel_map(_iota_worker, [(c, m.eps, m.tight, m.dps) for c in chunks], workers)
        for chunk, vals in zip(chunks, results):
            for key, v in zip(chunk, vals):
                self._iota[key] = v

    @property
    def disc_curves(self) -> tuple[SurfaceCurve, ...]:
        return tuple(d.boundary for d in self.discs)

    def fingerprint(self) -> str:
        payload = json.dumps({
            "max_len": self.max_len,
            "curves": [c.word for c in self.curves],
            "discs": [d.word for d in self.discs],
            "model": self.model.as_dict(),
        }, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def manifest(self) -> dict:
        disc_words = {d.word for d in self.discs}
        return {
            "max_len": self.max_len,
            "fingerprint": self.fingerprint(),
            "model": self.model.as_dict(),
            "curves": [
                {"word": c.word, "simple": True, "disc": c.word in disc_words}
                for c in self.curves
            ],
            "exclusions": list(self.exclusions),
            "stats": dict(self.stats),
        }


def _iota_worker(args):
    keys, eps, tight, dps = args
    model = _worker_model(eps, tight, dps)
    return [intersection_number(SurfaceCurve(a), SurfaceCurve(b), model) for a, b in keys]


def build_inventory(max_len: int, model: FuchsianModel | None = None, workers: int = 1) -> Inventory:
    """All simple closed curves whose canonical word has length <= ``max_len``."""
    model = model or default_model()
    if max_len < 0:
        raise SurfaceError("max_len must be >= 0")
    if max_len == 0:
        return Inventory(0, (), (), model, (), {"candidates": 0, "classes": 0, "escalations": 0})
    words = K.enumerate_cutting_words(int(max_len), model.gens, model.tight, model.eps)
    words = [(tuple(int(c) for c in w), int(s)) for w, s in words]
    chunk = 4000
    chunks = [words[i:i + chunk] for i in range(0, len(words), chunk)]
    results = parallel_map(_inventory_worker,
                           [(c, model.eps, model.tight, model.dps) for c in chunks], workers)
    curves, exclusions = [], []
    classes = 0
    escalations = 0
    for part, esc in results:
        escalations += esc
        for codes, simple, err in part:
            if err is not None:
                exclusions.append({"word": word_str(codes), "reason": err})
                continue
            classes += 1
            if simple:
                curves.append(SurfaceCurve(word_str(codes)))
    curves.sort()
    discs = tuple(DiscClass(c) for c in curves if disc_bounding(c))
    stats = {
        "candidates": len(words),
        "classes": classes,
        "simple": len(curves),
        "discs": len(discs),
        "escalations": escalations,
        "precision_failures": len(exclusions),
    }
    return Inventory(int(max_len), tuple(curves), discs, model,
                     tuple(sorted(exclusions, key=lambda e: shortlex(parse_word(e["word"])))), stats)


@dataclass(frozen=True)
class ThicknessVerdict:
    status: str  # PASS, FAIL or DEGENERATE
    witnesses: tuple[SurfaceCurve, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status != "FAIL"


def thickness_check(inventory: Inventory, discs: Iterable | None = None,
                    curves: Iterable | None = None) -> ThicknessVerdict:
    """Inventory-relative filling test for the whole boundary surface.

    Every disc meets the boundary surface, so only the filling condition is
    tested: each inventory curve must intersect some disc boundary.  A
    restricted disc set (or curve set) can be passed to probe sub-families.
    """
    disc_list = [d.boundary if isinstance(d, DiscClass) else _curve(d, inventory.model)
                 for d in (inventory.discs if discs is None else discs)]
    curve_list = list(inventory.curves if curves is None else
                      (_curve(c, inventory.model) for c in curves))
    if not curve_list or not disc_list:
        return ThicknessVerdict("DEGENERATE")
    bad = tuple(c for c in curve_list if all(inventory.iota(c, d) == 0 for d in disc_list))
    return ThicknessVerdict("FAIL", bad) if bad else ThicknessVerdict("PASS")
