"""End-to-end decoding through colon ideals.

A received word w either lies in the code, or its nearest codewords
correspond one-to-one to the projective minimum-weight codewords of the
augmented code that use the appended row. When that nearest codeword is
unique, the colon of the product ideal by a power of the last variable
cuts out a single projective point whose affine representative spells out
the error vector, and the decoder never searches anything: every step is
a rank computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import oracle
from .code import Codeword, LinearCode, weight
from .ideals import (
    IdealPiece,
    NotSinglePointError,
    ProjectivePoint,
    build_ideal,
    colon_linear_piece,
    ideal_degree,
    min_distance,
    point_from_forms,
)

__all__ = ["DecodeStatus", "DecodeResult", "decode", "nearest_neighbor_count"]


class DecodeStatus(str, Enum):
    IN_CODE = "in_code"
    CORRECTED = "corrected"
    AMBIGUOUS = "ambiguous"
    UNCORRECTABLE = "uncorrectable"

    def __str__(self) -> str:  # keep printed form equal to the wire form
        return self.value


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of decoding one received word.

    Fields beyond `status` and `d` are populated when they are defined:
    coset weight `d_w` once the word is classified, `error`, `nearest`,
    `message`, `point` and `colon_power` for a unique correction (and for
    words already in the code, with a zero error), `neighbor_count` when
    the nearest codeword is ambiguous.
    """

    status: DecodeStatus
    d: int
    d_w: int | None = None
    error: np.ndarray | None = None
    nearest: Codeword | None = None
    message: np.ndarray | None = None
    neighbor_count: int | None = None
    point: ProjectivePoint | None = None
    colon_power: int | None = None


def _validated_word(C: LinearCode, w) -> np.ndarray:
    arr = np.asarray(w, dtype=np.int64)
    if arr.ndim != 1 or arr.shape[0] != C.n:
        raise ValueError(f"received word must be a vector of length {C.n}")
    return arr % C.field.p


def _extract_point(I: IdealPiece, d_w: int, k: int, colon_power: int | None):
    """Colon the product ideal down to a single point.

    The exponent starts at d_w and, when no explicit power is given,
    escalates until the linear piece of the colon reaches dimension k
    (the saturation's linear piece once the power is large enough). An
    explicit power is used exactly as given.
    """
    t_var = I.nvars - 1
    u = d_w if colon_power is None else int(colon_power)
    cap = d_w + I.nvars + 4
    while True:
        space = colon_linear_piece(I, t_var, u)
        if space.dim == k:
            return point_from_forms(space), u, space
        if colon_power is not None:
            raise NotSinglePointError(
                f"colon power {u} leaves a form space of dimension {space.dim}, expected {k}"
            )
        if space.dim > k:
            raise RuntimeError(
                "colon linear piece exceeds the point ideal's dimension; "
                "the unique-neighbor hypothesis is violated"
            )
        u += 1
        if u > cap:
            raise RuntimeError(
                f"colon power escalation did not stabilize by {cap}; "
                "the unique-neighbor hypothesis is violated"
            )


def decode(C: LinearCode, w, colon_power: int | None = None) -> DecodeResult:
    """Decode a received word against C.

    Classification: words in the code come back as in_code; otherwise the
    coset weight d_w is the minimum distance of the augmented code when
    that drops below d, and d_w within the unique-decoding radius (or a
    degree-1 product ideal beyond it) yields corrected with the exact
    error vector. Degree > 1 is ambiguous (count reported, no extraction);
    coset weight d or larger is uncorrectable.
    """
    w = _validated_word(C, w)
    p = C.field.p
    d = min_distance(C)
    inside, msg = C.contains(w)
    if inside:
        return DecodeResult(
            status=DecodeStatus.IN_CODE,
            d=d,
            d_w=0,
            error=np.zeros(C.n, np.int64),
            nearest=Codeword(v=w.copy(), message=msg),
            message=msg,
        )
    Cw = C.augment(w)
    d_star = min_distance(Cw)
    if d_star >= d:
        return DecodeResult(status=DecodeStatus.UNCORRECTABLE, d=d)
    d_w = d_star
    I = build_ideal(Cw, d_w + 1)
    colon_used = None
    if d_w > (d - 1) // 2:
        count = ideal_degree(I)
        if count > 1:
            return DecodeResult(
                status=DecodeStatus.AMBIGUOUS, d=d, d_w=d_w, neighbor_count=count
            )
    point, colon_used, _ = _extract_point(I, d_w, C.k, colon_power)
    if int(point.coords[C.k]) == 0:
        raise RuntimeError(
            "extracted point does not use the appended row; "
            "it cannot encode an error for this word"
        )
    coeffs = point.coords[: C.k]
    error = (coeffs @ C.G.a + w) % p
    if weight(error) != d_w:
        raise RuntimeError(
            f"reconstructed error has weight {weight(error)}, expected {d_w}"
        )
    nearest_v = (w - error) % p
    inside, message = C.contains(nearest_v)
    if not inside:
        raise RuntimeError("reconstructed nearest word is not a codeword")
    return DecodeResult(
        status=DecodeStatus.CORRECTED,
        d=d,
        d_w=d_w,
        error=error,
        nearest=Codeword(v=nearest_v, message=message),
        message=message,
        point=point,
        colon_power=colon_used,
    )


def nearest_neighbor_count(
    C: LinearCode, w, threshold: int = oracle.DEFAULT_THRESHOLD
) -> int:
    """Number of codewords at minimal distance from w (w itself excluded).

    Words whose coset weight is below d are counted algebraically as the
    degree of the product ideal of the augmented code; at coset weight d
    or beyond the count falls back to exhaustive enumeration, subject to
    the oracle threshold.
    """
    w = _validated_word(C, w)
    inside, _ = C.contains(w)
    if inside:
        raise ValueError("the word is already a codeword")
    d = min_distance(C)
    Cw = C.augment(w)
    d_star = min_distance(Cw)
    if d_star < d:
        return ideal_degree(build_ideal(Cw, d_star + 1))
    _, vectors = oracle.nearest_neighbors(C, w, threshold)
    return int(vectors.shape[0])
