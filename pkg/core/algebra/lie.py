"""
core.algebra.lie
----------------

Finite-dimensional Lie superalgebras over Q given by structure constants on
a homogeneous basis. Even basis vectors come first.

Only the brackets ``[e_i, e_j]`` with ``i <= j`` are stored; the others follow
from ``[e_j, e_i] = -(-1)^(|e_i||e_j|) [e_i, e_j]``. Entries supplied for
``i > j`` are converted with that rule, and an entry that disagrees with one
already given for the mirrored pair is remembered so ``validate()`` can
report it.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from core.algebra.superspace import Parity, SuperDim, koszul_sign
from core.errors import InputError, InterchangeError
from utils.linalg import Vector, VectorLike, add, as_vector, scale

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

FORMAT_VERSION = 1

ConstantsLike = Mapping[Tuple[int, int], VectorLike]


class LieSuperalgebra:
    def __init__(
        self,
        parities: Sequence[Union[Parity, int, str]],
        constants: Optional[ConstantsLike] = None,
        name: Optional[str] = None,
        labels: Optional[Sequence[str]] = None,
    ):
        self._parities: Tuple[Parity, ...] = tuple(Parity.parse(p) for p in parities)
        if any(a > b for a, b in zip(self._parities, self._parities[1:])):
            raise InputError("even basis vectors must precede odd ones")
        d = len(self._parities)
        if labels is None:
            labels = [f"e{i + 1}" for i in range(d)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != d:
            raise InputError(f"{len(labels)} labels given for dimension {d}")
        if len(set(labels)) != d:
            raise InputError("basis labels must be distinct")
        self._labels = labels
        self.name = name or "L"

        self._constants: Dict[Tuple[int, int], Vector] = {}
        self._conflicts: Dict[Tuple[int, int], Vector] = {}
        seen: Dict[Tuple[int, int], Vector] = {}
        for key, coeffs in (constants or {}).items():
            try:
                i, j = (int(x) for x in key)
            except (TypeError, ValueError) as exc:
                raise InputError(f"bracket key {key!r} is not a pair of indices") from exc
            if not (0 <= i < d and 0 <= j < d):
                raise InputError(f"bracket index ({i}, {j}) outside dimension {d}")
            vec = as_vector(coeffs)
            if any(not 0 <= k < d for k in vec):
                raise InputError(f"bracket [{i},{j}] has a coefficient index outside dimension {d}")
            if i > j:
                i, j = j, i
                vec = scale(vec, -koszul_sign(self._parities[i], self._parities[j]))
            if (i, j) in seen:
                if seen[(i, j)] != vec:
                    self._conflicts[(i, j)] = add(seen[(i, j)], vec, -1)
                continue
            seen[(i, j)] = vec
            if vec:
                self._constants[(i, j)] = vec

    # shape ------------------------------------------------------------
    @property
    def parities(self) -> Tuple[Parity, ...]:
        return self._parities

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def dim(self) -> int:
        return len(self._parities)

    @property
    def superdim(self) -> SuperDim:
        odd = len(self.odd_indices)
        return SuperDim(self.dim - odd, odd)

    def parity(self, i: int) -> Parity:
        return self._parities[i]

    @property
    def even_indices(self) -> List[int]:
        return [i for i, p in enumerate(self._parities) if p == Parity.EVEN]

    @property
    def odd_indices(self) -> List[int]:
        return [i for i, p in enumerate(self._parities) if p == Parity.ODD]

    def is_abelian(self) -> bool:
        return not self._constants

    def structure_constants(self) -> Iterator[Tuple[Tuple[int, int], Vector]]:
        """Stored non-zero brackets ``((i, j), [e_i, e_j])`` with ``i <= j``, sorted."""
        for key in sorted(self._constants):
            yield key, dict(self._constants[key])

    @property
    def skew_conflicts(self) -> Dict[Tuple[int, int], Vector]:
        return {k: dict(v) for k, v in self._conflicts.items()}

    # brackets ---------------------------------------------------------
    def basis_vector(self, i: int) -> Vector:
        if not 0 <= i < self.dim:
            raise InputError(f"basis index {i} outside dimension {self.dim}")
        return {i: Fraction(1)}

    def basis_bracket(self, i: int, j: int) -> Vector:
        if i <= j:
            return dict(self._constants.get((i, j), {}))
        return scale(self._constants.get((j, i), {}), -koszul_sign(self._parities[i], self._parities[j]))

    def bracket(self, u: VectorLike, v: VectorLike) -> Vector:
        u, v = as_vector(u), as_vector(v)
        for k in list(u) + list(v):
            if not 0 <= k < self.dim:
                raise InputError(f"coordinate {k} outside dimension {self.dim}")
        out: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                out = add(out, self.basis_bracket(i, j), a * b)
        return out

    def render(self, v: Mapping[int, Fraction]) -> str:
        """Human-readable form such as ``2*x1 - 1/2*z``."""
        parts = []
        for k in sorted(v):
            c = v[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = self._labels[k] if mag == 1 else f"{mag}*{self._labels[k]}"
            parts.append((sign, term))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {t}" for s, t in parts[1:])

    # identity ---------------------------------------------------------
    def _key(self):
        return self._parities, tuple((k, tuple(sorted(v.items()))) for k, v in sorted(self._constants.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieSuperalgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"LieSuperalgebra(name={self.name!r}, superdim={self.superdim})"

    # interchange ------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        return {
            "version": FORMAT_VERSION,
            "name": self.name,
            "dim_even": self.superdim.even,
            "dim_odd": self.superdim.odd,
            "labels": list(self._labels),
            "brackets": [
                {
                    "i": i,
                    "j": j,
                    "coeffs": [{"k": k, "num": c.numerator, "den": c.denominator} for k, c in sorted(vec.items())],
                }
                for (i, j), vec in sorted(self._constants.items())
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "LieSuperalgebra":
        if not isinstance(data, Mapping):
            raise InterchangeError("algebra document must be a JSON object")
        version = data.get("version")
        if version != FORMAT_VERSION:
            raise InterchangeError(f"unsupported format version {version!r}; expected {FORMAT_VERSION}")
        try:
            dim_even, dim_odd = int(data["dim_even"]), int(data["dim_odd"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InterchangeError("dim_even and dim_odd must be integers") from exc
        if dim_even < 0 or dim_odd < 0:
            raise InterchangeError("dimensions must be non-negative")
        constants: Dict[Tuple[int, int], Vector] = {}
        for pos, entry in enumerate(data.get("brackets") or []):
            try:
                key = (int(entry["i"]), int(entry["j"]))
                vec = {}
                for coeff in entry.get("coeffs") or []:
                    den = int(coeff.get("den", 1))
                    if den == 0:
                        raise InterchangeError(f"bracket entry {pos}: zero denominator")
                    vec[int(coeff["k"])] = Fraction(int(coeff["num"]), den)
            except (KeyError, TypeError, ValueError) as exc:
                raise InterchangeError(f"bracket entry {pos} is malformed: {exc}") from exc
            if key in constants:
                raise InterchangeError(f"bracket ({key[0]}, {key[1]}) listed twice")
            constants[key] = vec
        return cls(
            [Parity.EVEN] * dim_even + [Parity.ODD] * dim_odd,
            constants,
            name=data.get("name"),
            labels=data.get("labels"),
        )


__all__ = ["LieSuperalgebra", "FORMAT_VERSION"]
