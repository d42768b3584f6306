"""
Partition combinatorics: conjugation, Frobenius coordinates and straightening.

Straightening an integer vector ``v = (v_1, ..., v_l)`` works on the staircase
values ``mu_i = v_i - i``. Swapping two rows of the Jacobi-Trudi matrix of
``v`` swaps two staircase values and negates the determinant, and two equal
staircase values give two equal rows. The rows below ``l`` belong to the zero
tail ``v_j = 0`` (``j > l``) and carry the staircase values ``-(l+1), -(l+2),
...``; those rows form a unit upper-triangular block, so a value ``mu_i <=
-(l+1)`` duplicates a tail row and the determinant vanishes. Otherwise sorting
the staircase values decreasingly gives the partition, and the parity of the
sorting permutation gives the sign.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..exceptions import DomainError, LiteralError


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts; trailing zeros are never stored."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        if any(p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def from_parts(cls, parts):
        """Build from a weakly decreasing non-negative sequence, dropping trailing zeros."""
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(tuple(parts))

    @classmethod
    def hook(cls, arm, leg):
        """The hook ``(arm+1, 1^leg)``; ``(arm|leg)`` in Frobenius notation."""
        return cls((arm + 1,) + (1,) * leg)

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def part(self, i):
        """1-based part with the zero tail."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self):
        if not self.parts:
            return Partition()
        return Partition(tuple(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        ))

    def to_frobenius(self):
        conjugate = self.conjugate()
        rank = sum(1 for i, p in enumerate(self.parts, start=1) if p >= i)
        return FrobeniusCoords(
            tuple(self.part(i) - i for i in range(1, rank + 1)),
            tuple(conjugate.part(i) - i for i in range(1, rank + 1)),
        )

    @classmethod
    def from_frobenius(cls, coords):
        rank = len(coords.alphas)
        head = [a + i for i, a in enumerate(coords.alphas, start=1)]
        column_lengths = [b + j for j, b in enumerate(coords.betas, start=1)]
        depth = column_lengths[0] if column_lengths else 0
        tail = [sum(1 for c in column_lengths if c >= i) for i in range(rank + 1, depth + 1)]
        return cls.from_parts(head + tail)

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "()"

    def __repr__(self):
        return f"Partition({str(self)})"

    def to_json(self):
        return list(self.parts)


@dataclass(frozen=True)
class FrobeniusCoords:
    """Arm lengths ``alphas`` and leg lengths ``betas`` along the main diagonal."""

    alphas: tuple = ()
    betas: tuple = ()

    def __post_init__(self):
        alphas, betas = tuple(self.alphas), tuple(self.betas)
        object.__setattr__(self, 'alphas', alphas)
        object.__setattr__(self, 'betas', betas)
        if len(alphas) != len(betas):
            raise DomainError(f"Frobenius coordinates need equal lengths: {alphas} | {betas}")
        for name, seq in (('alphas', alphas), ('betas', betas)):
            if any(x < 0 for x in seq):
                raise DomainError(f"Frobenius {name} must be non-negative: {seq}")
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise DomainError(f"Frobenius {name} must be strictly decreasing: {seq}")

    def conjugate(self):
        return FrobeniusCoords(self.betas, self.alphas)

    def __str__(self):
        return f"({' '.join(map(str, self.alphas))}|{' '.join(map(str, self.betas))})"


@dataclass(frozen=True)
class SignedPartition:
    """Result of straightening: ``sign * s_shape``; sign 0 means the determinant vanishes."""

    sign: int
    shape: Partition = Partition()

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.sign == 0 and self.shape.parts:
            raise DomainError("a vanishing straightening carries the empty shape")


ZERO = SignedPartition(0, Partition())


def permutation_sign(order):
    """Sign of a permutation given as a sequence of distinct indices 0..n-1."""
    seen = [False] * len(order)
    sign = 1
    for start in range(len(order)):
        if seen[start]:
            continue
        cycle = 0
        position = start
        while not seen[position]:
            seen[position] = True
            position = order[position]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def straighten(vector):
    """Reduce ``s_v`` for an arbitrary integer vector to ``+-s_lambda`` or zero."""
    entries = tuple(vector)
    length = len(entries)
    staircase = [v - i for i, v in enumerate(entries, start=1)]
    if len(set(staircase)) != length or any(mu <= -(length + 1) for mu in staircase):
        return ZERO
    order = sorted(range(length), key=lambda i: -staircase[i])
    parts = [staircase[i] + position for position, i in enumerate(order, start=1)]
    return SignedPartition(permutation_sign(order), Partition.from_parts(parts))


def straighten_by_exchange(vector):
    """
    Reference straightening: bubble the rows with the exchange rule
    s_(.., a, b, ..) = -s_(.., b-1, a+1, ..) and stop at zero when b = a + 1.
    The vector is padded with enough zero-tail rows to expose tail collisions.
    """
    entries = list(vector)
    depth = max([len(entries)] + [i - v for i, v in enumerate(entries, start=1)]) + 1
    entries.extend([0] * (depth - len(entries)))
    sign = 1
    swapped = True
    while swapped:
        swapped = False
        for k in range(len(entries) - 1):
            a, b = entries[k], entries[k + 1]
            if a >= b:
                continue
            if b == a + 1:
                return ZERO
            entries[k], entries[k + 1] = b - 1, a + 1
            sign = -sign
            swapped = True
    return SignedPartition(sign, Partition.from_parts(entries))


def partitions_of(n, largest=None):
    """Partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        yield Partition()
        return
    largest = n if largest is None else min(largest, n)
    for first in range(largest, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def partitions_up_to(max_weight):
    for n in range(max_weight + 1):
        yield from partitions_of(n)


def parse_vector(text):
    """``'3,-1,2'`` -> ``(3, -1, 2)``; ``''`` and ``'()'`` are the empty vector."""
    text = text.strip()
    if text in ('', '()'):
        return ()
    try:
        return tuple(int(piece) for piece in text.split(','))
    except ValueError:
        raise LiteralError(f"malformed integer vector {text!r}") from None


def parse_partition(text):
    vector = parse_vector(text)
    try:
        return Partition.from_parts(vector)
    except DomainError:
        raise LiteralError(f"{text!r} is not a partition") from None
