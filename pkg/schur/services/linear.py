from .poly import as_coefficient


class LinearCombination:
    """
    Finite exact linear combination of hashable basis keys.

    Subclasses fix the key shape, the canonical ordering (``sort_key``) and how a
    single basis term is rendered (``render_basis``).
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        cleaned = {}
        for key, coeff in (terms or {}).items():
            coeff = as_coefficient(coeff)
            if coeff:
                cleaned[key] = coeff
        self._terms = cleaned

    @classmethod
    def basis(cls, *key, coeff=1):
        return cls({tuple(key): coeff})

    @classmethod
    def zero(cls):
        return cls()

    @staticmethod
    def sort_key(key):
        return key

    def render_basis(self, key):
        return str(key)

    def items(self):
        return sorted(self._terms.items(), key=lambda item: self.sort_key(item[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) + coeff
        return type(self)(acc)

    def __neg__(self):
        return type(self)({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = as_coefficient(scalar)
        return type(self)({key: c * scalar for key, c in self._terms.items()})

    __rmul__ = __mul__

    @classmethod
    def sum(cls, combinations):
        acc = {}
        for combination in combinations:
            for key, coeff in combination._terms.items():
                acc[key] = acc.get(key, 0) + coeff
        return cls(acc)

    def map_basis(self, action):
        """Extend ``action(key) -> combination`` linearly."""
        return type(self).sum(action(key) * coeff for key, coeff in self._terms.items())

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for position, (key, coeff) in enumerate(self.items()):
            body = self.render_basis(key)
            magnitude = abs(coeff)
            if magnitude != 1:
                body = f"{magnitude}*{body}"
            if position == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" {'-' if coeff < 0 else '+'} {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"
