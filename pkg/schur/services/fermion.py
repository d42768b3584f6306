"""
Semi-infinite wedge space with wedge / contraction operators.

A basis vector ``(m, lambda)`` is v_{i_1} ^ v_{i_2} ^ ... with
i_t = lambda_t + m - t + 1, so i_t = m - t + 1 once t > l(lambda). Only a finite
prefix of the index sequence is ever materialized: long enough that everything
past it lies strictly below the index being inserted or removed.
"""
from .boson import BosonState
from .linear import LinearCombination
from .partitions import Partition


class FermionState(LinearCombination):
    """Keys are ``(charge, Partition)``."""

    __slots__ = ()

    @staticmethod
    def sort_key(key):
        charge, shape = key
        return (charge, shape.weight, shape.parts)

    def render_basis(self, key):
        charge, shape = key
        return f"|{charge};{shape}>"

    @classmethod
    def vacuum(cls, charge=0):
        return cls.basis(charge, Partition())

    def to_json(self):
        return [
            {'charge': charge, 'shape': shape.to_json(), 'coeff': str(coeff)}
            for (charge, shape), coeff in self.items()
        ]


def wedge_indices(charge, shape, length):
    return [shape.part(t) + charge - t + 1 for t in range(1, length + 1)]


def shape_from_indices(indices, charge):
    return Partition.from_parts(i - charge + s - 1 for s, i in enumerate(indices, start=1))


def _window(charge, shape, k):
    # every index past the window is <= charge - length < k
    return max(shape.length, charge - k + 1) + 1


class FermionAction:

    @staticmethod
    def psi_basis(k, charge, shape):
        indices = wedge_indices(charge, shape, _window(charge, shape, k))
        if k in indices:
            return FermionState.zero()
        position = sum(1 for i in indices if i > k)
        indices.insert(position, k)
        sign = -1 if position % 2 else 1
        return FermionState.basis(charge + 1, shape_from_indices(indices, charge + 1), coeff=sign)

    @staticmethod
    def psi_star_basis(k, charge, shape):
        indices = wedge_indices(charge, shape, _window(charge, shape, k))
        if k not in indices:
            return FermionState.zero()
        slot = indices.index(k)
        del indices[slot]
        # slot is t - 1, the sign is (-1)^(t-1)
        sign = -1 if slot % 2 else 1
        return FermionState.basis(charge - 1, shape_from_indices(indices, charge - 1), coeff=sign)

    @staticmethod
    def psi(k, state):
        return state.map_basis(lambda key: FermionAction.psi_basis(k, *key))

    @staticmethod
    def psi_star(k, state):
        return state.map_basis(lambda key: FermionAction.psi_star_basis(k, *key))

    @staticmethod
    def apply_word(word, state):
        for kind, index in reversed(word.letters):
            if kind == 'psi':
                state = FermionAction.psi(index, state)
            else:
                state = FermionAction.psi_star(index, state)
        return state


def to_boson(state):
    return BosonState({(shape, charge): coeff for (charge, shape), coeff in state.items()})


def to_fermion(state):
    return FermionState({(charge, shape): coeff for (shape, charge), coeff in state.items()})
